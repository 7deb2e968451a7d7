#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "satelim/cli.hpp"

using namespace satelim;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

// Temp directory shared by the suite, populated once.
const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "satelim-cli-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

const std::string& cubic_path() {
    static std::string p = write_file("twisted_cubic.ideal",
                                      "field QQ\n"
                                      "vars b1, b2, b3, t\n"
                                      "elim t\n"
                                      "gens:\n"
                                      "b1 - t\n"
                                      "b2 - t^2\n"
                                      "b3 - t^3\n");
    return p;
}

const std::string& satex_path() {
    static std::string p = write_file("satex.ideal",
                                      "field QQ\n"
                                      "vars x1, x2, x0\n"
                                      "gens:\n"
                                      "x1^2\n"
                                      "x0*x2 - x1^2\n");
    return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gb prints the reduced basis") {
    Run r = run({"gb", cubic_path()});
    CHECK(r.code == 0);
    CHECK(r.out == "b2^2 - b3*t\nb2*t - b3\nt^2 - b2\nb1 - t\n");
    CHECK(r.err.empty());
}

TEST_CASE("gb with an explicit order") {
    std::string p = write_file("one_gen.ideal", "field QQ\nvars x, y\ngens:\nx + y^2\n");
    Run drl = run({"gb", p});
    CHECK(drl.out == "y^2 + x\n");
    Run lex = run({"gb", "--order", "lex", p});
    CHECK(lex.out == "x + y^2\n");
    // the file's own order line is the default, CLI wins over it
    std::string q = write_file("ordered.ideal", "field QQ\nvars x, y\norder lex\ngens:\nx + y^2\n");
    CHECK(run({"gb", q}).out == "x + y^2\n");
    CHECK(run({"gb", "--order", "degrevlex", q}).out == "y^2 + x\n");
}

TEST_CASE("empty generator list gives empty output") {
    std::string p = write_file("empty.ideal", "field QQ\nvars x\ngens:\n");
    Run r = run({"gb", p});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("saturate reports steps on stderr") {
    Run r = run({"saturate", "--by", "x0", satex_path()});
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2\nx2\n");
    CHECK(r.err == "saturation steps: 1\n");
}

TEST_CASE("homogenize extends the ring and saturates") {
    Run r = run({"homogenize", cubic_path()});
    CHECK(r.code == 0);
    // the elimination-bound generators all show up dehomogenized at x0 = 1
    CHECK(r.out.find("b1^2 - b2") != std::string::npos);
    CHECK(r.out.find("b1*b2 - b3") != std::string::npos);
    CHECK(r.err == "saturation steps: 3\n");
    Run named = run({"homogenize", "--homog-var", "s", cubic_path()});
    CHECK(named.code == 0);
    CHECK(named.out.find("b1*s - t") != std::string::npos);
}

TEST_CASE("quotient by a polynomial") {
    Run r = run({"quotient", "--by", "b1", cubic_path()});
    CHECK(r.code == 0);
    CHECK(r.out == "b2^2 - b3*t\nb2*t - b3\nt^2 - b2\nb1 - t\n");
}

TEST_CASE("syz prints one relation per line") {
    std::string p = write_file("syz.ideal", "field QQ\nvars x, y\ngens:\nx^2\nx*y\ny^2\n");
    Run r = run({"syz", p});
    CHECK(r.code == 0);
    CHECK(r.out.find("(") == 0);
    // every line is a parenthesized rank-3 vector
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        CHECK(line.front() == '(');
        CHECK(line.back() == ')');
    }
    CHECK(count >= 2);
}

TEST_CASE("eliminate methods and agreement") {
    Run both = run({"eliminate", "--method", "both", cubic_path()});
    CHECK(both.code == 0);
    CHECK(both.out == "b1^2 - b2\nb1*b2 - b3\nb2^2 - b1*b3\nAGREE\n");
    Run sat = run({"eliminate", "--method", "saturation", cubic_path()});
    CHECK(sat.code == 0);
    CHECK(sat.out == "b1^2 - b2\nb1*b2 - b3\nb2^2 - b1*b3\n");
    Run blk = run({"eliminate", "--method", "block", cubic_path()});
    CHECK(blk.code == 0);
    CHECK(blk.out == sat.out);
    Run dflt = run({"eliminate", cubic_path()});
    CHECK(dflt.out == both.out);  // both is the default method
}

TEST_CASE("byte-identical output across runs") {
    Run a = run({"eliminate", "--method", "both", cubic_path()});
    Run b = run({"eliminate", "--method", "both", cubic_path()});
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
    Run c = run({"homogenize", cubic_path()});
    Run d = run({"homogenize", cubic_path()});
    CHECK(c.out == d.out);
}

TEST_CASE("usage failures exit 1") {
    CHECK(run({"gb", "/nonexistent/nope.ideal"}).code == 1);
    CHECK(run({"bogus-subcommand"}).code == 1);
    CHECK(run({"gb"}).code == 1);                       // missing file
    CHECK(run({"saturate", satex_path()}).code == 1);   // missing --by
    CHECK(run({"eliminate", "--method", "bogus", cubic_path()}).code == 1);
    CHECK(run({"gb", "--order", "bogus", cubic_path()}).code == 1);
    std::string bad = write_file("bad.ideal", "field QQ\nvars x\ngens:\nx + + 1\n");
    Run r = run({"gb", bad});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("computation failures exit 2") {
    std::string pairy = write_file("pairy.ideal", "field QQ\nvars x, y\ngens:\nx^2 + y^2\nx*y\n");
    Run budget = run({"gb", "--max-pairs", "0", pairy});
    CHECK(budget.code == 2);
    CHECK(budget.err.find("budget") != std::string::npos);
    std::string steep = write_file("steep.ideal", "field QQ\nvars x, y\ngens:\nx^3 - y\nx*y\n");
    CHECK(run({"gb", "--max-degree", "3", steep}).code == 2);
    CHECK(run({"quotient", "--by", "1/0", satex_path()}).code == 2);
}

TEST_CASE("help is a success") {
    Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eliminate") != std::string::npos);
    Run sub = run({"eliminate", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--method") != std::string::npos);
}

TEST_CASE("no arguments is a usage failure") {
    CHECK(run({}).code == 1);
}

}  // TEST_SUITE
