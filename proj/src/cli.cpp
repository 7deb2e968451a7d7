#include "satelim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "satelim/bench.hpp"
#include "satelim/idealops.hpp"
#include "satelim/textio.hpp"

namespace satelim {

namespace {

struct Common {
    std::string file;
    std::string order_text;
    std::uint64_t max_pairs = Budget{}.max_pairs;
    std::uint64_t max_degree = Budget{}.max_total_degree;
    std::uint64_t wall_ms = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_file = true) {
    if (with_file) cmd->add_option("file", c.file, "problem file (.ideal)")->required();
    cmd->add_option("--order", c.order_text, "term order: lex, deglex, degrevlex, block(<n>:<o>,<o>)");
    cmd->add_option("--max-pairs", c.max_pairs, "pair budget for basis computations");
    cmd->add_option("--max-degree", c.max_degree, "total degree budget");
    cmd->add_option("--wall-ms", c.wall_ms, "wall clock budget in milliseconds");
}

Budget budget_of(const Common& c) {
    Budget b;
    b.max_pairs = c.max_pairs;
    b.max_total_degree = c.max_degree;
    if (c.wall_ms > 0) b.wall_clock = std::chrono::milliseconds(c.wall_ms);
    return b;
}

struct Loaded {
    ProblemFile pf;
    MonomialOrder order = MonomialOrder::degrevlex();
};

Loaded load(const Common& c) {
    Loaded l;
    l.pf = load_problem_file(c.file);
    if (!c.order_text.empty())
        l.order = MonomialOrder::parse(c.order_text);
    else if (l.pf.order)
        l.order = *l.pf.order;
    return l;
}

void print_basis(std::ostream& out, const std::vector<Polynomial>& gens) {
    for (const Polynomial& g : gens) out << to_string(g) << "\n";
}

int cmd_gb(const Common& c, std::ostream& out) {
    Loaded l = load(c);
    IdealBasis I = IdealBasis::make(l.pf.ring, l.pf.gens);
    print_basis(out, reduced_groebner_basis(I, l.order, budget_of(c)).gens);
    return 0;
}

int cmd_syz(const Common& c, std::ostream& out) {
    Loaded l = load(c);
    SyzygyBasis<Polynomial> syz = syzygies(l.pf.gens, l.order, budget_of(c));
    for (const VectorPoly& s : syz.gens) out << to_string(s) << "\n";
    return 0;
}

int cmd_quotient(const Common& c, const std::string& by, std::ostream& out) {
    Loaded l = load(c);
    Polynomial f = parse_polynomial(by, l.pf.ring, l.order);
    IdealBasis I = IdealBasis::make(l.pf.ring, l.pf.gens);
    IdealBasis Q = quotient(I, f, l.order, budget_of(c));
    print_basis(out, reduced_groebner_basis(Q, l.order, budget_of(c)).gens);
    return 0;
}

int cmd_saturate(const Common& c, const std::string& by, std::ostream& out, std::ostream& err) {
    Loaded l = load(c);
    Polynomial f = parse_polynomial(by, l.pf.ring, l.order);
    IdealBasis I = IdealBasis::make(l.pf.ring, l.pf.gens);
    SaturationResult r = saturate(I, f, l.order, budget_of(c));
    print_basis(out, r.basis.gens);
    err << "saturation steps: " << r.steps << "\n";
    return 0;
}

int cmd_homogenize(const Common& c, const std::string& homog_name, std::ostream& out, std::ostream& err) {
    Loaded l = load(c);
    IdealBasis I = IdealBasis::make(l.pf.ring, l.pf.gens);
    HomogenizationResult r = homogenize_ideal(I, homog_name, l.order, budget_of(c));
    print_basis(out, r.homogenization.gens);
    err << "saturation steps: " << r.saturation_steps << "\n";
    return 0;
}

int cmd_eliminate(const Common& c, const std::string& method, std::ostream& out, std::ostream& err) {
    Loaded l = load(c);
    EliminationProblem p;
    p.ring = l.pf.ring;
    p.gens = l.pf.gens;
    p.order = l.order;
    p.budget = budget_of(c);
    if (method == "saturation") {
        print_basis(out, eliminate_saturation(p).gens);
        return 0;
    }
    if (method == "block") {
        print_basis(out, eliminate_block(p).gens);
        return 0;
    }
    if (method != "both") throw usage_error("unknown method '" + method + "'");
    IdealBasis via_sat = eliminate_saturation(p);
    IdealBasis via_block = eliminate_block(p);
    print_basis(out, via_sat.gens);
    if (via_sat.gens == via_block.gens) {
        out << "AGREE\n";
        return 0;
    }
    out << "DISAGREE\n";
    err << "block-order route returned:\n";
    for (const Polynomial& g : via_block.gens) err << "  " << to_string(g) << "\n";
    return 3;
}

struct BenchArgs {
    Common common;
    std::string corpus;
    unsigned curve = 0;
    unsigned random = 0;
    std::uint64_t seed = 1;
    std::string methods = "both";
    int repeats = 3;
    std::string out_file;
    bench::RandomParams rp;
    std::string rand_field = "QQ";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    std::vector<bench::Instance> instances;
    if (!a.corpus.empty()) {
        auto loaded = bench::load_corpus(a.corpus);
        instances.insert(instances.end(), loaded.begin(), loaded.end());
    }
    for (unsigned m = 1; m <= a.curve; ++m) instances.push_back(bench::curve_family_instance(m));
    if (a.random > 0) {
        bench::RandomParams rp = a.rp;
        if (a.rand_field == "QQ")
            rp.field = FieldSpec::rationals();
        else if (a.rand_field.rfind("Fp", 0) == 0)
            rp.field = FieldSpec::prime_field(
                static_cast<std::uint32_t>(std::stoul(a.rand_field.substr(2))));
        else
            throw usage_error("unknown field '" + a.rand_field + "' (expected QQ or Fp<prime>)");
        std::mt19937_64 rng(a.seed);
        for (unsigned i = 1; i <= a.random; ++i)
            instances.push_back(bench::random_instance(rp, rng, "random_" + std::to_string(i)));
    }
    if (instances.empty() && a.corpus.empty())
        throw usage_error("nothing to run: pass --corpus, --curve, or --random");
    bench::Options opts;
    if (a.methods == "both")
        opts.methods = {"block", "saturation"};
    else if (a.methods == "saturation" || a.methods == "block")
        opts.methods = {a.methods};
    else
        throw usage_error("unknown method set '" + a.methods + "'");
    opts.budget = budget_of(a.common);
    opts.repeats = a.repeats;
    std::vector<bench::BenchRecord> rows = bench::run_instances(instances, opts);
    std::ostringstream csv;
    csv << bench::csv_header() << "\n";
    for (const auto& r : rows) csv << bench::csv_row(r) << "\n";
    if (a.out_file.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(a.out_file);
        if (!f) throw usage_error("cannot write '" + a.out_file + "'");
        f << csv.str();
    }
    bool disagreed = std::any_of(rows.begin(), rows.end(),
                                 [](const bench::BenchRecord& r) { return r.outcome == "disagree"; });
    return disagreed ? 3 : 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"saturation-based elimination kernel", "satelim"};
    app.require_subcommand(1);

    Common gb_c, syz_c, quo_c, sat_c, hom_c, eli_c;
    std::string quo_by, sat_by;
    std::string hom_var = "x0";
    std::string eli_method = "both";
    BenchArgs bench_a;

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of the generators");
    add_common(gb, gb_c);
    CLI::App* syz = app.add_subcommand("syz", "generating syzygies of the generators");
    add_common(syz, syz_c);
    CLI::App* quo = app.add_subcommand("quotient", "ideal quotient by a polynomial");
    add_common(quo, quo_c);
    quo->add_option("--by", quo_by, "divisor polynomial")->required();
    CLI::App* sat = app.add_subcommand("saturate", "saturation by a polynomial");
    add_common(sat, sat_c);
    sat->add_option("--by", sat_by, "divisor polynomial")->required();
    CLI::App* hom = app.add_subcommand("homogenize", "homogenize and saturate by the fresh variable");
    add_common(hom, hom_c);
    hom->add_option("--homog-var", hom_var, "name of the homogenization variable");
    CLI::App* eli = app.add_subcommand("eliminate", "intersect with the subring of kept variables");
    add_common(eli, eli_c);
    eli->add_option("--method", eli_method, "saturation, block, or both");
    CLI::App* ben = app.add_subcommand("bench", "timing harness, emits CSV");
    add_common(ben, bench_a.common, false);
    ben->add_option("--corpus", bench_a.corpus, "directory of .ideal files");
    ben->add_option("--curve", bench_a.curve, "run the curve family for m = 1..N");
    ben->add_option("--random", bench_a.random, "number of random instances");
    ben->add_option("--seed", bench_a.seed, "random seed");
    ben->add_option("--methods", bench_a.methods, "saturation, block, or both");
    ben->add_option("--repeats", bench_a.repeats, "timing repetitions per instance");
    ben->add_option("--out", bench_a.out_file, "write CSV here instead of stdout");
    ben->add_option("--rand-elim", bench_a.rp.elim_vars, "eliminated variables per random instance");
    ben->add_option("--rand-base", bench_a.rp.base_vars, "kept variables per random instance");
    ben->add_option("--rand-gens", bench_a.rp.max_gens, "max generators per random instance");
    ben->add_option("--rand-terms", bench_a.rp.max_terms, "max terms per generator");
    ben->add_option("--rand-deg", bench_a.rp.max_degree, "max total degree per term");
    ben->add_option("--rand-coeff", bench_a.rp.coeff_bound, "coefficient magnitude bound");
    ben->add_option("--field", bench_a.rand_field, "QQ or Fp<prime> for random instances");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gb->parsed()) return cmd_gb(gb_c, out);
        if (syz->parsed()) return cmd_syz(syz_c, out);
        if (quo->parsed()) return cmd_quotient(quo_c, quo_by, out);
        if (sat->parsed()) return cmd_saturate(sat_c, sat_by, out, err);
        if (hom->parsed()) return cmd_homogenize(hom_c, hom_var, out, err);
        if (eli->parsed()) return cmd_eliminate(eli_c, eli_method, out, err);
        if (ben->parsed()) return cmd_bench(bench_a, out);
        err << "error: no subcommand given\n";
        return 1;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const arith_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace satelim
