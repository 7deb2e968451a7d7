#include "satelim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "satelim/textio.hpp"

namespace satelim::bench {

std::string csv_header() { return "instance,method,order,time_ms,sat_steps,gb_size,max_deg,outcome"; }

std::string csv_row(const BenchRecord& r) {
    char time_buf[64];
    std::snprintf(time_buf, sizeof time_buf, "%.3f", r.time_ms);
    return r.instance + "," + r.method + "," + r.order + "," + time_buf + "," + std::to_string(r.sat_steps) +
           "," + std::to_string(r.gb_size) + "," + std::to_string(r.max_deg) + "," + r.outcome;
}

namespace {

struct MethodRun {
    BenchRecord record;
    std::optional<IdealBasis> result;
};

MethodRun run_method(const Instance& inst, const std::string& method, const Options& opts) {
    MethodRun out;
    out.record.instance = inst.id;
    out.record.method = method;
    EliminationProblem prob = inst.problem;
    prob.budget = opts.budget;
    out.record.order = method == "block"
                           ? MonomialOrder::block(prob.ring->vars_with_weight(1).size(), MonomialOrder::degrevlex(),
                                                  MonomialOrder::degrevlex())
                                 .str()
                           : prob.order.str();
    std::vector<double> times;
    try {
        for (int rep = 0; rep < std::max(1, opts.repeats); ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            unsigned steps = 0;
            IdealBasis basis =
                method == "block" ? eliminate_block(prob) : eliminate_saturation(prob, steps);
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            if (rep == 0) {
                out.record.sat_steps = method == "block" ? 0 : steps;
                out.record.gb_size = basis.gens.size();
                std::uint64_t d = 0;
                for (const Polynomial& g : basis.gens) d = std::max(d, g.total_degree());
                out.record.max_deg = d;
                out.result = std::move(basis);
            }
        }
        std::sort(times.begin(), times.end());
        out.record.time_ms = times[times.size() / 2];
        out.record.outcome = "ok";
    } catch (const budget_error&) {
        out.record.outcome = "budget";
        out.record.time_ms = 0.0;
        out.result.reset();
    }
    return out;
}

}  // namespace

std::vector<BenchRecord> run_instances(const std::vector<Instance>& instances, const Options& opts) {
    std::vector<BenchRecord> rows;
    for (const Instance& inst : instances) {
        std::vector<MethodRun> runs;
        runs.reserve(opts.methods.size());
        for (const std::string& m : opts.methods) runs.push_back(run_method(inst, m, opts));
        // cross-check every pair of successful methods
        bool disagree = false;
        for (std::size_t a = 0; a < runs.size() && !disagree; ++a)
            for (std::size_t b = a + 1; b < runs.size() && !disagree; ++b)
                if (runs[a].result && runs[b].result && runs[a].result->gens != runs[b].result->gens)
                    disagree = true;
        for (MethodRun& r : runs) {
            if (disagree && r.record.outcome == "ok") r.record.outcome = "disagree";
            rows.push_back(std::move(r.record));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return a.instance != b.instance ? a.instance < b.instance : a.method < b.method;
    });
    return rows;
}

std::vector<Instance> load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw usage_error("corpus directory '" + dir.string() + "' not found");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ideal") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<Instance> out;
    out.reserve(files.size());
    for (const auto& f : files) {
        ProblemFile pf = load_problem_file(f);
        Instance inst;
        inst.id = f.stem().string();
        inst.problem.ring = pf.ring;
        inst.problem.gens = pf.gens;
        if (pf.order) inst.problem.order = *pf.order;
        out.push_back(std::move(inst));
    }
    return out;
}

Instance curve_family_instance(unsigned m) {
    if (m == 0) throw usage_error("curve family needs m >= 1");
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (unsigned i = 1; i <= m; ++i) {
        vars.push_back("b" + std::to_string(i));
        weights.push_back(0);
    }
    vars.push_back("t");
    weights.push_back(1);
    RingPtr ring = RingSpec::make(FieldSpec::rationals(), std::move(vars), std::move(weights));
    MonomialOrder drl = MonomialOrder::degrevlex();
    Instance inst;
    inst.id = "curve_m" + std::to_string(m);
    inst.problem.ring = ring;
    for (unsigned i = 1; i <= m; ++i) {
        Polynomial bi = Polynomial::variable(ring, drl, i - 1);
        Polynomial ti = Polynomial::variable(ring, drl, m, i);
        inst.problem.gens.push_back(bi - ti);
    }
    return inst;
}

Polynomial random_polynomial(const RingPtr& ring, const MonomialOrder& order, std::uint32_t max_degree,
                             std::size_t max_terms, long coeff_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> nterms_dist(1, std::max<std::size_t>(1, max_terms));
    std::uniform_int_distribution<std::uint32_t> deg_dist(0, max_degree);
    std::uniform_int_distribution<std::size_t> var_dist(0, ring->var_count() - 1);
    std::uniform_int_distribution<long> coeff_dist(1, std::max(1l, coeff_bound));
    std::bernoulli_distribution sign_dist(0.5);
    std::vector<Term> terms;
    std::size_t n = nterms_dist(rng);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::uint32_t> exps(ring->var_count(), 0);
        std::uint32_t d = deg_dist(rng);
        for (std::uint32_t u = 0; u < d; ++u) ++exps[var_dist(rng)];
        long c = coeff_dist(rng) * (sign_dist(rng) ? 1 : -1);
        terms.push_back({Coefficient::from_integer(ring->field(), c), Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(ring, order, std::move(terms));
}

Instance random_instance(const RandomParams& params, std::mt19937_64& rng, const std::string& id) {
    if (params.elim_vars == 0 || params.base_vars == 0)
        throw usage_error("random instances need at least one variable per block");
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (std::size_t i = 1; i <= params.base_vars; ++i) {
        vars.push_back("b" + std::to_string(i));
        weights.push_back(0);
    }
    for (std::size_t i = 1; i <= params.elim_vars; ++i) {
        vars.push_back("x" + std::to_string(i));
        weights.push_back(1);
    }
    RingPtr ring = RingSpec::make(params.field, std::move(vars), std::move(weights));
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::uniform_int_distribution<std::size_t> ngens_dist(1, std::max<std::size_t>(1, params.max_gens));
    Instance inst;
    inst.id = id;
    inst.problem.ring = ring;
    std::size_t n = ngens_dist(rng);
    for (std::size_t i = 0; i < n; ++i)
        inst.problem.gens.push_back(
            random_polynomial(ring, drl, params.max_degree, params.max_terms, params.coeff_bound, rng));
    return inst;
}

}  // namespace satelim::bench
