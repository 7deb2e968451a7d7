#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "satelim/idealops.hpp"

namespace satelim::bench {

// One CSV row.  `outcome` is ok, budget, or disagree; block rows report
// sat_steps = 0.  No column asserts which method should win.
struct BenchRecord {
    std::string instance;
    std::string method;
    std::string order;
    double time_ms = 0.0;
    unsigned sat_steps = 0;
    std::size_t gb_size = 0;
    std::uint64_t max_deg = 0;
    std::string outcome;
};

std::string csv_header();
std::string csv_row(const BenchRecord& r);

struct Instance {
    std::string id;
    EliminationProblem problem;
};

struct Options {
    std::vector<std::string> methods{"block", "saturation"};
    Budget budget{};
    int repeats = 3;  // wall time is the median of this many runs
};

// Runs every requested method on every instance, sequentially, and checks
// that methods agree whenever more than one succeeded.  Rows come back
// sorted by (instance, method).
std::vector<BenchRecord> run_instances(const std::vector<Instance>& instances, const Options& opts);

// *.ideal files of a directory, sorted by filename.
std::vector<Instance> load_corpus(const std::filesystem::path& dir);

// b_1 - t, b_2 - t^2, ..., b_m - t^m over QQ, eliminating t.
Instance curve_family_instance(unsigned m);

struct RandomParams {
    std::size_t elim_vars = 2;
    std::size_t base_vars = 2;
    std::size_t max_gens = 4;
    std::size_t max_terms = 5;
    std::uint32_t max_degree = 3;
    long coeff_bound = 3;
    FieldSpec field = FieldSpec::rationals();
};

Polynomial random_polynomial(const RingPtr& ring, const MonomialOrder& order, std::uint32_t max_degree,
                             std::size_t max_terms, long coeff_bound, std::mt19937_64& rng);

Instance random_instance(const RandomParams& params, std::mt19937_64& rng, const std::string& id);

}  // namespace satelim::bench
