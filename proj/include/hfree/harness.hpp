#pragma once

#include "hfree/extremal.hpp"
#include "hfree/graph.hpp"
#include "hfree/random_graphs.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hfree {

// Flat key=value configuration for a p-sweep (see README for the grammar).
struct SweepConfig {
    int n = 0;
    int m = 3;
    std::string forbidden_path;
    Graph forbidden;
    std::vector<PValue> grid;
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<ExtremalMethod> methods;
    bool include_exact = false;
    int k = 0; // 0 = take chi(forbidden)
    int restarts = 2;
    std::uint64_t cap = 2'000'000;

    // Parses keys; the forbidden graph itself is not loaded here.
    static SweepConfig from_text(const std::string& text);
    // Parses and loads the forbidden edge list from forbidden_path.
    static SweepConfig from_file(const std::string& path);

    void validate() const;
};

struct SweepRow {
    int n = 0;
    std::string a_or_p;
    int trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t host_cliques = 0;
    double expected_cliques = 0;
    std::string method;
    long long surviving_cliques = -1; // -1 marks a method error
    std::string error;
    double wall_ms = 0;
};

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row, double partite_prediction);

struct SweepSummary {
    CriticalExponents exponents;
    std::uint64_t rows = 0;
};

// Samples one host per (grid point, trial), runs every configured method on
// it and emits one CSV row per method, sorted by (p, trial, method). The host
// for grid point g and trial t uses seed stream(seed, g*2^32+t), so the output
// is reproducible for a fixed config regardless of the worker count.
SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out, int workers = 1);

struct TrendRow {
    int t = 0;
    bool skipped = false;
    Rational m2_value;
    int witness_size = 0;
};

// Builds the sparse k-chromatic graph for each t and reports its exact
// 2-density and witness size via the pruned search. Rows whose search blows
// the node budget are marked skipped.
std::vector<TrendRow> witness_trend(int k, const std::vector<int>& t_list,
    std::uint64_t node_budget = 200'000'000);

} // namespace hfree
