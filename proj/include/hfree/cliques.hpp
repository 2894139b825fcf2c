#pragma once

#include "hfree/graph.hpp"
#include "hfree/rational.hpp"

#include <cstdint>
#include <map>

namespace hfree {

struct CliqueStats {
    int m = 0;
    std::uint64_t total = 0;
    // copies of K_m through each edge; edges with no copies are absent
    std::map<Edge, std::uint64_t> per_edge;
    // unordered pairs of distinct copies sharing at least one edge
    std::uint64_t sharing_pairs = 0;
    // copies having at least one edge shared with another copy
    std::uint64_t involved_copies = 0;
};

// Exact K_m statistics by ordered recursive enumeration over adjacency
// bitsets; each copy is visited exactly once (vertices ascending). Hard
// failure once more than `cap` copies are enumerated. Memory for the sharing
// statistics grows with total * C(m,2).
CliqueStats count_cliques(const Graph& g, int m, std::uint64_t cap = 100'000'000);

// Largest m with at least one K_m, by branch and bound with a greedy
// colouring bound. 0 for the empty graph, 1 for edgeless nonempty graphs.
int clique_number(const Graph& g);

// |E| * (sum_e c_e^2) / (sum_e c_e)^2 where c_e counts the K_m copies on
// edge e: the empirical second moment ratio of the copy count on a uniformly
// random edge. Requires at least one edge and at least one copy.
Rational second_moment_ratio(const Graph& g, int m);

} // namespace hfree
