#pragma once

#include "hfree/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfree {

enum class ExtremalMethod { Exact, Partite, Delete };

std::string method_name(ExtremalMethod m);

struct ExtremalResult {
    ExtremalMethod method = ExtremalMethod::Exact;
    Graph survivor; // spanning subgraph of the host
    std::uint64_t clique_count = 0;
    bool h_free_certified = false;
};

struct Embedding {
    std::vector<int> map;    // pattern vertex -> host vertex
    std::vector<Edge> edges; // host edges used, sorted
};

// Subgraph (not necessarily induced) containment test by backtracking with
// degree and neighbourhood pruning; returns the first witness in the
// deterministic search order.
std::optional<Embedding> contains(const Graph& g, const Graph& pattern);

// All copies of the pattern with pairwise distinct edge sets (one embedding
// per copy, automorphic images deduplicated). Hard failure beyond cap copies.
std::vector<Embedding> enumerate_copies(const Graph& g, const Graph& pattern, std::uint64_t cap);

// Repeatedly deletes every edge lying on two or more K_m copies until none
// remains, then deletes the edges on no copy. The result is a fixed point in
// which every edge lies on exactly one copy (an edge-disjoint K_m packing).
Graph km_cleanup(const Graph& g, int m);

struct ExactLimits {
    int max_host_vertices = 10;
    int max_host_edges = 30;
    std::uint64_t node_budget = 50'000'000;
};

// Globally optimal K_m count over all H-free spanning subgraphs, by branch
// and bound over edge deletion: each intact H-copy must lose an edge, so the
// search branches on which of its edges goes. Refuses hosts beyond the limits
// rather than approximating.
ExtremalResult exact_max_hfree_cliques(const Graph& host, const Graph& h, int m,
    const ExactLimits& limits = {});

// Best of `restarts` random balanced (k-1)-partitions, each improved to a
// local optimum of the surviving K_m count by single-vertex moves. The
// survivor keeps exactly the host edges crossing parts, so it is H-free for
// every H with chromatic number >= k; no containment search is needed.
ExtremalResult partite_heuristic(const Graph& host, int k, int m, int restarts,
    std::uint64_t seed);

// Enumerates copies of H' (a densest subgraph of H attaining its 2-density)
// and greedily deletes, per copy, the edge destroying the most remaining
// copies; ties prefer the edge on the fewest surviving K_m copies, then the
// lexicographically least. The survivor is certified H-free by containment.
ExtremalResult deletion_heuristic(const Graph& host, const Graph& h, int m, std::uint64_t cap);

} // namespace hfree
