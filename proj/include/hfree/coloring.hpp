#pragma once

#include "hfree/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hfree {

struct Coloring {
    std::vector<int> assignment; // vertex -> colour in [0,q)
    int q = 0;
};

struct ColoringConstraints {
    std::vector<std::pair<int, int>> equal; // vertices forced to share a colour
    std::vector<std::pair<int, int>> fixed; // (vertex, colour) pre-assignments
};

struct SolveLimits {
    std::uint64_t node_budget = 2'000'000'000;
    double seconds = 0; // 0 = no wall-clock limit
};

// Decides q-colourability and returns a proper colouring when one exists.
// Equality constraints are applied by contracting the vertices first (an
// equality across an edge is immediately infeasible). The search is DSATUR
// ordered backtracking with forward checking and colours introduced in order,
// hence deterministic. Throws BudgetError when limits run out; never
// approximates.
std::optional<Coloring> is_q_colorable(const Graph& g, int q,
    const ColoringConstraints& constraints = {}, const SolveLimits& limits = {});

// Minimum q with is_q_colorable != none, bracketed by the clique number from
// below and a greedy DSATUR colouring from above.
int chromatic_number(const Graph& g, const SolveLimits& limits = {});

struct ForcedPairsResult {
    bool colorable = false; // some (k-1)-colouring with equal base colours exists
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t colorings = 0; // enumerated colourings, up to colour permutation
};

// Enumerates every (k-1)-colouring f of tower(k,t) with f(v00)=f(v01), up to
// permutation of the colour classes (which preserves all colour equalities),
// and reports every vertex pair that is monochromatic in all of them.
ForcedPairsResult forced_pairs_under_base_equality(int k, int t,
    std::uint64_t coloring_cap = 100'000'000);

} // namespace hfree
