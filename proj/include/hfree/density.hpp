#pragma once

#include "hfree/graph.hpp"
#include "hfree/rational.hpp"

#include <cstdint>
#include <optional>

namespace hfree {

// Exhaustive subset sweeps refuse above this many (active) vertices.
inline constexpr int kExhaustiveCap = 30;

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DensityReport {
    Rational value;
    VertexSet witness;
    std::uint64_t subsets_examined = 0;
};

// (e(G[a]) - 1) / (|a| - 2), exact. Requires |a| >= 3.
Rational d2_density(const Graph& g, const VertexSet& a);

// (k+1)(k-2)|a| - 2(k-1) e(G[a]), exact and integer-valued. Requires k >= 4
// and a nonempty.
Rational potential(const Graph& g, int k, const VertexSet& a);

// Maximum of d2_density over all vertex subsets of size >= 3, by exhaustive
// Gray-code sweep with incremental edge counts. Enumerating induced subgraphs
// suffices: on a fixed vertex set, keeping every induced edge maximizes
// (e-1)/(v-2). Ties break to the smallest witness, then to the canonical
// bitset order. Requires 3 <= n <= kExhaustiveCap and at least 2 edges.
DensityReport m2(const Graph& g);

// Best-effort exact m2 for graphs beyond the exhaustive cap: incumbent from a
// min-degree peel sequence plus a direct scan of all 3-subsets, then repeated
// branch-and-bound searches for a strictly better subset until none exists.
// Throws BudgetError if the search exceeds node_budget nodes.
DensityReport m2_pruned(const Graph& g, std::uint64_t node_budget = 200'000'000);

struct LemmaCheckOptions {
    std::optional<VertexSet> avoid; // subsets must avoid these vertices
    std::optional<int> max_size;    // only subsets with |A| <= max_size
};

struct LemmaCheckResult {
    bool ok = true;
    std::optional<VertexSet> counterexample;
    long long counterexample_potential = 0;
    std::uint64_t subsets_checked = 0;
};

// Sweeps every subset A with |A| >= 2 that satisfies the options, asserting
// potential(g,k,A) >= threshold_general, and >= threshold_base when
// base is contained in A. Stops at the first violation in sweep order.
LemmaCheckResult verify_potential_lemma(const Graph& g, int k, long long threshold_general,
    long long threshold_base, const VertexSet& base, const LemmaCheckOptions& options = {});

} // namespace hfree
