#pragma once

#include "hfree/graph.hpp"
#include "hfree/rational.hpp"

#include <optional>

namespace hfree {

struct ConstructionParams {
    int k = 4;
    int t = 1;
    std::optional<Rational> epsilon; // when set, t must equal ceil(k^3/epsilon)
};

// ceil(k^3 / epsilon) with exact rational arithmetic.
int tower_height_for_epsilon(int k, const Rational& epsilon);

// Layered graph on a 2-vertex base {v00,v01} and t levels. Level i induces a
// complete graph on k-1 vertices minus the edge v_{i,0}v_{i,1}; v_{i-1,0} is
// adjacent to v_{i,j} for j <= (k-2)/2 and v_{i-1,1} to v_{i,j} for
// j >= (k-1)/2, both read as real inequalities. The base pair is not an edge.
// Canonical numbering: base first, then levels ascending, positions ascending.
Graph tower(int k, int t);

// k towers glued on a common base, no other shared vertices or edges.
// Numbering: base, then towers in index order.
Graph tower_complex(int k, int t);

// The bipartite gadget on the towers' top special vertices: for 1 <= i < j
// <= k one edge, v^i_0--v^j_1 when j-i <= k/2 and v^i_1--v^j_0 otherwise.
// Returned standalone on 2k vertices (W0 block then W1 block), labeled.
Graph bridge_graph(int k);
std::vector<Edge> bridge_edges_in_complex(int k, int t);

// Tower complex plus the bridge edges on its level-t special vertices.
Graph supercomplex(int k, int t);

// Complete graph on k vertices with every edge replaced by a supercomplex
// copy sharing only its base pair with the skeleton. Skeleton vertices come
// first, then the interiors of the copies in lexicographic edge order.
Graph sparse_k_chromatic(int k, int t);
Graph sparse_k_chromatic(int k, const Rational& epsilon);

// Canonical vertex ids. Base vertices are 0 and 1 in towers and complexes.
int tower_vertex(int k, int level, int position);
int complex_vertex(int k, int t, int tower_index, int level, int position);

} // namespace hfree
