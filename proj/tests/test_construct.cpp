#include "hfree/construct.hpp"

#include "hfree/density.hpp"

#include <doctest.h>

#include <set>

using namespace hfree;

namespace {

int component_count(const Graph& g, const Bitset& within)
{
    Bitset seen(g.vertex_count());
    int comps = 0;
    within.for_each([&](int start) {
        if (seen.test(start))
            return;
        ++comps;
        std::vector<int> stack{start};
        seen.set(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            (g.neighbors(v) & within).for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
            });
        }
    });
    return comps;
}

} // namespace

TEST_CASE("tower(4,1) has exactly the level-1 adjacencies")
{
    Graph t = tower(4, 1);
    CHECK(t.vertex_count() == 5);
    std::vector<Edge> expected = {{0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(t.edges() == expected);
    // base pair is not an edge, nor is the level's missing pair
    CHECK(!t.has_edge(0, 1));
    CHECK(!t.has_edge(2, 3));
}

TEST_CASE("tower sizes match the closed forms")
{
    CHECK(tower(4, 3).vertex_count() == 11);
    CHECK(tower(4, 3).edge_count() == 15);
    for (int k = 4; k <= 8; ++k)
        for (int t = 1; t <= 20; ++t) {
            Graph tw = tower(k, t);
            CHECK(tw.vertex_count() == 2 + t * (k - 1));
            CHECK(tw.edge_count()
                == static_cast<std::size_t>(t) * (k + 1) * (k - 2) / 2);
        }
    CHECK_THROWS_AS(tower(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(tower(4, 0), std::invalid_argument);
}

TEST_CASE("tower density identity")
{
    // d2 of the full tower = (k+1)(k-2)/(2(k-1)) - 1/(v-2), exactly
    for (int k = 4; k <= 7; ++k)
        for (int t = 1; t <= 10; ++t) {
            Graph tw = tower(k, t);
            Rational lhs = d2_density(tw, tw.full_set());
            Rational rhs = Rational::from_int((k + 1) * (k - 2), 2 * (k - 1))
                - Rational::from_int(1, tw.vertex_count() - 2);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("tower complexes glue on the base only")
{
    Graph c = tower_complex(4, 1);
    CHECK(c.vertex_count() == 14);
    CHECK(c.edge_count() == 20);
    CHECK(tower_complex(5, 2).vertex_count() == 42);

    // deleting the base splits the complex into its k towers
    Bitset interior = c.full_set();
    interior.reset(0);
    interior.reset(1);
    CHECK(component_count(c, interior) == 4);

    for (int k = 4; k <= 6; ++k)
        for (int t = 1; t <= 3; ++t)
            CHECK(tower_complex(k, t).edge_count()
                == static_cast<std::size_t>(k) * t * (k + 1) * (k - 2) / 2);
}

TEST_CASE("bridge matches the k=4 picture")
{
    Graph b = bridge_graph(4);
    // W0 block 0..3 carries towers 1..4, W1 block 4..7
    std::set<Edge> expected = {{0, 5}, {0, 6}, {1, 6}, {1, 7}, {2, 7}, {3, 4}};
    auto es = b.edges();
    CHECK(std::set<Edge>(es.begin(), es.end()) == expected);
}

TEST_CASE("bridge counts, degrees and pair coverage")
{
    CHECK(bridge_graph(5).edge_count() == 10);
    for (int k = 4; k <= 8; ++k) {
        Graph b = bridge_graph(k);
        CHECK(b.edge_count() == static_cast<std::size_t>(k) * (k - 1) / 2);
        int maxdeg = 0;
        for (int v = 0; v < b.vertex_count(); ++v)
            maxdeg = std::max(maxdeg, b.degree(v));
        CHECK(maxdeg == k / 2);
        // bipartite between the blocks
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) {
                CHECK(!b.has_edge(u, v));
                CHECK(!b.has_edge(k + u, k + v));
            }
        // exactly one edge between the i-th and j-th special pairs
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int between = b.has_edge(i, k + j) + b.has_edge(j, k + i);
                CHECK(between == 1);
            }
    }
    CHECK(bridge_graph(6).edge_count() == 15);
}

TEST_CASE("supercomplex adds exactly the bridge")
{
    Graph s1 = supercomplex(4, 1);
    CHECK(s1.vertex_count() == 14);
    CHECK(s1.edge_count() == 26);
    Graph s2 = supercomplex(4, 2);
    CHECK(s2.vertex_count() == 26);
    CHECK(s2.edge_count() == 46);

    // base degrees follow the split neighbourhood rule: ceil((k-1)/2) and
    // floor((k-1)/2) neighbours per tower
    CHECK(s1.degree(0) == 8);
    CHECK(s1.degree(1) == 4);

    for (int k = 4; k <= 6; ++k)
        for (int t = 1; t <= 3; ++t)
            CHECK(supercomplex(k, t).edge_count()
                == static_cast<std::size_t>(k) * t * (k + 1) * (k - 2) / 2 + k * (k - 1) / 2);
}

TEST_CASE("final graphs replace every skeleton edge by a supercomplex")
{
    Graph g1 = sparse_k_chromatic(4, 1);
    CHECK(g1.vertex_count() == 76);
    CHECK(g1.edge_count() == 156);
    CHECK(sparse_k_chromatic(4, 2).vertex_count() == 148);

    for (int k = 4; k <= 5; ++k)
        for (int t = 1; t <= 2; ++t) {
            Graph g = sparse_k_chromatic(k, t);
            long long copies = static_cast<long long>(k) * (k - 1) / 2;
            CHECK(g.vertex_count() == k + copies * (k * (k - 1) * t));
            CHECK(g.edge_count()
                == static_cast<std::size_t>(
                    copies * (static_cast<long long>(k) * t * (k + 1) * (k - 2) / 2 + copies)));
        }

    // no direct skeleton edges: every K_k edge was replaced
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(!g1.has_edge(u, v));

    // labels: skeleton vertices carry their origin, interiors their tower role
    const auto& labels = *g1.labels();
    for (int u = 0; u < 4; ++u)
        CHECK(labels[u].kind == LabelKind::CliqueOrigin);
    CHECK(labels[4].kind == LabelKind::Tower);
}

TEST_CASE("epsilon fixes the tower height exactly")
{
    CHECK(tower_height_for_epsilon(4, Rational(64)) == 1);
    CHECK(tower_height_for_epsilon(4, Rational::from_int(1, 2)) == 128);
    CHECK(tower_height_for_epsilon(4, Rational(3)) == 22);          // ceil(64/3)
    CHECK(tower_height_for_epsilon(4, Rational::from_int(64, 21)) == 21); // exact division
    CHECK(tower_height_for_epsilon(5, Rational(125)) == 1);
    CHECK_THROWS_AS(tower_height_for_epsilon(4, Rational(0)), std::invalid_argument);

    Graph via_eps = sparse_k_chromatic(4, Rational(32));
    Graph via_t = sparse_k_chromatic(4, 2);
    CHECK(via_eps.edges() == via_t.edges());
}

TEST_CASE("tower labels name every vertex once")
{
    Graph t = tower(5, 2);
    REQUIRE(t.labels().has_value());
    const auto& ls = *t.labels();
    CHECK(ls[0] == StructuredLabel{LabelKind::Base, 0, 0, 0});
    CHECK(ls[1] == StructuredLabel{LabelKind::Base, 0, 0, 1});
    CHECK(ls[tower_vertex(5, 2, 3)] == StructuredLabel{LabelKind::Tower, 1, 2, 3});
    Graph c = tower_complex(4, 2);
    CHECK((*c.labels())[complex_vertex(4, 2, 3, 2, 1)]
        == StructuredLabel{LabelKind::Tower, 3, 2, 1});
}
