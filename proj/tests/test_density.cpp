#include "hfree/density.hpp"

#include "hfree/construct.hpp"
#include "hfree/random_graphs.hpp"

#include <doctest.h>

#include <bit>

using namespace hfree;

namespace {

// Independent m2 oracle: plain loop over all subsets, edges recounted from
// scratch through has_edge. Shares nothing with the Gray-code sweep.
Rational brute_m2(const Graph& g)
{
    int n = g.vertex_count();
    REQUIRE(n <= 20);
    Rational best(-1000);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int s = std::popcount(mask);
        if (s < 3)
            continue;
        long long e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && g.has_edge(u, v))
                    ++e;
        Rational val = Rational::from_int(e - 1, s - 2);
        if (best < val)
            best = val;
    }
    return best;
}

} // namespace

TEST_CASE("d2 density of whole graphs")
{
    Graph t41 = tower(4, 1);
    CHECK(d2_density(t41, t41.full_set()) == Rational::from_int(4, 3));
    Graph k3 = complete_graph(3);
    CHECK(d2_density(k3, k3.full_set()) == Rational(2));
    Graph c5 = cycle_graph(5);
    CHECK(d2_density(c5, c5.full_set()) == Rational::from_int(4, 3));
    CHECK_THROWS_AS(d2_density(c5, Bitset::of(5, {0, 1})), std::invalid_argument);
}

TEST_CASE("potential values")
{
    Graph t41 = tower(4, 1);
    CHECK(potential(t41, 4, t41.full_set()) == Rational(20));
    CHECK(potential(t41, 4, Bitset::of(5, {0, 2})) == Rational(14)); // one edge
    Graph k5 = complete_graph(5);
    CHECK(potential(k5, 5, Bitset::of(5, {0})) == Rational(18));
    CHECK_THROWS_AS(potential(t41, 3, t41.full_set()), std::invalid_argument);
    CHECK_THROWS_AS(potential(t41, 4, Bitset(5)), std::invalid_argument);
}

TEST_CASE("m2 on named graphs")
{
    CHECK(m2(complete_graph(4)).value == Rational::from_int(5, 2));
    CHECK(m2(cycle_graph(5)).value == Rational::from_int(4, 3));

    DensityReport rep = m2(tower(4, 1));
    CHECK(rep.value == Rational::from_int(3, 2));
    CHECK(rep.witness == Bitset::of(5, {0, 2, 3, 4})); // base vertex plus level 1

    CHECK_THROWS_AS(m2(complete_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(m2(Graph(4, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("m2 matches the subset brute force on random graphs")
{
    for (int s = 0; s < 40; ++s) {
        int n = 4 + static_cast<int>(stream(5000, s) % 7); // 4..10
        Graph g = sample_gnp(n, Rational::from_int(1, 2), 31000 + s);
        if (g.edge_count() < 2)
            continue;
        CHECK(m2(g).value == brute_m2(g));
    }
}

TEST_CASE("m2 dominates d2 on arbitrary subsets")
{
    Graph g = sample_gnp(12, Rational::from_int(2, 5), 99);
    DensityReport rep = m2(g);
    for (int s = 0; s < 50; ++s) {
        Bitset a(12);
        for (int v = 0; v < 12; ++v)
            if (stream(s, v) % 3 == 0)
                a.set(v);
        if (a.count() < 3)
            continue;
        CHECK(d2_density(g, a) <= rep.value);
    }
}

TEST_CASE("m2 is monotone under edge addition")
{
    for (int s = 0; s < 15; ++s) {
        Graph g = sample_gnp(9, Rational::from_int(1, 3), 777 + s);
        if (g.edge_count() < 2)
            continue;
        Rational before = m2(g).value;
        // first non-edge
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v)
                if (!g.has_edge(u, v)) {
                    CHECK(before <= m2(g.with_edge(u, v)).value);
                    u = v = 9;
                    break;
                }
    }
}

TEST_CASE("potential threshold is equivalent to the d2 bound")
{
    // rho >= 2(k+1)(k-2)-2(k-1)  iff  d2 <= (k+1)(k-2)/(2(k-1)), |A| >= 3
    for (int k : {4, 5, 6}) {
        long long p = (k + 1) * (k - 2), q = 2 * (k - 1);
        Rational bound = Rational::from_int(p, q);
        Rational thresh(2 * p - q);
        for (int s = 0; s < 6; ++s) {
            int n = 6 + s;
            Graph g = sample_gnp(n, Rational::from_int(1, 2), 1234 + 10 * k + s);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) < 3)
                    continue;
                Bitset a(n);
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1)
                        a.set(v);
                bool lhs = thresh <= potential(g, k, a);
                bool rhs = d2_density(g, a) <= bound;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Kostochka-Yancey bound on small k-critical graphs")
{
    // moser spindle: two diamonds sharing vertex 0, tips joined
    Graph spindle(7,
        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
    Graph wheel5 = [] {
        std::vector<Edge> es;
        for (int i = 0; i < 5; ++i) {
            es.push_back(make_edge(i, (i + 1) % 5));
            es.push_back(make_edge(i, 5));
        }
        return Graph(6, es);
    }();

    struct Item {
        Graph g;
        int k;
    };
    std::vector<Item> critical = {
        {complete_graph(4), 4}, {complete_graph(5), 5}, {wheel5, 4}, {spindle, 4}};
    for (const auto& [g, k] : critical) {
        Rational bound = Rational::from_int((k + 1) * (k - 2), 2 * (k - 1));
        CHECK(bound < m2(g).value); // strict
    }
}

TEST_CASE("potential lemma sweeps pass on constructions")
{
    VertexSet base2 = Bitset::of(tower(4, 2).vertex_count(), {0, 1});
    auto r1 = verify_potential_lemma(tower(4, 2), 4, 14, 20, base2);
    CHECK(r1.ok);
    CHECK(r1.subsets_checked == (1u << 8) - 1 - 8); // all subsets with >= 2 members

    Graph c41 = tower_complex(4, 1);
    auto r2 = verify_potential_lemma(c41, 4, 14, 20, Bitset::of(c41.vertex_count(), {0, 1}));
    CHECK(r2.ok);

    // restricted sweeps: avoid the base / size-capped
    Graph s41 = supercomplex(4, 1);
    LemmaCheckOptions avoid;
    avoid.avoid = Bitset::of(s41.vertex_count(), {0, 1});
    CHECK(verify_potential_lemma(s41, 4, 14, 20, Bitset::of(s41.vertex_count(), {0, 1}), avoid).ok);
    LemmaCheckOptions size;
    size.max_size = 2;
    CHECK(verify_potential_lemma(s41, 4, 14, 20, Bitset::of(s41.vertex_count(), {0, 1}), size).ok);
}

TEST_CASE("mutated tower fails the base-potential sweep")
{
    // closing the missing edge of level 1 makes rho(V0 u V1) = 14 < 20
    Graph bad = tower(4, 1).with_edge(tower_vertex(4, 1, 0), tower_vertex(4, 1, 1));
    auto res = verify_potential_lemma(bad, 4, 14, 20, Bitset::of(5, {0, 1}));
    CHECK(!res.ok);
    REQUIRE(res.counterexample.has_value());
    // the counterexample is a genuine violation, recomputed from scratch
    Rational rho = potential(bad, 4, *res.counterexample);
    bool base_in = res.counterexample->test(0) && res.counterexample->test(1);
    CHECK(rho == Rational(res.counterexample_potential));
    CHECK(rho < Rational(base_in ? 20 : 14));
    // the full set is a violation too: rho = 14 under the base threshold 20
    CHECK(potential(bad, 4, bad.full_set()) == Rational(14));
}

TEST_CASE("pruned m2 is exact beyond the sweep cap")
{
    // disjoint K_5 and C_30: the K_5 wins with m2 = 3
    std::vector<Edge> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            es.push_back({u, v});
    for (int i = 0; i < 30; ++i)
        es.push_back(make_edge(5 + i, 5 + (i + 1) % 30));
    DensityReport rep = m2_pruned(Graph(35, es));
    CHECK(rep.value == Rational(3));
    CHECK(rep.witness == Bitset::of(35, {0, 1, 2, 3, 4}));

    // a long cycle alone: the whole cycle is the densest subgraph
    DensityReport cyc = m2_pruned(cycle_graph(35));
    CHECK(cyc.value == Rational::from_int(34, 33));
    CHECK(cyc.witness.count() == 35);

    // K_4 with a pendant path: still 5/2
    std::vector<Edge> es2;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            es2.push_back({u, v});
    for (int i = 3; i < 33; ++i)
        es2.push_back({i, i + 1});
    CHECK(m2_pruned(Graph(34, es2)).value == Rational::from_int(5, 2));
}
