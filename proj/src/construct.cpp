#include "hfree/construct.hpp"

#include <algorithm>

namespace hfree {

namespace {

    void require_params(int k, int t)
    {
        if (k < 4)
            throw std::invalid_argument("construction: need k >= 4");
        if (t < 1)
            throw std::invalid_argument("construction: need t >= 1");
    }

    // Edges of one tower, with vertex ids produced by `id(level, position)`
    // (level 0 positions 0/1 are the base).
    template <typename Id>
    void append_tower_edges(int k, int t, Id id, std::vector<Edge>& es)
    {
        for (int i = 1; i <= t; ++i) {
            // K_{k-1} minus the edge between positions 0 and 1
            for (int a = 0; a <= k - 2; ++a)
                for (int b = a + 1; b <= k - 2; ++b)
                    if (!(a == 0 && b == 1))
                        es.push_back(make_edge(id(i, a), id(i, b)));
            // split neighborhoods from the previous level, as real
            // inequalities: 2j <= k-2 and 2j >= k-1
            for (int j = 0; j <= k - 2; ++j) {
                if (2 * j <= k - 2)
                    es.push_back(make_edge(id(i - 1, 0), id(i, j)));
                if (2 * j >= k - 1)
                    es.push_back(make_edge(id(i - 1, 1), id(i, j)));
            }
        }
    }

} // namespace

int tower_vertex(int k, int level, int position)
{
    if (level == 0)
        return position;
    return 2 + (level - 1) * (k - 1) + position;
}

int complex_vertex(int k, int t, int tower_index, int level, int position)
{
    if (level == 0)
        return position;
    return 2 + (tower_index - 1) * t * (k - 1) + (level - 1) * (k - 1) + position;
}

int tower_height_for_epsilon(int k, const Rational& epsilon)
{
    if (!(Rational(0) < epsilon))
        throw std::invalid_argument("epsilon must be positive");
    Rational ratio = Rational(static_cast<long long>(k) * k * k) / epsilon;
    BigInt t = ratio.num() / ratio.den();
    if (t * ratio.den() != ratio.num())
        t += 1; // ceil
    if (t < 1)
        t = 1;
    return t.convert_to<int>();
}

Graph tower(int k, int t)
{
    require_params(k, t);
    int n = 2 + t * (k - 1);
    std::vector<Edge> es;
    append_tower_edges(k, t, [k](int i, int j) { return tower_vertex(k, i, j); }, es);

    std::vector<StructuredLabel> labels(n);
    labels[0] = {LabelKind::Base, 0, 0, 0};
    labels[1] = {LabelKind::Base, 0, 0, 1};
    for (int i = 1; i <= t; ++i)
        for (int j = 0; j <= k - 2; ++j)
            labels[tower_vertex(k, i, j)] = {LabelKind::Tower, 1, i, j};
    return Graph(n, es).with_labels(std::move(labels));
}

Graph tower_complex(int k, int t)
{
    require_params(k, t);
    int n = 2 + k * t * (k - 1);
    std::vector<Edge> es;
    std::vector<StructuredLabel> labels(n);
    labels[0] = {LabelKind::Base, 0, 0, 0};
    labels[1] = {LabelKind::Base, 0, 0, 1};
    for (int tw = 1; tw <= k; ++tw) {
        append_tower_edges(
            k, t, [k, t, tw](int i, int j) { return complex_vertex(k, t, tw, i, j); }, es);
        for (int i = 1; i <= t; ++i)
            for (int j = 0; j <= k - 2; ++j)
                labels[complex_vertex(k, t, tw, i, j)] = {LabelKind::Tower, tw, i, j};
    }
    return Graph(n, es).with_labels(std::move(labels));
}

std::vector<Edge> bridge_edges_in_complex(int k, int t)
{
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            if (2 * (j - i) <= k)
                es.push_back(make_edge(
                    complex_vertex(k, t, i, t, 0), complex_vertex(k, t, j, t, 1)));
            else
                es.push_back(make_edge(
                    complex_vertex(k, t, i, t, 1), complex_vertex(k, t, j, t, 0)));
        }
    return es;
}

Graph bridge_graph(int k)
{
    if (k < 4)
        throw std::invalid_argument("bridge: need k >= 4");
    // W0 block = vertices 0..k-1 (tower i at i-1), W1 block = k..2k-1
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            if (2 * (j - i) <= k)
                es.push_back(make_edge(i - 1, k + j - 1));
            else
                es.push_back(make_edge(j - 1, k + i - 1));
        }
    std::vector<StructuredLabel> labels(2 * k);
    for (int i = 1; i <= k; ++i) {
        labels[i - 1] = {LabelKind::BridgeSide, i, 0, 0};
        labels[k + i - 1] = {LabelKind::BridgeSide, i, 0, 1};
    }
    return Graph(2 * k, es).with_labels(std::move(labels));
}

Graph supercomplex(int k, int t)
{
    require_params(k, t);
    Graph c = tower_complex(k, t);
    std::vector<Edge> es = c.edges();
    auto bridge = bridge_edges_in_complex(k, t);
    es.insert(es.end(), bridge.begin(), bridge.end());
    return Graph(c.vertex_count(), es).with_labels(*c.labels());
}

Graph sparse_k_chromatic(int k, int t)
{
    require_params(k, t);
    Graph s = supercomplex(k, t);
    int interior = s.vertex_count() - 2; // per copy, excluding the base pair
    int copies = k * (k - 1) / 2;
    int n = k + copies * interior;

    std::vector<Edge> es;
    std::vector<StructuredLabel> labels(n);
    for (int u = 0; u < k; ++u)
        labels[u] = {LabelKind::CliqueOrigin, u + 1, 0, 0};

    const auto& slabels = *s.labels();
    int next = k;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            // supercomplex vertex -> final id; base 0 -> u, base 1 -> v
            std::vector<int> map(s.vertex_count());
            map[0] = u;
            map[1] = v;
            for (int w = 2; w < s.vertex_count(); ++w) {
                map[w] = next++;
                labels[map[w]] = slabels[w];
            }
            for (const Edge& e : s.edges())
                es.push_back(make_edge(map[e.u], map[e.v]));
        }
    return Graph(n, es).with_labels(std::move(labels));
}

Graph sparse_k_chromatic(int k, const Rational& epsilon)
{
    return sparse_k_chromatic(k, tower_height_for_epsilon(k, epsilon));
}

} // namespace hfree
