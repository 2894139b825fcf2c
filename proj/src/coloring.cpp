#include "hfree/coloring.hpp"

#include "hfree/construct.hpp"
#include "hfree/cliques.hpp"
#include "hfree/density.hpp" // BudgetError

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace hfree {

namespace {

    struct Quotient {
        bool feasible = true;
        Graph graph;            // on class representatives, renumbered
        std::vector<int> cls;   // original vertex -> class index
    };

    // Contract every equality pair; infeasible when a class spans an edge.
    Quotient contract(const Graph& g, const std::vector<std::pair<int, int>>& equal)
    {
        int n = g.vertex_count();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, w] : equal) {
            if (u < 0 || u >= n || w < 0 || w >= n)
                throw std::invalid_argument("equality constraint out of range");
            int a = find(u), b = find(w);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
        Quotient out;
        out.cls.assign(n, -1);
        int classes = 0;
        for (int v = 0; v < n; ++v)
            if (find(v) == v)
                out.cls[v] = classes++;
        for (int v = 0; v < n; ++v)
            out.cls[v] = out.cls[find(v)];
        std::vector<Edge> es;
        for (const Edge& e : g.edges()) {
            int a = out.cls[e.u], b = out.cls[e.v];
            if (a == b) {
                out.feasible = false; // forced equality across an edge
                return out;
            }
            es.push_back(make_edge(a, b));
        }
        out.graph = Graph(classes, es);
        return out;
    }

    class DsaturSolver {
    public:
        DsaturSolver(const Graph& g, int q, const SolveLimits& limits, bool symmetry_break)
            : g_(g)
            , n_(g.vertex_count())
            , q_(q)
            , limits_(limits)
            , symmetry_break_(symmetry_break)
            , colour_(n_, -1)
            , domain_(n_, q >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1)
        {
            start_ = std::chrono::steady_clock::now();
        }

        bool assign_fixed(int v, int c)
        {
            if (c < 0 || c >= q_)
                return false;
            if (colour_[v] >= 0)
                return colour_[v] == c;
            return assign(v, c);
        }

        std::optional<std::vector<int>> solve()
        {
            if (search())
                return colour_;
            return std::nullopt;
        }

    private:
        bool assign(int v, int c)
        {
            colour_[v] = c;
            trail_.push_back({});
            auto& undo = trail_.back();
            bool ok = true;
            g_.neighbors(v).for_each([&](int u) {
                if (!ok || colour_[u] >= 0)
                    return;
                std::uint64_t bit = std::uint64_t{1} << c;
                if (domain_[u] & bit) {
                    domain_[u] &= ~bit;
                    undo.push_back(u);
                    if (domain_[u] == 0)
                        ok = false;
                }
            });
            if (!ok)
                unassign(v);
            return ok;
        }

        void unassign(int v)
        {
            std::uint64_t bit = std::uint64_t{1} << colour_[v];
            for (int u : trail_.back())
                domain_[u] |= bit;
            trail_.pop_back();
            colour_[v] = -1;
        }

        // most saturated first: smallest domain, then largest degree, then index
        int pick() const
        {
            int best = -1, bestdom = 65, bestdeg = -1;
            for (int v = 0; v < n_; ++v) {
                if (colour_[v] >= 0)
                    continue;
                int dom = std::popcount(domain_[v]);
                int deg = g_.degree(v);
                if (dom < bestdom || (dom == bestdom && deg > bestdeg)) {
                    best = v;
                    bestdom = dom;
                    bestdeg = deg;
                }
            }
            return best;
        }

        bool search()
        {
            if (++nodes_ > limits_.node_budget)
                throw BudgetError("colouring: node budget exceeded");
            if (limits_.seconds > 0 && (nodes_ & 0xfff) == 0) {
                auto now = std::chrono::steady_clock::now();
                if (std::chrono::duration<double>(now - start_).count() > limits_.seconds)
                    throw BudgetError("colouring: time budget exceeded");
            }
            int v = pick();
            if (v < 0)
                return true;
            int cap = q_;
            if (symmetry_break_)
                cap = std::min(q_, max_used_ + 2); // introduce at most one new colour
            for (int c = 0; c < cap; ++c) {
                if (!(domain_[v] >> c & 1))
                    continue;
                int saved = max_used_;
                max_used_ = std::max(max_used_, c);
                if (assign(v, c)) {
                    if (search())
                        return true;
                    unassign(v);
                }
                max_used_ = saved;
            }
            return false;
        }

        const Graph& g_;
        int n_;
        int q_;
        SolveLimits limits_;
        bool symmetry_break_;
        std::vector<int> colour_;
        std::vector<std::uint64_t> domain_;
        std::vector<std::vector<int>> trail_;
        int max_used_ = -1;
        std::uint64_t nodes_ = 0;
        std::chrono::steady_clock::time_point start_;
    };

} // namespace

std::optional<Coloring> is_q_colorable(const Graph& g, int q,
    const ColoringConstraints& constraints, const SolveLimits& limits)
{
    if (q < 1)
        throw std::invalid_argument("is_q_colorable: need q >= 1");
    if (q > 63)
        throw std::invalid_argument("is_q_colorable: q above 63 is not supported");
    Quotient quot = contract(g, constraints.equal);
    if (!quot.feasible)
        return std::nullopt;

    DsaturSolver solver(quot.graph, q, limits, constraints.fixed.empty());
    for (auto [v, c] : constraints.fixed) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("fixed colour constraint out of range");
        if (!solver.assign_fixed(quot.cls[v], c))
            return std::nullopt;
    }
    auto sol = solver.solve();
    if (!sol)
        return std::nullopt;
    Coloring out;
    out.q = q;
    out.assignment.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        out.assignment[v] = (*sol)[quot.cls[v]];
    return out;
}

int chromatic_number(const Graph& g, const SolveLimits& limits)
{
    if (g.vertex_count() == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    int lb = clique_number(g);

    // greedy DSATUR upper bound: first-fit in saturation order
    int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::vector<std::uint64_t> seen(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, bestsat = -1, bestdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            int sat = std::popcount(seen[v]);
            int deg = g.degree(v);
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                best = v;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        int c = std::countr_one(seen[best]); // lowest colour not seen
        colour[best] = c;
        g.neighbors(best).for_each([&](int u) { seen[u] |= std::uint64_t{1} << c; });
    }
    int ub = 1 + *std::max_element(colour.begin(), colour.end());

    for (int q = lb; q < ub; ++q)
        if (is_q_colorable(g, q, {}, limits))
            return q;
    return ub;
}

ForcedPairsResult forced_pairs_under_base_equality(int k, int t, std::uint64_t coloring_cap)
{
    Graph tw = tower(k, t);
    int n = tw.vertex_count();
    int q = k - 1;
    Quotient quot = contract(tw, {{0, 1}});
    if (!quot.feasible)
        return {};

    const Graph& qg = quot.graph;
    int qn = qg.vertex_count();
    std::vector<int> colour(qn, -1);
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n, true));
    ForcedPairsResult res;

    // enumerate proper colourings in vertex order, colours introduced in
    // order (one representative per colour-permutation class)
    auto recurse = [&](auto&& self, int v, int used) -> void {
        if (v == qn) {
            if (++res.colorings > coloring_cap)
                throw BudgetError("forced_pairs: colouring cap exceeded");
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (colour[quot.cls[a]] != colour[quot.cls[b]])
                        eq[a][b] = false;
            return;
        }
        int cap = std::min(q, used + 1);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            qg.neighbors(v).for_each([&](int u) {
                if (u < v && colour[u] == c)
                    ok = false;
            });
            if (!ok)
                continue;
            colour[v] = c;
            self(self, v + 1, std::max(used, c + 1));
            colour[v] = -1;
        }
    };
    recurse(recurse, 0, 0);

    res.colorable = res.colorings > 0;
    if (res.colorable)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (eq[a][b])
                    res.pairs.push_back({a, b});
    return res;
}

} // namespace hfree
