#include "hfree/cliques.hpp"

#include "hfree/density.hpp" // BudgetError

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hfree {

namespace {

    // Calls f(members) for every K_m, members strictly ascending.
    template <typename F> void enumerate_cliques(const Graph& g, int m, F&& f)
    {
        int n = g.vertex_count();
        if (m > n)
            return;
        std::vector<int> members(m);
        // cand at depth d = common neighbours of members[0..d-1] above members[d-1]
        auto recurse = [&](auto&& self, const Bitset& cand, int depth) -> void {
            if (depth == m) {
                f(members);
                return;
            }
            if (cand.count() < m - depth)
                return;
            cand.for_each([&](int v) {
                members[depth] = v;
                Bitset next = cand & g.neighbors(v);
                next.reset_leq(v);
                self(self, next, depth + 1);
            });
        };
        recurse(recurse, Bitset::full(n), 0);
    }

} // namespace

CliqueStats count_cliques(const Graph& g, int m, std::uint64_t cap)
{
    if (m < 2)
        throw std::invalid_argument("count_cliques: need m >= 2");
    CliqueStats stats;
    stats.m = m;

    // first pass: total and per-edge counts
    enumerate_cliques(g, m, [&](const std::vector<int>& mem) {
        if (++stats.total > cap)
            throw BudgetError("count_cliques: clique cap exceeded");
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                ++stats.per_edge[{mem[i], mem[j]}];
    });

    if (stats.total < 2)
        return stats;

    // second pass: pairs of copies sharing an edge, deduplicated by clique id
    // pair (two copies sharing s >= 2 vertices share C(s,2) edges)
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> ids_on_edge;
    auto ekey = [&](int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    };
    for (const auto& [e, c] : stats.per_edge)
        if (c >= 2)
            ids_on_edge[ekey(e.u, e.v)] = {};
    std::uint32_t id = 0;
    std::vector<bool> involved;
    enumerate_cliques(g, m, [&](const std::vector<int>& mem) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto it = ids_on_edge.find(ekey(mem[i], mem[j]));
                if (it != ids_on_edge.end())
                    it->second.push_back(id);
            }
        ++id;
    });
    involved.assign(id, false);
    std::unordered_set<std::uint64_t> pairs;
    for (const auto& [key, ids] : ids_on_edge) {
        (void)key;
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                pairs.insert((static_cast<std::uint64_t>(ids[a]) << 32) | ids[b]);
                involved[ids[a]] = involved[ids[b]] = true;
                if (pairs.size() > (std::uint64_t{1} << 28))
                    throw BudgetError("count_cliques: sharing-pair set too large");
            }
    }
    stats.sharing_pairs = pairs.size();
    stats.involved_copies = static_cast<std::uint64_t>(
        std::count(involved.begin(), involved.end(), true));
    return stats;
}

namespace {

    // Tomita-style expansion with a greedy colouring bound.
    class MaxClique {
    public:
        explicit MaxClique(const Graph& g)
            : g_(g)
            , n_(g.vertex_count())
        {
        }

        int run()
        {
            if (n_ == 0)
                return 0;
            best_ = 1;
            Bitset all = Bitset::full(n_);
            expand(all, 0);
            return best_;
        }

    private:
        void expand(const Bitset& cand, int depth)
        {
            int csize = cand.count();
            if (csize == 0) {
                best_ = std::max(best_, depth);
                return;
            }
            if (depth + csize <= best_)
                return;

            // greedy colouring of cand; vertices listed colour-major so the
            // most constrained come out last
            std::vector<int> order, colour;
            order.reserve(csize);
            colour.reserve(csize);
            Bitset uncoloured = cand;
            int classes = 0;
            while (!uncoloured.empty()) {
                ++classes;
                Bitset avail = uncoloured;
                while (!avail.empty()) {
                    int v = avail.next();
                    order.push_back(v);
                    colour.push_back(classes);
                    uncoloured.reset(v);
                    avail.reset(v);
                    avail -= g_.neighbors(v);
                }
            }
            for (int i = csize - 1; i >= 0; --i) {
                if (depth + colour[i] <= best_)
                    return;
                int v = order[i];
                Bitset next = cand & g_.neighbors(v);
                for (int j = i; j < csize; ++j)
                    next.reset(order[j]);
                expand(next, depth + 1);
            }
        }

        const Graph& g_;
        int n_;
        int best_ = 0;
    };

} // namespace

int clique_number(const Graph& g) { return MaxClique(g).run(); }

Rational second_moment_ratio(const Graph& g, int m)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("second_moment_ratio: graph has no edges");
    CliqueStats stats = count_cliques(g, m);
    if (stats.total == 0)
        throw std::invalid_argument("second_moment_ratio: no K_m copies");
    BigInt sum = 0, sumsq = 0;
    for (const auto& [e, c] : stats.per_edge) {
        (void)e;
        sum += c;
        sumsq += BigInt(c) * c;
    }
    return Rational(BigInt(g.edge_count()) * sumsq, sum * sum);
}

} // namespace hfree
