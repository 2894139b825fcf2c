#include "hfree/density.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace hfree {

namespace {

    long long induced_edges(const Graph& g, const VertexSet& a)
    {
        long long twice = 0;
        a.for_each([&](int v) { twice += g.neighbors(v).and_count(a); });
        return twice / 2;
    }

    // Adjacency rows of the vertices in `active`, as masks over positions in
    // `active`. All exhaustive sweeps run on these single-word masks.
    std::vector<std::uint64_t> local_masks(const Graph& g, const std::vector<int>& active)
    {
        int r = static_cast<int>(active.size());
        std::vector<std::uint64_t> mask(r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i != j && g.has_edge(active[i], active[j]))
                    mask[i] |= std::uint64_t{1} << j;
        return mask;
    }

    VertexSet to_vertex_set(std::uint64_t mask, const std::vector<int>& active, int n)
    {
        VertexSet s(n);
        for (int i = 0; i < static_cast<int>(active.size()); ++i)
            if ((mask >> i) & 1)
                s.set(active[i]);
        return s;
    }

    // Visits every nonempty subset of [0,r) in binary-reflected Gray-code
    // order, maintaining the member count and induced edge count
    // incrementally. f(mask, size, edges) -> bool; returning false stops.
    template <typename F>
    void gray_sweep(const std::vector<std::uint64_t>& adj, F&& f)
    {
        int r = static_cast<int>(adj.size());
        std::uint64_t cur = 0;
        int size = 0;
        long long edges = 0;
        for (std::uint64_t i = 1, end = std::uint64_t{1} << r; i < end; ++i) {
            int bit = std::countr_zero(i);
            std::uint64_t b = std::uint64_t{1} << bit;
            if (cur & b) {
                cur ^= b;
                edges -= std::popcount(adj[bit] & cur);
                --size;
            } else {
                edges += std::popcount(adj[bit] & cur);
                cur ^= b;
                ++size;
            }
            if (!f(cur, size, edges))
                return;
        }
    }

} // namespace

Rational d2_density(const Graph& g, const VertexSet& a)
{
    if (a.universe() != g.vertex_count())
        throw std::invalid_argument("d2_density: vertex set universe mismatch");
    int sz = a.count();
    if (sz < 3)
        throw std::invalid_argument("d2_density: need |a| >= 3");
    return Rational(BigInt(induced_edges(g, a) - 1), BigInt(sz - 2));
}

Rational potential(const Graph& g, int k, const VertexSet& a)
{
    if (k < 4)
        throw std::invalid_argument("potential: need k >= 4");
    if (a.universe() != g.vertex_count())
        throw std::invalid_argument("potential: vertex set universe mismatch");
    int sz = a.count();
    if (sz == 0)
        throw std::invalid_argument("potential: set must be nonempty");
    long long p = static_cast<long long>(k + 1) * (k - 2);
    long long q = 2LL * (k - 1);
    return Rational(p * sz - q * induced_edges(g, a));
}

DensityReport m2(const Graph& g)
{
    int n = g.vertex_count();
    if (n < 3)
        throw std::invalid_argument("m2: need at least 3 vertices");
    if (g.edge_count() < 2)
        throw std::invalid_argument("m2: need at least 2 edges");
    if (n > kExhaustiveCap)
        throw std::invalid_argument("m2: " + std::to_string(n) + " vertices exceeds the exhaustive cap "
            + std::to_string(kExhaustiveCap) + "; use the pruned mode");

    std::vector<int> active(n);
    for (int i = 0; i < n; ++i)
        active[i] = i;
    auto adj = local_masks(g, active);

    bool have_best = false;
    long long bnum = 0, bden = 1;
    int bsize = 0;
    std::uint64_t bmask = 0;
    std::uint64_t examined = 0;

    gray_sweep(adj, [&](std::uint64_t mask, int size, long long edges) {
        if (size < 3)
            return true;
        ++examined;
        long long num = edges - 1, den = size - 2;
        // num/den vs bnum/bden, cross-multiplied (values fit easily in 64 bits)
        long long lhs = num * bden, rhs = bnum * den;
        bool better = !have_best || lhs > rhs
            || (lhs == rhs && (size < bsize || (size == bsize && mask < bmask)));
        if (better) {
            have_best = true;
            bnum = num;
            bden = den;
            bsize = size;
            bmask = mask;
        }
        return true;
    });

    DensityReport rep;
    rep.value = Rational(BigInt(bnum), BigInt(bden));
    rep.witness = to_vertex_set(bmask, active, n);
    rep.subsets_examined = examined;
    return rep;
}

namespace {

    // Branch-and-bound decision search used by m2_pruned: does some subset A
    // with |A| >= 4 satisfy (e(A)-1)/(|A|-2) > num/den?  Restricting to
    // minimal such sets is complete, and those have minimum induced degree
    // strictly above num/den and (for num/den >= 1) are connected, which
    // powers the peeling and component rules below.
    class BetterSetSearch {
    public:
        BetterSetSearch(const Graph& g, long long num, long long den, std::uint64_t budget)
            : g_(g)
            , n_(g.vertex_count())
            , num_(num)
            , den_(den)
            , budget_(budget)
        {
        }

        std::optional<VertexSet> run(std::uint64_t& nodes_used)
        {
            VertexSet all = g_.full_set();
            VertexSet none(n_);
            std::vector<int> deg(n_);
            for (int v = 0; v < n_; ++v)
                deg[v] = g_.degree(v);
            search(none, all, deg);
            nodes_used = nodes_;
            return found_;
        }

    private:
        bool deg_at_most_lambda(long long d) const { return d * den_ <= num_; }

        // strictly better than num/den as a candidate with size >= 3
        bool strictly_better(long long edges, int size) const
        {
            return (edges - 1) * den_ > num_ * (size - 2);
        }

        void search(VertexSet s, VertexSet r, std::vector<int> deg)
        {
            if (found_)
                return;
            if (++nodes_ > budget_)
                throw BudgetError("m2_pruned: node budget exceeded");

            // peel: no minimal improving set uses a vertex of degree <= lambda
            std::vector<int> queue;
            r.for_each([&](int v) {
                if (deg_at_most_lambda(deg[v]))
                    queue.push_back(v);
            });
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                if (!r.test(v) || !deg_at_most_lambda(deg[v]))
                    continue;
                if (s.test(v))
                    return; // forced vertex died
                r.reset(v);
                g_.neighbors(v).for_each([&](int u) {
                    if (r.test(u)) {
                        --deg[u];
                        if (deg_at_most_lambda(deg[u]))
                            queue.push_back(u);
                    }
                });
            }

            int rsize = r.count();
            if (rsize < 4)
                return;

            long long redges = 0;
            r.for_each([&](int v) { redges += deg[v]; });
            redges /= 2;

            // whole alive set as a candidate
            if (strictly_better(redges, rsize)) {
                found_ = r;
                return;
            }

            // additive bound over completions S <= A <= R
            long long sedges = induced_edges(g_, s);
            int ssize = s.count();
            // scale everything by den_
            long long ub = sedges * den_ - num_ * ssize;
            r.for_each([&](int v) {
                if (!s.test(v))
                    ub += deg[v] * den_ - num_;
            });
            if (ub <= den_ - 2 * num_)
                return;

            // component rule (valid while lambda >= 1): minimal improving
            // sets are connected
            if (num_ >= den_) {
                std::vector<VertexSet> comps = components(r);
                if (comps.size() > 1) {
                    if (ssize > 0) {
                        const VertexSet* home = nullptr;
                        for (const auto& c : comps)
                            if (s.intersects(c)) {
                                if (home)
                                    return; // S split across components
                                home = &c;
                            }
                        recurse_restricted(s, *home, deg);
                    } else {
                        for (const auto& c : comps) {
                            recurse_restricted(s, c, deg);
                            if (found_)
                                return;
                        }
                    }
                    return;
                }
            }

            // branch on the highest-degree undecided vertex
            int pick = -1, pickdeg = -1;
            r.for_each([&](int v) {
                if (!s.test(v) && deg[v] > pickdeg) {
                    pickdeg = deg[v];
                    pick = v;
                }
            });
            if (pick < 0) {
                // leaf: R == S, already evaluated as the whole alive set
                return;
            }

            // exclude first: drives the peel cascades
            {
                VertexSet r2 = r;
                r2.reset(pick);
                std::vector<int> deg2 = deg;
                g_.neighbors(pick).for_each([&](int u) {
                    if (r2.test(u))
                        --deg2[u];
                });
                search(s, r2, std::move(deg2));
                if (found_)
                    return;
            }
            {
                VertexSet s2 = s;
                s2.set(pick);
                search(std::move(s2), std::move(r), std::move(deg));
            }
        }

        void recurse_restricted(const VertexSet& s, const VertexSet& comp, const std::vector<int>& deg)
        {
            std::vector<int> deg2(n_, 0);
            comp.for_each([&](int v) { deg2[v] = g_.neighbors(v).and_count(comp); });
            (void)deg;
            search(s, comp, std::move(deg2));
        }

        std::vector<VertexSet> components(const VertexSet& r) const
        {
            std::vector<VertexSet> out;
            VertexSet seen(n_);
            r.for_each([&](int start) {
                if (seen.test(start))
                    return;
                VertexSet comp(n_);
                std::vector<int> stack{start};
                seen.set(start);
                comp.set(start);
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    (g_.neighbors(v) & r).for_each([&](int u) {
                        if (!seen.test(u)) {
                            seen.set(u);
                            comp.set(u);
                            stack.push_back(u);
                        }
                    });
                }
                out.push_back(std::move(comp));
            });
            return out;
        }

        const Graph& g_;
        int n_;
        long long num_, den_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::optional<VertexSet> found_;
    };

} // namespace

DensityReport m2_pruned(const Graph& g, std::uint64_t node_budget)
{
    int n = g.vertex_count();
    if (n < 3)
        throw std::invalid_argument("m2_pruned: need at least 3 vertices");
    if (g.edge_count() < 2)
        throw std::invalid_argument("m2_pruned: need at least 2 edges");
    if (n <= kExhaustiveCap)
        return m2(g);

    std::uint64_t nodes = 0;

    // incumbent 1: min-degree peel sequence, evaluating every prefix set
    Rational best(-1);
    VertexSet witness = g.full_set();
    {
        VertexSet alive = g.full_set();
        std::vector<int> deg(n);
        long long edges = static_cast<long long>(g.edge_count());
        for (int v = 0; v < n; ++v)
            deg[v] = g.degree(v);
        int size = n;
        while (size >= 3) {
            Rational val(BigInt(edges - 1), BigInt(size - 2));
            if (best < val || (best == val && witness.count() > size)) {
                best = val;
                witness = alive;
            }
            int pick = -1;
            alive.for_each([&](int v) {
                if (pick < 0 || deg[v] < deg[pick])
                    pick = v;
            });
            alive.reset(pick);
            edges -= deg[pick];
            g.neighbors(pick).for_each([&](int u) {
                if (alive.test(u))
                    --deg[u];
            });
            --size;
        }
    }

    // incumbent 2: all 3-subsets (the branch-and-bound only covers |A| >= 4)
    {
        long long best3 = -2; // edges of the best triple
        VertexSet w3(n);
        for (int u = 0; u < n && best3 < 3; ++u)
            for (int v = u + 1; v < n && best3 < 3; ++v)
                for (int w = v + 1; w < n && best3 < 3; ++w) {
                    long long e = (g.has_edge(u, v) ? 1 : 0) + (g.has_edge(u, w) ? 1 : 0)
                        + (g.has_edge(v, w) ? 1 : 0);
                    if (e > best3) {
                        best3 = e;
                        w3 = Bitset::of(n, {u, v, w});
                    }
                }
        Rational val(best3 - 1);
        if (best < val) {
            best = val;
            witness = w3;
        }
    }

    // improve until provably optimal
    while (true) {
        BetterSetSearch search(g, best.num().convert_to<long long>(),
            best.den().convert_to<long long>(), node_budget - nodes);
        std::uint64_t used = 0;
        std::optional<VertexSet> found;
        try {
            found = search.run(used);
        } catch (const BudgetError&) {
            throw BudgetError("m2_pruned: node budget exceeded at incumbent " + best.str());
        }
        nodes += used;
        if (!found)
            break;
        Rational val = d2_density(g, *found);
        if (!(best < val))
            throw std::logic_error("m2_pruned: search returned a non-improving set");
        best = val;
        witness = *found;
    }

    DensityReport rep;
    rep.value = best;
    rep.witness = witness;
    rep.subsets_examined = nodes;
    return rep;
}

LemmaCheckResult verify_potential_lemma(const Graph& g, int k, long long threshold_general,
    long long threshold_base, const VertexSet& base, const LemmaCheckOptions& options)
{
    if (k < 4)
        throw std::invalid_argument("verify_potential_lemma: need k >= 4");
    if (base.universe() != g.vertex_count())
        throw std::invalid_argument("verify_potential_lemma: base universe mismatch");

    int n = g.vertex_count();
    std::vector<int> active;
    for (int v = 0; v < n; ++v)
        if (!options.avoid || !options.avoid->test(v))
            active.push_back(v);
    int r = static_cast<int>(active.size());

    long long p = static_cast<long long>(k + 1) * (k - 2);
    long long q = 2LL * (k - 1);

    std::uint64_t base_mask = 0;
    bool base_reachable = true;
    for (int i = 0; i < r; ++i)
        if (base.test(active[i]))
            base_mask |= std::uint64_t{1} << i;
    if (static_cast<int>(std::popcount(base_mask)) != base.count())
        base_reachable = false; // base intersects avoided vertices

    LemmaCheckResult res;
    auto check = [&](std::uint64_t mask, int size, long long edges) {
        ++res.subsets_checked;
        long long rho = p * size - q * edges;
        long long need = threshold_general;
        if (base_reachable && (mask & base_mask) == base_mask)
            need = std::max(need, threshold_base);
        if (rho < need) {
            res.ok = false;
            res.counterexample = to_vertex_set(mask, active, n);
            res.counterexample_potential = rho;
            return false;
        }
        return true;
    };

    if (options.max_size) {
        // enumerate subsets of size 2..max_size directly
        auto adj = local_masks(g, active);
        int cap = std::min(*options.max_size, r);
        std::vector<int> idx;
        // iterative combination enumeration, sizes ascending
        for (int sz = 2; sz <= cap; ++sz) {
            idx.assign(sz, 0);
            for (int i = 0; i < sz; ++i)
                idx[i] = i;
            while (true) {
                std::uint64_t mask = 0;
                for (int i : idx)
                    mask |= std::uint64_t{1} << i;
                long long edges = 0;
                for (int i : idx)
                    edges += std::popcount(adj[i] & mask);
                edges /= 2;
                if (!check(mask, sz, edges))
                    return res;
                int pos = sz - 1;
                while (pos >= 0 && idx[pos] == r - sz + pos)
                    --pos;
                if (pos < 0)
                    break;
                ++idx[pos];
                for (int i = pos + 1; i < sz; ++i)
                    idx[i] = idx[i - 1] + 1;
            }
        }
        return res;
    }

    if (r > kExhaustiveCap)
        throw std::invalid_argument("verify_potential_lemma: " + std::to_string(r)
            + " active vertices exceeds the exhaustive cap " + std::to_string(kExhaustiveCap));

    auto adj = local_masks(g, active);
    gray_sweep(adj, [&](std::uint64_t mask, int size, long long edges) {
        if (size < 2)
            return true;
        return check(mask, size, edges);
    });
    return res;
}

} // namespace hfree
