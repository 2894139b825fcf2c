#include "hfree/extremal.hpp"

#include "hfree/cliques.hpp"
#include "hfree/density.hpp"
#include "hfree/random_graphs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hfree {

std::string method_name(ExtremalMethod m)
{
    switch (m) {
    case ExtremalMethod::Exact:
        return "exact";
    case ExtremalMethod::Partite:
        return "partite";
    case ExtremalMethod::Delete:
        return "delete";
    }
    return "?";
}

namespace {

    // Pattern vertices in a connected, most-constrained-first order: highest
    // degree first, then greedily the vertex with the most ordered
    // neighbours.
    std::vector<int> matching_order(const Graph& pattern)
    {
        int pn = pattern.vertex_count();
        std::vector<int> order;
        std::vector<bool> placed(pn, false);
        for (int step = 0; step < pn; ++step) {
            int best = -1, bestanch = -1, bestdeg = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[v])
                    continue;
                int anch = 0;
                pattern.neighbors(v).for_each([&](int u) { anch += placed[u]; });
                int deg = pattern.degree(v);
                if (anch > bestanch || (anch == bestanch && deg > bestdeg)) {
                    best = v;
                    bestanch = anch;
                    bestdeg = deg;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    // Backtracking embedding search; emit(map) -> false stops the search.
    template <typename Emit>
    void embeddings(const Graph& g, const Graph& pattern, Emit&& emit)
    {
        int pn = pattern.vertex_count();
        int n = g.vertex_count();
        if (pn == 0)
            throw std::invalid_argument("contains: empty pattern");
        if (pn > n || pattern.edge_count() > g.edge_count())
            return;

        std::vector<int> order = matching_order(pattern);
        std::vector<int> map(pn, -1);
        Bitset used(n);
        bool stop = false;

        auto recurse = [&](auto&& self, int depth) -> void {
            if (stop)
                return;
            if (depth == pn) {
                if (!emit(map))
                    stop = true;
                return;
            }
            int pv = order[depth];
            // candidates: adjacent to every already-mapped pattern neighbour
            Bitset cand = Bitset::full(n);
            cand -= used;
            pattern.neighbors(pv).for_each([&](int pu) {
                if (map[pu] >= 0)
                    cand &= g.neighbors(map[pu]);
            });
            int pdeg = pattern.degree(pv);
            cand.for_each([&](int hv) {
                if (stop || g.degree(hv) < pdeg)
                    return;
                map[pv] = hv;
                used.set(hv);
                self(self, depth + 1);
                used.reset(hv);
                map[pv] = -1;
            });
        };
        recurse(recurse, 0);
    }

    std::vector<Edge> image_edges(const Graph& pattern, const std::vector<int>& map)
    {
        std::vector<Edge> es;
        for (const Edge& e : pattern.edges())
            es.push_back(make_edge(map[e.u], map[e.v]));
        std::sort(es.begin(), es.end());
        return es;
    }

    // K_{m} copies of g lying on the edge uv = K_{m-2} count in the common
    // neighbourhood.
    std::uint64_t cliques_on_edge(const Graph& g, int u, int v, int m)
    {
        Bitset common = g.neighbors(u) & g.neighbors(v);
        auto recurse = [&](auto&& self, const Bitset& cand, int need) -> std::uint64_t {
            if (need == 0)
                return 1;
            if (cand.count() < need)
                return 0;
            std::uint64_t total = 0;
            cand.for_each([&](int w) {
                Bitset next = cand & g.neighbors(w);
                next.reset_leq(w);
                total += self(self, next, need - 1);
            });
            return total;
        };
        return recurse(recurse, common, m - 2);
    }

} // namespace

std::optional<Embedding> contains(const Graph& g, const Graph& pattern)
{
    std::optional<Embedding> out;
    embeddings(g, pattern, [&](const std::vector<int>& map) {
        out = Embedding{map, image_edges(pattern, map)};
        return false;
    });
    return out;
}

std::vector<Embedding> enumerate_copies(const Graph& g, const Graph& pattern, std::uint64_t cap)
{
    if (cap < 1)
        throw std::invalid_argument("enumerate_copies: need cap >= 1");
    std::vector<Embedding> out;
    std::set<std::vector<Edge>> seen;
    embeddings(g, pattern, [&](const std::vector<int>& map) {
        std::vector<Edge> es = image_edges(pattern, map);
        if (seen.insert(es).second) {
            if (out.size() == cap)
                throw BudgetError("enumerate_copies: copy cap exceeded");
            out.push_back(Embedding{map, std::move(es)});
        }
        return true;
    });
    return out;
}

Graph km_cleanup(const Graph& g, int m)
{
    if (m < 2)
        throw std::invalid_argument("km_cleanup: need m >= 2");
    Graph cur = g;
    while (true) {
        CliqueStats stats = count_cliques(cur, m);
        std::vector<Edge> crowded;
        for (const auto& [e, c] : stats.per_edge)
            if (c >= 2)
                crowded.push_back(e);
        if (crowded.empty()) {
            std::vector<Edge> bare;
            for (const Edge& e : cur.edges())
                if (!stats.per_edge.count(e))
                    bare.push_back(e);
            return cur.without_edges(bare);
        }
        cur = cur.without_edges(crowded);
    }
}

ExtremalResult exact_max_hfree_cliques(const Graph& host, const Graph& h, int m,
    const ExactLimits& limits)
{
    if (host.vertex_count() > limits.max_host_vertices
        && host.edge_count() > static_cast<std::size_t>(limits.max_host_edges))
        throw std::invalid_argument("exact_max_hfree_cliques: host exceeds the size budget ("
            + std::to_string(host.vertex_count()) + " vertices, "
            + std::to_string(host.edge_count()) + " edges)");

    std::uint64_t nodes = 0;
    bool have_best = false;
    std::uint64_t best = 0;
    Graph best_graph;

    auto recurse = [&](auto&& self, const Graph& cur, const std::vector<Edge>& locked) -> void {
        if (++nodes > limits.node_budget)
            throw BudgetError("exact_max_hfree_cliques: node budget exceeded");
        std::uint64_t count = count_cliques(cur, m).total;
        if (have_best && count <= best)
            return; // deleting more edges cannot beat the incumbent
        auto emb = contains(cur, h);
        if (!emb) {
            best = count;
            best_graph = cur;
            have_best = true;
            return;
        }
        // every H-free subgraph below this node loses one of the copy's
        // unlocked edges
        std::vector<Edge> branch;
        for (const Edge& e : emb->edges)
            if (std::find(locked.begin(), locked.end(), e) == locked.end())
                branch.push_back(e);
        std::vector<Edge> locked2 = locked;
        for (const Edge& e : branch) {
            self(self, cur.without_edges({e}), locked2);
            locked2.push_back(e); // later branches keep e
        }
    };
    recurse(recurse, host, {});

    if (!have_best)
        throw std::invalid_argument("exact_max_hfree_cliques: no H-free spanning subgraph");
    ExtremalResult res;
    res.method = ExtremalMethod::Exact;
    res.survivor = best_graph;
    res.clique_count = best;
    res.h_free_certified = !contains(best_graph, h);
    return res;
}

namespace {

    class PartiteSearch {
    public:
        PartiteSearch(const Graph& host, int parts, int m)
            : host_(host)
            , n_(host.vertex_count())
            , parts_(parts)
            , m_(m)
            , part_(n_, 0)
            , surv_(n_, Bitset(n_))
        {
        }

        void start(std::uint64_t seed)
        {
            std::vector<int> perm(n_);
            for (int i = 0; i < n_; ++i)
                perm[i] = i;
            for (int i = n_ - 1; i > 0; --i) {
                int j = static_cast<int>(stream(seed, i) % static_cast<std::uint64_t>(i + 1));
                std::swap(perm[i], perm[j]);
            }
            for (int i = 0; i < n_; ++i)
                part_[perm[i]] = i % parts_;
            for (int v = 0; v < n_; ++v)
                rebuild_row(v);
        }

        // first-improvement single-vertex moves until no move helps
        void local_search()
        {
            bool improved = true;
            while (improved) {
                improved = false;
                for (int v = 0; v < n_; ++v) {
                    long long before = cliques_through(v, surv_[v]);
                    for (int b = 0; b < parts_; ++b) {
                        if (b == part_[v])
                            continue;
                        Bitset after_nb = neighbourhood_if(v, b);
                        long long after = cliques_through(v, after_nb);
                        if (after > before) {
                            move(v, b);
                            improved = true;
                            break;
                        }
                    }
                }
            }
        }

        Graph survivor() const
        {
            std::vector<Edge> es;
            for (const Edge& e : host_.edges())
                if (part_[e.u] != part_[e.v])
                    es.push_back(e);
            return Graph(n_, es);
        }

    private:
        void rebuild_row(int v)
        {
            Bitset row(n_);
            host_.neighbors(v).for_each([&](int u) {
                if (part_[u] != part_[v])
                    row.set(u);
            });
            surv_[v] = std::move(row);
        }

        Bitset neighbourhood_if(int v, int b) const
        {
            Bitset row(n_);
            host_.neighbors(v).for_each([&](int u) {
                if (part_[u] != b)
                    row.set(u);
            });
            return row;
        }

        void move(int v, int b)
        {
            part_[v] = b;
            rebuild_row(v);
            host_.neighbors(v).for_each([&](int u) {
                if (part_[u] != b)
                    surv_[u].set(v);
                else
                    surv_[u].reset(v);
            });
        }

        // K_m copies through v in the crossing graph, for a hypothetical
        // neighbourhood of v; rows of other vertices are unaffected by v's
        // own part.
        long long cliques_through(int v, const Bitset& nb) const
        {
            auto recurse = [&](auto&& self, const Bitset& cand, int need) -> long long {
                if (need == 0)
                    return 1;
                if (cand.count() < need)
                    return 0;
                long long total = 0;
                cand.for_each([&](int w) {
                    if (w == v)
                        return;
                    Bitset next = cand & surv_[w];
                    next.reset_leq(w);
                    total += self(self, next, need - 1);
                });
                return total;
            };
            return recurse(recurse, nb, m_ - 1);
        }

        const Graph& host_;
        int n_, parts_, m_;
        std::vector<int> part_;
        std::vector<Bitset> surv_;
    };

} // namespace

ExtremalResult partite_heuristic(const Graph& host, int k, int m, int restarts,
    std::uint64_t seed)
{
    if (k <= m)
        throw std::invalid_argument("partite_heuristic: need k >= m+1");
    if (restarts < 1)
        throw std::invalid_argument("partite_heuristic: need restarts >= 1");

    bool have_best = false;
    std::uint64_t best = 0;
    Graph best_graph;
    for (int r = 0; r < restarts; ++r) {
        PartiteSearch search(host, k - 1, m);
        search.start(seed ^ static_cast<std::uint64_t>(r));
        search.local_search();
        Graph surv = search.survivor();
        std::uint64_t count = count_cliques(surv, m).total;
        if (!have_best || count > best) {
            have_best = true;
            best = count;
            best_graph = surv;
        }
    }
    ExtremalResult res;
    res.method = ExtremalMethod::Partite;
    res.survivor = best_graph;
    res.clique_count = best;
    // a (k-1)-partite spanning subgraph cannot contain any H with chi(H) >= k
    res.h_free_certified = true;
    return res;
}

ExtremalResult deletion_heuristic(const Graph& host, const Graph& h, int m, std::uint64_t cap)
{
    // densest subgraph of H attaining the 2-density, with the canonical
    // witness tie-break
    Graph hprime = h.induced(m2(h).witness);

    std::vector<Embedding> copies = enumerate_copies(host, hprime, cap);
    std::vector<bool> alive(copies.size(), true);
    std::map<Edge, std::vector<int>> copies_on;
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (const Edge& e : copies[i].edges)
            copies_on[e].push_back(static_cast<int>(i));

    Graph cur = host;
    std::size_t first_alive = 0;
    while (true) {
        while (first_alive < copies.size() && !alive[first_alive])
            ++first_alive;
        if (first_alive == copies.size())
            break;

        const std::vector<Edge>& target = copies[first_alive].edges;
        Edge pick = target.front();
        long long pick_kills = -1;
        std::uint64_t pick_loss = 0;
        for (const Edge& e : target) {
            long long kills = 0;
            for (int id : copies_on[e])
                kills += alive[id];
            if (kills < pick_kills)
                continue;
            std::uint64_t loss = cliques_on_edge(cur, e.u, e.v, m);
            if (kills > pick_kills || loss < pick_loss
                || (loss == pick_loss && e < pick)) {
                pick = e;
                pick_kills = kills;
                pick_loss = loss;
            }
        }
        cur = cur.without_edges({pick});
        for (int id : copies_on[pick])
            alive[id] = false;
    }

    ExtremalResult res;
    res.method = ExtremalMethod::Delete;
    res.survivor = cur;
    res.clique_count = count_cliques(cur, m).total;
    // every H-copy contains an H'-copy, and none survived
    res.h_free_certified = !contains(cur, h);
    return res;
}

} // namespace hfree
