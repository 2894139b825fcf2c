#include "hfree/cliques.hpp"
#include "hfree/coloring.hpp"
#include "hfree/construct.hpp"
#include "hfree/density.hpp"
#include "hfree/extremal.hpp"
#include "hfree/harness.hpp"
#include "hfree/random_graphs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

hfree::Graph load_graph(const std::string& path) { return hfree::read_edge_list(slurp(path)); }

std::string join_vertices(const hfree::VertexSet& s)
{
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty())
            out += " ";
        out += std::to_string(v);
    });
    return out;
}

int run_m2(const std::string& in, bool witness, bool pruned)
{
    hfree::Graph g = load_graph(in);
    hfree::DensityReport rep = pruned ? hfree::m2_pruned(g) : hfree::m2(g);
    std::cout << "m2 = " << rep.value.str() << "\n";
    if (witness)
        std::cout << "witness = " << join_vertices(rep.witness) << "\n";
    std::cout << "subsets_examined = " << rep.subsets_examined << "\n";
    return 0;
}

int run_verify(int k, int t, const std::string& lemma)
{
    long long p = static_cast<long long>(k + 1) * (k - 2);
    long long q = 2LL * (k - 1);
    long long general = 2 * p - q;
    long long base_threshold = 2 * p;

    hfree::Graph g;
    hfree::LemmaCheckOptions opts;
    if (lemma == "cl1")
        g = hfree::tower(k, t);
    else if (lemma == "cl2")
        g = hfree::tower_complex(k, t);
    else if (lemma == "cl3") {
        g = hfree::supercomplex(k, t);
        opts.avoid = hfree::Bitset::of(g.vertex_count(), {0, 1});
    } else if (lemma == "cl4") {
        g = hfree::supercomplex(k, t);
        opts.max_size = t + 1;
    } else
        throw std::runtime_error("unknown lemma '" + lemma + "'");

    hfree::VertexSet base = hfree::Bitset::of(g.vertex_count(), {0, 1});
    auto res = hfree::verify_potential_lemma(g, k, general, base_threshold, base, opts);
    if (res.ok) {
        std::cout << "PASS " << lemma << " k=" << k << " t=" << t << " subsets="
                  << res.subsets_checked << "\n";
        return 0;
    }
    std::cout << "FAIL " << lemma << " k=" << k << " t=" << t << " potential="
              << res.counterexample_potential << " subset=" << join_vertices(*res.counterexample)
              << "\n";
    return 1;
}

int run_construct(const std::string& kind, int k, int t, const std::string& epsilon,
    const std::string& out)
{
    if (!epsilon.empty()) {
        hfree::Rational eps = hfree::Rational::parse(epsilon);
        int needed = hfree::tower_height_for_epsilon(k, eps);
        if (t == 0)
            t = needed;
        else if (t < needed)
            std::cerr << "warning: t=" << t << " is below ceil(k^3/epsilon)=" << needed
                      << "; the 2-density guarantee needs the full height\n";
    }
    if (t == 0)
        t = 1;
    hfree::Graph g;
    if (kind == "tower")
        g = hfree::tower(k, t);
    else if (kind == "complex")
        g = hfree::tower_complex(k, t);
    else if (kind == "supercomplex")
        g = hfree::supercomplex(k, t);
    else if (kind == "gke")
        g = hfree::sparse_k_chromatic(k, t);
    else
        throw std::runtime_error("unknown kind '" + kind + "'");
    spit(out, hfree::write_edge_list(g));
    spit(out + ".labels", hfree::write_labels(g));
    std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count() << " edges to "
              << out << "\n";
    return 0;
}

int run_chi(const std::string& in, const std::vector<std::string>& equal, double budget)
{
    hfree::Graph g = load_graph(in);
    hfree::ColoringConstraints cons;
    for (const std::string& pair : equal) {
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("--equal expects 'u,w'");
        cons.equal.push_back({std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1))});
    }
    hfree::SolveLimits limits;
    limits.seconds = budget;

    if (cons.equal.empty()) {
        int chi = hfree::chromatic_number(g, limits);
        std::cout << "chi = " << chi << "\n";
        if (chi > 0) {
            auto col = hfree::is_q_colorable(g, chi, {}, limits);
            for (int v = 0; v < g.vertex_count(); ++v)
                std::cout << v << " " << col->assignment[v] << "\n";
        }
        return 0;
    }
    for (int q = 1; q <= std::max(1, g.vertex_count()); ++q) {
        auto col = hfree::is_q_colorable(g, q, cons, limits);
        if (col) {
            std::cout << "chi = " << q << "\n";
            for (int v = 0; v < g.vertex_count(); ++v)
                std::cout << v << " " << col->assignment[v] << "\n";
            return 0;
        }
    }
    std::cout << "infeasible\n"; // forced equality across an edge
    return 1;
}

int run_cliques(const std::string& in, int m, bool stats)
{
    hfree::Graph g = load_graph(in);
    hfree::CliqueStats cs = hfree::count_cliques(g, m);
    std::cout << "total = " << cs.total << "\n";
    if (!stats)
        return 0;
    std::map<std::uint64_t, std::uint64_t> hist; // copies-on-edge -> #edges
    for (const auto& [e, c] : cs.per_edge) {
        (void)e;
        ++hist[c];
    }
    std::uint64_t zero = g.edge_count() - cs.per_edge.size();
    if (zero)
        hist[0] = zero;
    for (const auto& [c, cnt] : hist)
        std::cout << "edges_with_" << c << "_copies = " << cnt << "\n";
    std::cout << "sharing_pairs = " << cs.sharing_pairs << "\n";
    std::cout << "involved_copies = " << cs.involved_copies << "\n";
    if (cs.total > 0 && g.edge_count() > 0)
        std::cout << "second_moment_ratio = " << hfree::second_moment_ratio(g, m).str() << "\n";
    return 0;
}

hfree::Rational parse_p(const std::string& p, const std::string& pexpr, int n)
{
    if (!p.empty() && !pexpr.empty())
        throw std::runtime_error("give either --p or --p-expr, not both");
    if (!p.empty())
        return hfree::Rational::parse(p);
    if (!pexpr.empty())
        return hfree::PValue::exponent(hfree::Rational::parse(pexpr)).effective(n);
    throw std::runtime_error("missing --p or --p-expr");
}

int run_sample(int n, const std::string& p, const std::string& pexpr, std::uint64_t seed,
    const std::string& out)
{
    hfree::Rational prob = parse_p(p, pexpr, n);
    hfree::Graph g = hfree::sample_gnp(n, prob, seed);
    std::string text = hfree::write_edge_list(g);
    if (out.empty())
        std::cout << text;
    else {
        spit(out, text);
        std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " edges to " << out << "\n";
    }
    return 0;
}

int run_concentrate(int n, const std::string& p, const std::string& pexpr, int m, int trials,
    std::uint64_t seed)
{
    hfree::EnsembleConfig cfg;
    cfg.n = n;
    cfg.p = parse_p(p, pexpr, n);
    cfg.seed = seed;
    cfg.trials = trials;
    hfree::ConcentrationReport rep = hfree::concentration_report(cfg, m);
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%s,%d,%d,%llu,%.6f,%.6f,%.6f,%.6f", n,
        cfg.p.str().c_str(), m, trials, static_cast<unsigned long long>(seed), rep.mean_count,
        rep.variance, rep.ratio_to_expected, rep.mean_sharing_fraction);
    std::cout << "n,p,m,trials,seed,mean_count,variance,ratio_to_expected,mean_sharing_fraction\n"
              << buf << "\n";
    return 0;
}

int run_extremal(const std::string& in, const std::string& forbidden, int m,
    const std::string& method, int k, int restarts, std::uint64_t seed, std::uint64_t cap)
{
    hfree::Graph host = load_graph(in);
    hfree::Graph h = load_graph(forbidden);
    hfree::ExtremalResult res;
    if (method == "exact")
        res = hfree::exact_max_hfree_cliques(host, h, m);
    else if (method == "partite") {
        if (k == 0)
            k = hfree::chromatic_number(h);
        res = hfree::partite_heuristic(host, k, m, restarts, seed);
    } else if (method == "delete")
        res = hfree::deletion_heuristic(host, h, m, cap);
    else
        throw std::runtime_error("unknown method '" + method + "'");
    std::cout << "method = " << hfree::method_name(res.method) << "\n"
              << "clique_count = " << res.clique_count << "\n"
              << "h_free_certified = " << (res.h_free_certified ? "true" : "false") << "\n"
              << "edges_kept = " << res.survivor.edge_count() << "/" << host.edge_count() << "\n";
    return 0;
}

int run_sweep(const std::string& config, const std::string& out, int workers)
{
    hfree::SweepConfig cfg = hfree::SweepConfig::from_file(config);
    std::ostringstream buf;
    hfree::SweepSummary sum = hfree::run_sweep(cfg, buf, workers);
    spit(out, buf.str());
    std::cerr << "1/m2(H) = " << sum.exponents.inv_m2_h.str()
              << ", 1/m2(K_m) = " << sum.exponents.inv_m2_km.str() << ", order = "
              << sum.exponents.order << "\n";
    std::cout << "wrote " << sum.rows << " rows to " << out << "\n";
    return 0;
}

int run_trend(int k, const std::string& tlist, std::uint64_t budget)
{
    std::vector<int> ts;
    std::stringstream ss(tlist);
    std::string tok;
    while (std::getline(ss, tok, ','))
        ts.push_back(std::stoi(tok));
    auto rows = hfree::witness_trend(k, ts, budget);
    std::cout << "t,m2,witness_size\n";
    for (const auto& row : rows) {
        if (row.skipped)
            std::cout << row.t << ",skipped,\n";
        else
            std::cout << row.t << "," << row.m2_value.str() << "," << row.witness_size << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graph toolkit: exact 2-density, sparse k-chromatic constructions, clique "
                 "statistics on random graphs, and H-free clique maximisation"};
    app.require_subcommand(1);

    std::string in, out, lemma, kind, epsilon, p, pexpr, method, forbidden, config, tlist;
    std::vector<std::string> equal;
    int k = 4, t = 0, m = 3, n = 0, trials = 10, restarts = 2, workers = 1;
    std::uint64_t seed = 0, cap = 2'000'000, budget_nodes = 200'000'000;
    double budget = 0;
    bool witness = false, pruned = false, stats = false;

    auto* c_m2 = app.add_subcommand("m2", "exact 2-density with witness");
    c_m2->add_option("--in", in)->required();
    c_m2->add_flag("--witness", witness);
    c_m2->add_flag("--pruned", pruned);

    auto* c_verify = app.add_subcommand("verify-lemmas", "exhaustive potential sweeps");
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--t", t)->required();
    c_verify->add_option("--lemma", lemma)->required()->check(CLI::IsMember({"cl1", "cl2", "cl3", "cl4"}));

    auto* c_con = app.add_subcommand("construct", "emit a construction as an edge list");
    c_con->add_option("--kind", kind)->required()
        ->check(CLI::IsMember({"tower", "complex", "supercomplex", "gke"}));
    c_con->add_option("--k", k)->required();
    c_con->add_option("--t", t);
    c_con->add_option("--epsilon", epsilon);
    c_con->add_option("--out", out)->required();

    auto* c_chi = app.add_subcommand("chi", "exact chromatic number");
    c_chi->add_option("--in", in)->required();
    c_chi->add_option("--equal", equal);
    c_chi->add_option("--budget", budget);

    auto* c_cl = app.add_subcommand("cliques", "K_m counting and edge statistics");
    c_cl->add_option("--in", in)->required();
    c_cl->add_option("--m", m)->required();
    c_cl->add_flag("--stats", stats);

    auto* c_sample = app.add_subcommand("sample", "seeded G(n,p) sample");
    c_sample->add_option("--n", n)->required();
    c_sample->add_option("--p", p);
    c_sample->add_option("--p-expr", pexpr);
    c_sample->add_option("--seed", seed);
    c_sample->add_option("--out", out);

    auto* c_conc = app.add_subcommand("concentrate", "clique-count concentration record");
    c_conc->add_option("--n", n)->required();
    c_conc->add_option("--p", p);
    c_conc->add_option("--p-expr", pexpr);
    c_conc->add_option("--m", m)->required();
    c_conc->add_option("--trials", trials)->required();
    c_conc->add_option("--seed", seed);

    auto* c_ext = app.add_subcommand("extremal", "H-free clique maximisation");
    c_ext->add_option("--in", in)->required();
    c_ext->add_option("--forbidden", forbidden)->required();
    c_ext->add_option("--m", m)->required();
    c_ext->add_option("--method", method)->required()
        ->check(CLI::IsMember({"exact", "partite", "delete"}));
    c_ext->add_option("--k", k);
    c_ext->add_option("--restarts", restarts);
    c_ext->add_option("--seed", seed);
    c_ext->add_option("--cap", cap);

    auto* c_sweep = app.add_subcommand("sweep", "p-sweep experiment grid");
    c_sweep->add_option("--config", config)->required();
    c_sweep->add_option("--out", out)->required();
    c_sweep->add_option("--workers", workers);

    auto* c_trend = app.add_subcommand("trend", "2-density witness trend over tower heights");
    c_trend->add_option("--k", k)->required();
    c_trend->add_option("--t-list", tlist)->required();
    c_trend->add_option("--budget", budget_nodes);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_m2->parsed())
            return run_m2(in, witness, pruned);
        if (c_verify->parsed())
            return run_verify(k, t, lemma);
        if (c_con->parsed())
            return run_construct(kind, k, t, epsilon, out);
        if (c_chi->parsed())
            return run_chi(in, equal, budget);
        if (c_cl->parsed())
            return run_cliques(in, m, stats);
        if (c_sample->parsed())
            return run_sample(n, p, pexpr, seed, out);
        if (c_conc->parsed())
            return run_concentrate(n, p, pexpr, m, trials, seed);
        if (c_ext->parsed())
            return run_extremal(in, forbidden, m, method, k, restarts, seed, cap);
        if (c_sweep->parsed())
            return run_sweep(config, out, workers);
        if (c_trend->parsed())
            return run_trend(k, tlist, budget_nodes);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
