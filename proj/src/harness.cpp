#include "hfree/harness.hpp"

#include "hfree/cliques.hpp"
#include "hfree/coloring.hpp"
#include "hfree/construct.hpp"
#include "hfree/density.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace hfree {

namespace {

    std::string trim(const std::string& s)
    {
        auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            return "";
        auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    }

    std::vector<std::string> split(const std::string& s, char sep)
    {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) {
            item = trim(item);
            if (!item.empty())
                out.push_back(item);
        }
        return out;
    }

    std::string format_double(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", x);
        return buf;
    }

} // namespace

SweepConfig SweepConfig::from_text(const std::string& text)
{
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n")
                cfg.n = std::stoi(value);
            else if (key == "m")
                cfg.m = std::stoi(value);
            else if (key == "trials")
                cfg.trials = std::stoi(value);
            else if (key == "seed")
                cfg.seed = std::stoull(value);
            else if (key == "restarts")
                cfg.restarts = std::stoi(value);
            else if (key == "cap")
                cfg.cap = std::stoull(value);
            else if (key == "k")
                cfg.k = std::stoi(value);
            else if (key == "forbidden")
                cfg.forbidden_path = value;
            else if (key == "exact")
                cfg.include_exact = value == "true" || value == "1";
            else if (key == "p_exponents")
                for (const auto& tok : split(value, ','))
                    cfg.grid.push_back(PValue::exponent(Rational::parse(tok)));
            else if (key == "p_values")
                for (const auto& tok : split(value, ','))
                    cfg.grid.push_back(PValue::exact(Rational::parse(tok)));
            else if (key == "methods")
                for (const auto& tok : split(value, ',')) {
                    if (tok == "partite")
                        cfg.methods.push_back(ExtremalMethod::Partite);
                    else if (tok == "delete")
                        cfg.methods.push_back(ExtremalMethod::Delete);
                    else
                        throw std::invalid_argument("unknown method '" + tok + "'");
                }
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return cfg;
}

SweepConfig SweepConfig::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    SweepConfig cfg = from_text(buf.str());
    if (cfg.forbidden_path.empty())
        throw std::runtime_error("config is missing 'forbidden'");
    std::ifstream fin(cfg.forbidden_path);
    if (!fin)
        throw std::runtime_error("cannot open forbidden graph '" + cfg.forbidden_path + "'");
    std::stringstream fbuf;
    fbuf << fin.rdbuf();
    cfg.forbidden = read_edge_list(fbuf.str());
    return cfg;
}

void SweepConfig::validate() const
{
    if (n < 1)
        throw std::invalid_argument("sweep: need n >= 1");
    if (trials < 1)
        throw std::invalid_argument("sweep: need trials >= 1");
    if (grid.empty())
        throw std::invalid_argument("sweep: empty p grid");
    if (methods.empty() && !include_exact)
        throw std::invalid_argument("sweep: no methods configured");
    if (forbidden.vertex_count() == 0)
        throw std::invalid_argument("sweep: forbidden graph not loaded");
    for (const PValue& pv : grid) {
        Rational p = pv.effective(n);
        if (!(Rational(0) < p) || Rational(1) < p)
            throw std::invalid_argument("sweep: p = " + p.str() + " outside (0,1]");
    }
}

std::string sweep_csv_header()
{
    return "n,a_or_p,trial,seed,host_cliques,expected_cliques,method,surviving_cliques,"
           "ratio_to_host,ratio_to_partite_prediction,wall_ms";
}

std::string sweep_csv_row(const SweepRow& row, double partite_prediction)
{
    std::string out = std::to_string(row.n) + "," + row.a_or_p + ","
        + std::to_string(row.trial) + "," + std::to_string(row.seed) + ","
        + std::to_string(row.host_cliques) + "," + format_double(row.expected_cliques) + ","
        + row.method + ",";
    if (row.surviving_cliques < 0) {
        out += "ERROR,,,";
        out += format_double(row.wall_ms);
        return out;
    }
    out += std::to_string(row.surviving_cliques);
    out += ",";
    if (row.host_cliques > 0)
        out += format_double(static_cast<double>(row.surviving_cliques)
            / static_cast<double>(row.host_cliques));
    out += ",";
    if (partite_prediction > 0)
        out += format_double(static_cast<double>(row.surviving_cliques) / partite_prediction);
    out += "," + format_double(row.wall_ms);
    return out;
}

namespace {

    struct PointTask {
        std::size_t grid_index;
        int trial;
    };

    std::vector<SweepRow> run_point(const SweepConfig& cfg, const PointTask& task)
    {
        const PValue& pv = cfg.grid[task.grid_index];
        Rational p = pv.effective(cfg.n);
        std::uint64_t host_seed = stream(cfg.seed,
            (static_cast<std::uint64_t>(task.grid_index) << 32)
                | static_cast<std::uint32_t>(task.trial));
        Graph host = sample_gnp(cfg.n, p, host_seed);
        std::uint64_t host_cliques = count_cliques(host, cfg.m).total;
        double expected = expected_clique_count(cfg.n, p, cfg.m).to_double();
        std::string a_or_p = pv.is_exponent()
            ? "n^-" + format_double(pv.exponent_value().to_double())
            : format_double(p.to_double());

        int k = cfg.k;
        std::vector<std::pair<std::string, ExtremalMethod>> methods;
        for (ExtremalMethod m : cfg.methods)
            methods.push_back({method_name(m), m});
        if (cfg.include_exact)
            methods.push_back({method_name(ExtremalMethod::Exact), ExtremalMethod::Exact});

        std::vector<SweepRow> rows;
        for (const auto& [name, method] : methods) {
            SweepRow row;
            row.n = cfg.n;
            row.a_or_p = a_or_p;
            row.trial = task.trial;
            row.seed = host_seed;
            row.host_cliques = host_cliques;
            row.expected_cliques = expected;
            row.method = name;
            auto t0 = std::chrono::steady_clock::now();
            try {
                ExtremalResult res;
                switch (method) {
                case ExtremalMethod::Partite:
                    res = partite_heuristic(host, k, cfg.m, cfg.restarts, host_seed);
                    break;
                case ExtremalMethod::Delete:
                    res = deletion_heuristic(host, cfg.forbidden, cfg.m, cfg.cap);
                    break;
                case ExtremalMethod::Exact:
                    res = exact_max_hfree_cliques(host, cfg.forbidden, cfg.m);
                    break;
                }
                row.surviving_cliques = static_cast<long long>(res.clique_count);
            } catch (const std::exception& e) {
                row.surviving_cliques = -1;
                row.error = e.what();
            }
            auto t1 = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rows.push_back(std::move(row));
        }
        return rows;
    }

} // namespace

SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out, int workers)
{
    SweepConfig run = cfg;
    if (run.k == 0)
        run.k = chromatic_number(run.forbidden);
    run.validate();

    SweepSummary summary;
    summary.exponents = critical_exponents(run.m, run.forbidden);

    std::vector<PointTask> tasks;
    for (std::size_t g = 0; g < run.grid.size(); ++g)
        for (int t = 0; t < run.trials; ++t)
            tasks.push_back({g, t});

    std::vector<std::vector<SweepRow>> groups(tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            groups[i] = run_point(run, tasks[i]);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size())
                        return;
                    groups[i] = run_point(run, tasks[i]);
                }
            }));
        for (auto& f : futs)
            f.get();
    }

    // sort rows by (p, trial, method); emission order is scheduler-independent
    std::vector<std::pair<std::size_t, SweepRow>> rows;
    std::vector<double> pval(run.grid.size());
    for (std::size_t g = 0; g < run.grid.size(); ++g)
        pval[g] = run.grid[g].effective(run.n).to_double();
    for (std::size_t i = 0; i < tasks.size(); ++i)
        for (SweepRow& r : groups[i])
            rows.push_back({tasks[i].grid_index, std::move(r)});
    std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        double pa = pval[a.first], pb = pval[b.first];
        if (pa != pb)
            return pa < pb;
        if (a.second.trial != b.second.trial)
            return a.second.trial < b.second.trial;
        return a.second.method < b.second.method;
    });

    double km1 = run.k - 1;
    out << sweep_csv_header() << "\n";
    for (const auto& [g, row] : rows) {
        double prediction = binomial(run.k - 1, run.m).convert_to<double>()
            * std::pow(run.n / km1, run.m)
            * std::pow(pval[g], run.m * (run.m - 1) / 2.0);
        out << sweep_csv_row(row, prediction) << "\n";
        ++summary.rows;
    }
    return summary;
}

std::vector<TrendRow> witness_trend(int k, const std::vector<int>& t_list,
    std::uint64_t node_budget)
{
    std::vector<TrendRow> rows;
    for (int t : t_list) {
        TrendRow row;
        row.t = t;
        Graph g = sparse_k_chromatic(k, t);
        try {
            DensityReport rep = m2_pruned(g, node_budget);
            row.m2_value = rep.value;
            row.witness_size = rep.witness.count();
        } catch (const BudgetError&) {
            row.skipped = true;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace hfree
