#include "hfree/random_graphs.hpp"

#include "hfree/cliques.hpp"
#include "hfree/density.hpp"

#include <cmath>

namespace hfree {

Rational PValue::effective(int n) const
{
    if (rational_)
        return *rational_;
    double a = exponent_->to_double();
    return Rational::from_double(std::pow(static_cast<double>(n), -a));
}

std::string PValue::str() const
{
    if (rational_)
        return rational_->str();
    return "n^-" + exponent_->str();
}

namespace {

    // floor(p * 2^64); the all-ones sentinel is handled by the caller
    std::uint64_t dyadic_threshold(const Rational& p)
    {
        BigInt t = (p.num() << 64) / p.den();
        return t.convert_to<std::uint64_t>();
    }

} // namespace

Graph sample_gnp(int n, const Rational& p, std::uint64_t seed)
{
    if (n < 0)
        throw std::invalid_argument("sample_gnp: negative n");
    if (p < Rational(0) || Rational(1) < p)
        throw std::invalid_argument("sample_gnp: p outside [0,1]");
    bool all = p == Rational(1);
    std::uint64_t threshold = all ? 0 : dyadic_threshold(p);
    std::vector<Edge> es;
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if (all || stream(seed, idx) < threshold)
                es.push_back({u, v});
    return Graph(n, es);
}

Rational expected_clique_count(int n, const Rational& p, int m)
{
    if (m > n)
        throw std::invalid_argument("expected_clique_count: m > n");
    if (m < 1)
        throw std::invalid_argument("expected_clique_count: need m >= 1");
    unsigned exponent = static_cast<unsigned>(m) * (m - 1) / 2;
    return Rational(binomial(n, m), 1) * p.pow(exponent);
}

CriticalExponents critical_exponents(int m, const Graph& h)
{
    if (m < 2)
        throw std::invalid_argument("critical_exponents: need m >= 2");
    Rational m2h = m2(h).value;
    Rational m2km = Rational::from_int(m + 1, 2);
    CriticalExponents out;
    out.inv_m2_h = Rational(1) / m2h;
    out.inv_m2_km = Rational(1) / m2km;
    out.order = m2h == m2km ? 0 : (m2km < m2h ? 1 : -1);
    return out;
}

ConcentrationReport concentration_report(const EnsembleConfig& cfg, int m)
{
    if (cfg.trials < 2)
        throw std::invalid_argument("concentration_report: need trials >= 2");
    ConcentrationReport rep;
    rep.expected = expected_clique_count(cfg.n, cfg.p, m);

    double sum = 0, sumsq = 0, fracsum = 0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Graph g = sample_gnp(cfg.n, cfg.p, cfg.seed ^ static_cast<std::uint64_t>(trial));
        CliqueStats stats = count_cliques(g, m);
        double count = static_cast<double>(stats.total);
        sum += count;
        sumsq += count * count;
        if (stats.total > 0)
            fracsum += static_cast<double>(stats.involved_copies) / count;
    }
    int t = cfg.trials;
    rep.mean_count = sum / t;
    rep.variance = (sumsq - sum * sum / t) / (t - 1);
    rep.ratio_to_expected = rep.mean_count / rep.expected.to_double();
    rep.mean_sharing_fraction = fracsum / t;
    return rep;
}

} // namespace hfree
