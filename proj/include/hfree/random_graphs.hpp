#pragma once

#include "hfree/graph.hpp"
#include "hfree/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hfree {

// SplitMix64: the counter-based 64-bit generator used everywhere random bits
// are needed. stream(seed, i) is a pure function of (seed, i), so trials and
// edges can be drawn independently of evaluation order.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t stream(std::uint64_t seed, std::uint64_t i)
{
    return mix64(seed + i * 0x9e3779b97f4a7c15ULL);
}

// Edge probability, either an exact rational or an exponent a for p = n^-a
// evaluated per n (to nearest double, then taken as that exact dyadic value).
class PValue {
public:
    static PValue exact(Rational p)
    {
        PValue v;
        v.rational_ = std::move(p);
        return v;
    }
    static PValue exponent(Rational a)
    {
        PValue v;
        v.exponent_ = std::move(a);
        return v;
    }

    bool is_exponent() const { return exponent_.has_value(); }
    const Rational& exponent_value() const { return *exponent_; }

    Rational effective(int n) const;
    std::string str() const;

private:
    std::optional<Rational> rational_;
    std::optional<Rational> exponent_;
};

// Includes each of the C(n,2) possible edges independently with probability
// p: edge number i (lexicographic order on (u,v)) is present iff
// stream(seed, i) < floor(p * 2^64). Bit-reproducible for fixed (n, p, seed).
Graph sample_gnp(int n, const Rational& p, std::uint64_t seed);

// C(n,m) * p^C(m,2), exact.
Rational expected_clique_count(int n, const Rational& p, int m);

struct CriticalExponents {
    Rational inv_m2_h;  // 1/m2(H)
    Rational inv_m2_km; // 1/m2(K_m)
    int order = 0;      // sign of m2(H) - m2(K_m)
};

// The two regime-boundary exponents for hosts G(n, n^-a).
CriticalExponents critical_exponents(int m, const Graph& h);

struct EnsembleConfig {
    int n = 0;
    Rational p;
    std::uint64_t seed = 0;
    int trials = 1;
};

struct ConcentrationReport {
    double mean_count = 0;
    double variance = 0;
    double ratio_to_expected = 0;
    // mean over trials of (copies sharing an edge with another copy) / total
    double mean_sharing_fraction = 0;
    Rational expected;
};

// Monte-Carlo clique-count concentration over independent trials; trial i
// uses seed XOR i. Requires trials >= 2.
ConcentrationReport concentration_report(const EnsembleConfig& cfg, int m);

} // namespace hfree
