#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hfree {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts, kept reduced with a
// positive denominator. All density and potential comparisons go through this
// type; no floating point is ever compared.
class Rational {
public:
    Rational()
        : num_(0)
        , den_(1)
    {
    }

    Rational(long long v)
        : num_(v)
        , den_(1)
    {
    }

    Rational(BigInt num, BigInt den)
        : num_(std::move(num))
        , den_(std::move(den))
    {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    static Rational from_int(long long a, long long b) { return Rational(BigInt(a), BigInt(b)); }

    // Exact value of a finite double (doubles are dyadic rationals).
    static Rational from_double(double x)
    {
        if (!std::isfinite(x))
            throw std::invalid_argument("Rational: non-finite double");
        int exp = 0;
        double m = std::frexp(x, &exp);
        // 53 bits of mantissa
        auto mant = static_cast<long long>(std::ldexp(m, 53));
        exp -= 53;
        BigInt num = mant;
        BigInt den = 1;
        if (exp >= 0)
            num <<= exp;
        else
            den <<= -exp;
        return Rational(num, den);
    }

    // "a", "a/b", or a decimal like "0.55"
    static Rational parse(const std::string& s)
    {
        try {
            auto slash = s.find('/');
            if (slash != std::string::npos)
                return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
            auto dot = s.find('.');
            if (dot == std::string::npos)
                return Rational(BigInt(s), 1);
            std::string frac = s.substr(dot + 1);
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad decimal");
            std::string whole = s.substr(0, dot);
            bool neg = !whole.empty() && whole[0] == '-';
            if (neg || (!whole.empty() && whole[0] == '+'))
                whole = whole.substr(1);
            BigInt den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            BigInt num = (whole.empty() ? BigInt(0) : BigInt(whole)) * den + BigInt(frac);
            return Rational(neg ? -num : num, den);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw std::invalid_argument("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const
    {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational pow(unsigned e) const
    {
        Rational r(1);
        Rational base = *this;
        while (e) {
            if (e & 1)
                r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const
    {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    std::string str() const
    {
        if (den_ == 1)
            return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace hfree
