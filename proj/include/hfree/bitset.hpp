#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace hfree {

// Fixed-universe dynamic bitset over 64-bit words. Vertex 0 is the least
// significant bit of word 0; the canonical order below relies on that.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe)
        : n_(universe)
        , w_((universe + 63) / 64, 0)
    {
        assert(universe >= 0);
    }

    static Bitset full(int universe)
    {
        Bitset b(universe);
        for (auto& w : b.w_)
            w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> members)
    {
        Bitset b(universe);
        for (int v : members)
            b.set(v);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const
    {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int i)
    {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i)
    {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }

    // set difference
    Bitset& operator-=(const Bitset& o)
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    int and_count(const Bitset& o) const
    {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const
    {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    // clear all members <= v
    void reset_leq(int v)
    {
        if (v < 0)
            return;
        if (v >= n_ - 1) {
            for (auto& w : w_)
                w = 0;
            return;
        }
        std::size_t wi = v >> 6;
        for (std::size_t i = 0; i < wi; ++i)
            w_[i] = 0;
        int bit = v & 63;
        if (bit == 63)
            w_[wi] = 0;
        else
            w_[wi] &= ~std::uint64_t{0} << (bit + 1);
    }

    // first member >= from, or -1
    int next(int from = 0) const
    {
        if (from >= n_)
            return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return int(wi * 64 + std::countr_zero(w));
            if (++wi == w_.size())
                return -1;
            w = w_[wi];
        }
    }

    template <typename F> void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(int(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b)
    {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    // Canonical order used for deterministic tie-breaking: fewer members
    // first, then smaller when read as an integer with vertex 0 the least
    // significant bit.
    static bool canonical_less(const Bitset& a, const Bitset& b)
    {
        int ca = a.count(), cb = b.count();
        if (ca != cb)
            return ca < cb;
        assert(a.n_ == b.n_);
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i])
                return a.w_[i] < b.w_[i];
        return false;
    }

    std::uint64_t word(std::size_t i) const { return i < w_.size() ? w_[i] : 0; }

private:
    void trim()
    {
        if (n_ % 64 && !w_.empty())
            w_.back() &= (~std::uint64_t{0}) >> (64 - n_ % 64);
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace hfree
