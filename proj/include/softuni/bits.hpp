#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace softuni {

// Fixed-capacity bitset sized at runtime. Trailing bits beyond the capacity
// are kept zero so word-wise comparison is exact.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) { assert(n >= 0); }

    static BitVec full(int n) {
        BitVec v(n);
        for (auto& w : v.w_) w = ~std::uint64_t{0};
        v.trim();
        return v;
    }

    int capacity() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool is_subset_of(const BitVec& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const BitVec& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    BitVec& operator&=(const BitVec& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    BitVec& subtract(const BitVec& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    BitVec complement() const {
        BitVec r(n_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    // Index of the lowest set bit, -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k) * 64 + std::countr_zero(w_[k]);
        return -1;
    }

    template <class Fn>
    void for_each(Fn fn) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                fn(int(k) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.w_ <=> b.w_;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Square boolean matrix over {0..n-1}, one BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), rows_(n, BitVec(n)) {}

    static BitMatrix identity_on(const BitVec& support) {
        BitMatrix m(support.capacity());
        support.for_each([&](int i) { m.set(i, i); });
        return m;
    }
    static BitMatrix full_on(const BitVec& support) {
        BitMatrix m(support.capacity());
        support.for_each([&](int i) { m.rows_[i] = support; });
        return m;
    }

    int dim() const { return n_; }

    bool test(int i, int j) const { return rows_[i].test(j); }
    void set(int i, int j) { rows_[i].set(j); }

    const BitVec& row(int i) const { return rows_[i]; }
    BitVec& row(int i) { return rows_[i]; }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            rows_[i].for_each([&](int j) { t.set(j, i); });
        return t;
    }

    BitMatrix& operator&=(const BitMatrix& o) {
        assert(n_ == o.n_);
        for (int i = 0; i < n_; ++i) rows_[i] &= o.rows_[i];
        return *this;
    }
    BitMatrix& operator|=(const BitMatrix& o) {
        assert(n_ == o.n_);
        for (int i = 0; i < n_; ++i) rows_[i] |= o.rows_[i];
        return *this;
    }
    friend BitMatrix operator&(BitMatrix a, const BitMatrix& b) { return a &= b; }
    friend BitMatrix operator|(BitMatrix a, const BitMatrix& b) { return a |= b; }

    bool is_subset_of(const BitMatrix& o) const {
        assert(n_ == o.n_);
        for (int i = 0; i < n_; ++i)
            if (!rows_[i].is_subset_of(o.rows_[i])) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (const auto& r : rows_) c += r.count();
        return c;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend std::strong_ordering operator<=>(const BitMatrix& a, const BitMatrix& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.rows_ <=> b.rows_;
    }

private:
    int n_ = 0;
    std::vector<BitVec> rows_;
};

// Pairs (x,z) such that some y has (x,y) in `inner` and (y,z) in `outer`.
inline BitMatrix compose_bits(const BitMatrix& outer, const BitMatrix& inner) {
    assert(outer.dim() == inner.dim());
    BitMatrix r(outer.dim());
    for (int x = 0; x < inner.dim(); ++x)
        inner.row(x).for_each([&](int y) { r.row(x) |= outer.row(y); });
    return r;
}

} // namespace softuni
