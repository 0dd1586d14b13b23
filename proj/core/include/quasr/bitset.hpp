#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quasr {

// Fixed-universe dynamic bitset. Used both for adjacency rows and for vertex
// subsets; the universe size is the host graph's vertex count.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    static Bitset range(int universe, int lo, int hi) {  // [lo, hi)
        Bitset b(universe);
        for (int i = lo; i < hi; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { check(i); w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { check(i); w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(int i) { check(i); w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_) if (w) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {  // set difference
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }

    bool operator==(const Bitset&) const = default;

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    static int intersection_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }
    static int intersection_count(const Bitset& a, const Bitset& b, const Bitset& c) {
        int n = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            n += std::popcount(a.w_[i] & b.w_[i] & c.w_[i]);
        return n;
    }

    // Intersect a & b into out (universe sizes must match).
    static void intersect_into(const Bitset& a, const Bitset& b, Bitset& out) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) out.w_[i] = a.w_[i] & b.w_[i];
    }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return int(wi * 64 + std::countr_zero(w));
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(int(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    // The k-th (0-based) set bit; throws if out of range.
    int nth(int k) const {
        int seen = 0, res = -1;
        for_each([&](int i) { if (seen++ == k) res = i; });
        if (res < 0) throw std::out_of_range("Bitset::nth");
        return res;
    }

    std::size_t words() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Bitset: index outside universe");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

using VertexSet = Bitset;

}  // namespace quasr
