#pragma once

#include <cstdint>
#include <vector>

namespace happylab {

// Fixed-universe bitset over vertex ids [0, n).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    bool empty() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    // Set difference: this \ o.
    VertexSet minus(const VertexSet& o) const {
        VertexSet r(*this);
        for (size_t i = 0; i < r.w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    VertexSet complement() const { return full(n_).minus(*this); }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Visits members in ascending order.
    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                int v = int(i * 64) + __builtin_ctzll(x);
                f(v);
                x &= x - 1;
            }
        }
    }

    // Builds from a 64-bit mask; only valid for n <= 64 (exhaustive suites).
    static VertexSet from_mask(int n, uint64_t mask) {
        VertexSet s(n);
        if (n > 0) s.w_[0] = mask;
        return s;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace happylab
