#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "happylab/rational.hpp"

namespace happylab {

// All randomized code draws from std::mt19937_64 through the helpers below,
// never through std::*_distribution (whose outputs are not pinned by the
// standard). Identical seeds therefore reproduce identical runs on every
// platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Unbiased uniform draw in [0, bound).
    uint64_t below(uint64_t bound) {
        const uint64_t cap = std::numeric_limits<uint64_t>::max() / bound * bound;
        uint64_t r;
        do {
            r = gen_();
        } while (r >= cap);
        return r % bound;
    }

    // Label in {1..k}.
    int label(int k) { return 1 + int(below(uint64_t(k))); }

    // Exact rational theta in the open interval (1/2, 1): (2^63 + u) / 2^64
    // with u uniform in [1, 2^63).
    Rat theta() {
        uint64_t u;
        do {
            u = gen_() >> 1;
        } while (u == 0);
        mpz_class num = mpz_class(1) << 63;
        num += mpz_class(static_cast<unsigned long>(u));
        Rat t(num, mpz_class(1) << 64);
        t.canonicalize();
        return t;
    }

    // 53-bit uniform double in [0, 1).
    double unit() { return double(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

// splitmix64 step; combines a base seed with a stream index so parallel
// trials get independent deterministic streams.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace happylab
