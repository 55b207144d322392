#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sectavg/vec.hpp"

namespace sectavg {

// Deterministic random source. mt19937_64 gives a portable bit stream; the
// distributions are written out by hand because the std:: ones are allowed to
// differ between standard libraries and the outputs here must be reproducible
// byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // uniform in [0,1) with 53 random bits, exactly representable as double
    double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi] via rejection, unbiased
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % span) - 1;
        std::uint64_t v;
        do {
            v = u64();
        } while (v > limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    // standard normal, Box-Muller with a cached second value
    double gauss() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = unit();
        } while (u1 == 0.0);
        u2 = unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // dyadic rational strictly inside (0,1): (2k+1)/2^(bits+1)
    Rat dyadic_unit(int bits = 32) {
        Int k(u64() >> (64 - bits));
        return Rat(2 * k + 1, Int(1) << (bits + 1));
    }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// splitmix64 scramble, used to derive independent per-item substreams
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// integer direction with coordinates in [-10^6, 10^6], not all zero
inline Vec random_rational_direction(Rng& rng, int dim) {
    for (;;) {
        Vec v = Vec::zero(dim);
        for (int i = 0; i < dim; ++i) v[i] = Rat(rng.uniform_int(-1000000, 1000000));
        if (!v.is_zero()) return v;
    }
}

// Near-uniform direction on the unit sphere (circle when dim is 2), snapped
// to exact rationals with denominator 2^bits so downstream arithmetic stays
// exact and coordinate sizes stay bounded.
inline Vec random_sphere_direction(Rng& rng, int dim, int bits = 20) {
    for (;;) {
        double g[3] = {0, 0, 0};
        double norm2 = 0;
        for (int i = 0; i < dim; ++i) {
            g[i] = rng.gauss();
            norm2 += g[i] * g[i];
        }
        if (norm2 < 1e-12) continue;
        double inv = 1.0 / std::sqrt(norm2);
        Vec v = Vec::zero(dim);
        Int den = Int(1) << bits;
        for (int i = 0; i < dim; ++i) {
            auto num = static_cast<std::int64_t>(std::llround(g[i] * inv * std::ldexp(1.0, bits)));
            v[i] = Rat(Int(num), den);
        }
        if (!v.is_zero()) return v;
    }
}

} // namespace sectavg
