#pragma once

#include <cmath>
#include <cstdint>

namespace sectavg {

// Welford running mean and variance; numerically stable and order-dependent,
// so callers must feed samples in a deterministic order.
struct Accumulator {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double stderr_of_mean() const {
        return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
    }
};

} // namespace sectavg
