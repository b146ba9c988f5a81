#pragma once

#include <cmath>
#include <vector>

#include "sftirr/sft.hpp"
#include "sftirr/spectral.hpp"

namespace fixtures {

inline sftirr::Sft full2() {
    return sftirr::build_sft(2, {{1, 1}, {1, 1}});
}

inline sftirr::Sft golden_mean() {
    return sftirr::build_sft(2, {{1, 1}, {1, 0}});
}

// edges 0->1, 1->0, 1->2, 2->0: no self loops, cycle lengths {2, 3}
inline sftirr::Sft three_symbol() {
    return sftirr::build_sft(3, {{0, 1, 0}, {1, 0, 1}, {1, 0, 0}});
}

inline double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

// Independent dominant-eigenvalue oracle: lambda = lim (tr A^{2^K})^{1/2^K},
// via repeated squaring with log-scale bookkeeping. The trace route never
// iterates a vector, so it shares nothing with the power iteration.
inline double trace_eigenvalue_oracle(const sftirr::Matrix& a, int squarings = 24) {
    const std::size_t n = a.size();
    std::vector<long double> cur(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = a[i][j];
    long double log_scale = 0.0L;
    long double power = 1.0L;
    for (int step = 0; step < squarings; ++step) {
        std::vector<long double> next(n * n, 0.0L);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                long double v = cur[i * n + k];
                if (v == 0.0L) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] += v * cur[k * n + j];
            }
        long double biggest = 0.0L;
        for (long double v : next) biggest = std::max(biggest, v);
        for (long double& v : next) v /= biggest;
        log_scale = 2.0L * log_scale + std::log(biggest);
        cur.swap(next);
        power *= 2.0L;
    }
    long double tr = 0.0L;
    for (std::size_t i = 0; i < n; ++i) tr += cur[i * n + i];
    return static_cast<double>(std::exp((std::log(tr) + log_scale) / power));
}

}  // namespace fixtures
