#pragma once

#include <cstdint>
#include <vector>

#include "sftirr/error.hpp"

namespace sftirr {

using Matrix = std::vector<std::vector<double>>;

// Dominant eigendata of a primitive non-negative matrix: eigenvalue
// lambda with left eigenvector u (sums to 1) and right eigenvector v
// (scaled so that u^T v = 1), both entrywise positive.
struct SpectralData {
    double lambda = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    double residual = 0.0;  // max of ||Av - lambda v||_inf, ||u^T A - lambda u^T||_inf
    double tol = 0.0;
};

// Power iteration on the matrix and its transpose until successive
// eigenvalue estimates differ by < tol and the residual (after the final
// normalization) is <= tol. The support pattern must be primitive.
SpectralData dominant_eigendata(const Matrix& matrix, double tol = 1e-12,
                                std::uint64_t max_iterations = 1'000'000);

// Primitivity of the support pattern (some power of the 0/1 pattern is
// entrywise positive), exact via the Wielandt bound.
bool support_primitive(const Matrix& matrix);

}  // namespace sftirr
