#include "sftirr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace sftirr {

namespace {

void multiply(const Matrix& m, const std::vector<double>& x,
              std::vector<double>& out) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const std::vector<double>& row = m[i];
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
}

void multiply_transposed(const Matrix& m, const std::vector<double>& x,
                         std::vector<double>& out) {
    const std::size_t n = m.size();
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double>& row = m[i];
        for (std::size_t j = 0; j < n; ++j) out[j] += row[j] * x[i];
    }
}

double sum(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

}  // namespace

bool support_primitive(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<std::uint8_t> b(n * n), p(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i * n + j] = m[i][j] > 0.0 ? 1 : 0;
    p = b;
    const std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (std::all_of(p.begin(), p.end(),
                        [](std::uint8_t v) { return v != 0; }))
            return true;
        if (k == bound) break;
        std::vector<std::uint8_t> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (!p[i * n + l]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] |= b[l * n + j];
            }
        p.swap(next);
    }
    return false;
}

namespace {

double residual_of(const Matrix& m, double lambda,
                   const std::vector<double>& u,
                   const std::vector<double>& v) {
    const std::size_t n = m.size();
    std::vector<double> mv(n), utm(n);
    multiply(m, v, mv);
    multiply_transposed(m, u, utm);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        r = std::max(r, std::abs(mv[i] - lambda * v[i]));
        r = std::max(r, std::abs(utm[i] - lambda * u[i]));
    }
    return r;
}

}  // namespace

SpectralData dominant_eigendata(const Matrix& matrix, double tol,
                                std::uint64_t max_iterations) {
    const std::size_t n = matrix.size();
    if (n == 0) throw Error("DimensionMismatch", "matrix is empty");
    for (const auto& row : matrix) {
        if (row.size() != n)
            throw Error("DimensionMismatch", "matrix is not square");
        for (double v : row)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw Error("InvalidEntry",
                            "matrix entries must be finite and non-negative");
    }
    if (tol <= 0.0) throw Error("InvalidEntry", "tolerance must be positive");
    if (!support_primitive(matrix))
        throw Error("NotPrimitive",
                    "support pattern never becomes entrywise positive");

    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> u(n, 1.0 / static_cast<double>(n));
    std::vector<double> tmp(n);
    double lambda = 0.0, lambda_prev = -1.0;

    for (std::uint64_t iter = 0; iter < max_iterations; ++iter) {
        multiply(matrix, v, tmp);
        double sv = sum(tmp);
        lambda = sv;  // sum(v) is kept at 1
        for (std::size_t i = 0; i < n; ++i) v[i] = tmp[i] / sv;

        multiply_transposed(matrix, u, tmp);
        double su = sum(tmp);
        for (std::size_t i = 0; i < n; ++i) u[i] = tmp[i] / su;

        if (std::abs(lambda - lambda_prev) < tol) {
            // normalize: u sums to 1 already; scale v so u^T v = 1
            double uv = 0.0;
            for (std::size_t i = 0; i < n; ++i) uv += u[i] * v[i];
            std::vector<double> v_scaled(n);
            for (std::size_t i = 0; i < n; ++i) v_scaled[i] = v[i] / uv;
            double res = residual_of(matrix, lambda, u, v_scaled);
            if (res <= tol) {
                SpectralData out;
                out.lambda = lambda;
                out.u = std::move(u);
                out.v = std::move(v_scaled);
                out.residual = res;
                out.tol = tol;
                return out;
            }
        }
        lambda_prev = lambda;
    }
    throw Error("MaxIterations",
                "power iteration did not converge within " +
                    std::to_string(max_iterations) + " iterations");
}

}  // namespace sftirr
