#include "sftirr/measures.hpp"

#include <cmath>
#include <limits>

#include "sftirr/rng.hpp"

namespace sftirr {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void check_symbols(std::size_t d, std::span<const Symbol> w) {
    for (Symbol s : w)
        if (s >= d)
            throw Error("SymbolOutOfRange",
                        "symbol " + std::to_string(s) +
                            " not in alphabet of size " + std::to_string(d));
}

// Neumaier-compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

Matrix adjacency_matrix(const Sft& sft) {
    Matrix m(sft.d, std::vector<double>(sft.d, 0.0));
    for (std::size_t i = 0; i < sft.d; ++i)
        for (std::size_t j = 0; j < sft.d; ++j)
            m[i][j] = sft.adj[i * sft.d + j] ? 1.0 : 0.0;
    return m;
}

std::vector<double> stationary_vector(const Matrix& P, double tol) {
    const std::size_t n = P.size();
    if (n == 0) throw Error("DimensionMismatch", "matrix is empty");
    for (const auto& row : P) {
        if (row.size() != n)
            throw Error("DimensionMismatch", "matrix is not square");
        double s = 0.0;
        for (double v : row) {
            if (v < 0.0 || v > 1.0 + 1e-12)
                throw Error("NotStochastic", "entry outside [0,1]");
            s += v;
        }
        if (std::abs(s - 1.0) > 1e-9)
            throw Error("NotStochastic", "row sum differs from 1 by " +
                                             std::to_string(s - 1.0));
    }
    if (!support_primitive(P))
        throw Error("NotPrimitive", "support pattern is not primitive");

    std::vector<double> p(n, 1.0 / static_cast<double>(n)), next(n), image(n);
    const std::uint64_t max_iterations = 1'000'000;
    for (std::uint64_t iter = 0; iter < max_iterations; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<double>& row = P[i];
            for (std::size_t j = 0; j < n; ++j) next[j] += row[j] * p[i];
        }
        double s = 0.0;
        for (double v : next) s += v;
        for (double& v : next) v /= s;
        std::fill(image.begin(), image.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) image[j] += P[i][j] * next[i];
        double residual = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            residual = std::max(residual, std::abs(image[j] - next[j]));
        p.swap(next);
        if (residual <= tol) return p;
    }
    throw Error("MaxIterations", "stationary vector iteration did not converge");
}

namespace {

void check_compatible(const Sft& sft, const Matrix& P) {
    if (P.size() != sft.d)
        throw Error("DimensionMismatch", "stochastic matrix size != alphabet");
    for (std::size_t i = 0; i < sft.d; ++i)
        for (std::size_t j = 0; j < sft.d; ++j)
            if (P[i][j] > 0.0 && !sft.edge(static_cast<Symbol>(i),
                                           static_cast<Symbol>(j)))
                throw Error("NotStochastic",
                            "P(" + std::to_string(i) + "," + std::to_string(j) +
                                ") > 0 on a missing edge");
}

}  // namespace

MarkovMeasure make_markov_measure(const Sft& sft, Matrix P, double tol) {
    check_compatible(sft, P);
    std::vector<double> p = stationary_vector(P, tol);
    return MarkovMeasure{sft, std::move(P), std::move(p)};
}

MarkovMeasure make_markov_measure(const Sft& sft, Matrix P,
                                  std::vector<double> p, double tol) {
    check_compatible(sft, P);
    if (p.size() != sft.d)
        throw Error("DimensionMismatch", "stationary vector size != alphabet");
    double total = 0.0;
    std::vector<double> image(sft.d, 0.0);
    for (std::size_t i = 0; i < sft.d; ++i) {
        total += p[i];
        for (std::size_t j = 0; j < sft.d; ++j) image[j] += P[i][j] * p[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw Error("NotStochastic", "stationary vector does not sum to 1");
    for (std::size_t j = 0; j < sft.d; ++j)
        if (std::abs(image[j] - p[j]) > std::max(tol, 1e-12))
            throw Error("NotStochastic", "p^T P != p");
    return MarkovMeasure{sft, std::move(P), std::move(p)};
}

double cylinder_measure(const MarkovMeasure& mu, std::span<const Symbol> w) {
    check_symbols(mu.sft.d, w);
    if (w.empty()) return 1.0;
    if (w.size() > 64) {
        double lg = log_cylinder_measure(mu, w);
        return lg == -kInfinity ? 0.0 : std::exp(lg);
    }
    double m = mu.p[w[0]];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) m *= mu.P[w[i]][w[i + 1]];
    return m;
}

double log_cylinder_measure(const MarkovMeasure& mu,
                            std::span<const Symbol> w) {
    check_symbols(mu.sft.d, w);
    if (w.empty()) return 0.0;
    if (mu.p[w[0]] <= 0.0) return -kInfinity;
    CompensatedSum acc;
    acc.add(std::log(mu.p[w[0]]));
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        double q = mu.P[w[i]][w[i + 1]];
        if (q <= 0.0) return -kInfinity;
        acc.add(std::log(q));
    }
    return acc.value();
}

double markov_entropy(const MarkovMeasure& mu) {
    double h = 0.0;
    for (std::size_t i = 0; i < mu.sft.d; ++i)
        for (std::size_t j = 0; j < mu.sft.d; ++j) {
            double q = mu.P[i][j];
            if (q > 0.0) h -= mu.p[i] * q * std::log(q);
        }
    return h;
}

MarkovMeasure parry_measure(const Sft& sft, const SpectralData& spec) {
    const std::size_t d = sft.d;
    Matrix P(d, std::vector<double>(d, 0.0));
    std::vector<double> p(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            if (sft.adj[i * d + j])
                P[i][j] = spec.v[j] / (spec.lambda * spec.v[i]);
        p[i] = spec.u[i] * spec.v[i];
    }
    return MarkovMeasure{sft, std::move(P), std::move(p)};
}

double parry_cylinder_closed_form(const Sft& sft, const SpectralData& spec,
                                  std::span<const Symbol> w) {
    if (w.empty() || !admissible(sft, w))
        throw Error("NotAdmissible", "word is not admissible");
    const double n = static_cast<double>(w.size() - 1);
    if (w.size() <= 64)
        return spec.u[w.front()] * spec.v[w.back()] /
               std::pow(spec.lambda, n);
    return std::exp(std::log(spec.u[w.front()]) + std::log(spec.v[w.back()]) -
                    n * std::log(spec.lambda));
}

TwoBlockPotential::TwoBlockPotential(const Sft& sft)
    : d_(sft.d), support_(sft.adj), values_(sft.d * sft.d, 0.0) {}

void TwoBlockPotential::set(Symbol a, Symbol b, double value) {
    if (a >= d_ || b >= d_)
        throw Error("SymbolOutOfRange", "pair outside alphabet");
    if (!support_[static_cast<std::size_t>(a) * d_ + b])
        throw Error("NotAdmissible",
                    "potential defined only on admissible 2-words");
    values_[static_cast<std::size_t>(a) * d_ + b] = value;
}

double TwoBlockPotential::value(Symbol a, Symbol b) const {
    if (a >= d_ || b >= d_)
        throw Error("SymbolOutOfRange", "pair outside alphabet");
    if (!support_[static_cast<std::size_t>(a) * d_ + b])
        throw Error("NotAdmissible",
                    "potential defined only on admissible 2-words");
    return values_[static_cast<std::size_t>(a) * d_ + b];
}

bool TwoBlockPotential::defined(Symbol a, Symbol b) const {
    return a < d_ && b < d_ &&
           support_[static_cast<std::size_t>(a) * d_ + b] != 0;
}

EquilibriumData equilibrium_state(const Sft& sft,
                                  const TwoBlockPotential& phi,
                                  double tol) {
    const std::size_t d = sft.d;
    if (phi.alphabet_size() != d)
        throw Error("DimensionMismatch", "potential alphabet != sft alphabet");
    Matrix D(d, std::vector<double>(d, 0.0));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (sft.adj[a * d + b])
                D[a][b] = std::exp(phi.value(static_cast<Symbol>(a),
                                             static_cast<Symbol>(b)));
    SpectralData spec = dominant_eigendata(D, tol);

    Matrix Phi(d, std::vector<double>(d, 0.0));
    for (std::size_t a = 0; a < d; ++a) {
        double row_sum = 0.0;
        for (std::size_t b = 0; b < d; ++b) {
            Phi[a][b] = D[a][b] * spec.v[b] / (spec.lambda * spec.v[a]);
            row_sum += Phi[a][b];
        }
        for (std::size_t b = 0; b < d; ++b) Phi[a][b] /= row_sum;
    }
    MarkovMeasure measure = make_markov_measure(sft, Phi, tol);
    double pressure = std::log(spec.lambda);
    return EquilibriumData{phi,
                           std::move(D),
                           std::move(spec),
                           std::move(Phi),
                           std::move(measure),
                           pressure};
}

double equilibrium_cylinder_measure(const EquilibriumData& eq,
                                    std::span<const Symbol> w) {
    if (w.size() <= 64) {
        const Sft& sft = eq.measure.sft;
        if (w.empty() || !admissible(sft, w))
            throw Error("NotAdmissible", "word is not admissible");
        double m = eq.spectral.u[w.front()];
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            m *= eq.D[w[i]][w[i + 1]] / eq.spectral.lambda;
        return m * eq.spectral.v[w.back()];
    }
    return std::exp(log_equilibrium_cylinder_measure(eq, w));
}

double log_equilibrium_cylinder_measure(const EquilibriumData& eq,
                                        std::span<const Symbol> w) {
    const Sft& sft = eq.measure.sft;
    if (w.empty() || !admissible(sft, w))
        throw Error("NotAdmissible", "word is not admissible");
    const double log_rho = std::log(eq.spectral.lambda);
    CompensatedSum acc;
    acc.add(std::log(eq.spectral.u[w.front()]));
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        acc.add(std::log(eq.D[w[i]][w[i + 1]]) - log_rho);
    acc.add(std::log(eq.spectral.v[w.back()]));
    return acc.value();
}

Word sample_path(const MarkovMeasure& mu, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error("InvalidEntry", "sample length must be >= 1");
    const std::size_t d = mu.sft.d;
    SplitMix64 rng(seed);

    auto draw = [&](const std::vector<double>& weights) -> Symbol {
        double u = rng.next_unit();
        double cum = 0.0;
        Symbol last_positive = 0;
        bool seen = false;
        for (std::size_t j = 0; j < d; ++j) {
            if (weights[j] <= 0.0) continue;
            cum += weights[j];
            last_positive = static_cast<Symbol>(j);
            seen = true;
            if (u < cum) return last_positive;
        }
        // u fell beyond the accumulated total (rounding); take the last
        // admissible symbol
        if (!seen) throw Error("NotStochastic", "all-zero weight row");
        return last_positive;
    };

    Word x(n);
    x[0] = draw(mu.p);
    for (std::size_t i = 1; i < n; ++i) x[i] = draw(mu.P[x[i - 1]]);
    return x;
}

}  // namespace sftirr
