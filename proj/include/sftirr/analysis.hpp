#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sftirr/construction.hpp"
#include "sftirr/measures.hpp"
#include "sftirr/substitution.hpp"

namespace sftirr {

struct BirkhoffRow {
    std::int64_t n = 0;
    std::int64_t count = 0;  // occurrence starts < n
    double average = 0.0;    // count / n
};

// Occurrence counts of `pattern` below each checkpoint, one linear scan.
// Deliberately a direct position-by-position comparison, independent of
// find_occurrences.
std::vector<BirkhoffRow> birkhoff_count(const Word& x, const Word& pattern,
                                        std::vector<std::int64_t> times);

struct OscillationRow {
    int k = 0;
    std::int64_t n = 0;  // k!
    std::string parity;  // "even" / "odd" (of k)
    double avg_phi_L = 0.0;  // frequency of xi in L(x) prefix
    double avg_psi_x = 0.0;  // frequency of eta in x prefix
    double target_xi = 0.0;  // mu_q([xi])
    double target_eta = 0.0; // mu_q([eta])
};

struct OscillationReport {
    double q = 0.0;
    std::uint64_t seed = 0;
    int kmin = 0, kmax = 0;
    std::vector<OscillationRow> rows;
};

// Rows for a given prefix (fixture-friendly core).
std::vector<OscillationRow> oscillation_rows(const SubstitutionMap& map,
                                             const Word& x, int kmin, int kmax,
                                             double target_xi,
                                             double target_eta);

// Samples x ~ mu_q of length kmax! + M and reports Birkhoff averages of
// chi_[xi] along L(x) at the factorial checkpoints.
OscillationReport oscillation_report(const PotentialFamily& pf, double q,
                                     std::uint64_t seed, int kmin, int kmax);

struct SllnRow {
    std::int64_t n = 0;
    double estimate = 0.0;  // -(1/n) log mu(C_{n+m}(L(x)))
    double target = 0.0;    // h(mu)
};

struct SllnReport {
    int m = 0;
    std::vector<SllnRow> rows;
};

// Entropy estimates from cylinder measures along a supplied word (the
// word is used as-is; pass L(x) or a fixture).
SllnReport slln_rows(const MarkovMeasure& mu, const Word& y, int m,
                     std::vector<std::int64_t> times);

// Samples x ~ mu_q, applies L, and estimates h(mu_q) at each n.
SllnReport slln_estimate(const PotentialFamily& pf, double q,
                         std::uint64_t seed, int m,
                         std::vector<std::int64_t> times);

struct SplitSums {
    std::int64_t s1_size = 0, s2_size = 0;
    double s1_average = 0.0, s2_average = 0.0;  // 0 for an empty part
};

// Averages of rho(sigma^i x) = -log Q(x_i, x_{i+1}) over the frozen index
// set S1 and its complement S2 within {0, ..., n-1}.
SplitSums split_zone_averages(const Word& x, const Matrix& Q, std::int64_t n);

// -log mu(C_n(x)) / n.
double pointwise_dimension(const MarkovMeasure& mu, const Word& x,
                           std::int64_t n);

struct ShiftDefectRow {
    std::int64_t n = 0;
    std::int64_t defect = 0;  // |count_xi(x, n) - count_xi(L(sigma(L(x))), n)|
    std::int64_t bound = 0;   // m(n) + 1, m(n) = max{m : m! <= n-1}
    bool violation = false;
};

std::vector<ShiftDefectRow> shift_defect(const SubstitutionMap& map,
                                         const Word& x,
                                         std::vector<std::int64_t> times);

struct CorrelationRow {
    std::int64_t lag = 0;
    double covariance = 0.0;
};

// Monte Carlo covariance of rho with rho after `lag` shifts, against the
// closed-form stationary mean (which equals the entropy). Lag 0 is the
// variance estimate.
std::vector<CorrelationRow> correlation_decay(const MarkovMeasure& mu,
                                              std::vector<std::int64_t> lags,
                                              std::int64_t n,
                                              std::uint64_t seed);

// m(n) = max{m >= 0 : m! <= n - 1}.
int factorial_floor(std::int64_t n);

}  // namespace sftirr
