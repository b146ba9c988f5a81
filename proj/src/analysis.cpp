#include "sftirr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sftirr {

namespace {

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

std::vector<std::int64_t> sorted_times(std::vector<std::int64_t> times) {
    if (times.empty()) throw Error("InvalidEntry", "no checkpoints given");
    for (std::int64_t n : times)
        if (n < 1) throw Error("InvalidEntry", "checkpoints must be >= 1");
    std::sort(times.begin(), times.end());
    return times;
}

}  // namespace

std::vector<BirkhoffRow> birkhoff_count(const Word& x, const Word& pattern,
                                        std::vector<std::int64_t> times) {
    times = sorted_times(std::move(times));
    if (pattern.empty()) throw Error("InvalidEntry", "pattern is empty");
    const std::int64_t max_n = times.back();
    if (static_cast<std::size_t>(max_n) + pattern.size() > x.size())
        throw Error("PrefixTooShort",
                    "need " + std::to_string(max_n + static_cast<std::int64_t>(
                                                         pattern.size())) +
                        " symbols, have " + std::to_string(x.size()));

    std::vector<BirkhoffRow> rows;
    rows.reserve(times.size());
    std::size_t next_checkpoint = 0;
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < max_n; ++i) {
        while (next_checkpoint < times.size() && times[next_checkpoint] == i) {
            rows.push_back(BirkhoffRow{
                i, count, static_cast<double>(count) / static_cast<double>(i)});
            ++next_checkpoint;
        }
        bool match = true;
        const Symbol* base = x.data() + i;
        for (std::size_t j = 0; j < pattern.size(); ++j)
            if (base[j] != pattern[j]) {
                match = false;
                break;
            }
        if (match) ++count;
    }
    while (next_checkpoint < times.size()) {
        rows.push_back(BirkhoffRow{times[next_checkpoint], count,
                                   static_cast<double>(count) /
                                       static_cast<double>(max_n)});
        ++next_checkpoint;
    }
    return rows;
}

std::vector<OscillationRow> oscillation_rows(const SubstitutionMap& map,
                                             const Word& x, int kmin, int kmax,
                                             double target_xi,
                                             double target_eta) {
    if (kmin < 1 || kmin > kmax || kmax > kMaxFactorial)
        throw Error("InvalidEntry", "need 1 <= kmin <= kmax <= 20");
    std::vector<std::int64_t> times;
    for (int k = kmin; k <= kmax; ++k) times.push_back(kFactorials[k]);

    Word y = map.apply_L(x);
    std::vector<BirkhoffRow> phi_rows = birkhoff_count(y, map.xi(), times);
    std::vector<BirkhoffRow> psi_rows = birkhoff_count(x, map.eta(), times);

    std::vector<OscillationRow> rows;
    for (int k = kmin; k <= kmax; ++k) {
        std::size_t idx = static_cast<std::size_t>(k - kmin);
        rows.push_back(OscillationRow{k, kFactorials[k],
                                      k % 2 == 0 ? "even" : "odd",
                                      phi_rows[idx].average,
                                      psi_rows[idx].average, target_xi,
                                      target_eta});
    }
    return rows;
}

OscillationReport oscillation_report(const PotentialFamily& pf, double q,
                                     std::uint64_t seed, int kmin, int kmax) {
    if (kmin < 1 || kmin > kmax)
        throw Error("InvalidEntry", "need 1 <= kmin <= kmax");
    SubstitutionMap map = SubstitutionMap::from_word_system(pf.word_system());
    const std::int64_t budget = kFactorials[11] + 4096;
    if (kmax > kMaxFactorial || kFactorials[kmax] + map.M() > budget)
        throw Error("CapExceeded",
                    "kmax! + M exceeds the prefix budget of 11! + 4096");
    auto eq = pf.mu_q(q);
    auto [txi, teta] = pf.xi_eta_measures(q);
    Word x = sample_path(eq->measure,
                         static_cast<std::size_t>(kFactorials[kmax] + map.M()),
                         seed);
    OscillationReport report;
    report.q = q;
    report.seed = seed;
    report.kmin = kmin;
    report.kmax = kmax;
    report.rows = oscillation_rows(map, x, kmin, kmax, txi, teta);
    return report;
}

SllnReport slln_rows(const MarkovMeasure& mu, const Word& y, int m,
                     std::vector<std::int64_t> times) {
    if (m < 0) throw Error("InvalidEntry", "offset m must be >= 0");
    times = sorted_times(std::move(times));
    if (static_cast<std::size_t>(times.back() + m) > y.size())
        throw Error("PrefixTooShort", "word shorter than max(times) + m");
    const double target = markov_entropy(mu);
    SllnReport report;
    report.m = m;
    for (std::int64_t n : times) {
        std::span<const Symbol> prefix(y.data(),
                                       static_cast<std::size_t>(n + m));
        double lg = log_cylinder_measure(mu, prefix);
        if (lg == -std::numeric_limits<double>::infinity())
            throw Error("ZeroMeasure",
                        "cylinder has zero measure at n = " + std::to_string(n));
        report.rows.push_back(
            SllnRow{n, -lg / static_cast<double>(n), target});
    }
    return report;
}

SllnReport slln_estimate(const PotentialFamily& pf, double q,
                         std::uint64_t seed, int m,
                         std::vector<std::int64_t> times) {
    times = sorted_times(std::move(times));
    SubstitutionMap map = SubstitutionMap::from_word_system(pf.word_system());
    auto eq = pf.mu_q(q);
    // extra M symbols so every reported index is exact under the prefix
    // contract of apply_L
    std::size_t len = static_cast<std::size_t>(times.back() + m + map.M());
    Word x = sample_path(eq->measure, len, seed);
    Word y = map.apply_L(x);
    return slln_rows(eq->measure, y, m, std::move(times));
}

SplitSums split_zone_averages(const Word& x, const Matrix& Q, std::int64_t n) {
    if (n < 1 || static_cast<std::size_t>(n) + 1 > x.size())
        throw Error("PrefixTooShort", "need n + 1 symbols");
    CompensatedSum s1, s2;
    std::int64_t n1 = 0, n2 = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        double qv = Q[x[static_cast<std::size_t>(i)]]
                     [x[static_cast<std::size_t>(i) + 1]];
        if (qv <= 0.0)
            throw Error("ZeroMeasure",
                        "word leaves the support of the stochastic matrix");
        double rho = -std::log(qv);
        if (in_frozen_set(i)) {
            s1.add(rho);
            ++n1;
        } else {
            s2.add(rho);
            ++n2;
        }
    }
    SplitSums out;
    out.s1_size = n1;
    out.s2_size = n2;
    out.s1_average = n1 > 0 ? s1.value() / static_cast<double>(n1) : 0.0;
    out.s2_average = n2 > 0 ? s2.value() / static_cast<double>(n2) : 0.0;
    return out;
}

double pointwise_dimension(const MarkovMeasure& mu, const Word& x,
                           std::int64_t n) {
    if (n < 1 || static_cast<std::size_t>(n) > x.size())
        throw Error("PrefixTooShort", "need n symbols");
    std::span<const Symbol> prefix(x.data(), static_cast<std::size_t>(n));
    double lg = log_cylinder_measure(mu, prefix);
    if (lg == -std::numeric_limits<double>::infinity())
        throw Error("ZeroMeasure", "prefix is not admissible under mu");
    return -lg / static_cast<double>(n);
}

int factorial_floor(std::int64_t n) {
    int m = 0;
    while (m < kMaxFactorial && kFactorials[m + 1] <= n - 1) ++m;
    return m;
}

std::vector<ShiftDefectRow> shift_defect(const SubstitutionMap& map,
                                         const Word& x,
                                         std::vector<std::int64_t> times) {
    times = sorted_times(std::move(times));
    if (static_cast<std::size_t>(times.back() + map.M()) + 1 > x.size())
        throw Error("PrefixTooShort", "need max(times) + M + 1 symbols");
    Word y = map.apply_L(x);
    Word shifted(y.begin() + 1, y.end());
    Word back = map.apply_L(shifted);

    std::vector<BirkhoffRow> cx = birkhoff_count(x, map.xi(), times);
    std::vector<BirkhoffRow> cb = birkhoff_count(back, map.xi(), times);
    std::vector<ShiftDefectRow> rows;
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::int64_t defect = std::llabs(cx[i].count - cb[i].count);
        std::int64_t bound = factorial_floor(times[i]) + 1;
        rows.push_back(ShiftDefectRow{times[i], defect, bound,
                                      defect > bound});
    }
    return rows;
}

std::vector<CorrelationRow> correlation_decay(const MarkovMeasure& mu,
                                              std::vector<std::int64_t> lags,
                                              std::int64_t n,
                                              std::uint64_t seed) {
    if (n < 2) throw Error("InvalidEntry", "sample length must be >= 2");
    for (std::int64_t lag : lags)
        if (lag < 0) throw Error("InvalidEntry", "lags must be >= 0");
    std::int64_t max_lag = 0;
    for (std::int64_t lag : lags) max_lag = std::max(max_lag, lag);

    Word x = sample_path(mu, static_cast<std::size_t>(n + max_lag + 1), seed);
    std::vector<double> rho(static_cast<std::size_t>(n + max_lag));
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        rho[i] = -std::log(mu.P[x[i]][x[i + 1]]);

    const double mean = markov_entropy(mu);  // closed-form E[rho]
    std::vector<CorrelationRow> rows;
    rows.reserve(lags.size());
    for (std::int64_t lag : lags) {
        CompensatedSum acc;
        for (std::int64_t i = 0; i < n; ++i)
            acc.add(rho[static_cast<std::size_t>(i)] *
                    rho[static_cast<std::size_t>(i + lag)]);
        rows.push_back(CorrelationRow{
            lag, acc.value() / static_cast<double>(n) - mean * mean});
    }
    return rows;
}

}  // namespace sftirr
