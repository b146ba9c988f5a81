// Acceptance suite: one pass/fail line per criterion, exit 1 on any
// failure. Statistical criteria use 16 fixed seeds derived from master
// seed 7 via the SplitMix64 sub-seed scheme; medians are midpoints of the
// two central order statistics.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sftirr/analysis.hpp"
#include "sftirr/construction.hpp"
#include "sftirr/measures.hpp"
#include "sftirr/rng.hpp"
#include "sftirr/sft.hpp"
#include "sftirr/substitution.hpp"

using namespace sftirr;

namespace {

constexpr std::uint64_t kMasterSeed = 7;
constexpr int kSeedCount = 16;

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
    std::printf("[%s] criterion %2d: %s (%s; %.1fs)\n", pass ? "PASS" : "FAIL",
                criterion, name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void run(int criterion, const std::string& name,
         const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(criterion, name, pass, detail, seconds);
}

std::uint64_t seed_at(int k) {
    return sub_seed(kMasterSeed, static_cast<std::uint64_t>(k));
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Sft gm() { return build_sft(2, {{1, 1}, {1, 0}}); }
Sft full2() { return build_sft(2, {{1, 1}, {1, 1}}); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

EquilibriumData equilibrium_for(const Sft& sft, const WordSystem& ws,
                                double q) {
    TwoBlockPotential phi(sft);
    phi.set(ws.alpha, ws.theta[0], q);
    return equilibrium_state(sft, phi);
}

bool criterion_spectral(std::string& detail) {
    SpectralData gm_spec = dominant_eigendata(adjacency_matrix(gm()));
    SpectralData full_spec = dominant_eigendata(adjacency_matrix(full2()));
    double gm_gap = std::abs(gm_spec.lambda - (1.0 + std::sqrt(5.0)) / 2.0);
    double full_gap = std::abs(full_spec.lambda - 2.0);
    double gm_entropy_gap =
        std::abs(markov_entropy(parry_measure(gm(), gm_spec)) -
                 std::log(gm_spec.lambda));
    double full_entropy_gap =
        std::abs(markov_entropy(parry_measure(full2(), full_spec)) -
                 std::log(full_spec.lambda));
    detail = "lambda gaps " + fmt(gm_gap) + " / " + fmt(full_gap) +
             ", entropy gaps " + fmt(gm_entropy_gap) + " / " +
             fmt(full_entropy_gap);
    return gm_gap <= 1e-10 && full_gap <= 1e-12 && gm_entropy_gap <= 1e-10 &&
           full_entropy_gap <= 1e-10;
}

bool criterion_measure_consistency(std::string& detail) {
    double worst_rel = 0.0, worst_add = 0.0, worst_mass = 0.0;
    for (const Sft& sft : {gm(), full2()}) {
        WordSystem ws = build_word_system(sft);
        for (double q : {0.0, 0.1, 0.5, 1.0}) {
            EquilibriumData eq = equilibrium_for(sft, ws, q);
            for (std::size_t n = 1; n <= 8; ++n) {
                double mass = 0.0;
                for (const Word& w : enumerate_words(sft, n)) {
                    double closed = equilibrium_cylinder_measure(eq, w);
                    double product = cylinder_measure(eq.measure, w);
                    mass += product;
                    if (product > 0.0)
                        worst_rel = std::max(
                            worst_rel, std::abs(closed - product) / product);
                    if (n <= 7) {
                        double successors = 0.0;
                        for (Symbol j = 0; j < sft.d; ++j) {
                            Word wj = w;
                            wj.push_back(j);
                            successors += cylinder_measure(eq.measure, wj);
                        }
                        worst_add = std::max(worst_add,
                                             std::abs(successors - product));
                    }
                }
                worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
            }
        }
    }
    detail = "worst relative " + fmt(worst_rel) + ", additivity " +
             fmt(worst_add) + ", mass " + fmt(worst_mass);
    return worst_rel <= 1e-10 && worst_add <= 1e-10 && worst_mass <= 1e-10;
}

bool criterion_equilibrium_identity(std::string& detail) {
    double worst = 0.0;
    for (const Sft& sft : {gm(), full2()}) {
        WordSystem ws = build_word_system(sft);
        for (double q : {0.1, 0.5, 1.0}) {
            EquilibriumData eq = equilibrium_for(sft, ws, q);
            Word pair{ws.alpha, ws.theta[0]};
            double lhs = markov_entropy(eq.measure) +
                         q * cylinder_measure(eq.measure, pair);
            worst = std::max(worst, std::abs(lhs - eq.pressure));
        }
    }
    detail = "worst |h + q mu([alpha theta1]) - log rho| = " + fmt(worst);
    return worst <= 1e-10;
}

bool criterion_construction(std::string& detail) {
    WordSystem ws = build_word_system(gm());
    bool gm_ok = ws.alpha == 1 && ws.kappa() == 1 && ws.gamma.empty() &&
                 ws.n0 == 2 && ws.e == 3 &&
                 ws.theta == word_from_digits("00") && ws.p == 3 &&
                 ws.s == word_from_digits("000") &&
                 ws.t == word_from_digits("100") &&
                 ws.xi == word_from_digits("10000001000") &&
                 ws.eta == word_from_digits("10001001000") && ws.M == 11;
    bool gm_valid = validate_word_system(ws, gm()).all_pass();

    WordSystem wf = build_word_system(full2());
    bool full_ok = wf.xi == word_from_digits("10000100") &&
                   wf.eta == word_from_digits("10010100") && wf.M == 8;
    bool full_valid = validate_word_system(wf, full2()).all_pass();
    detail = std::string("gm ") + (gm_ok && gm_valid ? "exact" : "mismatch") +
             ", full2 " + (full_ok && full_valid ? "exact" : "mismatch");
    return gm_ok && gm_valid && full_ok && full_valid;
}

bool criterion_gap_ratio(std::string& detail) {
    bool ok = true;
    double worst_ratio = 0.0;
    for (const Sft& sft : {gm(), full2()}) {
        WordSystem ws = build_word_system(sft);
        PotentialFamily pf(sft, ws);
        const SpectralData& spec = pf.adjacency_spectral();
        double m_xi = parry_cylinder_closed_form(sft, spec, ws.xi);
        double m_eta = parry_cylinder_closed_form(sft, spec, ws.eta);
        ok = ok && m_xi == m_eta;  // exact: same inputs to the closed form
        double prod_gap = std::abs(cylinder_measure(pf.parry(), ws.xi) -
                                   cylinder_measure(pf.parry(), ws.eta));
        ok = ok && prod_gap <= 1e-12;

        Word pair{ws.alpha, ws.theta[0]};
        long c_xi = static_cast<long>(find_occurrences(ws.xi, pair).size());
        long c_eta = static_cast<long>(find_occurrences(ws.eta, pair).size());
        ok = ok && (c_eta - c_xi == 1);
        for (double q : {0.1, 0.5, 1.0}) {
            auto [mxi, meta] = pf.xi_eta_measures(q);
            ok = ok && mxi < meta;
            double expected = std::exp(q * static_cast<double>(c_eta - c_xi));
            worst_ratio = std::max(
                worst_ratio, std::abs(meta / mxi - expected) / expected);
        }
    }
    detail = "worst relative ratio gap " + fmt(worst_ratio);
    return ok && worst_ratio <= 1e-10;
}

bool criterion_entropy_limit(std::string& detail) {
    PotentialFamily pf(gm(), build_word_system(gm()));
    double log_lambda = std::log(pf.adjacency_spectral().lambda);
    double g1 = std::abs(markov_entropy(pf.mu_q(0.1)->measure) - log_lambda);
    double g2 = std::abs(markov_entropy(pf.mu_q(0.01)->measure) - log_lambda);
    double g3 = std::abs(markov_entropy(pf.mu_q(0.001)->measure) - log_lambda);
    detail = "gaps " + fmt(g1) + " > " + fmt(g2) + " > " + fmt(g3);
    return g1 > g2 && g2 > g3 && g3 <= 1e-3;
}

bool criterion_map_properties(std::string& detail) {
    Sft sft = gm();
    WordSystem ws = build_word_system(sft);
    SubstitutionMap map = SubstitutionMap::from_word_system(ws);
    MarkovMeasure parry =
        parry_measure(sft, dominant_eigendata(adjacency_matrix(sft)));
    const std::size_t len = 10000;
    const std::size_t M = static_cast<std::size_t>(map.M());

    // involution, exact, 1e4 prefixes of length 1e4
    for (int trial = 0; trial < 10000; ++trial) {
        Word x = sample_path(parry, len, sub_seed(seed_at(0), trial));
        if (map.apply_L(map.apply_L(x)) != x) {
            detail = "involution failed at trial " + std::to_string(trial);
            return false;
        }
    }

    // Lipschitz separation bound, exact, 1e4 pairs
    for (int trial = 0; trial < 10000; ++trial) {
        Word x = sample_path(parry, len, sub_seed(seed_at(1), 2 * trial));
        std::size_t cut = 1 + (sub_seed(seed_at(1), 2 * trial + 1) % (len - 2));
        Word y(x.begin(), x.begin() + cut);
        Word tail = sample_path(parry, len, sub_seed(seed_at(2), trial));
        for (std::size_t i = cut; i < len; ++i) {
            Symbol cand = tail[i];
            if (!sft.edge(y.back(), cand)) cand = 0;
            y.push_back(cand);
        }
        auto sep = separation_index(x, y);
        if (!sep) continue;
        auto sep_l = separation_index(map.apply_L(x), map.apply_L(y));
        std::size_t lower = *sep >= M ? *sep - M : 0;
        if (!sep_l || *sep_l < lower) {
            detail = "lipschitz bound failed at trial " + std::to_string(trial);
            return false;
        }
    }

    // frozen fidelity and deep-swap agreement, exact, 16 seeds
    for (int s = 0; s < kSeedCount; ++s) {
        Word x = sample_path(parry, 45000, seed_at(3 + s));
        Word lx = map.apply_L(x);
        Word ix = map.apply_involution(x);
        for (int k = 1; 2 * k + 1 <= 7; ++k)
            for (std::int64_t i = kFactorials[2 * k] - 1;
                 i <= kFactorials[2 * k + 1]; ++i)
                if (lx[static_cast<std::size_t>(i)] !=
                    x[static_cast<std::size_t>(i)]) {
                    detail = "frozen fidelity failed at seed " +
                             std::to_string(s);
                    return false;
                }
        for (int k = 2; k <= 4; ++k) {
            std::int64_t lo = kFactorials[2 * k - 1] + map.M();
            std::int64_t hi = std::min<std::int64_t>(
                kFactorials[2 * k] - 1 - 2 * map.M(),
                static_cast<std::int64_t>(x.size()) - 1);
            for (std::int64_t i = lo; i <= hi; ++i)
                if (lx[static_cast<std::size_t>(i)] !=
                    ix[static_cast<std::size_t>(i)]) {
                    detail = "deep-swap agreement failed at seed " +
                             std::to_string(s);
                    return false;
                }
        }
    }
    detail = "involution 1e4x1e4, lipschitz 1e4 pairs, zones on 16 seeds";
    return true;
}

bool criterion_oscillation(std::string& detail) {
    PotentialFamily pf(gm(), build_word_system(gm()));
    auto [mu_xi, mu_eta] = pf.xi_eta_measures(1.0);
    const double gap = mu_eta - mu_xi;

    std::vector<double> dev9, dev10, dev11;
    int ordered = 0;
    for (int s = 0; s < kSeedCount; ++s) {
        OscillationReport rep = oscillation_report(pf, 1.0, seed_at(s), 9, 11);
        double a9 = rep.rows[0].avg_phi_L;
        double a10 = rep.rows[1].avg_phi_L;
        double a11 = rep.rows[2].avg_phi_L;
        dev9.push_back(std::abs(a9 - mu_xi));
        dev10.push_back(std::abs(a10 - mu_eta));
        dev11.push_back(std::abs(a11 - mu_xi));
        if (a10 > a9 && a10 > a11) ++ordered;
    }
    double m9 = median(dev9), m10 = median(dev10), m11 = median(dev11);
    detail = "median devs / 0.3 gap: " + fmt(m9 / (0.3 * gap)) + ", " +
             fmt(m10 / (0.3 * gap)) + ", " + fmt(m11 / (0.3 * gap)) +
             "; ordered " + std::to_string(ordered) + "/16";
    return m9 <= 0.3 * gap && m10 <= 0.3 * gap && m11 <= 0.3 * gap &&
           ordered >= 13;
}

bool criterion_slln(std::string& detail) {
    PotentialFamily pf(gm(), build_word_system(gm()));
    double h = markov_entropy(pf.mu_q(0.5)->measure);
    std::vector<double> devs;
    for (int s = 0; s < kSeedCount; ++s) {
        SllnReport rep = slln_estimate(pf, 0.5, seed_at(s), 2, {kFactorials[10]});
        devs.push_back(std::abs(rep.rows[0].estimate - h));
    }
    double med = median(devs);

    // exact fixture: the all-zero word is fixed by L
    MarkovMeasure parry = pf.parry();
    Word zeros(100002, 0);
    SllnReport fix = slln_rows(parry, zeros, 0, {100000});
    double expect =
        -(std::log(parry.p[0]) + 99999.0 * std::log(parry.P[0][0])) / 100000.0;
    double fixture_gap = std::abs(fix.rows[0].estimate - expect);
    detail = "median dev " + fmt(med) + " vs 0.05 h = " + fmt(0.05 * h) +
             ", fixture gap " + fmt(fixture_gap);
    return med <= 0.05 * h && fixture_gap <= 1e-12;
}

bool criterion_split_sums(std::string& detail) {
    PotentialFamily pf(gm(), build_word_system(gm()));
    SubstitutionMap map = SubstitutionMap::from_word_system(pf.word_system());
    auto eq = pf.mu_q(0.5);
    double h = markov_entropy(eq->measure);
    const std::int64_t n = kFactorials[10];
    std::vector<double> dev1, dev2;
    for (int s = 0; s < kSeedCount; ++s) {
        Word x = sample_path(eq->measure,
                             static_cast<std::size_t>(n) + 1 +
                                 static_cast<std::size_t>(map.M()),
                             seed_at(s));
        Word y = map.apply_L(x);
        SplitSums sums = split_zone_averages(y, eq->Phi, n);
        if (sums.s1_size + sums.s2_size != n) {
            detail = "size identity failed";
            return false;
        }
        dev1.push_back(std::abs(sums.s1_average - h));
        dev2.push_back(std::abs(sums.s2_average - h));
    }
    double m1 = median(dev1), m2 = median(dev2);
    detail = "median devs " + fmt(m1) + ", " + fmt(m2) +
             " vs 0.05 h = " + fmt(0.05 * h);
    return m1 <= 0.05 * h && m2 <= 0.05 * h;
}

bool criterion_pointwise_dimension(std::string& detail) {
    Sft sft = gm();
    MarkovMeasure parry =
        parry_measure(sft, dominant_eigendata(adjacency_matrix(sft)));
    double log_lambda = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    std::vector<double> devs;
    for (int s = 0; s < kSeedCount; ++s) {
        Word x = sample_path(parry, 100000, seed_at(s));
        devs.push_back(
            std::abs(pointwise_dimension(parry, x, 100000) - log_lambda));
    }
    double med = median(devs);
    detail = "median |dim - log lambda| = " + fmt(med);
    return med <= 0.02;
}

bool criterion_shift_defect(std::string& detail) {
    PotentialFamily pf(gm(), build_word_system(gm()));
    SubstitutionMap map = SubstitutionMap::from_word_system(pf.word_system());
    auto eq = pf.mu_q(1.0);
    std::int64_t worst = 0;
    for (int s = 0; s < kSeedCount; ++s) {
        Word x = sample_path(eq->measure,
                             1000000 + static_cast<std::size_t>(map.M()) + 1,
                             seed_at(s));
        auto rows = shift_defect(map, x, {10000, 100000, 1000000});
        for (const auto& row : rows) {
            worst = std::max(worst, row.defect - row.bound);
            if (row.violation) {
                detail = "defect " + std::to_string(row.defect) +
                         " exceeds bound " + std::to_string(row.bound) +
                         " at n = " + std::to_string(row.n) + ", seed " +
                         std::to_string(s);
                return false;
            }
            if (row.n == 1000000 && row.bound != 10) {
                detail = "m(1e6) != 9";
                return false;
            }
        }
    }
    detail = "defect <= m(n) + 1 at all checkpoints on 16 seeds";
    return true;
}

bool criterion_family(std::string& detail) {
    PotentialFamily pf(gm(), build_word_system(gm()));
    const double tol = 1e-10;
    std::vector<ParameterFamily> fams = independent_family(pf, 5, 8, tol);

    int eps_count = 0;
    double worst_solve = 0.0;
    for (const auto& fam : fams) {
        eps_count += static_cast<int>(fam.epsilons.size());
        for (std::size_t k = 0; k < fam.qs.size(); ++k) {
            auto [f, g] = pf.gap_functions(fam.qs[k]);
            double gap = pf.branch() == GapBranch::Xi ? f : g;
            worst_solve =
                std::max(worst_solve, std::abs(gap - fam.epsilons[k]));
        }
    }
    DisjointnessReport disjoint = disjointness_check(fams);

    bool support_ok = true;
    for (const auto& fam : fams)
        for (double q : fam.qs) {
            auto eq = pf.mu_q(q);
            for (std::size_t n = 1; n <= 6 && support_ok; ++n)
                for (const Word& w : enumerate_words(pf.sft(), n))
                    if (!(cylinder_measure(eq->measure, w) > 0.0))
                        support_ok = false;
        }

    detail = std::to_string(eps_count) + " epsilons, worst |f(q) - eps| = " +
             fmt(worst_solve) + ", collisions " +
             std::to_string(disjoint.collisions.size()) + ", support " +
             (support_ok ? "positive" : "violated");
    return eps_count == 40 && worst_solve <= tol && disjoint.disjoint() &&
           support_ok;
}

}  // namespace

int main() {
    std::printf("acceptance suite: master seed %llu, %d seeds per criterion\n",
                static_cast<unsigned long long>(kMasterSeed), kSeedCount);
    run(1, "spectral exactness", criterion_spectral);
    run(2, "measure-formula consistency", criterion_measure_consistency);
    run(3, "equilibrium identity", criterion_equilibrium_identity);
    run(4, "construction exactness", criterion_construction);
    run(5, "gap and ratio laws", criterion_gap_ratio);
    run(6, "entropy limit", criterion_entropy_limit);
    run(7, "map L properties", criterion_map_properties);
    run(8, "oscillation at factorial checkpoints", criterion_oscillation);
    run(9, "slln estimate", criterion_slln);
    run(10, "split sums", criterion_split_sums);
    run(11, "pointwise dimension", criterion_pointwise_dimension);
    run(12, "shift defect", criterion_shift_defect);
    run(13, "family generation", criterion_family);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
