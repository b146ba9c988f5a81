#include "sftirr/construction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sftirr/rng.hpp"
#include "sftirr/substitution.hpp"

namespace sftirr {

namespace {

Word repeat(const Word& block, int times) {
    Word out;
    out.reserve(block.size() * static_cast<std::size_t>(times));
    for (int i = 0; i < times; ++i)
        out.insert(out.end(), block.begin(), block.end());
    return out;
}

Word concat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

bool contains_symbol(const Word& w, Symbol s) {
    return std::find(w.begin(), w.end(), s) != w.end();
}

// no non-empty proper prefix of w equals a suffix of w
bool prefix_suffix_disjoint(const Word& w) {
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (std::equal(w.begin(), w.begin() + len, w.end() - len)) return false;
    }
    return true;
}

struct Candidate {
    Word beta;  // rotation in use
    Symbol alpha;
};

// Rotations of every minimal cycle, in deterministic order, each paired
// with the smallest symbol alpha outside the cycle with an edge
// alpha -> beta_1.
std::vector<Candidate> alpha_candidates(const Sft& sft) {
    std::vector<Candidate> out;
    for (const Word& cyc : minimal_cycles(sft)) {
        for (std::size_t r = 0; r < cyc.size(); ++r) {
            Word rot(cyc.begin() + r, cyc.end());
            rot.insert(rot.end(), cyc.begin(), cyc.begin() + r);
            for (Symbol a = 0; a < sft.d; ++a) {
                if (contains_symbol(cyc, a)) continue;
                if (sft.edge(a, rot[0])) {
                    out.push_back(Candidate{rot, a});
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

WordSystem build_word_system(const Sft& sft) {
    if (!check_aperiodic(sft))
        throw Error("NotMixing", "adjacency matrix is not aperiodic");

    std::vector<Candidate> candidates = alpha_candidates(sft);
    if (candidates.empty())
        throw Error("ConstructionFailed",
                    "no symbol outside a minimal cycle has an edge into it; "
                    "tried every rotation of every minimal cycle");

    std::string last_failure;
    for (const Candidate& cand : candidates) {
        WordSystem ws;
        ws.beta = cand.beta;
        ws.alpha = cand.alpha;
        const int kappa = static_cast<int>(ws.beta.size());

        ws.gamma = shortest_path(sft, ws.beta.back(), ws.alpha);
        ws.n0 = return_threshold(sft, ws.alpha);
        ws.e = ws.n0 / kappa + 1;  // minimal e with kappa*e > n0
        ws.n = kappa * ws.e;
        ws.theta = path_of_length(sft, ws.alpha, ws.alpha,
                                  static_cast<std::size_t>(ws.n));

        const std::size_t st_len = ws.beta.size() * ws.e + ws.gamma.size();
        ws.s = repeat(ws.beta, ws.e);
        ws.s.insert(ws.s.end(), ws.gamma.begin(), ws.gamma.end());
        ws.t = ws.gamma;
        ws.t.push_back(ws.alpha);
        ws.t.insert(ws.t.end(), ws.theta.begin(), ws.theta.end());

        // minimal p with kappa*p + 1 > |s|, bumped when the prefix/suffix
        // overlap check fails
        int p = static_cast<int>((st_len + ws.beta.size() - 1) /
                                 ws.beta.size());
        for (int attempts = 0; attempts < 64; ++attempts, ++p) {
            ws.p = p;
            ws.w = Word{ws.alpha};
            Word reps = repeat(ws.beta, p);
            ws.w.insert(ws.w.end(), reps.begin(), reps.end());
            if (ws.w.size() <= st_len) continue;
            if (!prefix_suffix_disjoint(ws.w)) continue;
            ws.xi = concat({&ws.w, &ws.s, &ws.w});
            ws.eta = concat({&ws.w, &ws.t, &ws.w});
            ws.M = ws.xi.size();
            ValidationReport report = validate_word_system(ws, sft);
            if (report.all_pass()) return ws;
            for (const auto& item : report.items)
                if (!item.pass) last_failure = item.name + ": " + item.detail;
        }
    }
    throw Error("ConstructionFailed",
                "no candidate produced a valid word system" +
                    (last_failure.empty() ? std::string()
                                          : "; last failure " + last_failure));
}

namespace {

void check(ValidationReport& report, const std::string& name, bool pass,
           const std::string& detail) {
    report.items.push_back(ValidationItem{name, pass, detail});
}

std::string overlap_detail(const Word& a, const Word& b, std::size_t shift) {
    std::ostringstream os;
    os << "occurrence pair at shift " << shift << " of " << word_to_digits(a)
       << " / " << word_to_digits(b);
    return os.str();
}

}  // namespace

ValidationReport validate_word_system(const WordSystem& ws, const Sft& sft) {
    ValidationReport report;
    const std::size_t kappa = ws.beta.size();

    check(report, "lengths",
          ws.s.size() == ws.t.size() &&
              ws.s.size() == kappa * static_cast<std::size_t>(ws.e) +
                                 ws.gamma.size() &&
              ws.w.size() == kappa * static_cast<std::size_t>(ws.p) + 1 &&
              ws.w.size() > ws.s.size() &&
              ws.M == 2 * ws.w.size() + ws.s.size() && ws.xi.size() == ws.M &&
              ws.eta.size() == ws.M,
          "|s| = |t| = kappa e + l, |w| = kappa p + 1 > |s|, M = 2|w| + |s|");

    check(report, "return_length", ws.n == static_cast<int>(kappa) * ws.e &&
                                       ws.n > ws.n0,
          "n = kappa e > n0");

    bool structure = ws.w.size() == 1 + kappa * static_cast<std::size_t>(ws.p);
    if (structure) {
        structure = ws.w[0] == ws.alpha;
        for (std::size_t i = 0; structure && i + 1 < ws.w.size(); ++i)
            structure = ws.w[i + 1] == ws.beta[i % kappa];
    }
    check(report, "w_structure", structure, "w = alpha beta^p");

    Word s_expect;
    for (int i = 0; i < ws.e; ++i)
        s_expect.insert(s_expect.end(), ws.beta.begin(), ws.beta.end());
    s_expect.insert(s_expect.end(), ws.gamma.begin(), ws.gamma.end());
    Word t_expect = ws.gamma;
    t_expect.push_back(ws.alpha);
    t_expect.insert(t_expect.end(), ws.theta.begin(), ws.theta.end());
    check(report, "s_t_structure", ws.s == s_expect && ws.t == t_expect,
          "s = beta^e gamma, t = gamma alpha theta");

    bool xi_ok = false, eta_ok = false, adm_ok = false;
    try {
        xi_ok = admissible(sft, ws.xi);
        eta_ok = admissible(sft, ws.eta);
        adm_ok = true;
    } catch (const Error&) {
    }
    check(report, "admissible", adm_ok && xi_ok && eta_ok,
          "xi and eta are admissible");
    check(report, "distinct", ws.xi != ws.eta, "xi != eta");

    auto starts_ends_with_w = [&](const Word& x) {
        return x.size() >= 2 * ws.w.size() &&
               std::equal(ws.w.begin(), ws.w.end(), x.begin()) &&
               std::equal(ws.w.begin(), ws.w.end(), x.end() - ws.w.size());
    };
    check(report, "w_blocks", starts_ends_with_w(ws.xi) &&
                                  starts_ends_with_w(ws.eta),
          "xi and eta start and end with w");

    check(report, "s_avoids_alpha", !contains_symbol(ws.s, ws.alpha),
          "s contains no alpha");

    bool t_has_pair = false;
    for (std::size_t i = 0; i + 1 < ws.t.size(); ++i)
        if (ws.t[i] == ws.alpha && !ws.theta.empty() &&
            ws.t[i + 1] == ws.theta[0]) {
            t_has_pair = true;
            break;
        }
    check(report, "t_has_alpha_theta1", t_has_pair,
          "t contains the 2-word alpha theta_1");

    check(report, "w_prefix_suffix", prefix_suffix_disjoint(ws.w),
          "no non-empty proper prefix of w equals a suffix of w");

    // Overlap property, exhaustive over shifted self/cross overlaps: a
    // suffix of one word that is a prefix of the other at shift delta <
    // |w| + |s| would let occurrences share more than w blocks.
    const std::size_t min_shift = ws.w.size() + ws.s.size();
    bool overlap_ok = true;
    std::string overlap_msg = "occurrence starts differ by >= |w| + |s|";
    const Word* words[2] = {&ws.xi, &ws.eta};
    for (const Word* first : words)
        for (const Word* second : words)
            for (std::size_t shift = 1; shift < ws.M && overlap_ok; ++shift) {
                if (std::equal(first->begin() + shift, first->end(),
                               second->begin())) {
                    if (shift < min_shift) {
                        overlap_ok = false;
                        overlap_msg = overlap_detail(*first, *second, shift);
                    }
                }
            }
    check(report, "overlap_exhaustive", overlap_ok, overlap_msg);

    // Randomized spot-check: occurrences in sampled admissible words of
    // length 3M obey the same spacing.
    bool sampled_ok = true;
    std::string sampled_msg = "sampled occurrence spacing >= |w| + |s|";
    if (adm_ok && xi_ok && eta_ok && check_aperiodic(sft)) {
        SpectralData spec = dominant_eigendata(adjacency_matrix(sft));
        MarkovMeasure parry = parry_measure(sft, spec);
        for (std::uint64_t trial = 0; trial < 64 && sampled_ok; ++trial) {
            Word x = sample_path(parry, 3 * ws.M, std::uint64_t{0x5f7a} + trial);
            std::vector<std::size_t> occ = find_occurrences(x, ws.xi);
            std::vector<std::size_t> occ_eta = find_occurrences(x, ws.eta);
            occ.insert(occ.end(), occ_eta.begin(), occ_eta.end());
            std::sort(occ.begin(), occ.end());
            for (std::size_t i = 0; i + 1 < occ.size(); ++i)
                if (occ[i + 1] - occ[i] < min_shift) {
                    sampled_ok = false;
                    sampled_msg = "occurrences at " + std::to_string(occ[i]) +
                                  " and " + std::to_string(occ[i + 1]);
                }
        }
    }
    check(report, "overlap_sampled", sampled_ok, sampled_msg);

    return report;
}

PotentialFamily::PotentialFamily(Sft sft, WordSystem ws, double tol)
    : sft_(std::move(sft)), ws_(std::move(ws)), tol_(tol) {
    if (ws_.theta.empty())
        throw Error("ConstructionFailed", "word system has empty theta");
    parry_spec_ = dominant_eigendata(adjacency_matrix(sft_), tol_);
    parry_ = parry_measure(sft_, parry_spec_);
    m_xi_ = parry_cylinder_closed_form(sft_, parry_spec_, ws_.xi);
}

std::shared_ptr<const EquilibriumData> PotentialFamily::mu_q(double q) const {
    if (q < 0.0) throw Error("InvalidEntry", "q must be >= 0");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(q);
        if (it != cache_.end()) return it->second;
    }
    TwoBlockPotential phi(sft_);
    phi.set(ws_.alpha, ws_.theta[0], q);
    auto data =
        std::make_shared<const EquilibriumData>(equilibrium_state(sft_, phi, tol_));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(q, std::move(data));
    return it->second;
}

std::pair<double, double> PotentialFamily::xi_eta_measures(double q) const {
    if (q <= 0.0) throw Error("InvalidEntry", "q must be > 0");
    auto eq = mu_q(q);
    double mxi = equilibrium_cylinder_measure(*eq, ws_.xi);
    double meta = equilibrium_cylinder_measure(*eq, ws_.eta);
    if (!(mxi < meta))
        throw Error("GapViolation",
                    "mu_q([xi]) = " + std::to_string(mxi) +
                        " is not below mu_q([eta]) = " + std::to_string(meta));
    return {mxi, meta};
}

std::pair<double, double> PotentialFamily::gap_functions(double q) const {
    if (q < 0.0 || q > 1.0)
        throw Error("InvalidEntry", "q must lie in [0,1]");
    if (q == 0.0) return {0.0, 0.0};
    auto [mxi, meta] = xi_eta_measures(q);
    return {std::abs(mxi - m_xi_), std::abs(meta - m_xi_)};
}

double PotentialFamily::branch_gap(double q) const {
    auto [f, g] = gap_functions(q);
    return branch_ == GapBranch::Xi ? f : g;
}

void PotentialFamily::ensure_grid() const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (grid_ready_) return;
    }
    constexpr int kGridPoints = 256;
    constexpr double kQMin = 1e-6;
    std::vector<double> qs(kGridPoints), fs(kGridPoints), gs(kGridPoints);
    const double step = std::log(1.0 / kQMin) / (kGridPoints - 1);
    double fmax = 0.0, gmax = 0.0;
    for (int i = 0; i < kGridPoints; ++i) {
        qs[i] = kQMin * std::exp(step * i);
        if (i == kGridPoints - 1) qs[i] = 1.0;
        auto [f, g] = gap_functions(qs[i]);
        fs[i] = f;
        gs[i] = g;
        fmax = std::max(fmax, f);
        gmax = std::max(gmax, g);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    if (grid_ready_) return;
    // f and g cannot both vanish on (0,1]: that would force
    // mu_q([xi]) = mu_q([eta]); fall back to g when f is flat
    branch_ = fmax > 1e-14 ? GapBranch::Xi : GapBranch::Eta;
    grid_q_ = std::move(qs);
    grid_gap_ = branch_ == GapBranch::Xi ? std::move(fs) : std::move(gs);
    max_gap_ = branch_ == GapBranch::Xi ? fmax : gmax;
    grid_ready_ = true;
}

double PotentialFamily::max_gap() const {
    ensure_grid();
    return max_gap_;
}

GapBranch PotentialFamily::branch() const {
    ensure_grid();
    return branch_;
}

double PotentialFamily::solve_epsilon(double eps, double tol) const {
    if (tol <= 0.0) throw Error("InvalidEntry", "tolerance must be positive");
    ensure_grid();
    if (!(eps > 0.0) || eps > max_gap_)
        throw Error("EpsilonOutOfRange",
                    "epsilon " + std::to_string(eps) +
                        " outside (0, max gap = " + std::to_string(max_gap_) +
                        "]");

    // leftmost bracketing interval; q = 0 with gap 0 anchors the grid
    double lo = 0.0, hi = 0.0, glo = 0.0, ghi = 0.0;
    bool found = false;
    double prev_q = 0.0, prev_gap = 0.0;
    for (std::size_t i = 0; i < grid_q_.size(); ++i) {
        double cur_gap = grid_gap_[i];
        if ((prev_gap - eps) * (cur_gap - eps) <= 0.0) {
            lo = prev_q;
            hi = grid_q_[i];
            glo = prev_gap;
            ghi = cur_gap;
            found = true;
            break;
        }
        prev_q = grid_q_[i];
        prev_gap = cur_gap;
    }
    if (!found)
        throw Error("EpsilonOutOfRange", "no bracketing interval on the grid");

    if (std::abs(glo - eps) <= tol) return lo;
    if (std::abs(ghi - eps) <= tol) return hi;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        double gm = branch_gap(mid);
        if (std::abs(gm - eps) <= tol) return mid;
        if ((glo - eps) * (gm - eps) <= 0.0) {
            hi = mid;
            ghi = gm;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    throw Error("MaxIterations", "bisection stalled before reaching tolerance");
}

namespace {

constexpr long kPrimes[25] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                              29, 31, 37, 41, 43, 47, 53, 59, 61,
                              67, 71, 73, 79, 83, 89, 97};

}  // namespace

std::vector<ParameterFamily> independent_family(const PotentialFamily& pf,
                                                int count, int size,
                                                double tol) {
    if (count < 1 || count > 25)
        throw Error("InvalidEntry", "family count must lie in [1, 25]");
    if (size < 2) throw Error("InvalidEntry", "family size must be >= 2");
    const double max_gap = pf.max_gap();
    std::vector<ParameterFamily> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        ParameterFamily fam;
        fam.prime_index = i;
        fam.prime = kPrimes[i];
        fam.multiplier = 1;
        fam.a = std::sqrt(static_cast<double>(fam.prime));
        fam.tol = tol;
        long m0 = static_cast<long>(std::ceil(fam.a / max_gap));
        while (fam.a / static_cast<double>(m0) > max_gap) ++m0;
        fam.m0 = m0;
        for (int k = 0; k < size; ++k) {
            long m = m0 + k;
            double eps = fam.a / static_cast<double>(m);
            double q = pf.solve_epsilon(eps, tol);
            fam.ms.push_back(m);
            fam.epsilons.push_back(eps);
            fam.qs.push_back(q);
            fam.targets.push_back(equilibrium_cylinder_measure(
                *pf.mu_q(q), pf.word_system().xi));
        }
        out.push_back(std::move(fam));
    }
    return out;
}

DisjointnessReport disjointness_check(
    const std::vector<ParameterFamily>& families) {
    DisjointnessReport report;
    struct Entry {
        int fam;
        int member;
        long c;      // multiplier
        long prime;
        long m;
        double target;
        double tol;
    };
    std::vector<Entry> entries;
    for (std::size_t f = 0; f < families.size(); ++f)
        for (std::size_t k = 0; k < families[f].ms.size(); ++k)
            entries.push_back(Entry{static_cast<int>(f), static_cast<int>(k),
                                    families[f].multiplier, families[f].prime,
                                    families[f].ms[k],
                                    k < families[f].targets.size()
                                        ? families[f].targets[k]
                                        : 0.0,
                                    families[f].tol});

    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Entry& a = entries[i];
            const Entry& b = entries[j];
            // c_a sqrt(p_a) / m_a == c_b sqrt(p_b) / m_b  iff
            // c_a^2 p_a m_b^2 == c_b^2 p_b m_a^2 (exact in integers),
            // which for distinct square-free primes forces p_a == p_b.
            long long lhs = static_cast<long long>(a.c) * a.c * a.prime *
                            b.m * b.m;
            long long rhs = static_cast<long long>(b.c) * b.c * b.prime *
                            a.m * a.m;
            if (lhs == rhs) {
                report.collisions.push_back(Collision{
                    "epsilon", a.fam, a.member, b.fam, b.member,
                    "identical epsilon from (" + std::to_string(a.c) +
                        "*sqrt(" + std::to_string(a.prime) + ")/" +
                        std::to_string(a.m) + ")"});
            }
            double resolution = 2.0 * std::max(a.tol, b.tol);
            if (std::abs(a.target - b.target) <= resolution) {
                report.collisions.push_back(Collision{
                    "target", a.fam, a.member, b.fam, b.member,
                    "Birkhoff targets within solver resolution: |" +
                        std::to_string(a.target) + " - " +
                        std::to_string(b.target) + "| <= " +
                        std::to_string(resolution)});
            }
        }
    return report;
}

}  // namespace sftirr
