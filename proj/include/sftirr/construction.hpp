#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sftirr/measures.hpp"
#include "sftirr/sft.hpp"

namespace sftirr {

// The word machinery behind the substitution map: a symbol alpha outside
// a minimal cycle beta, connector gamma, a long return path theta, and
// the assembled words w = alpha beta^p, s = beta^e gamma,
// t = gamma alpha theta, xi = w s w, eta = w t w.
struct WordSystem {
    Symbol alpha = 0;
    Word beta;   // minimal cycle, length kappa
    Word gamma;  // interior of a shortest path beta_kappa -> alpha
    Word theta;  // interior of an alpha -> alpha path of n edges
    int n0 = 0;  // return threshold of alpha
    int e = 0;   // minimal with kappa*e > n0
    int n = 0;   // kappa*e
    int p = 0;   // minimal with |w| > |s| (bumped if the overlap check fails)
    Word w, s, t, xi, eta;
    std::size_t M = 0;  // |xi| = |eta| = 2|w| + |s|

    std::size_t kappa() const { return beta.size(); }
};

WordSystem build_word_system(const Sft& sft);

struct ValidationItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

// Checks every WordSystem invariant plus the overlap property: any two
// occurrences of xi/eta may share only their w blocks, i.e. occurrence
// starts differ by at least |w| + |s|. Itemizes failures, never throws.
ValidationReport validate_word_system(const WordSystem& ws, const Sft& sft);

// Which gap function drives the epsilon -> q solver.
enum class GapBranch { Xi, Eta };

// The one-parameter potential family q phi with phi = 1 on the pair
// (alpha, theta_1) and 0 elsewhere, its equilibrium states mu_q, and the
// gap functions f(q) = |mu_q([xi]) - m([xi])|, g(q) = |mu_q([eta]) -
// m([eta])| used to solve eps -> q.
class PotentialFamily {
public:
    PotentialFamily(Sft sft, WordSystem ws, double tol = 1e-12);

    const Sft& sft() const { return sft_; }
    const WordSystem& word_system() const { return ws_; }
    std::pair<Symbol, Symbol> potential_pair() const {
        return {ws_.alpha, ws_.theta[0]};
    }
    const SpectralData& adjacency_spectral() const { return parry_spec_; }
    const MarkovMeasure& parry() const { return parry_; }
    double parry_xi_measure() const { return m_xi_; }

    // Equilibrium state of q phi, cached per q. q = 0 is the Parry case.
    std::shared_ptr<const EquilibriumData> mu_q(double q) const;

    // (mu_q([xi]), mu_q([eta])) via the eigendata cylinder formula;
    // throws GapViolation unless the first is strictly smaller.
    std::pair<double, double> xi_eta_measures(double q) const;

    // (f(q), g(q)); both 0 at q = 0 by convention.
    std::pair<double, double> gap_functions(double q) const;

    // Max of the solver's gap function over the scan grid, and the branch
    // in use (g only when f is flat on the grid).
    double max_gap() const;
    GapBranch branch() const;

    // Leftmost q in (0,1] with |gap(q) - eps| <= tol, found by a
    // geometric-grid bracketing scan plus bisection.
    double solve_epsilon(double eps, double tol) const;

private:
    double branch_gap(double q) const;
    void ensure_grid() const;

    Sft sft_;
    WordSystem ws_;
    double tol_;
    SpectralData parry_spec_;
    MarkovMeasure parry_;
    double m_xi_ = 0.0;

    mutable std::mutex mutex_;
    mutable std::map<double, std::shared_ptr<const EquilibriumData>> cache_;
    mutable bool grid_ready_ = false;
    mutable std::vector<double> grid_q_;
    mutable std::vector<double> grid_gap_;
    mutable double max_gap_ = 0.0;
    mutable GapBranch branch_ = GapBranch::Xi;
};

// One epsilon-sequence eps_k = multiplier * sqrt(prime) / m, m >= m0,
// together with the solved parameters q_k. Keeping (multiplier, prime, m)
// makes the pairwise-distinctness check exact.
struct ParameterFamily {
    int prime_index = 0;  // 0-based index into the prime list
    long prime = 0;
    long multiplier = 1;  // generator a = multiplier * sqrt(prime)
    double a = 0.0;
    long m0 = 0;
    std::vector<long> ms;
    std::vector<double> epsilons;
    std::vector<double> qs;
    std::vector<double> targets;  // mu_{q_k}([xi])
    double tol = 0.0;
};

// Families generated by sqrt of the first `count` primes (pairwise
// rationally independent), each with `size` members.
std::vector<ParameterFamily> independent_family(const PotentialFamily& pf,
                                                int count, int size,
                                                double tol);

struct Collision {
    std::string kind;  // "epsilon" or "target"
    int family_a = 0, member_a = 0;
    int family_b = 0, member_b = 0;
    std::string detail;
};

struct DisjointnessReport {
    std::vector<Collision> collisions;
    bool disjoint() const { return collisions.empty(); }
};

// Pairwise distinctness of all epsilon values (exact, on the symbolic
// (multiplier, prime, m) triples) and of all solved targets mu_q([xi])
// (beyond 2x the solver tolerance).
DisjointnessReport disjointness_check(
    const std::vector<ParameterFamily>& families);

}  // namespace sftirr
