#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sftirr/sft.hpp"
#include "sftirr/spectral.hpp"

namespace sftirr {

// The 0/1 adjacency matrix as a dense real matrix, ready for eigendata.
Matrix adjacency_matrix(const Sft& sft);

// Shift-invariant Markov measure: stochastic matrix P compatible with the
// adjacency matrix (P(i,j) > 0 only where A(i,j) = 1) plus its stationary
// probability vector.
struct MarkovMeasure {
    Sft sft;
    Matrix P;
    std::vector<double> p;
};

// Unique probability vector with p^T P = p, found by iterating the
// transpose. P must be stochastic with primitive support.
std::vector<double> stationary_vector(const Matrix& P, double tol = 1e-12);

// Builds a MarkovMeasure after validating stochasticity and compatibility.
MarkovMeasure make_markov_measure(const Sft& sft, Matrix P,
                                  double tol = 1e-12);

// Same, with a caller-supplied stationary vector (checked, not computed);
// admits chains whose support is not primitive, e.g. deterministic ones.
MarkovMeasure make_markov_measure(const Sft& sft, Matrix P,
                                  std::vector<double> p, double tol = 1e-12);

// p(w_0) * prod P(w_i, w_{i+1}); 0 for non-admissible words. Words longer
// than 64 symbols are evaluated in log space to dodge underflow of the
// running product.
double cylinder_measure(const MarkovMeasure& mu, std::span<const Symbol> w);

// Natural log of the cylinder measure; -infinity when the measure is 0.
double log_cylinder_measure(const MarkovMeasure& mu,
                            std::span<const Symbol> w);

// sum_i p(i) sum_j -P(i,j) log P(i,j), with 0 log 0 = 0.
double markov_entropy(const MarkovMeasure& mu);

// Measure of maximal entropy: P(i,j) = A(i,j) v(j) / (lambda v(i)),
// p(i) = u(i) v(i), from the PFT eigendata of the adjacency matrix.
MarkovMeasure parry_measure(const Sft& sft, const SpectralData& spec);

// u(w_first) v(w_last) / lambda^{|w|-1}; requires w admissible.
double parry_cylinder_closed_form(const Sft& sft, const SpectralData& spec,
                                  std::span<const Symbol> w);

// Potential depending on the first two symbols, defined exactly on
// admissible 2-words.
class TwoBlockPotential {
public:
    explicit TwoBlockPotential(const Sft& sft);  // zero on every admissible pair

    void set(Symbol a, Symbol b, double value);  // NotAdmissible off-support
    double value(Symbol a, Symbol b) const;      // NotAdmissible off-support
    bool defined(Symbol a, Symbol b) const;
    std::size_t alphabet_size() const { return d_; }

private:
    std::size_t d_;
    std::vector<std::uint8_t> support_;
    std::vector<double> values_;
};

// Equilibrium state of a 2-block potential: the Markov measure built from
// D(a,b) = e^{phi(a,b)} on admissible pairs via its dominant eigendata.
struct EquilibriumData {
    TwoBlockPotential potential;
    Matrix D;
    SpectralData spectral;  // rho, u_phi, v_phi
    Matrix Phi;             // stochastic matrix of the measure
    MarkovMeasure measure;
    double pressure = 0.0;  // log rho
};

EquilibriumData equilibrium_state(const Sft& sft,
                                  const TwoBlockPotential& phi,
                                  double tol = 1e-12);

// rho^{-(n-1)} u(i_0) (prod_j D(i_j, i_{j+1})) v(i_{n-1}); for length-1
// words this is u(i) v(i). Requires w admissible.
double equilibrium_cylinder_measure(const EquilibriumData& eq,
                                    std::span<const Symbol> w);
double log_equilibrium_cylinder_measure(const EquilibriumData& eq,
                                        std::span<const Symbol> w);

// Seeded sample: initial symbol from p, transitions from the rows of P.
// One SplitMix64 output per symbol, inverse CDF in increasing symbol
// order; bit-reproducible for fixed (mu, n, seed).
Word sample_path(const MarkovMeasure& mu, std::size_t n, std::uint64_t seed);

}  // namespace sftirr
