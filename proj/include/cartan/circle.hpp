#pragma once

#include <map>

#include <Eigen/Dense>

#include "cartan/algebra.hpp"

namespace cartan {

/// A circle function sampled at the K-th roots of unity:
/// values[j] = F(exp(2*pi*i*j/K)). K must be a power of two, K >= 8.
struct CircleSample {
  int sample_count;
  Eigen::VectorXcd values;
};

/// DFT coefficients of a CircleSample with the convention
/// c_k = (1/K) sum_j values[j] exp(-2*pi*i*j*k/K), indexed over the
/// window [-K/2, K/2).
class FourierSeries {
 public:
  FourierSeries(int sample_count, Eigen::VectorXcd bins);

  int sample_count() const { return sample_count_; }
  int window_min() const { return -sample_count_ / 2; }
  int window_max() const { return sample_count_ / 2; }  // exclusive

  /// c_k for k in [window_min, window_max); throws outside the window.
  Complex coefficient(int k) const;

  /// sum_k |c_k|^2 over the whole window.
  double energy() const;

 private:
  int sample_count_;
  Eigen::VectorXcd bins_;  // bins_[j] = c_j for j in 0..K-1, wrapped mod K
};

/// Samples m(z) = (z - 2 z^2) / |z - 2 z^2| at the K-th roots of unity.
/// The zeros of the numerator lie off the circle, so no sample is
/// singular. Throws std::invalid_argument unless K is a power of two >= 8.
CircleSample sample_m(int sample_count);

/// Evaluates an arbitrary sampled function's DFT.
FourierSeries dft(const CircleSample& sample);

/// max_j ||values[j]| - 1| < tol.
bool is_unimodular(const CircleSample& sample, double tol);

/// True iff at least two coefficients exceed tol in magnitude. Subsets of
/// the integer group are bisections exactly when they have at most one
/// element, so two large coefficients defeat the local bisection property.
bool cstar_lbh_violation(const FourierSeries& series, double tol);

/// A finitely supported function on the integers, i.e. a Laurent
/// polynomial under convolution.
struct LaurentElement {
  std::map<int, Complex> coeffs;

  Complex at(int k) const;
};

LaurentElement laurent_convolve(const LaurentElement& a, const LaurentElement& b);
LaurentElement laurent_star(const LaurentElement& a);

struct LaurentVerdict {
  bool is_normaliser;  // f f^* has no off-zero coefficient above tol
  bool is_monomial;    // support is a single index
};

/// Checks the algebraic normaliser condition f f^* in C delta_0 for a
/// Laurent element, together with whether f is a monomial. The zero
/// element is a normaliser but not a monomial.
LaurentVerdict laurent_normaliser_check(const LaurentElement& f, double tol);

/// Exhaustively sweeps integer-coefficient Laurent elements with support
/// in [-max_index, max_index] and coefficients in {-max_coeff..max_coeff},
/// confirming that the normalisers among them are exactly the monomials
/// and zero. Returns false on the first counterexample.
bool laurent_bounded_sweep(int max_index, int max_coeff, double tol);

}  // namespace cartan
