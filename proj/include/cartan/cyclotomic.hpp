#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "cartan/algebra.hpp"
#include "cartan/groupoid.hpp"

namespace cartan {

bool is_prime(int p);

/// zeta_order^exponent for zeta_order = exp(2*pi*i/order).
struct RootOfUnity {
  int order;
  int exponent;  // reduced mod order

  RootOfUnity(int order, int exponent);
  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity conj() const;
  Complex value() const;
};

/// An element of the group algebra of Z/p with coefficients in Z[zeta],
/// stored exactly: coeff(k, e) is the integer multiplying zeta^e at the
/// point mass delta_k. No reduction modulo the minimal polynomial is
/// performed; comparisons against scalars use only the vanishing of the
/// full root sum (and i^2 = -1 in the Gaussian case).
class CyclotomicElement {
 public:
  using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

  /// group_order = p; root_order is p for odd p and 4 for p = 2, where the
  /// coefficient ring is the Gaussian integers.
  CyclotomicElement(int group_order, int root_order);

  int group_order() const { return group_order_; }
  int root_order() const { return root_order_; }

  std::int64_t coeff(int k, int exponent) const { return coeffs_(k, exponent); }
  void add(int k, int exponent, std::int64_t c) { coeffs_(k, exponent) += c; }

  bool operator==(const CyclotomicElement& other) const = default;

  /// Numeric evaluation of the coefficient at delta_k.
  Complex value(int k) const;

  /// True iff the element equals scalar * delta_0 exactly in Z[zeta].
  bool equals_scalar_delta0(std::int64_t scalar) const;

 private:
  int group_order_;
  int root_order_;
  IntMatrix coeffs_;
};

/// The canonical normaliser of the scalars in C*(Z/p): delta_0 - i delta_1
/// for p = 2, and sum_k zeta^{k^2} delta_k for odd p. Throws
/// std::invalid_argument when p is not prime.
CyclotomicElement gauss_normaliser(int p);

/// Group-algebra convolution over Z/p with exact coefficient arithmetic.
CyclotomicElement cyclo_convolve(const CyclotomicElement& a, const CyclotomicElement& b);

/// Involution: conjugate coefficients, invert group elements.
CyclotomicElement cyclo_star(const CyclotomicElement& a);

/// Checks n n^* = n^* n = p delta_0 exactly for the Gauss normaliser.
bool verify_gauss_identity(int p);

/// For odd prime p and k in 1..p-1, checks that {k(2l - k) mod p : l} has p
/// distinct values, i.e. the cross terms sweep all p-th roots of unity.
bool quadratic_permutation_check(int p, int k);

/// Transfers exact coefficients onto a one-unit groupoid whose arrows form
/// the cyclic group of the element's order; group element k maps to the
/// k-th power of the first non-unit arrow. Throws std::invalid_argument
/// when the groupoid does not have that shape.
AlgebraElement to_algebra_element(const CyclotomicElement& c, const FiniteGroupoid& g);

/// Human-readable coefficient list, Gaussian-reduced for p = 2.
std::string to_string(const CyclotomicElement& c);

}  // namespace cartan
