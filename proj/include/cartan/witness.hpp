#pragma once

#include <optional>
#include <utility>

#include "cartan/algebra.hpp"
#include "cartan/groupoid.hpp"

namespace cartan {

struct WitnessCertificate {
  double normaliser_residual;
  ArrowSet support;
  bool support_is_bisection;
};

/// A certified normaliser of the unit algebra whose support is not a
/// bisection, witnessing that the parent groupoid is not effective. The
/// element is supported on the order-p cyclic subgroup generated by
/// gamma^cofactor inside the isotropy group at src(gamma), and carries the
/// Gauss coefficients for that prime.
struct Witness {
  Arrow gamma;
  int order;     // N, the order of gamma
  int prime;     // p, smallest prime factor of N
  int cofactor;  // c = N / p
  ArrowSet subgroup;
  AlgebraElement element;
  WitnessCertificate certificate;
};

/// First non-unit isotropy arrow together with its order, or nullopt when
/// the groupoid is effective. Finite groupoids always yield torsion, so an
/// infinite-order case never arises here.
std::optional<std::pair<Arrow, int>> find_torsion_isotropy(const FiniteGroupoid& g);

/// (p, c) with p the smallest prime factor of N and c = N / p. Throws
/// std::invalid_argument when N <= 1.
std::pair<int, int> prime_power_step(int n);

/// The cyclic subgroup R = {gamma^{c l} : l = 0..p-1}, with the pairwise
/// distinctness of the p powers and closure under comp/inv verified.
/// Distinctness failure throws std::logic_error since it would contradict
/// the order arithmetic.
ArrowSet build_subgroup(const FiniteGroupoid& g, Arrow gamma, int c, int p);

/// Runs the full pipeline: locate torsion isotropy, split off a prime,
/// build the subgroup, transfer the Gauss normaliser onto it, and certify
/// via the convolution algebra that the result normalises the unit algebra
/// while its support is not a bisection. Returns nullopt when the groupoid
/// is effective.
std::optional<Witness> build_witness(const FiniteGroupoid& g, double tol = kSupportTol);

}  // namespace cartan
