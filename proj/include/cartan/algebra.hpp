#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "cartan/groupoid.hpp"

namespace cartan {

using Complex = std::complex<double>;

/// Default threshold below which a coefficient counts as zero when
/// computing supports and normaliser residuals.
inline constexpr double kSupportTol = 1e-10;

/// A finitely supported complex function on the arrows of a groupoid,
/// i.e. an element of the convolution *-algebra. Coefficients are stored
/// densely, one per arrow; the parent groupoid must outlive the element.
class AlgebraElement {
 public:
  explicit AlgebraElement(const FiniteGroupoid& parent)
      : parent_(&parent), coeffs_(Eigen::VectorXcd::Zero(parent.num_arrows())) {}
  AlgebraElement(const FiniteGroupoid& parent, Eigen::VectorXcd coeffs);

  /// The point mass delta_gamma.
  static AlgebraElement point_mass(const FiniteGroupoid& parent, Arrow gamma);
  /// The indicator function delta_B of an arrow set B.
  static AlgebraElement indicator(const ArrowSet& set);

  const FiniteGroupoid& parent() const { return *parent_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

  Complex operator[](Arrow a) const { return coeffs_(a); }
  Complex& operator[](Arrow a) { return coeffs_(a); }

  bool is_zero(double tol = 0.0) const;

  friend AlgebraElement operator+(const AlgebraElement& f, const AlgebraElement& g);
  friend AlgebraElement operator-(const AlgebraElement& f, const AlgebraElement& g);
  friend AlgebraElement operator*(Complex z, const AlgebraElement& f);

 private:
  const FiniteGroupoid* parent_;
  Eigen::VectorXcd coeffs_;
};

/// A normalised 2-cocycle with values in the unit circle, defined on the
/// composable pairs of a groupoid. Pairs without an explicit entry have
/// phase 1, so Cocycle::trivial is the untwisted case.
class Cocycle {
 public:
  explicit Cocycle(const FiniteGroupoid& parent) : parent_(&parent) {}

  static Cocycle trivial(const FiniteGroupoid& parent) { return Cocycle(parent); }

  const FiniteGroupoid& parent() const { return *parent_; }

  /// Value on a composable pair. Throws std::invalid_argument when the
  /// pair is not composable.
  Complex operator()(Arrow a, Arrow b) const;

  void set(Arrow a, Arrow b, Complex value);

  /// Checks unit modulus, the cocycle identity on all composable triples,
  /// and normalisation on pairs involving units; one message per violation.
  std::vector<std::string> validate(double tol = 1e-12) const;

 private:
  const FiniteGroupoid* parent_;
  std::unordered_map<std::uint64_t, Complex> phases_;
};

/// The coboundary cocycle of a unit-modulus potential b: sigma(a1, a2) =
/// b(a1) b(a2) / b(a1 a2). The potential must take the value 1 on units so
/// that the result is normalised.
Cocycle coboundary_cocycle(const FiniteGroupoid& g, const Eigen::VectorXcd& potential);

/// Matrix of the regular representation pi_x(f) acting on the fibre
/// G_x = {gamma : src(gamma) = x}, in the listed basis order.
struct RepMatrix {
  Arrow unit;
  std::vector<Arrow> basis;
  Eigen::MatrixXcd entries;
};

/// Convolution (f * g)(gamma) = sum over factorisations gamma = ab of
/// f(a) g(b), each term multiplied by twist(a, b) when a twist is given.
/// Throws std::invalid_argument when parents differ.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g,
                        const Cocycle* twist = nullptr);

/// Involution f^*(gamma) = conj(f(gamma^{-1})), with the extra factor
/// conj(twist(gamma, gamma^{-1})) in the twisted case.
AlgebraElement involute(const AlgebraElement& f, const Cocycle* twist = nullptr);

/// Left-convolution matrix of f on the fibre of the unit x. Throws when x
/// is not a unit.
RepMatrix regular_rep(const AlgebraElement& f, Arrow x, const Cocycle* twist = nullptr);

/// Reduced norm: the largest singular value of the regular representation,
/// maximised over units.
double reduced_norm(const AlgebraElement& f, const Cocycle* twist = nullptr);

/// Conditional expectation onto the unit space: restriction of coefficients
/// to unit arrows.
AlgebraElement expectation(const AlgebraElement& f);

/// Arrows where |f| exceeds tol.
ArrowSet support(const AlgebraElement& f, double tol = kSupportTol);

struct NormaliserVerdict {
  bool is_normaliser;
  /// Largest coefficient magnitude found outside the unit space across all
  /// products n delta_x n^* and n^* delta_x n.
  double residual;
};

/// Tests whether n normalises the unit-supported subalgebra: for every unit
/// x, both n delta_x n^* and n^* delta_x n must be supported (at tol) on
/// units.
NormaliserVerdict is_normaliser(const AlgebraElement& n, double tol = kSupportTol,
                                const Cocycle* twist = nullptr);

/// Dimension of the commutant of the unit point masses, computed by
/// assembling the commutation equations as one linear system and taking
/// the nullity.
int commutant_dimension(const FiniteGroupoid& g, const Cocycle* twist = nullptr);

struct CartanReport {
  bool masa;
  bool normaliser_span_full;
  bool expectation_faithful;
};

/// Verifies the three Cartan-pair conditions for the unit-supported
/// subalgebra: maximal abelianness via commutant dimension, fullness of
/// the normaliser span via point masses, and faithfulness of the
/// expectation on pseudorandom elements.
CartanReport cartan_check(const FiniteGroupoid& g, const Cocycle* twist = nullptr);

/// For a normaliser n whose support is a bisection, builds the sequence of
/// unit-space projections f_k = indicator of {x : |E(n)(x)| >= 1/k},
/// k = 1..K, where K is the first index at which f_K E(n) = E(n). Each f_k
/// commutes with n into the unit algebra: f_k * n = f_k E(n) = E(n) f_k =
/// n * f_k as unit-supported elements; this is verified internally.
/// Throws std::invalid_argument when support(n, tol) is not a bisection.
std::vector<AlgebraElement> build_fk_sequence(const AlgebraElement& n,
                                              double tol = kSupportTol,
                                              const Cocycle* twist = nullptr);

}  // namespace cartan
