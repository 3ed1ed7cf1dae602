#include "cartan/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cartan {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RootOfUnity::RootOfUnity(int order, int exponent) : order(order) {
  if (order < 1) throw std::invalid_argument("RootOfUnity: order must be >= 1");
  this->exponent = ((exponent % order) + order) % order;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  if (order != other.order)
    throw std::invalid_argument("RootOfUnity: mixed orders");
  return RootOfUnity(order, exponent + other.exponent);
}

RootOfUnity RootOfUnity::conj() const { return RootOfUnity(order, -exponent); }

Complex RootOfUnity::value() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * exponent / order);
}

CyclotomicElement::CyclotomicElement(int group_order, int root_order)
    : group_order_(group_order),
      root_order_(root_order),
      coeffs_(IntMatrix::Zero(group_order, root_order)) {
  if (group_order < 1 || root_order < 1)
    throw std::invalid_argument("CyclotomicElement: orders must be >= 1");
}

Complex CyclotomicElement::value(int k) const {
  Complex v = 0.0;
  for (int e = 0; e < root_order_; ++e)
    if (coeffs_(k, e) != 0)
      v += static_cast<double>(coeffs_(k, e)) * RootOfUnity(root_order_, e).value();
  return v;
}

bool CyclotomicElement::equals_scalar_delta0(std::int64_t scalar) const {
  for (int k = 0; k < group_order_; ++k) {
    const std::int64_t want = k == 0 ? scalar : 0;
    if (root_order_ == 4) {
      // Gaussian integers: reduce via i^2 = -1.
      if (coeffs_(k, 0) - coeffs_(k, 2) != want) return false;
      if (coeffs_(k, 1) - coeffs_(k, 3) != 0) return false;
    } else {
      // Z[zeta_p], p prime: the relation ideal is generated by the full
      // root sum, so v ~ want iff v - want*e0 is constant across exponents.
      const std::int64_t shift = coeffs_(k, 0) - want;
      for (int e = 1; e < root_order_; ++e)
        if (coeffs_(k, e) != shift) return false;
    }
  }
  return true;
}

CyclotomicElement gauss_normaliser(int p) {
  if (!is_prime(p)) throw std::invalid_argument("gauss_normaliser: p must be prime");
  if (p == 2) {
    CyclotomicElement n(2, 4);
    n.add(0, 0, 1);
    n.add(1, 1, -1);  // -i
    return n;
  }
  CyclotomicElement n(p, p);
  for (int k = 0; k < p; ++k) n.add(k, (k * k) % p, 1);
  return n;
}

CyclotomicElement cyclo_convolve(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.group_order() != b.group_order() || a.root_order() != b.root_order())
    throw std::invalid_argument("cyclo_convolve: mismatched orders");
  const int p = a.group_order();
  const int r = a.root_order();
  CyclotomicElement out(p, r);
  for (int k = 0; k < p; ++k)
    for (int l = 0; l < p; ++l) {
      const int m = ((k - l) % p + p) % p;
      for (int e1 = 0; e1 < r; ++e1) {
        if (a.coeff(l, e1) == 0) continue;
        for (int e2 = 0; e2 < r; ++e2)
          if (b.coeff(m, e2) != 0)
            out.add(k, (e1 + e2) % r, a.coeff(l, e1) * b.coeff(m, e2));
      }
    }
  return out;
}

CyclotomicElement cyclo_star(const CyclotomicElement& a) {
  const int p = a.group_order();
  const int r = a.root_order();
  CyclotomicElement out(p, r);
  for (int k = 0; k < p; ++k)
    for (int e = 0; e < r; ++e)
      if (a.coeff(k, e) != 0) out.add((p - k) % p, (r - e) % r, a.coeff(k, e));
  return out;
}

bool verify_gauss_identity(int p) {
  const CyclotomicElement n = gauss_normaliser(p);
  const CyclotomicElement n_star = cyclo_star(n);
  return cyclo_convolve(n, n_star).equals_scalar_delta0(p) &&
         cyclo_convolve(n_star, n).equals_scalar_delta0(p);
}

bool quadratic_permutation_check(int p, int k) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("quadratic_permutation_check: p must be an odd prime");
  if (k < 1 || k > p - 1)
    throw std::invalid_argument("quadratic_permutation_check: k must be in 1..p-1");
  std::set<int> seen;
  for (int l = 0; l < p; ++l)
    seen.insert(((k * (2 * l - k)) % p + p) % p);
  return static_cast<int>(seen.size()) == p;
}

AlgebraElement to_algebra_element(const CyclotomicElement& c, const FiniteGroupoid& g) {
  const int p = c.group_order();
  if (g.num_units() != 1 || g.num_arrows() != p)
    throw std::invalid_argument(
        "to_algebra_element: groupoid is not a one-unit model of Z/p");

  std::vector<Arrow> image(static_cast<size_t>(p), kNoArrow);
  const Arrow unit = g.units()[0];
  image[0] = unit;
  if (p > 1) {
    Arrow gen = kNoArrow;
    for (Arrow a = 0; a < g.num_arrows(); ++a)
      if (!g.is_unit(a)) {
        gen = a;
        break;
      }
    std::vector<bool> hit(static_cast<size_t>(p), false);
    hit[static_cast<size_t>(unit)] = true;
    Arrow acc = unit;
    for (int k = 1; k < p; ++k) {
      acc = g.comp(gen, acc);
      if (acc == kNoArrow || hit[static_cast<size_t>(acc)])
        throw std::invalid_argument(
            "to_algebra_element: arrows do not form a cyclic group");
      hit[static_cast<size_t>(acc)] = true;
      image[static_cast<size_t>(k)] = acc;
    }
  }

  AlgebraElement out(g);
  for (int k = 0; k < p; ++k) out[image[static_cast<size_t>(k)]] = c.value(k);
  return out;
}

std::string to_string(const CyclotomicElement& c) {
  std::ostringstream os;
  for (int k = 0; k < c.group_order(); ++k) {
    if (k > 0) os << ", ";
    os << "delta_" << k << ": ";
    if (c.root_order() == 4) {
      const std::int64_t re = c.coeff(k, 0) - c.coeff(k, 2);
      const std::int64_t im = c.coeff(k, 1) - c.coeff(k, 3);
      os << re;
      if (im != 0) os << (im > 0 ? " + " : " - ") << std::llabs(im) << "i";
    } else {
      bool first = true;
      for (int e = 0; e < c.root_order(); ++e) {
        const std::int64_t v = c.coeff(k, e);
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (v != 1 || e == 0) os << v;
        if (e > 0) {
          if (v != 1) os << "*";
          os << "zeta^" << e;
        }
      }
      if (first) os << 0;
    }
  }
  return os.str();
}

}  // namespace cartan
