#include "cartan/witness.hpp"

#include <stdexcept>

#include "cartan/cyclotomic.hpp"

namespace cartan {

std::optional<std::pair<Arrow, int>> find_torsion_isotropy(const FiniteGroupoid& g) {
  for (Arrow a = 0; a < g.num_arrows(); ++a) {
    if (g.is_unit(a)) continue;
    if (g.rng(a) != g.src(a)) continue;
    const auto order = element_order(g, a);
    return std::make_pair(a, *order);
  }
  return std::nullopt;
}

std::pair<int, int> prime_power_step(int n) {
  if (n <= 1) throw std::invalid_argument("prime_power_step: N must be > 1");
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return {p, n / p};
  return {n, 1};
}

ArrowSet build_subgroup(const FiniteGroupoid& g, Arrow gamma, int c, int p) {
  const Arrow step = power(g, gamma, c);
  if (step == kNoArrow || g.is_unit(step))
    throw std::invalid_argument("build_subgroup: gamma^c must be a non-unit");
  const Arrow closure = power(g, step, p);
  if (closure == kNoArrow || !g.is_unit(closure))
    throw std::invalid_argument("build_subgroup: gamma^{cp} must be a unit");

  ArrowSet r(g);
  Arrow acc = g.src(gamma);
  for (int l = 0; l < p; ++l) {
    if (r.contains(acc))
      throw std::logic_error("build_subgroup: powers of gamma^c collide");
    r.insert(acc);
    acc = g.comp(step, acc);
  }

  // R is a group: one unit, closed under comp and inv.
  const Arrow unit = g.src(gamma);
  for (Arrow x : r.members()) {
    if (g.src(x) != unit || g.rng(x) != unit)
      throw std::logic_error("build_subgroup: R left the isotropy fibre");
    if (!r.contains(g.inv(x)))
      throw std::logic_error("build_subgroup: R is not closed under inverses");
    for (Arrow y : r.members())
      if (!r.contains(g.comp(x, y)))
        throw std::logic_error("build_subgroup: R is not closed under composition");
  }
  return r;
}

std::optional<Witness> build_witness(const FiniteGroupoid& g, double tol) {
  const auto torsion = find_torsion_isotropy(g);
  if (!torsion.has_value()) return std::nullopt;
  const auto [gamma, order] = *torsion;
  const auto [prime, cofactor] = prime_power_step(order);

  const ArrowSet subgroup = build_subgroup(g, gamma, cofactor, prime);

  // Transfer the Gauss coefficients along l -> gamma^{c l}; the unit
  // coefficient plays the role of the Urysohn bump at src(gamma).
  const CyclotomicElement n = gauss_normaliser(prime);
  AlgebraElement m(g);
  const Arrow step = power(g, gamma, cofactor);
  Arrow acc = g.src(gamma);
  for (int l = 0; l < prime; ++l) {
    m[acc] = n.value(l);
    acc = g.comp(step, acc);
  }

  const NormaliserVerdict verdict = is_normaliser(m, tol);
  WitnessCertificate certificate{verdict.residual, support(m, tol),
                                 is_bisection(support(m, tol))};
  if (!verdict.is_normaliser)
    throw std::logic_error("build_witness: transferred element failed to normalise");
  if (certificate.support_is_bisection)
    throw std::logic_error("build_witness: witness support is a bisection");

  return Witness{gamma,    order,          prime, cofactor,
                 subgroup, std::move(m),   certificate};
}

}  // namespace cartan
