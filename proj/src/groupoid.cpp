#include "cartan/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartan {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

bool in_range(Arrow a, int n) { return a >= 0 && a < n; }

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> ids,
                               std::vector<Arrow> units, std::vector<Arrow> src,
                               std::vector<Arrow> rng, std::vector<Arrow> inv,
                               Eigen::MatrixXi comp)
    : ids_(std::move(ids)),
      units_(std::move(units)),
      src_(std::move(src)),
      rng_(std::move(rng)),
      inv_(std::move(inv)),
      comp_(std::move(comp)) {
  const int n = num_arrows();
  require(src_.size() == ids_.size() && rng_.size() == ids_.size() &&
              inv_.size() == ids_.size(),
          "groupoid tables must all have one entry per arrow");
  require(comp_.rows() == n && comp_.cols() == n,
          "composition table must be num_arrows x num_arrows");
  for (Arrow u : units_) require(in_range(u, n), "unit index out of range");
  for (Arrow a : src_) require(in_range(a, n), "src index out of range");
  for (Arrow a : rng_) require(in_range(a, n), "rng index out of range");
  for (Arrow a : inv_)
    require(a == kNoArrow || in_range(a, n), "inv index out of range");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(comp_(i, j) == kNoArrow || in_range(comp_(i, j), n),
              "comp index out of range");

  std::sort(units_.begin(), units_.end());
  units_.erase(std::unique(units_.begin(), units_.end()), units_.end());
  unit_mask_.assign(static_cast<size_t>(n), false);
  for (Arrow u : units_) unit_mask_[static_cast<size_t>(u)] = true;

  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = index_.emplace(ids_[static_cast<size_t>(i)], i);
    require(fresh, "duplicate arrow id: " + ids_[static_cast<size_t>(i)]);
  }
}

Arrow FiniteGroupoid::arrow(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? kNoArrow : it->second;
}

std::vector<std::string> validate(const FiniteGroupoid& g) {
  std::vector<std::string> report;
  const int n = g.num_arrows();
  auto name = [&](Arrow a) { return g.id(a); };

  for (Arrow u : g.units()) {
    if (g.src(u) != u || g.rng(u) != u)
      report.push_back("unit " + name(u) + " must have src = rng = itself");
  }
  for (Arrow a = 0; a < n; ++a) {
    if (!g.is_unit(g.src(a)))
      report.push_back("src(" + name(a) + ") = " + name(g.src(a)) +
                       " is not a unit");
    if (!g.is_unit(g.rng(a)))
      report.push_back("rng(" + name(a) + ") = " + name(g.rng(a)) +
                       " is not a unit");
  }

  // comp defined exactly on matching (src, rng) pairs, with the right
  // endpoint bookkeeping.
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      const bool matches = g.src(a) == g.rng(b);
      const Arrow ab = g.comp(a, b);
      if (matches && ab == kNoArrow) {
        report.push_back("missing comp entry for composable pair (" + name(a) +
                         ", " + name(b) + ")");
      } else if (!matches && ab != kNoArrow) {
        report.push_back("comp(" + name(a) + ", " + name(b) +
                         ") declared although src != rng");
      } else if (ab != kNoArrow) {
        if (g.rng(ab) != g.rng(a))
          report.push_back("rng(comp(" + name(a) + ", " + name(b) +
                           ")) != rng(" + name(a) + ")");
        if (g.src(ab) != g.src(b))
          report.push_back("src(comp(" + name(a) + ", " + name(b) +
                           ")) != src(" + name(b) + ")");
      }
    }
  }

  // Unit laws.
  for (Arrow a = 0; a < n; ++a) {
    const Arrow right = g.comp(a, g.src(a));
    if (right != kNoArrow && right != a)
      report.push_back("comp(" + name(a) + ", src(" + name(a) + ")) != " +
                       name(a));
    const Arrow left = g.comp(g.rng(a), a);
    if (left != kNoArrow && left != a)
      report.push_back("comp(rng(" + name(a) + "), " + name(a) + ") != " +
                       name(a));
  }

  // Inverse laws.
  for (Arrow a = 0; a < n; ++a) {
    const Arrow ia = g.inv(a);
    if (ia == kNoArrow) {
      report.push_back("missing inverse for arrow " + name(a));
      continue;
    }
    if (g.inv(ia) != a)
      report.push_back("inv(inv(" + name(a) + ")) != " + name(a));
    if (g.comp(a, ia) != g.rng(a))
      report.push_back("comp(" + name(a) + ", inv(" + name(a) +
                       ")) != rng(" + name(a) + ")");
    if (g.comp(ia, a) != g.src(a))
      report.push_back("comp(inv(" + name(a) + "), " + name(a) +
                       ") != src(" + name(a) + ")");
  }

  // Full associativity scan; cheap at desk scale.
  for (Arrow a = 0; a < n; ++a) {
    for (Arrow b = 0; b < n; ++b) {
      const Arrow ab = g.comp(a, b);
      if (ab == kNoArrow) continue;
      for (Arrow c = 0; c < n; ++c) {
        const Arrow bc = g.comp(b, c);
        if (bc == kNoArrow) continue;
        if (g.comp(ab, c) != g.comp(a, bc))
          report.push_back("associativity fails on (" + name(a) + ", " +
                           name(b) + ", " + name(c) + ")");
      }
    }
  }

  return report;
}

ArrowSet::ArrowSet(const FiniteGroupoid& parent,
                   std::initializer_list<Arrow> arrows)
    : ArrowSet(parent) {
  for (Arrow a : arrows) insert(a);
}

int ArrowSet::size() const {
  return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<Arrow> ArrowSet::members() const {
  std::vector<Arrow> out;
  for (int a = 0; a < parent_->num_arrows(); ++a)
    if (mask_[static_cast<size_t>(a)]) out.push_back(a);
  return out;
}

ArrowSet set_inverse(const ArrowSet& a) {
  const FiniteGroupoid& g = a.parent();
  ArrowSet out(g);
  for (Arrow x : a.members()) out.insert(g.inv(x));
  return out;
}

ArrowSet set_product(const ArrowSet& a, const ArrowSet& b) {
  if (&a.parent() != &b.parent())
    throw std::invalid_argument("set_product: sets have different parents");
  const FiniteGroupoid& g = a.parent();
  ArrowSet out(g);
  for (Arrow x : a.members())
    for (Arrow y : b.members())
      if (g.composable(x, y)) out.insert(g.comp(x, y));
  return out;
}

ArrowSet set_power(const ArrowSet& a, int n) {
  if (n < 1) throw std::invalid_argument("set_power: exponent must be >= 1");
  ArrowSet out = a;
  for (int i = 1; i < n; ++i) out = set_product(out, a);
  return out;
}

bool is_bisection(const ArrowSet& a) {
  const FiniteGroupoid& g = a.parent();
  std::vector<bool> src_seen(static_cast<size_t>(g.num_arrows()), false);
  std::vector<bool> rng_seen(static_cast<size_t>(g.num_arrows()), false);
  for (Arrow x : a.members()) {
    if (src_seen[static_cast<size_t>(g.src(x))]) return false;
    if (rng_seen[static_cast<size_t>(g.rng(x))]) return false;
    src_seen[static_cast<size_t>(g.src(x))] = true;
    rng_seen[static_cast<size_t>(g.rng(x))] = true;
  }
  return true;
}

ArrowSet unit_space(const FiniteGroupoid& g) {
  ArrowSet out(g);
  for (Arrow u : g.units()) out.insert(u);
  return out;
}

ArrowSet isotropy(const FiniteGroupoid& g) {
  ArrowSet out(g);
  for (Arrow a = 0; a < g.num_arrows(); ++a)
    if (g.rng(a) == g.src(a)) out.insert(a);
  return out;
}

ArrowSet isotropy_interior(const FiniteGroupoid& g) { return isotropy(g); }

bool is_principal(const FiniteGroupoid& g) {
  return isotropy(g) == unit_space(g);
}

bool is_effective(const FiniteGroupoid& g) {
  return isotropy_interior(g) == unit_space(g);
}

Arrow power(const FiniteGroupoid& g, Arrow a, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  Arrow acc = g.src(a);
  for (int i = 0; i < n; ++i) {
    acc = g.comp(a, acc);
    if (acc == kNoArrow) return kNoArrow;
  }
  return acc;
}

std::optional<int> element_order(const FiniteGroupoid& g, Arrow a) {
  if (g.rng(a) != g.src(a)) return std::nullopt;
  Arrow acc = a;
  for (int n = 1; n <= g.num_arrows() + 1; ++n) {
    if (acc == kNoArrow) break;
    if (g.is_unit(acc)) return n;
    acc = g.comp(a, acc);
  }
  throw std::logic_error("element_order: no power reached a unit; groupoid invalid");
}

ArrowSet nice_bisection(const FiniteGroupoid& g, const ArrowSet& l, int n) {
  if (n < 1) throw std::invalid_argument("nice_bisection: N must be >= 1");
  if (!is_bisection(l))
    throw std::invalid_argument("nice_bisection: L is not a bisection");
  for (Arrow x : l.members())
    if (g.rng(x) != g.src(x))
      throw std::invalid_argument(
          "nice_bisection: L is not contained in the isotropy");

  ArrowSet w = set_power(l, n);
  for (Arrow x : w.members())
    if (!g.is_unit(x)) w.erase(x);
  return set_product(l, w);
}

}  // namespace cartan
