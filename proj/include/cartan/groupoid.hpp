#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace cartan {

/// Arrow index into a FiniteGroupoid's tables. kNoArrow marks undefined
/// slots in the inverse and composition tables.
using Arrow = std::int32_t;
inline constexpr Arrow kNoArrow = -1;

/// A finite groupoid with the discrete topology. Arrows are table indices,
/// units are a distinguished subset of arrows, and composition is an
/// explicit partial table read right to left: comp(a, b) should be defined
/// exactly when src(a) == rng(b).
///
/// Construction checks structural well-formedness only (sizes and index
/// ranges); the groupoid axioms are checked by validate(). Instances are
/// immutable once built and safe to share across threads.
class FiniteGroupoid {
 public:
  /// comp is a num_arrows x num_arrows table; comp(a, b) == kNoArrow where
  /// the composite is not declared. inv entries may be kNoArrow so that
  /// broken inputs are representable (validate() reports them).
  FiniteGroupoid(std::vector<std::string> ids, std::vector<Arrow> units,
                 std::vector<Arrow> src, std::vector<Arrow> rng,
                 std::vector<Arrow> inv, Eigen::MatrixXi comp);

  int num_arrows() const { return static_cast<int>(ids_.size()); }
  int num_units() const { return static_cast<int>(units_.size()); }

  /// Unit arrows in increasing index order.
  const std::vector<Arrow>& units() const { return units_; }
  bool is_unit(Arrow a) const { return unit_mask_[static_cast<size_t>(a)]; }

  Arrow src(Arrow a) const { return src_[static_cast<size_t>(a)]; }
  Arrow rng(Arrow a) const { return rng_[static_cast<size_t>(a)]; }
  Arrow inv(Arrow a) const { return inv_[static_cast<size_t>(a)]; }

  /// The composite ab, or kNoArrow when the table has no entry.
  Arrow comp(Arrow a, Arrow b) const { return comp_(a, b); }
  bool composable(Arrow a, Arrow b) const { return comp_(a, b) != kNoArrow; }

  const std::string& id(Arrow a) const { return ids_[static_cast<size_t>(a)]; }
  /// Index of the arrow with the given id, or kNoArrow if unknown.
  Arrow arrow(std::string_view id) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Arrow> units_;
  std::vector<bool> unit_mask_;
  std::vector<Arrow> src_;
  std::vector<Arrow> rng_;
  std::vector<Arrow> inv_;
  Eigen::MatrixXi comp_;
  std::unordered_map<std::string, Arrow> index_;
};

/// Checks every groupoid axiom exhaustively (including the full O(n^3)
/// associativity scan) and returns one message per violation, naming the
/// offending arrows. Empty report means the groupoid is valid.
std::vector<std::string> validate(const FiniteGroupoid& g);

/// A subset of the arrows of a fixed parent groupoid. The parent is held by
/// reference and must outlive the set.
class ArrowSet {
 public:
  explicit ArrowSet(const FiniteGroupoid& parent)
      : parent_(&parent), mask_(static_cast<size_t>(parent.num_arrows()), false) {}
  ArrowSet(const FiniteGroupoid& parent, std::initializer_list<Arrow> arrows);

  const FiniteGroupoid& parent() const { return *parent_; }

  bool contains(Arrow a) const { return mask_[static_cast<size_t>(a)]; }
  void insert(Arrow a) { mask_[static_cast<size_t>(a)] = true; }
  void erase(Arrow a) { mask_[static_cast<size_t>(a)] = false; }
  int size() const;
  bool empty() const { return size() == 0; }

  /// Members in increasing index order.
  std::vector<Arrow> members() const;

  friend bool operator==(const ArrowSet& a, const ArrowSet& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  const FiniteGroupoid* parent_;
  std::vector<bool> mask_;
};

/// Elementwise inverse {a^{-1} : a in A}.
ArrowSet set_inverse(const ArrowSet& a);

/// All defined composites {ab : (a, b) composable}. Throws
/// std::invalid_argument when the parents differ.
ArrowSet set_product(const ArrowSet& a, const ArrowSet& b);

/// n-fold set product, n >= 1.
ArrowSet set_power(const ArrowSet& a, int n);

/// True iff both rng and src are injective on the set. In the discrete
/// model every subset is open, so injectivity is the whole condition; the
/// empty set is a bisection.
bool is_bisection(const ArrowSet& a);

/// The unit space as an ArrowSet.
ArrowSet unit_space(const FiniteGroupoid& g);

/// Arrows with rng == src.
ArrowSet isotropy(const FiniteGroupoid& g);

/// Interior of the isotropy. Discrete topology makes every set open, so
/// this equals isotropy(g); kept as its own entry point because callers
/// care about the distinction in general.
ArrowSet isotropy_interior(const FiniteGroupoid& g);

bool is_principal(const FiniteGroupoid& g);
bool is_effective(const FiniteGroupoid& g);

/// a^n for n >= 0 (a^0 is src(a)); kNoArrow if some step is undefined.
Arrow power(const FiniteGroupoid& g, Arrow a, int n);

/// Least N >= 1 with a^N a unit, or nullopt when a is not isotropy.
std::optional<int> element_order(const FiniteGroupoid& g, Arrow a);

/// Given a bisection L contained in the isotropy, returns B = L(L^N cap
/// units), which satisfies B^N <= units and generates a cyclic group of
/// order dividing N under set_product. Throws std::invalid_argument when L
/// is not a bisection or not contained in the isotropy.
ArrowSet nice_bisection(const FiniteGroupoid& g, const ArrowSet& l, int n);

}  // namespace cartan
