#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// \file core.hpp
/// Exact grid-valued fuzzy set algebra over a finite universe.
///
/// Membership degrees are rationals i/k stored as integer numerators over a
/// denominator k shared by the whole space.  The grid {0, 1/k, ..., 1} is
/// closed under every operation defined here (min, max, truncated sum and
/// difference, complement), so no rounding ever happens and boundary cases
/// such as t + mu(y) > 1 versus = 1 are decided exactly.

namespace fpt {

/// Thrown when an enumeration would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
  std::uint64_t required = 0;
  std::uint64_t allowed = 0;
  BudgetExceeded(std::uint64_t required_, std::uint64_t allowed_);
};

/// Caps the size of whole-lattice scans ((k+1)^n grows fast).
struct Budget {
  std::uint64_t max_sets = 1u << 20;
};

/// A finite universe of labelled elements plus the grid denominator k.
/// Immutable; copies share the representation and are cheap to pass around.
class Space {
 public:
  Space(std::vector<std::string> labels, int denom);

  int size() const noexcept { return static_cast<int>(rep_->labels.size()); }
  int denom() const noexcept { return rep_->denom; }
  const std::string& label(int i) const { return rep_->labels.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const noexcept { return rep_->labels; }

  /// Index of a label, or -1 when absent.
  int index_of(std::string_view label) const noexcept;

  /// Number of grid fuzzy sets on this space, i.e. (k+1)^n.
  /// Saturates at uint64 max instead of overflowing.
  std::uint64_t lattice_size() const noexcept;

  bool operator==(const Space& other) const noexcept;
  bool operator!=(const Space& other) const noexcept { return !(*this == other); }

 private:
  struct Rep {
    std::vector<std::string> labels;
    int denom;
  };
  std::shared_ptr<const Rep> rep_;
};

/// One membership degree as an exact rational num/den, den being the
/// space-wide k.  Only used at API boundaries; bulk storage keeps raw
/// numerators.
struct GridValue {
  int num = 0;
  int den = 1;

  GridValue() = default;
  GridValue(int num_, int den_);

  friend bool operator==(GridValue a, GridValue b) { return a.num * static_cast<long long>(b.den) == b.num * static_cast<long long>(a.den); }
  std::string str() const;  // "num/den"
};

class FuzzySet;

/// A fuzzy point y_t: full membership t > 0 at one element, zero elsewhere.
struct FuzzyPoint {
  int elem = 0;  // universe index
  int t = 1;     // numerator, 1 <= t <= k
};

/// A grid fuzzy set: one numerator in [0, k] per universe element.
/// Value semantics; equality is pointwise.
class FuzzySet {
 public:
  FuzzySet(Space space, std::vector<int> numerators);

  static FuzzySet zero(const Space& s);
  static FuzzySet one(const Space& s);
  static FuzzySet constant(const Space& s, int numerator);
  /// The fuzzy point y_t realised as a set.
  static FuzzySet point(const Space& s, FuzzyPoint p);

  const Space& space() const noexcept { return space_; }
  int size() const noexcept { return static_cast<int>(vals_.size()); }
  int operator[](int i) const { return vals_[static_cast<std::size_t>(i)]; }
  GridValue value(int i) const { return GridValue((*this)[i], space_.denom()); }
  std::span<const int> nums() const noexcept { return vals_; }

  bool operator==(const FuzzySet& other) const;
  bool operator!=(const FuzzySet& other) const { return !(*this == other); }
  /// Lexicographic order on the numerator vector; total within one space.
  std::strong_ordering operator<=>(const FuzzySet& other) const;

  /// Numerators joined by commas, e.g. "0,2".
  std::string str() const;

 private:
  Space space_;
  std::vector<int> vals_;
};

/// Throws std::invalid_argument unless both sets live on the same space.
void require_same_space(const FuzzySet& a, const FuzzySet& b);
void require_same_space(const Space& a, const Space& b);

// Pointwise algebra.  All results stay on the grid.
FuzzySet complement(const FuzzySet& a);
FuzzySet meet(const FuzzySet& a, const FuzzySet& b);
FuzzySet join(const FuzzySet& a, const FuzzySet& b);
/// Lukasiewicz disjunction: min(a + b, 1).
FuzzySet oplus(const FuzzySet& a, const FuzzySet& b);
/// Lukasiewicz conjunction: max(a + b - 1, 0).
FuzzySet odot(const FuzzySet& a, const FuzzySet& b);
/// Sum capped at 1.  Coincides with oplus on the grid; kept as a separate
/// entry point because callers coming from the two classical definitions
/// expect both names.
FuzzySet bounded_sum(const FuzzySet& a, const FuzzySet& b);
/// a - b where a > b, else 0.
FuzzySet trunc_diff(const FuzzySet& a, const FuzzySet& b);

/// N-ary folds; the empty fold is 1_Y for meet and 0_Y for join.
FuzzySet meet_all(const Space& s, std::span<const FuzzySet> sets);
FuzzySet join_all(const Space& s, std::span<const FuzzySet> sets);

bool leq(const FuzzySet& a, const FuzzySet& b);
bool is_zero(const FuzzySet& a);
bool is_one(const FuzzySet& a);

/// t <= lambda(y).
bool point_in(FuzzyPoint p, const FuzzySet& lambda);
/// t + lambda(y) > 1, strict.
bool quasi_coincident(FuzzyPoint p, const FuzzySet& lambda);
/// Exists y with a(y) + b(y) > 1, strict.
bool quasi_coincident(const FuzzySet& a, const FuzzySet& b);

/// Lexicographic rank of a set within its lattice (element 0 most
/// significant).  Inverse of set_at_rank.
std::uint64_t rank_of(const FuzzySet& a);
FuzzySet set_at_rank(const Space& s, std::uint64_t rank);

/// Restartable stream over all (k+1)^n grid sets in rank order.
/// Construction fails with BudgetExceeded when the lattice is too large.
class LatticeStream {
 public:
  LatticeStream(Space space, Budget budget = {});

  bool done() const noexcept { return next_ >= count_; }
  FuzzySet next();
  void reset() noexcept { next_ = 0; }
  std::uint64_t count() const noexcept { return count_; }

 private:
  Space space_;
  std::uint64_t count_;
  std::uint64_t next_ = 0;
};

/// Applies fn to every lattice set in rank order.
template <typename Fn>
void for_each_set(const Space& s, Budget budget, Fn&& fn) {
  LatticeStream stream(s, budget);
  while (!stream.done()) fn(stream.next());
}

/// FNV-1a over a byte string; used for space digests.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace fpt
