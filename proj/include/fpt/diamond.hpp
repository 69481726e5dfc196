#pragma once

#include <optional>

#include "fpt/structures.hpp"

/// \file diamond.hpp
/// The local operator lambda -> lambda-diamond of a primal fuzzy topological
/// space, the closure operator it induces, the finer topology generated by
/// that closure, and its base.

namespace fpt {

/// The triple (Y, topology, primal) over one space.  Construct through
/// make_primal_space, which validates both structures.
class PrimalSpace {
 public:
  PrimalSpace(FuzzyTopology topology, FuzzyPrimal primal);

  const Space& space() const noexcept { return topology_.space(); }
  const FuzzyTopology& topology() const noexcept { return topology_; }
  const FuzzyPrimal& primal() const noexcept { return primal_; }
  /// Complement of the i-th open, precomputed (hot path of diamond).
  const FuzzySet& open_complement(std::size_t i) const { return open_complements_[i]; }

 private:
  FuzzyTopology topology_;
  FuzzyPrimal primal_;
  std::vector<FuzzySet> open_complements_;
};

struct PrimalSpaceResult {
  std::optional<PrimalSpace> space;
  ValidationReport report;
};
/// Validates topology and primal (and that they share the space).
PrimalSpaceResult make_primal_space(FuzzyTopology topology, FuzzyPrimal primal,
                                    Budget budget = {});

/// y_t belongs to lambda-diamond: for every open q-neighborhood eta of y_t,
/// oplus(complement lambda, complement eta) is a member of the primal.
/// Never vacuous: 1_Y is a q-neighborhood of every point.
bool point_in_diamond(const PrimalSpace& s, const FuzzySet& lambda, FuzzyPoint p);

/// The induced fuzzy set: diamond(lambda)(y) is the largest t > 0 with
/// point_in_diamond(s, lambda, y_t), else 0.  Point and set views agree:
/// point_in_diamond(s, lambda, y_t) iff t <= diamond(s, lambda)(y).
FuzzySet diamond(const PrimalSpace& s, const FuzzySet& lambda);

/// join(lambda, diamond(lambda)); a Kuratowski fuzzy closure operator.
FuzzySet cl_diamond(const PrimalSpace& s, const FuzzySet& lambda);

/// Membership in the generated topology without enumerating it:
/// mu is open iff cl_diamond fixes complement(mu).
bool in_primal_topology(const PrimalSpace& s, const FuzzySet& mu);

/// Materialises the generated topology {mu : in_primal_topology(s, mu)} by a
/// full lattice scan.  Always finer than s.topology().
FuzzyTopology primal_topology(const PrimalSpace& s, Budget budget = {});

/// The base {trunc_diff(mu, complement lambda) : mu open, lambda not in
/// primal}, deduplicated.  Contains s.topology() (take lambda = 1_Y) and is a
/// fuzzy base for primal_topology(s); it need not itself be a topology.
FuzzyFamily primal_base(const PrimalSpace& s, Budget budget = {});

/// Memoised diamond over the whole lattice of one space; backs the exhaustive
/// theorem scans.  Lazy: each set is computed once, on first use.
class DiamondTable {
 public:
  DiamondTable(const PrimalSpace& s, Budget budget = {});

  /// diamond of the set with the given lattice rank, as a rank.
  std::uint64_t diamond_rank(std::uint64_t rank);
  FuzzySet diamond_of(const FuzzySet& set);
  std::uint64_t size() const noexcept { return static_cast<std::uint64_t>(table_.size()); }

 private:
  const PrimalSpace& space_;
  std::vector<std::int64_t> table_;  // -1 = not yet computed
};

/// Checks the behaviour of diamond under a second primal on the same
/// topology: containment monotonicity and the union formula
/// diamond_{P1 union P2} = join(diamond_{P1}, diamond_{P2}).
struct TwoPrimalReport {
  bool primals_nested = false;       // p1 subset of p2
  bool monotone_ok = true;           // vacuous unless nested
  bool union_formula_ok = true;
  std::optional<FuzzySet> witness;   // lambda violating a checked clause
  std::string detail;
};
TwoPrimalReport diamond_monotone_in_primal(const FuzzyTopology& t, const FuzzyPrimal& p1,
                                           const FuzzyPrimal& p2, const FuzzySet& lambda);

/// Relates diamond(mu) to closures of trunc_diff(mu, complement lambda) over
/// all lambda outside the primal: the one-sided inclusion holds for every such
/// lambda and equality holds for the pointwise meet; whether a single lambda
/// attains it is reported, not asserted.
struct DecompositionReport {
  bool inclusion_ok = true;              // diamond(mu) <= Cl(mu - comp lambda) for all lambda
  bool meet_equality_ok = true;          // diamond(mu) == meet over lambda of those closures
  bool single_witness_exists = false;    // one lambda attains equality on its own
  std::optional<FuzzySet> witness_lambda;  // the attaining lambda, when any
  std::optional<FuzzySet> failure_lambda;  // inclusion violator, when any
};
DecompositionReport diamond_vs_closure_decomposition(const PrimalSpace& s, const FuzzySet& mu,
                                                     Budget budget = {});

}  // namespace fpt
