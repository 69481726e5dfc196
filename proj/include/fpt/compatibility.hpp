#pragma once

#include "fpt/diamond.hpp"

/// \file compatibility.hpp
/// Compatibility of a fuzzy primal with a fuzzy topology, the square
/// operator (the part of a set invisible to diamond), and the equivalence /
/// decomposition results that hold under compatibility.

namespace fpt {

/// The square of lambda carries two views that genuinely differ on the grid:
/// the induced fuzzy set keeps the full height lambda(y) wherever lambda
/// rises above diamond(lambda), while the point predicate singles out the
/// fuzzy points y_t with t <= lambda(y) and t > diamond(lambda)(y).  Every
/// checker binds to the view under which the corresponding proof is sound and
/// reports the other one.
struct SquareView {
  FuzzySet lambda;
  FuzzySet dia;      // diamond(lambda)
  FuzzySet induced;  // lambda(y) where lambda(y) > dia(y), else 0

  bool point_predicate(FuzzyPoint p) const {
    return p.t <= lambda[p.elem] && p.t > dia[p.elem];
  }
};

SquareView square(const PrimalSpace& s, const FuzzySet& lambda);

/// Compatibility verdict with both decision routes.  via_definition runs the
/// defining quantifier over every lattice set and every fuzzy point of it;
/// via_support uses the equivalent support-disjointness form
/// meet(lambda, diamond lambda) = 0_Y  =>  complement(lambda) not in primal.
/// strict_variant additionally evaluates the stronger per-point reading
/// (complement(lambda) in primal forces lambda <= diamond(lambda)), which is
/// informational only.
struct CompatibilityReport {
  bool via_definition = true;
  bool via_support = true;
  bool strict_variant = true;
  std::optional<FuzzySet> witness;         // lambda violating the definition
  std::optional<FuzzySet> strict_witness;  // lambda violating the strict reading
};

CompatibilityReport compatibility_report(const PrimalSpace& s, Budget budget = {});
bool is_compatible(const PrimalSpace& s, Budget budget = {});

/// The five equivalent characterisations of compatibility, each evaluated
/// independently over the whole lattice:
///   (i)   the defining quantifier,
///   (ii)  support disjointness forces complement(lambda) out of the primal,
///   (iii) complement(square(lambda).induced) never in the primal,
///   (iv)  no nonzero sigma <= lambda with sigma <= diamond(sigma) forces
///         complement(lambda) out of the primal,
///   (v)   clause (iii) restricted to closed sets of the generated topology.
struct EquivalenceReport {
  bool clause[5] = {true, true, true, true, true};
  std::optional<FuzzySet> clause_witness[5];
  bool all_equal() const {
    for (int i = 1; i < 5; ++i)
      if (clause[i] != clause[0]) return false;
    return true;
  }
};
/// Clause (iv) enumerates all sigma <= lambda; the budget bounds that blow-up.
EquivalenceReport c3_equivalence_report(const PrimalSpace& s, Budget budget = {});

/// The three conditions implied by compatibility:
///   (i)   meet(lambda, diamond lambda) = 0_Y implies diamond(lambda) = 0_Y,
///   (ii)  diamond(square(lambda).induced) = 0_Y for every lambda,
///   (iii) diamond(meet(lambda, diamond lambda)) = diamond(lambda).
struct C4Report {
  bool clause[3] = {true, true, true};
  std::optional<FuzzySet> clause_witness[3];
  bool compatible = false;  // precondition verdict, recorded not assumed
  bool all_equal() const { return clause[0] == clause[1] && clause[1] == clause[2]; }
};
C4Report c4_report(const PrimalSpace& s, Budget budget = {});

/// Idempotence of diamond under compatibility.
struct C5Report {
  bool compatible = false;           // precondition verdict
  bool idempotent = true;            // diamond(diamond) == diamond on every set
  std::optional<FuzzySet> witness;   // lambda with diamond(diamond) != diamond
};
C5Report c5_idempotence(const PrimalSpace& s, Budget budget = {});

/// Decomposition of a closed set of the generated topology as
/// join(T-closed part, part whose complement avoids the primal).
struct ClosedDecomposition {
  enum class Status { Ok, NotCompatible, NotClosed, NoPair };
  Status status = Status::Ok;
  FuzzySet closed_part;   // meaningful when status == Ok
  FuzzySet small_part;
  bool canonical_pair_valid = false;  // the pair (diamond, square) itself qualifies
};
ClosedDecomposition closed_decomposition(const PrimalSpace& s, const FuzzySet& lambda,
                                         Budget budget = {});

/// Does some pair (c, e) with c T-closed, complement(e) outside the primal
/// and join(c, e) = lambda exist?  Scan-based; independent of the canonical
/// construction above.
bool closed_union_pair_exists(const PrimalSpace& s, const FuzzySet& lambda, Budget budget = {});

/// Whether the base family equals the generated topology outright.
struct BaseTopologyReport {
  bool compatible = false;  // precondition verdict
  bool equal = false;       // primal_base(s) == primal_topology(s).opens
};
BaseTopologyReport base_equals_topology(const PrimalSpace& s, Budget budget = {});

}  // namespace fpt
