#pragma once

#include <optional>

#include "fpt/family.hpp"

/// \file structures.hpp
/// Fuzzy topologies, primals and grills as finite families: validation with
/// witness reports, generation, grill/primal duality, q-neighborhood systems,
/// interior/closure, and the fuzzy-base test.

namespace fpt {

/// A fuzzy topology: contains 0_Y and 1_Y and is closed under pairwise meet
/// and join (finite families make arbitrary unions finite joins).
/// Construct through make_topology / generate_topology so the invariant is
/// checked once.
struct FuzzyTopology {
  FuzzyFamily opens;

  const Space& space() const noexcept { return opens.space(); }
  bool contains(const FuzzySet& s) const { return opens.contains(s); }
  /// Complement image of the opens, i.e. the closed sets.
  FuzzyFamily closed_sets() const { return opens.complement_image(); }
};

/// A fuzzy primal: 1_Y absent, downward closed, and meet-prime
/// (meet(mu, nu) member implies mu member or nu member).
struct FuzzyPrimal {
  FuzzyFamily members;

  const Space& space() const noexcept { return members.space(); }
  bool contains(const FuzzySet& s) const { return members.contains(s); }
};

/// A fuzzy grill: 0_Y absent, upward closed, join-prime.  Dual of a primal
/// under complementation.
struct FuzzyGrill {
  FuzzyFamily members;

  const Space& space() const noexcept { return members.space(); }
  bool contains(const FuzzySet& s) const { return members.contains(s); }
};

// --- validation ------------------------------------------------------------

ValidationReport validate_topology(const FuzzyFamily& f);

/// Checks the three primal axioms directly: 1_Y not a member, downward
/// closure, meet-primeness.  Quantifiers over "all fuzzy sets" range over the
/// whole grid lattice, so a budget applies.
ValidationReport validate_primal_def(const FuzzyFamily& f, Budget budget = {});
/// Same verdict through the complementary characterisation: non-membership is
/// upward closed and closed under meet.  Kept as an independent code path;
/// the two variants agreeing on every family is a tested invariant.
ValidationReport validate_primal_iff(const FuzzyFamily& f, Budget budget = {});

ValidationReport validate_grill(const FuzzyFamily& f, Budget budget = {});

/// Re-checks one meet-primeness witness: meet(mu, nu) in f while neither
/// mu nor nu is.  Used to confirm reported counterexamples independently.
bool is_meet_prime_witness(const FuzzyFamily& f, const FuzzySet& mu, const FuzzySet& nu);

// --- construction ----------------------------------------------------------

/// Validates and wraps.  Empty result carries the failure report.
struct TopologyResult {
  std::optional<FuzzyTopology> topology;
  ValidationReport report;
};
TopologyResult make_topology(FuzzyFamily f);

/// Smallest topology containing the seed: adds 0_Y and 1_Y and closes under
/// pairwise meet/join to a fixpoint.  Idempotent.
FuzzyTopology generate_topology(const FuzzyFamily& seed, Budget budget = {});

struct PrimalResult {
  std::optional<FuzzyPrimal> primal;
  ValidationReport report;
};
struct GrillResult {
  std::optional<FuzzyGrill> grill;
  ValidationReport report;
};

/// All grid sets except 1_Y.
FuzzyPrimal make_trivial_primal(const Space& s, Budget budget = {});
/// {lambda : lambda(elem) < t0}, the sets not containing the fuzzy point.
/// t0 is a numerator in [1, k].
FuzzyPrimal make_point_excluding_primal(const Space& s, int elem, int t0, Budget budget = {});
/// Validates an explicit member list before accepting it.
PrimalResult make_explicit_primal(FuzzyFamily f, Budget budget = {});
GrillResult make_explicit_grill(FuzzyFamily f, Budget budget = {});

// --- duality ---------------------------------------------------------------

/// {nu : complement(nu) in g}; always a primal when g is a grill.
FuzzyPrimal primal_from_grill(const FuzzyGrill& g);
FuzzyGrill grill_from_primal(const FuzzyPrimal& p);

/// Member-set union; always a primal (union theorem).
FuzzyPrimal primal_union(const FuzzyPrimal& a, const FuzzyPrimal& b);
/// Member-set intersection, returned raw and unvalidated: the class of
/// primals is not closed under intersection and this is the counterexample
/// probe.
FuzzyFamily primal_intersection_raw(const FuzzyPrimal& a, const FuzzyPrimal& b);

// --- neighborhood systems ---------------------------------------------------

/// Open q-neighborhoods of y_t: opens eta with t + eta(y) > 1.
FuzzyFamily open_q_nbhds(const FuzzyTopology& t, FuzzyPoint p);

/// eta is a neighborhood of y_t: some open mu with y_t in mu <= eta.
bool is_nbhd(const FuzzyTopology& t, FuzzyPoint p, const FuzzySet& eta);
/// eta is a q-neighborhood of y_t: some open mu with y_t quasi-coincident
/// with mu and mu <= eta.
bool is_q_nbhd(const FuzzyTopology& t, FuzzyPoint p, const FuzzySet& eta);

// --- interior / closure ------------------------------------------------------

/// Join of all opens below lambda.
FuzzySet interior(const FuzzyTopology& t, const FuzzySet& lambda);
/// closure(lambda)(y) = largest t > 0 such that every open q-neighborhood of
/// y_t is quasi-coincident with lambda, else 0.  This q-neighborhood form is
/// the authoritative one; closure_via_interior exists to cross-check it.
FuzzySet closure(const FuzzyTopology& t, const FuzzySet& lambda);
/// complement(interior(complement(lambda))).
FuzzySet closure_via_interior(const FuzzyTopology& t, const FuzzySet& lambda);

// --- base ---------------------------------------------------------------------

/// True iff for every fuzzy point p and every open q-neighborhood mu of p
/// there is beta in b with p quasi-coincident with beta and beta <= mu.
/// Throws std::invalid_argument when b is not a subfamily of t.opens.
bool is_base_for(const FuzzyFamily& b, const FuzzyTopology& t);

}  // namespace fpt
