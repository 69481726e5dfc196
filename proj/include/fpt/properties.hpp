#pragma once

#include <string_view>

/// \file properties.hpp
/// The registry of executable properties.  Every numbered claim of the source
/// material (remarks and lemma of the preliminaries, theorems and examples of
/// the primal sections, compatibility theorems) maps to at least one property
/// id; the mapping is checked at compile time so a claim can never silently
/// drop out of the harness.
///
/// Kinds:
///   Asserted  - the harness expects the property to hold; a violation is a
///               suite failure with a witness.
///   Reported  - evaluated and recorded but never a suite failure.  Used for
///               erratum candidates (claims whose printed form the oracles
///               refute) and for deliberately-false claims kept as
///               counterexample-search targets.

namespace fpt {

enum class PropertyKind { Asserted, Reported };

struct PropertyDef {
  std::string_view id;
  std::string_view claim;  // manifest tag, or "artifact:..." for harness invariants
  PropertyKind kind;
  std::string_view description;
};

inline constexpr PropertyDef kPropertyRegistry[] = {
    // Preliminaries: operation laws.
    {"REMARK_2_6_i", "remark:2.6.i", PropertyKind::Asserted,
     "oplus is monotone in its first argument"},
    {"REMARK_2_6_ii", "remark:2.6.ii", PropertyKind::Asserted,
     "meet distributes over a shared oplus term (strengthened to equality)"},
    {"REMARK_2_6_iii_AS_PRINTED", "remark:2.6.iii", PropertyKind::Reported,
     "complement of oplus equals oplus of complements (printed form; refutable)"},
    {"REMARK_2_6_iii_CORRECTED", "remark:2.6.iii", PropertyKind::Asserted,
     "complement swaps oplus with odot (De Morgan pair)"},
    {"LEMMA_2_10_i", "lemma:2.10.i", PropertyKind::Asserted,
     "quasi-coincidence at a point forces a nonzero meet there"},
    {"LEMMA_2_10_ii", "lemma:2.10.ii", PropertyKind::Asserted,
     "point membership iff not quasi-coincident with the complement"},
    {"LEMMA_2_10_iii", "lemma:2.10.iii", PropertyKind::Asserted,
     "set inclusion iff not quasi-coincident with the complement"},

    // Fuzzy primals.
    {"THM_3_2_EQUIV", "thm:3.2", PropertyKind::Asserted,
     "direct and complementary primal validators agree"},
    {"EX_3_3_i", "ex:3.3.i", PropertyKind::Asserted, "the trivial primal validates"},
    {"EX_3_3_ii_AS_PRINTED", "ex:3.3.ii", PropertyKind::Reported,
     "down-set of a set taking interior values is a primal (refutable on grids)"},
    {"EX_3_3_iii", "ex:3.3.iii", PropertyKind::Asserted,
     "the point-excluding family validates and matches its closed form"},
    {"EX_3_3_iv_AS_PRINTED", "ex:3.3.iv", PropertyKind::Reported,
     "the even-range family (which denotes {0_Y}) is a primal (refutable)"},
    {"THM_3_4_GRILL_TO_PRIMAL", "thm:3.4", PropertyKind::Asserted,
     "complement image of a grill is a primal"},
    {"COR_3_4_PRIMAL_TO_GRILL", "cor:3.4", PropertyKind::Asserted,
     "complement image of a primal is a grill"},
    {"DUALITY_ROUND_TRIP", "artifact:duality-round-trip", PropertyKind::Asserted,
     "grill/primal duality round-trips to the identity"},
    {"THM_3_5_UNION", "thm:3.5", PropertyKind::Asserted, "unions of primals are primals"},
    {"EX_3_6_INTERSECTION", "ex:3.6", PropertyKind::Asserted,
     "the two-primal intersection counterexample reproduces with the printed witness pair"},
    {"PRIMAL_INTERSECTION_CLOSED", "ex:3.6", PropertyKind::Reported,
     "intersections of primals are primals (false in general; search target)"},

    // The diamond operator and the generated topology.
    {"EX_4_3_DIAMOND_NOT_CONTRACTIVE", "ex:4.3", PropertyKind::Asserted,
     "under the trivial primal diamond equals closure and need not shrink its argument"},
    {"EX_4_4_INDISCRETE_CASE_SPLIT", "ex:4.4", PropertyKind::Asserted,
     "over the indiscrete topology diamond is the 0_Y/1_Y case split"},
    {"THM_4_5_i", "thm:4.5.i", PropertyKind::Asserted, "diamond of 0_Y is 0_Y"},
    {"THM_4_5_ii", "thm:4.5.ii", PropertyKind::Asserted,
     "diamond is closure-fixed and below the closure"},
    {"THM_4_5_iii", "thm:4.5.iii", PropertyKind::Asserted,
     "complement outside the primal collapses diamond to 0_Y"},
    {"THM_4_5_iv", "thm:4.5.iv", PropertyKind::Asserted, "diamond is monotone"},
    {"THM_4_5_v", "thm:4.5.v", PropertyKind::Asserted, "diamond of diamond is below diamond"},
    {"THM_4_5_vi", "thm:4.5.vi", PropertyKind::Asserted, "diamond distributes over joins"},
    {"THM_4_5_vii", "thm:4.5.vii", PropertyKind::Asserted,
     "diamond of a meet is below the meet of diamonds"},
    {"THM_4_5_viii", "thm:4.5.viii", PropertyKind::Asserted,
     "joining a diamond-null set leaves diamond unchanged"},
    {"THM_4_6_INTERSECTION_FORM", "thm:4.6", PropertyKind::Asserted,
     "diamond is the meet of closures of the primal-complement differences"},
    {"THM_4_6_SINGLE_WITNESS", "thm:4.6", PropertyKind::Reported,
     "a single difference closure attains diamond (printed existential; per-instance)"},
    {"THM_4_7_i", "thm:4.7.i", PropertyKind::Asserted,
     "diamond is monotone in the primal"},
    {"THM_4_7_ii", "thm:4.7.ii", PropertyKind::Asserted,
     "diamond over a primal union is the join of diamonds"},
    {"THM_4_9_i", "thm:4.9.i", PropertyKind::Asserted, "the closure operator fixes 0_Y"},
    {"THM_4_9_ii", "thm:4.9.ii", PropertyKind::Asserted, "the closure operator is expansive"},
    {"THM_4_9_iii", "thm:4.9.iii", PropertyKind::Asserted, "the closure operator is monotone"},
    {"THM_4_9_iv", "thm:4.9.iv", PropertyKind::Asserted,
     "the closure operator distributes over joins"},
    {"THM_4_9_v", "thm:4.9.v", PropertyKind::Asserted, "the closure operator is idempotent"},
    {"THM_4_10_KURATOWSKI", "thm:4.10", PropertyKind::Asserted,
     "the induced closure satisfies all Kuratowski axioms"},
    {"THM_4_11_TOPOLOGY", "thm:4.11", PropertyKind::Asserted,
     "the fixed-complement family is a fuzzy topology"},
    {"THM_4_13_BASE", "thm:4.13", PropertyKind::Asserted,
     "the difference family is a base for the generated topology"},
    {"THM_4_14_FINER", "thm:4.14", PropertyKind::Asserted,
     "the generated topology refines the original"},
    {"EX_AFTER_4_12_TRIVIAL", "ex:4.12a", PropertyKind::Asserted,
     "the trivial primal reproduces the original topology"},
    {"EX_4_15_INCLUDED_POINT", "ex:4.15", PropertyKind::Asserted,
     "indiscrete plus point-excluding yields the included-point topology"},
    {"THM_4_16_i", "thm:4.16.i", PropertyKind::Asserted,
     "sets with complement outside the primal are closed in the generated topology"},
    {"THM_4_16_ii", "thm:4.16.ii", PropertyKind::Asserted,
     "every diamond image is closed in the generated topology"},
    {"THM_4_17_ANTITONE", "thm:4.17", PropertyKind::Asserted,
     "a larger primal yields a coarser generated topology"},
    {"THM_4_18_INTERSECTION", "thm:4.18", PropertyKind::Asserted,
     "the union primal generates the intersection of the generated topologies"},
    {"DIAMOND_POINT_SET_AGREEMENT", "artifact:diamond-point-set", PropertyKind::Asserted,
     "the point predicate and the induced set of diamond agree"},

    // Compatibility.
    {"DEF_5_1_VARIANTS_AGREE", "artifact:def-5.1-variants", PropertyKind::Asserted,
     "the definitional and support-based compatibility tests agree"},
    {"THM_5_3_RECONSTRUCTION", "thm:5.3", PropertyKind::Asserted,
     "every set is the join of its square and its diamond trace"},
    {"THM_5_4_POINT_DISJOINT", "thm:5.4", PropertyKind::Asserted,
     "no fuzzy point lies in the square and in the diamond of the square"},
    {"THM_5_4_SET_FORM", "thm:5.4", PropertyKind::Reported,
     "the square meets the diamond of the square in 0_Y (induced-set form; refutable)"},
    {"THM_5_5_EQUIVALENCE", "thm:5.5", PropertyKind::Asserted,
     "the five compatibility characterisations agree"},
    {"THM_5_6_IMPLIED", "thm:5.6", PropertyKind::Asserted,
     "the three weak conditions agree and follow from compatibility"},
    {"THM_5_7_IDEMPOTENT", "thm:5.7", PropertyKind::Asserted,
     "diamond is idempotent under compatibility"},
    {"THM_5_8_CLOSED_UNION", "thm:5.8", PropertyKind::Asserted,
     "under compatibility closed sets are exactly closed-part/null-part joins"},
    {"THM_5_9_BASE_EQUALS_TOPOLOGY", "thm:5.9", PropertyKind::Asserted,
     "under compatibility the base family is the whole generated topology"},
    {"BASE_IS_TOPOLOGY", "artifact:base-is-topology", PropertyKind::Reported,
     "the base family is itself a topology (false in general; search target)"},
};

/// Every numbered claim the harness must cover, one tag per claim.
inline constexpr std::string_view kClaimManifest[] = {
    "remark:2.6.i", "remark:2.6.ii", "remark:2.6.iii",
    "lemma:2.10.i", "lemma:2.10.ii", "lemma:2.10.iii",
    "thm:3.2", "ex:3.3.i", "ex:3.3.ii", "ex:3.3.iii", "ex:3.3.iv",
    "thm:3.4", "cor:3.4", "thm:3.5", "ex:3.6",
    "ex:4.3", "ex:4.4",
    "thm:4.5.i", "thm:4.5.ii", "thm:4.5.iii", "thm:4.5.iv",
    "thm:4.5.v", "thm:4.5.vi", "thm:4.5.vii", "thm:4.5.viii",
    "thm:4.6", "thm:4.7.i", "thm:4.7.ii",
    "thm:4.9.i", "thm:4.9.ii", "thm:4.9.iii", "thm:4.9.iv", "thm:4.9.v",
    "thm:4.10", "thm:4.11", "ex:4.12a", "thm:4.13", "thm:4.14", "ex:4.15",
    "thm:4.16.i", "thm:4.16.ii", "thm:4.17", "thm:4.18",
    "thm:5.3", "thm:5.4", "thm:5.5", "thm:5.6", "thm:5.7", "thm:5.8", "thm:5.9",
};

namespace detail {

consteval bool claim_covered(std::string_view claim) {
  for (const auto& p : kPropertyRegistry)
    if (p.claim == claim) return true;
  return false;
}

consteval bool all_claims_covered() {
  for (const auto& claim : kClaimManifest)
    if (!claim_covered(claim)) return false;
  return true;
}

consteval bool ids_unique() {
  const auto n = sizeof(kPropertyRegistry) / sizeof(kPropertyRegistry[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (kPropertyRegistry[i].id == kPropertyRegistry[j].id) return false;
  return true;
}

}  // namespace detail

static_assert(detail::all_claims_covered(),
              "a manifest claim has no registered property id");
static_assert(detail::ids_unique(), "duplicate property id in the registry");

/// nullptr when the id is unknown.
const PropertyDef* find_property(std::string_view id);

}  // namespace fpt
