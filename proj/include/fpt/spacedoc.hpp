#pragma once

#include <optional>

#include "fpt/diamond.hpp"

/// \file spacedoc.hpp
/// The space-description file format.
///
/// Documents are line-oriented and rigidly canonical: fixed key order, single
/// spaces, two-space indents for member lines, members sorted
/// lexicographically, one trailing newline.  Because only canonical text is
/// accepted, parse and serialize round-trip bit-exactly.
///
///   fuzzyspace v1
///   elements y z
///   k 10
///   topology explicit
///     0 0
///     10 10
///   primal point_excluding y 7
///   primal2 point_excluding z 8
///   intersect
///
/// Topology modes: "explicit" (the full open family) or "generate" (seed
/// members; the smallest topology containing them is built).  Primal kinds:
/// "trivial", "point_excluding <label> <t-numerator>", or "explicit" with
/// member lines.  The optional second primal serves the two-primal theorems;
/// the optional trailing "intersect" directive asks validation to check the
/// raw intersection family of the two primals as well.

namespace fpt {

struct ParseError : std::runtime_error {
  int line;  // 1-based
  ParseError(int line_, const std::string& what);
};

struct PrimalSpec {
  enum class Kind { Trivial, PointExcluding, Explicit };
  Kind kind = Kind::Trivial;
  std::string element;  // point_excluding only
  int t0 = 1;           // numerator, point_excluding only
  std::vector<std::vector<int>> members;  // explicit only, sorted
};

struct SpaceDocument {
  std::vector<std::string> labels;
  int denom = 1;
  bool topology_generate = false;
  std::vector<std::vector<int>> topology_members;  // opens or seed, sorted
  PrimalSpec primal;
  std::optional<PrimalSpec> primal2;
  bool intersect = false;
};

/// Strict parse of canonical text; throws ParseError with the offending line.
SpaceDocument parse_space_document(std::string_view text);

/// Canonical rendering; parse(serialize(d)) == d for every valid document.
std::string serialize(const SpaceDocument& doc);

/// A document turned into live structures.
struct RealizedSpace {
  Space space;
  FuzzyTopology topology;
  FuzzyPrimal primal;
  std::optional<FuzzyPrimal> primal2;
  bool intersect = false;

  PrimalSpace primal_space() const { return PrimalSpace(topology, primal); }
};

/// Validates everything the document declares (topology axioms, primal axioms
/// for each primal).  Failures come back as the witness report, not an
/// exception; BudgetExceeded still throws.
struct RealizeResult {
  std::optional<RealizedSpace> value;
  ValidationReport report;
};
RealizeResult realize(const SpaceDocument& doc, Budget budget = {});

}  // namespace fpt
