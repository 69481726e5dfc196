#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpt/core.hpp"

namespace fpt {

/// A finite set of fuzzy sets over one space, kept sorted in lexicographic
/// order with duplicates removed.  Backs topologies, primals, grills and
/// bases.
class FuzzyFamily {
 public:
  explicit FuzzyFamily(Space space) : space_(std::move(space)) {}
  FuzzyFamily(Space space, std::vector<FuzzySet> members);

  const Space& space() const noexcept { return space_; }
  const std::vector<FuzzySet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const FuzzySet& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const FuzzySet& s) const;

  /// Returns a copy with s added (no-op when already present).
  FuzzyFamily with(const FuzzySet& s) const;

  FuzzyFamily set_union(const FuzzyFamily& other) const;
  FuzzyFamily set_intersection(const FuzzyFamily& other) const;
  /// Pointwise-complement image of every member.
  FuzzyFamily complement_image() const;

  bool operator==(const FuzzyFamily& other) const;
  bool operator!=(const FuzzyFamily& other) const { return !(*this == other); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  Space space_;
  std::vector<FuzzySet> members_;
};

/// Outcome of a structure validation.  Failures carry the violated axiom
/// and a concrete witness so downstream tooling can re-check or report it;
/// validation never throws on a bad family.
struct ValidationReport {
  bool ok = true;
  std::string structure;           // "topology", "primal", "grill"
  std::string axiom;               // "i", "ii", "iii" per the defining axioms
  std::string detail;              // human-readable explanation
  std::vector<FuzzySet> witnesses;

  static ValidationReport pass(std::string structure);
  static ValidationReport fail(std::string structure, std::string axiom, std::string detail,
                               std::vector<FuzzySet> witnesses);

  /// One-line rendering, stable across runs.
  std::string str() const;
};

}  // namespace fpt
