#include "fpt/family.hpp"

#include <algorithm>

namespace fpt {

FuzzyFamily::FuzzyFamily(Space space, std::vector<FuzzySet> members)
    : space_(std::move(space)), members_(std::move(members)) {
  for (const auto& m : members_) require_same_space(m.space(), space_);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FuzzyFamily::contains(const FuzzySet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

FuzzyFamily FuzzyFamily::with(const FuzzySet& s) const {
  if (contains(s)) return *this;
  auto ms = members_;
  ms.push_back(s);
  return FuzzyFamily(space_, std::move(ms));
}

FuzzyFamily FuzzyFamily::set_union(const FuzzyFamily& other) const {
  require_same_space(space_, other.space_);
  auto ms = members_;
  ms.insert(ms.end(), other.members_.begin(), other.members_.end());
  return FuzzyFamily(space_, std::move(ms));
}

FuzzyFamily FuzzyFamily::set_intersection(const FuzzyFamily& other) const {
  require_same_space(space_, other.space_);
  std::vector<FuzzySet> ms;
  for (const auto& m : members_)
    if (other.contains(m)) ms.push_back(m);
  return FuzzyFamily(space_, std::move(ms));
}

FuzzyFamily FuzzyFamily::complement_image() const {
  std::vector<FuzzySet> ms;
  ms.reserve(members_.size());
  for (const auto& m : members_) ms.push_back(complement(m));
  return FuzzyFamily(space_, std::move(ms));
}

bool FuzzyFamily::operator==(const FuzzyFamily& other) const {
  return space_ == other.space_ && members_ == other.members_;
}

ValidationReport ValidationReport::pass(std::string structure) {
  ValidationReport r;
  r.ok = true;
  r.structure = std::move(structure);
  return r;
}

ValidationReport ValidationReport::fail(std::string structure, std::string axiom,
                                        std::string detail, std::vector<FuzzySet> witnesses) {
  ValidationReport r;
  r.ok = false;
  r.structure = std::move(structure);
  r.axiom = std::move(axiom);
  r.detail = std::move(detail);
  r.witnesses = std::move(witnesses);
  return r;
}

std::string ValidationReport::str() const {
  if (ok) return structure + ": valid";
  std::string out = structure + ": axiom (" + axiom + ") violated: " + detail;
  if (!witnesses.empty()) {
    out += " [witness";
    for (const auto& w : witnesses) out += " (" + w.str() + ")";
    out += "]";
  }
  return out;
}

}  // namespace fpt
