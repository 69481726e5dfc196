#include "fpt/structures.hpp"

#include <algorithm>

namespace fpt {

ValidationReport validate_topology(const FuzzyFamily& f) {
  const Space& s = f.space();
  const auto zero = FuzzySet::zero(s);
  const auto one = FuzzySet::one(s);
  if (!f.contains(zero))
    return ValidationReport::fail("topology", "i", "0_Y missing", {zero});
  if (!f.contains(one))
    return ValidationReport::fail("topology", "i", "1_Y missing", {one});
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      if (!f.contains(meet(f[i], f[j])))
        return ValidationReport::fail("topology", "ii", "not closed under pairwise meet",
                                      {f[i], f[j]});
      if (!f.contains(join(f[i], f[j])))
        return ValidationReport::fail("topology", "iii", "not closed under pairwise join",
                                      {f[i], f[j]});
    }
  }
  return ValidationReport::pass("topology");
}

ValidationReport validate_primal_def(const FuzzyFamily& f, Budget budget) {
  const Space& s = f.space();
  if (f.empty()) {
    auto report = ValidationReport::pass("primal");
    report.detail = "empty family: all axioms hold vacuously";
    return report;
  }
  if (f.contains(FuzzySet::one(s)))
    return ValidationReport::fail("primal", "i", "1_Y is a member", {FuzzySet::one(s)});
  // Downward closure: every lattice set below a member is a member.
  LatticeStream below(s, budget);
  while (!below.done()) {
    FuzzySet nu = below.next();
    if (f.contains(nu)) continue;
    for (const auto& mu : f) {
      if (leq(nu, mu))
        return ValidationReport::fail("primal", "ii", "not downward closed", {mu, nu});
    }
  }
  // Meet-primeness over all lattice pairs.
  LatticeStream outer(s, budget);
  while (!outer.done()) {
    FuzzySet mu = outer.next();
    if (f.contains(mu)) continue;
    LatticeStream inner(s, budget);
    while (!inner.done()) {
      FuzzySet nu = inner.next();
      if (f.contains(nu)) continue;
      if (f.contains(meet(mu, nu)))
        return ValidationReport::fail("primal", "iii",
                                      "meet is a member but neither operand is", {mu, nu});
    }
  }
  return ValidationReport::pass("primal");
}

ValidationReport validate_primal_iff(const FuzzyFamily& f, Budget budget) {
  const Space& s = f.space();
  if (f.empty()) {
    auto report = ValidationReport::pass("primal");
    report.detail = "empty family: all axioms hold vacuously";
    return report;
  }
  if (f.contains(FuzzySet::one(s)))
    return ValidationReport::fail("primal", "i", "1_Y is a member", {FuzzySet::one(s)});
  // Non-membership is upward closed: mu not member and mu <= nu forces nu out.
  LatticeStream outer(s, budget);
  while (!outer.done()) {
    FuzzySet mu = outer.next();
    if (f.contains(mu)) continue;
    for (const auto& nu : f) {
      if (leq(mu, nu))
        return ValidationReport::fail("primal", "ii", "not downward closed", {nu, mu});
    }
  }
  // Non-membership closed under meet.
  outer.reset();
  while (!outer.done()) {
    FuzzySet mu = outer.next();
    if (f.contains(mu)) continue;
    LatticeStream inner(s, budget);
    while (!inner.done()) {
      FuzzySet nu = inner.next();
      if (f.contains(nu)) continue;
      if (f.contains(meet(mu, nu)))
        return ValidationReport::fail("primal", "iii",
                                      "meet is a member but neither operand is", {mu, nu});
    }
  }
  return ValidationReport::pass("primal");
}

ValidationReport validate_grill(const FuzzyFamily& f, Budget budget) {
  const Space& s = f.space();
  if (f.empty()) {
    auto report = ValidationReport::pass("grill");
    report.detail = "empty family: all axioms hold vacuously";
    return report;
  }
  if (f.contains(FuzzySet::zero(s)))
    return ValidationReport::fail("grill", "i", "0_Y is a member", {FuzzySet::zero(s)});
  LatticeStream above(s, budget);
  while (!above.done()) {
    FuzzySet nu = above.next();
    if (f.contains(nu)) continue;
    for (const auto& mu : f) {
      if (leq(mu, nu))
        return ValidationReport::fail("grill", "ii", "not upward closed", {mu, nu});
    }
  }
  LatticeStream outer(s, budget);
  while (!outer.done()) {
    FuzzySet mu = outer.next();
    if (f.contains(mu)) continue;
    LatticeStream inner(s, budget);
    while (!inner.done()) {
      FuzzySet nu = inner.next();
      if (f.contains(nu)) continue;
      if (f.contains(join(mu, nu)))
        return ValidationReport::fail("grill", "iii",
                                      "join is a member but neither operand is", {mu, nu});
    }
  }
  return ValidationReport::pass("grill");
}

bool is_meet_prime_witness(const FuzzyFamily& f, const FuzzySet& mu, const FuzzySet& nu) {
  return f.contains(meet(mu, nu)) && !f.contains(mu) && !f.contains(nu);
}

TopologyResult make_topology(FuzzyFamily f) {
  auto report = validate_topology(f);
  if (!report.ok) return {std::nullopt, std::move(report)};
  return {FuzzyTopology{std::move(f)}, std::move(report)};
}

FuzzyTopology generate_topology(const FuzzyFamily& seed, Budget budget) {
  const Space& s = seed.space();
  std::vector<FuzzySet> work = seed.members().empty()
                                   ? std::vector<FuzzySet>{}
                                   : std::vector<FuzzySet>(seed.begin(), seed.end());
  work.push_back(FuzzySet::zero(s));
  work.push_back(FuzzySet::one(s));
  FuzzyFamily family(s, std::move(work));
  // Fixpoint under pairwise meet/join; bounded by the lattice size.
  for (;;) {
    std::vector<FuzzySet> fresh;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        FuzzySet m = meet(family[i], family[j]);
        FuzzySet u = join(family[i], family[j]);
        if (!family.contains(m)) fresh.push_back(std::move(m));
        if (!family.contains(u)) fresh.push_back(std::move(u));
      }
    }
    if (fresh.empty()) break;
    auto merged = family.members();
    merged.insert(merged.end(), fresh.begin(), fresh.end());
    family = FuzzyFamily(s, std::move(merged));
    if (family.size() > budget.max_sets) throw BudgetExceeded(family.size(), budget.max_sets);
  }
  return FuzzyTopology{std::move(family)};
}

FuzzyPrimal make_trivial_primal(const Space& s, Budget budget) {
  std::vector<FuzzySet> members;
  LatticeStream stream(s, budget);
  while (!stream.done()) {
    FuzzySet set = stream.next();
    if (!is_one(set)) members.push_back(std::move(set));
  }
  return FuzzyPrimal{FuzzyFamily(s, std::move(members))};
}

FuzzyPrimal make_point_excluding_primal(const Space& s, int elem, int t0, Budget budget) {
  if (elem < 0 || elem >= s.size()) throw std::invalid_argument("element index out of range");
  if (t0 < 1 || t0 > s.denom()) throw std::invalid_argument("t0 must be a positive grid value");
  std::vector<FuzzySet> members;
  LatticeStream stream(s, budget);
  while (!stream.done()) {
    FuzzySet set = stream.next();
    if (set[elem] < t0) members.push_back(std::move(set));
  }
  return FuzzyPrimal{FuzzyFamily(s, std::move(members))};
}

PrimalResult make_explicit_primal(FuzzyFamily f, Budget budget) {
  auto report = validate_primal_def(f, budget);
  if (!report.ok) return {std::nullopt, std::move(report)};
  return {FuzzyPrimal{std::move(f)}, std::move(report)};
}

GrillResult make_explicit_grill(FuzzyFamily f, Budget budget) {
  auto report = validate_grill(f, budget);
  if (!report.ok) return {std::nullopt, std::move(report)};
  return {FuzzyGrill{std::move(f)}, std::move(report)};
}

FuzzyPrimal primal_from_grill(const FuzzyGrill& g) {
  return FuzzyPrimal{g.members.complement_image()};
}

FuzzyGrill grill_from_primal(const FuzzyPrimal& p) {
  return FuzzyGrill{p.members.complement_image()};
}

FuzzyPrimal primal_union(const FuzzyPrimal& a, const FuzzyPrimal& b) {
  return FuzzyPrimal{a.members.set_union(b.members)};
}

FuzzyFamily primal_intersection_raw(const FuzzyPrimal& a, const FuzzyPrimal& b) {
  return a.members.set_intersection(b.members);
}

FuzzyFamily open_q_nbhds(const FuzzyTopology& t, FuzzyPoint p) {
  const int k = t.space().denom();
  std::vector<FuzzySet> out;
  for (const auto& eta : t.opens)
    if (p.t + eta[p.elem] > k) out.push_back(eta);
  return FuzzyFamily(t.space(), std::move(out));
}

bool is_nbhd(const FuzzyTopology& t, FuzzyPoint p, const FuzzySet& eta) {
  require_same_space(t.space(), eta.space());
  for (const auto& mu : t.opens)
    if (point_in(p, mu) && leq(mu, eta)) return true;
  return false;
}

bool is_q_nbhd(const FuzzyTopology& t, FuzzyPoint p, const FuzzySet& eta) {
  require_same_space(t.space(), eta.space());
  for (const auto& mu : t.opens)
    if (quasi_coincident(p, mu) && leq(mu, eta)) return true;
  return false;
}

FuzzySet interior(const FuzzyTopology& t, const FuzzySet& lambda) {
  require_same_space(t.space(), lambda.space());
  FuzzySet acc = FuzzySet::zero(t.space());
  for (const auto& mu : t.opens)
    if (leq(mu, lambda)) acc = join(acc, mu);
  return acc;
}

FuzzySet closure(const FuzzyTopology& t, const FuzzySet& lambda) {
  require_same_space(t.space(), lambda.space());
  const Space& s = t.space();
  const int k = s.denom();
  std::vector<int> out(static_cast<std::size_t>(s.size()), 0);
  for (int y = 0; y < s.size(); ++y) {
    // Q(y_t) only grows with t, so the closure predicate is antitone in t:
    // the first passing t in a descending scan is the maximum.
    for (int val = k; val >= 1; --val) {
      bool all_quasi = true;
      for (const auto& eta : t.opens) {
        if (val + eta[y] <= k) continue;  // not a q-neighborhood of y_val
        if (!quasi_coincident(eta, lambda)) {
          all_quasi = false;
          break;
        }
      }
      if (all_quasi) {
        out[static_cast<std::size_t>(y)] = val;
        break;
      }
    }
  }
  return FuzzySet(s, std::move(out));
}

FuzzySet closure_via_interior(const FuzzyTopology& t, const FuzzySet& lambda) {
  return complement(interior(t, complement(lambda)));
}

bool is_base_for(const FuzzyFamily& b, const FuzzyTopology& t) {
  require_same_space(b.space(), t.space());
  for (const auto& beta : b)
    if (!t.contains(beta))
      throw std::invalid_argument("base candidate is not a subfamily of the topology");
  const Space& s = t.space();
  const int k = s.denom();
  for (int y = 0; y < s.size(); ++y) {
    for (int val = 1; val <= k; ++val) {
      for (const auto& mu : t.opens) {
        if (val + mu[y] <= k) continue;  // mu not an open q-neighborhood of y_val
        bool served = false;
        for (const auto& beta : b) {
          if (val + beta[y] > k && leq(beta, mu)) {
            served = true;
            break;
          }
        }
        if (!served) return false;
      }
    }
  }
  return true;
}

}  // namespace fpt
