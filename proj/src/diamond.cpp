#include "fpt/diamond.hpp"

namespace fpt {

PrimalSpace::PrimalSpace(FuzzyTopology topology, FuzzyPrimal primal)
    : topology_(std::move(topology)), primal_(std::move(primal)) {
  require_same_space(topology_.space(), primal_.space());
  open_complements_.reserve(topology_.opens.size());
  for (const auto& mu : topology_.opens) open_complements_.push_back(complement(mu));
}

PrimalSpaceResult make_primal_space(FuzzyTopology topology, FuzzyPrimal primal, Budget budget) {
  if (topology.space() != primal.space())
    return {std::nullopt,
            ValidationReport::fail("primal-space", "i", "topology and primal disagree on the space", {})};
  auto top_report = validate_topology(topology.opens);
  if (!top_report.ok) return {std::nullopt, std::move(top_report)};
  auto primal_report = validate_primal_def(primal.members, budget);
  if (!primal_report.ok) return {std::nullopt, std::move(primal_report)};
  return {PrimalSpace(std::move(topology), std::move(primal)),
          ValidationReport::pass("primal-space")};
}

bool point_in_diamond(const PrimalSpace& s, const FuzzySet& lambda, FuzzyPoint p) {
  require_same_space(s.space(), lambda.space());
  const int k = s.space().denom();
  const FuzzySet lambda_c = complement(lambda);
  const auto& opens = s.topology().opens;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (p.t + opens[i][p.elem] <= k) continue;  // not an open q-neighborhood
    if (!s.primal().contains(oplus(lambda_c, s.open_complement(i)))) return false;
  }
  return true;
}

FuzzySet diamond(const PrimalSpace& s, const FuzzySet& lambda) {
  require_same_space(s.space(), lambda.space());
  const Space& sp = s.space();
  const int k = sp.denom();
  const FuzzySet lambda_c = complement(lambda);
  const auto& opens = s.topology().opens;
  std::vector<int> out(static_cast<std::size_t>(sp.size()), 0);
  for (int y = 0; y < sp.size(); ++y) {
    // Q(y_t) grows with t, so membership is antitone in t: descending scan,
    // first passing t is the maximum.
    for (int t = k; t >= 1; --t) {
      bool in = true;
      for (std::size_t i = 0; i < opens.size(); ++i) {
        if (t + opens[i][y] <= k) continue;
        if (!s.primal().contains(oplus(lambda_c, s.open_complement(i)))) {
          in = false;
          break;
        }
      }
      if (in) {
        out[static_cast<std::size_t>(y)] = t;
        break;
      }
    }
  }
  return FuzzySet(sp, std::move(out));
}

FuzzySet cl_diamond(const PrimalSpace& s, const FuzzySet& lambda) {
  return join(lambda, diamond(s, lambda));
}

bool in_primal_topology(const PrimalSpace& s, const FuzzySet& mu) {
  const FuzzySet mu_c = complement(mu);
  return leq(diamond(s, mu_c), mu_c);
}

FuzzyTopology primal_topology(const PrimalSpace& s, Budget budget) {
  std::vector<FuzzySet> opens;
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet mu = stream.next();
    if (in_primal_topology(s, mu)) opens.push_back(std::move(mu));
  }
  return FuzzyTopology{FuzzyFamily(s.space(), std::move(opens))};
}

FuzzyFamily primal_base(const PrimalSpace& s, Budget budget) {
  std::vector<FuzzySet> out;
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    if (s.primal().contains(lambda)) continue;
    const FuzzySet lambda_c = complement(lambda);
    for (const auto& mu : s.topology().opens) out.push_back(trunc_diff(mu, lambda_c));
  }
  return FuzzyFamily(s.space(), std::move(out));
}

DiamondTable::DiamondTable(const PrimalSpace& s, Budget budget) : space_(s) {
  const std::uint64_t n = s.space().lattice_size();
  if (n > budget.max_sets) throw BudgetExceeded(n, budget.max_sets);
  table_.assign(static_cast<std::size_t>(n), -1);
}

std::uint64_t DiamondTable::diamond_rank(std::uint64_t rank) {
  auto& slot = table_.at(static_cast<std::size_t>(rank));
  if (slot < 0)
    slot = static_cast<std::int64_t>(rank_of(diamond(space_, set_at_rank(space_.space(), rank))));
  return static_cast<std::uint64_t>(slot);
}

FuzzySet DiamondTable::diamond_of(const FuzzySet& set) {
  return set_at_rank(space_.space(), diamond_rank(rank_of(set)));
}

TwoPrimalReport diamond_monotone_in_primal(const FuzzyTopology& t, const FuzzyPrimal& p1,
                                           const FuzzyPrimal& p2, const FuzzySet& lambda) {
  require_same_space(t.space(), p1.space());
  require_same_space(t.space(), p2.space());
  require_same_space(t.space(), lambda.space());
  TwoPrimalReport report;

  const PrimalSpace s1(t, p1);
  const PrimalSpace s2(t, p2);
  const PrimalSpace su(t, primal_union(p1, p2));

  const FuzzySet d1 = diamond(s1, lambda);
  const FuzzySet d2 = diamond(s2, lambda);
  const FuzzySet du = diamond(su, lambda);

  report.primals_nested = std::includes(p2.members.begin(), p2.members.end(),
                                        p1.members.begin(), p1.members.end());
  if (report.primals_nested && !leq(d1, d2)) {
    report.monotone_ok = false;
    report.witness = lambda;
    report.detail = "diamond not monotone under primal containment";
  }
  if (du != join(d1, d2)) {
    report.union_formula_ok = false;
    report.witness = lambda;
    report.detail = "union formula failed: diamond over union != join of diamonds";
  }
  return report;
}

DecompositionReport diamond_vs_closure_decomposition(const PrimalSpace& s, const FuzzySet& mu,
                                                     Budget budget) {
  require_same_space(s.space(), mu.space());
  DecompositionReport report;
  const FuzzySet dia = diamond(s, mu);
  FuzzySet acc = FuzzySet::one(s.space());
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    if (s.primal().contains(lambda)) continue;
    const FuzzySet cl = closure(s.topology(), trunc_diff(mu, complement(lambda)));
    if (!leq(dia, cl)) {
      report.inclusion_ok = false;
      report.failure_lambda = lambda;
    }
    if (cl == dia && !report.single_witness_exists) {
      report.single_witness_exists = true;
      report.witness_lambda = lambda;
    }
    acc = meet(acc, cl);
  }
  report.meet_equality_ok = (acc == dia);
  return report;
}

}  // namespace fpt
