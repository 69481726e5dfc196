#include "fpt/compatibility.hpp"

namespace fpt {

SquareView square(const PrimalSpace& s, const FuzzySet& lambda) {
  require_same_space(s.space(), lambda.space());
  FuzzySet dia = diamond(s, lambda);
  std::vector<int> induced(static_cast<std::size_t>(lambda.size()), 0);
  for (int y = 0; y < lambda.size(); ++y)
    if (lambda[y] > dia[y]) induced[static_cast<std::size_t>(y)] = lambda[y];
  return SquareView{lambda, std::move(dia), FuzzySet(lambda.space(), std::move(induced))};
}

namespace {

// Every fuzzy point of lambda fails to be in lambda-diamond, checked point
// by point straight from the definition.
bool every_point_escapes_diamond(const PrimalSpace& s, const FuzzySet& lambda) {
  for (int y = 0; y < lambda.size(); ++y)
    for (int t = 1; t <= lambda[y]; ++t)
      if (point_in_diamond(s, lambda, FuzzyPoint{y, t})) return false;
  return true;
}

}  // namespace

CompatibilityReport compatibility_report(const PrimalSpace& s, Budget budget) {
  CompatibilityReport report;
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    const FuzzySet lambda_c = complement(lambda);
    if (every_point_escapes_diamond(s, lambda) && s.primal().contains(lambda_c)) {
      report.via_definition = false;
      if (!report.witness) report.witness = lambda;
    }
    const FuzzySet dia = diamond(s, lambda);
    if (is_zero(meet(lambda, dia)) && s.primal().contains(lambda_c)) {
      report.via_support = false;
      if (!report.witness) report.witness = lambda;
    }
    if (s.primal().contains(lambda_c) && !leq(lambda, dia)) {
      report.strict_variant = false;
      if (!report.strict_witness) report.strict_witness = lambda;
    }
  }
  return report;
}

bool is_compatible(const PrimalSpace& s, Budget budget) {
  return compatibility_report(s, budget).via_definition;
}

namespace {

// Enumerates all sigma <= lambda; returns false (never calling fn again)
// once fn returns false.
template <typename Fn>
bool for_each_subset(const FuzzySet& lambda, Fn&& fn) {
  std::vector<int> v(static_cast<std::size_t>(lambda.size()), 0);
  for (;;) {
    if (!fn(FuzzySet(lambda.space(), v))) return false;
    int i = lambda.size() - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == lambda[i]) {
      v[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
    ++v[static_cast<std::size_t>(i)];
  }
}

std::uint64_t subset_count(const FuzzySet& lambda) {
  std::uint64_t total = 1;
  for (int y = 0; y < lambda.size(); ++y) {
    const auto factor = static_cast<std::uint64_t>(lambda[y]) + 1;
    if (total > UINT64_MAX / factor) return UINT64_MAX;
    total *= factor;
  }
  return total;
}

}  // namespace

EquivalenceReport c3_equivalence_report(const PrimalSpace& s, Budget budget) {
  EquivalenceReport report;
  DiamondTable table(s, budget);
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    const FuzzySet lambda_c = complement(lambda);
    const FuzzySet dia = table.diamond_of(lambda);
    const bool comp_in_primal = s.primal().contains(lambda_c);

    // (i) the defining quantifier over fuzzy points of lambda.
    if (every_point_escapes_diamond(s, lambda) && comp_in_primal) {
      report.clause[0] = false;
      if (!report.clause_witness[0]) report.clause_witness[0] = lambda;
    }
    // (ii) support disjointness.
    if (is_zero(meet(lambda, dia)) && comp_in_primal) {
      report.clause[1] = false;
      if (!report.clause_witness[1]) report.clause_witness[1] = lambda;
    }
    // (iii) complement of the square never in the primal.
    std::vector<int> induced_vals(static_cast<std::size_t>(lambda.size()), 0);
    for (int y = 0; y < lambda.size(); ++y)
      if (lambda[y] > dia[y]) induced_vals[static_cast<std::size_t>(y)] = lambda[y];
    const FuzzySet induced(lambda.space(), std::move(induced_vals));
    if (s.primal().contains(complement(induced))) {
      report.clause[2] = false;
      if (!report.clause_witness[2]) report.clause_witness[2] = lambda;
    }
    // (iv) absence of a nonzero sigma <= lambda with sigma <= diamond(sigma).
    if (subset_count(lambda) > budget.max_sets)
      throw BudgetExceeded(subset_count(lambda), budget.max_sets);
    bool has_expansive_subset = !for_each_subset(lambda, [&](const FuzzySet& sigma) {
      if (is_zero(sigma)) return true;
      return !leq(sigma, table.diamond_of(sigma));  // stop when found
    });
    if (!has_expansive_subset && comp_in_primal) {
      report.clause[3] = false;
      if (!report.clause_witness[3]) report.clause_witness[3] = lambda;
    }
    // (v) clause (iii) restricted to closed sets of the generated topology.
    if (leq(dia, lambda) && s.primal().contains(complement(induced))) {
      report.clause[4] = false;
      if (!report.clause_witness[4]) report.clause_witness[4] = lambda;
    }
  }
  return report;
}

C4Report c4_report(const PrimalSpace& s, Budget budget) {
  C4Report report;
  report.compatible = is_compatible(s, budget);
  DiamondTable table(s, budget);
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    const FuzzySet dia = table.diamond_of(lambda);
    if (is_zero(meet(lambda, dia)) && !is_zero(dia)) {
      report.clause[0] = false;
      if (!report.clause_witness[0]) report.clause_witness[0] = lambda;
    }
    std::vector<int> induced(static_cast<std::size_t>(lambda.size()), 0);
    for (int y = 0; y < lambda.size(); ++y)
      if (lambda[y] > dia[y]) induced[static_cast<std::size_t>(y)] = lambda[y];
    if (!is_zero(table.diamond_of(FuzzySet(lambda.space(), std::move(induced))))) {
      report.clause[1] = false;
      if (!report.clause_witness[1]) report.clause_witness[1] = lambda;
    }
    if (table.diamond_of(meet(lambda, dia)) != dia) {
      report.clause[2] = false;
      if (!report.clause_witness[2]) report.clause_witness[2] = lambda;
    }
  }
  return report;
}

C5Report c5_idempotence(const PrimalSpace& s, Budget budget) {
  C5Report report;
  report.compatible = is_compatible(s, budget);
  DiamondTable table(s, budget);
  LatticeStream stream(s.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    const FuzzySet dia = table.diamond_of(lambda);
    if (table.diamond_of(dia) != dia) {
      report.idempotent = false;
      if (!report.witness) report.witness = lambda;
    }
  }
  return report;
}

bool closed_union_pair_exists(const PrimalSpace& s, const FuzzySet& lambda, Budget budget) {
  const FuzzyFamily closed = s.topology().closed_sets();
  for (const auto& c : closed) {
    if (!leq(c, lambda)) continue;
    LatticeStream stream(s.space(), budget);
    while (!stream.done()) {
      FuzzySet e = stream.next();
      if (!leq(e, lambda)) continue;
      if (join(c, e) != lambda) continue;
      if (!s.primal().contains(complement(e))) return true;
    }
  }
  return false;
}

ClosedDecomposition closed_decomposition(const PrimalSpace& s, const FuzzySet& lambda,
                                         Budget budget) {
  ClosedDecomposition result{ClosedDecomposition::Status::Ok, FuzzySet::zero(s.space()),
                             FuzzySet::zero(s.space()), false};
  if (!is_compatible(s, budget)) {
    result.status = ClosedDecomposition::Status::NotCompatible;
    return result;
  }
  const FuzzySet dia = diamond(s, lambda);
  if (!leq(dia, lambda)) {
    result.status = ClosedDecomposition::Status::NotClosed;
    return result;
  }
  // Canonical pair: the diamond and the square.
  const SquareView sq = square(s, lambda);
  const bool canonical_ok = s.topology().contains(complement(dia)) &&
                            !s.primal().contains(complement(sq.induced)) &&
                            join(dia, sq.induced) == lambda;
  if (canonical_ok) {
    result.closed_part = dia;
    result.small_part = sq.induced;
    result.canonical_pair_valid = true;
    return result;
  }
  // Fall back to a scan for any qualifying pair.
  const FuzzyFamily closed = s.topology().closed_sets();
  for (const auto& c : closed) {
    if (!leq(c, lambda)) continue;
    LatticeStream stream(s.space(), budget);
    while (!stream.done()) {
      FuzzySet e = stream.next();
      if (!leq(e, lambda)) continue;
      if (join(c, e) != lambda) continue;
      if (s.primal().contains(complement(e))) continue;
      result.closed_part = c;
      result.small_part = std::move(e);
      return result;
    }
  }
  result.status = ClosedDecomposition::Status::NoPair;
  return result;
}

BaseTopologyReport base_equals_topology(const PrimalSpace& s, Budget budget) {
  BaseTopologyReport report;
  report.compatible = is_compatible(s, budget);
  report.equal = (primal_base(s, budget) == primal_topology(s, budget).opens);
  return report;
}

}  // namespace fpt
