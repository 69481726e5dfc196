#include "fpt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "json.hpp"

namespace fpt {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::RefutedPaperClaim: return "refuted-paper-claim";
    case Verdict::Incomplete: return "incomplete";
  }
  return "unknown";
}

namespace {

std::string wit(const char* name, const FuzzySet& s) {
  return std::string(name) + "=" + s.str();
}

struct Outcome {
  bool holds = true;
  std::vector<std::string> witness;

  void fail(std::vector<std::string> w) {
    if (!holds) return;  // keep the first witness only
    holds = false;
    witness = std::move(w);
  }
};

/// Per-space evaluation context with lazily built caches shared between
/// properties: diamond tables for the primal, the second primal and their
/// union, and the generated topologies of all three.
class Ctx {
 public:
  Ctx(const GeneratedSpace& gs, Budget budget) : gs_(gs), budget_(budget) {}

  const Space& space() const { return gs_.ps.space(); }
  const PrimalSpace& ps() const { return gs_.ps; }
  const FuzzyPrimal& primal() const { return gs_.ps.primal(); }
  const FuzzyPrimal& primal2() const { return gs_.primal2; }
  const FuzzyTopology& topology() const { return gs_.ps.topology(); }
  Budget budget() const { return budget_; }
  const std::string& digest() const { return gs_.digest; }

  DiamondTable& table() {
    if (!table_) table_.emplace(gs_.ps, budget_);
    return *table_;
  }
  const PrimalSpace& ps2() {
    if (!ps2_) ps2_.emplace(gs_.ps.topology(), gs_.primal2);
    return *ps2_;
  }
  DiamondTable& table2() {
    if (!table2_) table2_.emplace(ps2(), budget_);
    return *table2_;
  }
  const PrimalSpace& psu() {
    if (!psu_) psu_.emplace(gs_.ps.topology(), primal_union(gs_.ps.primal(), gs_.primal2));
    return *psu_;
  }
  DiamondTable& tableu() {
    if (!tableu_) tableu_.emplace(psu(), budget_);
    return *tableu_;
  }
  const FuzzyTopology& ptop() {
    if (!ptop_) ptop_ = primal_topology(gs_.ps, budget_);
    return *ptop_;
  }
  const FuzzyTopology& ptop2() {
    if (!ptop2_) ptop2_ = primal_topology(ps2(), budget_);
    return *ptop2_;
  }
  const FuzzyTopology& ptopu() {
    if (!ptopu_) ptopu_ = primal_topology(psu(), budget_);
    return *ptopu_;
  }

  FuzzySet dia(const FuzzySet& s) { return table().diamond_of(s); }
  FuzzySet cl_dia(const FuzzySet& s) { return join(s, dia(s)); }

 private:
  const GeneratedSpace& gs_;
  Budget budget_;
  std::optional<DiamondTable> table_;
  std::optional<PrimalSpace> ps2_, psu_;
  std::optional<DiamondTable> table2_, tableu_;
  std::optional<FuzzyTopology> ptop_, ptop2_, ptopu_;
};

template <typename Fn>
void each_lattice(Ctx& c, Outcome& o, Fn&& fn) {
  LatticeStream stream(c.space(), c.budget());
  while (!stream.done() && o.holds) fn(stream.next());
}

template <typename Fn>
void each_pair(Ctx& c, Outcome& o, Fn&& fn) {
  LatticeStream outer(c.space(), c.budget());
  while (!outer.done() && o.holds) {
    const FuzzySet a = outer.next();
    LatticeStream inner(c.space(), c.budget());
    while (!inner.done() && o.holds) fn(a, inner.next());
  }
}

template <typename Fn>
void each_point(const Space& s, Fn&& fn) {
  for (int y = 0; y < s.size(); ++y)
    for (int t = 1; t <= s.denom(); ++t) fn(FuzzyPoint{y, t});
}

// Canonical fallback for example claims that need at least two elements or a
// non-crisp grid: reuse the space when it is rich enough, otherwise a small
// fixed one.
Space at_least(const Space& s, int need_n, int need_k) {
  if (s.size() >= need_n && s.denom() >= need_k) return s;
  static const char* kNames[] = {"u", "v", "w", "x"};
  std::vector<std::string> labels;
  for (int i = 0; i < std::max(need_n, 1) && i < 4; ++i) labels.emplace_back(kNames[i]);
  return Space(std::move(labels), std::max(need_k, s.denom()));
}

// ---------------------------------------------------------------------------
// Preliminaries
// ---------------------------------------------------------------------------

void remark_2_6_i(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& mu, const FuzzySet& nu) {
    if (!leq(mu, nu)) return;
    LatticeStream etas(c.space(), c.budget());
    while (!etas.done() && o.holds) {
      const FuzzySet eta = etas.next();
      if (!leq(oplus(mu, eta), oplus(nu, eta)))
        o.fail({wit("mu", mu), wit("nu", nu), wit("eta", eta)});
    }
  });
}

void remark_2_6_ii(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& mu, const FuzzySet& nu) {
    LatticeStream etas(c.space(), c.budget());
    while (!etas.done() && o.holds) {
      const FuzzySet eta = etas.next();
      if (meet(oplus(mu, eta), oplus(nu, eta)) != oplus(meet(mu, nu), eta))
        o.fail({wit("mu", mu), wit("nu", nu), wit("eta", eta)});
    }
  });
}

void remark_2_6_iii_as_printed(Ctx& c, Outcome& o) {
  const Space s = at_least(c.space(), 1, 2);
  // The pinned counterexample: both arguments the constant one-half.
  if (s.denom() % 2 == 0) {
    const FuzzySet half = FuzzySet::constant(s, s.denom() / 2);
    if (complement(oplus(half, half)) != oplus(complement(half), complement(half))) {
      o.fail({wit("mu", half), wit("nu", half)});
      return;
    }
  }
  LatticeStream outer(s, c.budget());
  while (!outer.done() && o.holds) {
    const FuzzySet mu = outer.next();
    LatticeStream inner(s, c.budget());
    while (!inner.done() && o.holds) {
      const FuzzySet nu = inner.next();
      if (complement(oplus(mu, nu)) != oplus(complement(mu), complement(nu)))
        o.fail({wit("mu", mu), wit("nu", nu)});
    }
  }
}

void remark_2_6_iii_corrected(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& mu, const FuzzySet& nu) {
    if (complement(oplus(mu, nu)) != odot(complement(mu), complement(nu)) ||
        complement(odot(mu, nu)) != oplus(complement(mu), complement(nu)))
      o.fail({wit("mu", mu), wit("nu", nu)});
  });
}

void lemma_2_10_i(Ctx& c, Outcome& o) {
  const int k = c.space().denom();
  each_pair(c, o, [&](const FuzzySet& mu, const FuzzySet& nu) {
    for (int y = 0; y < mu.size(); ++y)
      if (mu[y] + nu[y] > k && std::min(mu[y], nu[y]) == 0)
        o.fail({wit("mu", mu), wit("nu", nu)});
  });
}

void lemma_2_10_ii(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& mu) {
    each_point(c.space(), [&](FuzzyPoint p) {
      if (point_in(p, mu) != !quasi_coincident(p, complement(mu)))
        o.fail({wit("mu", mu), wit("point", FuzzySet::point(c.space(), p))});
    });
  });
}

void lemma_2_10_iii(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& mu, const FuzzySet& nu) {
    if (leq(mu, nu) != !quasi_coincident(mu, complement(nu)))
      o.fail({wit("mu", mu), wit("nu", nu)});
  });
}

// ---------------------------------------------------------------------------
// Primals
// ---------------------------------------------------------------------------

void check_validator_agreement(Ctx& c, Outcome& o, const FuzzyFamily& f) {
  const auto direct = validate_primal_def(f, c.budget());
  const auto contrapositive = validate_primal_iff(f, c.budget());
  if (direct.ok != contrapositive.ok) {
    std::vector<std::string> w{"family-size=" + std::to_string(f.size())};
    for (const auto& m : f) w.push_back(wit("member", m));
    o.fail(std::move(w));
  }
}

void thm_3_2_equiv(Ctx& c, Outcome& o) {
  check_validator_agreement(c, o, c.primal().members);
  check_validator_agreement(c, o, c.primal2().members);
  check_validator_agreement(c, o, c.primal().members.set_union(c.primal2().members));
  check_validator_agreement(c, o, c.primal().members.set_intersection(c.primal2().members));
  Rng rng(fnv1a(c.digest()));
  for (int i = 0; i < 8 && o.holds; ++i) {
    const int count = static_cast<int>(rng.below(c.space().lattice_size() + 1));
    std::vector<FuzzySet> members;
    for (int j = 0; j < count; ++j)
      members.push_back(set_at_rank(c.space(), rng.below(c.space().lattice_size())));
    check_validator_agreement(c, o, FuzzyFamily(c.space(), std::move(members)));
  }
}

void ex_3_3_i(Ctx& c, Outcome& o) {
  const auto trivial = make_trivial_primal(c.space(), c.budget());
  if (!validate_primal_def(trivial.members, c.budget()).ok ||
      !validate_primal_iff(trivial.members, c.budget()).ok)
    o.fail({"trivial primal failed validation"});
}

void ex_3_3_ii_as_printed(Ctx& c, Outcome& o) {
  // Discretised analog of the ramp example: a threshold set strictly inside
  // (0, 1) at two elements; its down-set is the printed "primal".
  const Space s = at_least(c.space(), 2, 2);
  std::vector<int> vals(static_cast<std::size_t>(s.size()), s.denom());
  vals[0] = s.denom() - 1;
  vals[1] = s.denom() - 1;
  const FuzzySet ramp(s, std::move(vals));
  std::vector<FuzzySet> members;
  LatticeStream stream(s, c.budget());
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    if (leq(lambda, ramp)) members.push_back(std::move(lambda));
  }
  const auto report = validate_primal_def(FuzzyFamily(s, std::move(members)), c.budget());
  if (!report.ok) {
    std::vector<std::string> w{"axiom=" + report.axiom};
    for (const auto& m : report.witnesses) w.push_back(wit("witness", m));
    o.fail(std::move(w));
  }
}

void ex_3_3_iii(Ctx& c, Outcome& o) {
  const Space& s = c.space();
  const int t0 = (s.denom() + 1) / 2;
  const auto primal = make_point_excluding_primal(s, 0, t0, c.budget());
  if (!validate_primal_def(primal.members, c.budget()).ok) {
    o.fail({"point-excluding primal failed validation"});
    return;
  }
  LatticeStream stream(s, c.budget());
  while (!stream.done() && o.holds) {
    const FuzzySet lambda = stream.next();
    if (primal.contains(lambda) != (lambda[0] < t0))
      o.fail({wit("lambda", lambda)});
  }
}

void ex_3_3_iv_as_printed(Ctx& c, Outcome& o) {
  // Memberships into the even numbers leave only the zero set, which the
  // theory itself refutes on a multi-element universe.
  const Space s = at_least(c.space(), 2, 1);
  const auto report =
      validate_primal_def(FuzzyFamily(s, {FuzzySet::zero(s)}), c.budget());
  if (!report.ok) {
    std::vector<std::string> w{"axiom=" + report.axiom};
    for (const auto& m : report.witnesses) w.push_back(wit("witness", m));
    o.fail(std::move(w));
  }
}

void thm_3_4_grill_to_primal(Ctx& c, Outcome& o) {
  for (const auto* p : {&c.primal(), &c.primal2()}) {
    const FuzzyGrill g = grill_from_primal(*p);
    if (!validate_grill(g.members, c.budget()).ok ||
        !validate_primal_def(primal_from_grill(g).members, c.budget()).ok)
      o.fail({"duality image failed validation"});
  }
}

void cor_3_4_primal_to_grill(Ctx& c, Outcome& o) {
  for (const auto* p : {&c.primal(), &c.primal2()}) {
    if (!validate_grill(grill_from_primal(*p).members, c.budget()).ok)
      o.fail({"grill image of a primal failed validation"});
  }
}

void duality_round_trip(Ctx& c, Outcome& o) {
  for (const auto* p : {&c.primal(), &c.primal2()}) {
    if (primal_from_grill(grill_from_primal(*p)).members != p->members)
      o.fail({"round trip is not the identity"});
  }
}

void thm_3_5_union(Ctx& c, Outcome& o) {
  const auto u = primal_union(c.primal(), c.primal2());
  if (!validate_primal_def(u.members, c.budget()).ok ||
      !validate_primal_iff(u.members, c.budget()).ok)
    o.fail({"union of primals failed validation"});
}

void ex_3_6_intersection(Ctx& c, Outcome& o) {
  // The printed instance: Y = {y, z}, k = 10, thresholds 0.6 and 0.7.
  const Space s({"y", "z"}, 10);
  const auto p1 = make_point_excluding_primal(s, 0, 7, c.budget());
  const auto p2 = make_point_excluding_primal(s, 1, 8, c.budget());
  const FuzzyFamily inter = primal_intersection_raw(p1, p2);
  const auto report = validate_primal_def(inter, c.budget());
  if (report.ok || report.axiom != "iii") {
    o.fail({"intersection unexpectedly validates or fails a different axiom"});
    return;
  }
  const FuzzySet mu(s, {5, 10});
  const FuzzySet nu(s, {10, 6});
  if (!is_meet_prime_witness(inter, mu, nu)) {
    o.fail({"printed pair is not a witness", wit("mu", mu), wit("nu", nu)});
    return;
  }
  if (report.witnesses.size() != 2 ||
      !is_meet_prime_witness(inter, report.witnesses[0], report.witnesses[1]))
    o.fail({"validator witness does not re-check"});
}

void primal_intersection_closed(Ctx& c, Outcome& o) {
  const FuzzyFamily inter = primal_intersection_raw(c.primal(), c.primal2());
  const auto report = validate_primal_def(inter, c.budget());
  if (!report.ok) {
    std::vector<std::string> w{"axiom=" + report.axiom};
    for (const auto& m : report.witnesses) w.push_back(wit("witness", m));
    o.fail(std::move(w));
  }
}

// ---------------------------------------------------------------------------
// The diamond operator
// ---------------------------------------------------------------------------

void ex_4_3_diamond_not_contractive(Ctx& c, Outcome& o) {
  const Space s = at_least(c.space(), 2, 1);
  std::vector<int> vals(static_cast<std::size_t>(s.size()), s.denom());
  vals[0] = 0;  // zero at the first element, full elsewhere: the ramp's shape
  const FuzzySet ramp(s, std::move(vals));
  const FuzzyTopology t = generate_topology(FuzzyFamily(s, {ramp}), c.budget());
  const PrimalSpace ps(t, make_trivial_primal(s, c.budget()));
  LatticeStream stream(s, c.budget());
  while (!stream.done() && o.holds) {
    const FuzzySet lambda = stream.next();
    if (diamond(ps, lambda) != closure(t, lambda))
      o.fail({"diamond differs from closure under the trivial primal", wit("lambda", lambda)});
  }
  if (o.holds && leq(diamond(ps, ramp), ramp))
    o.fail({"diamond unexpectedly contractive", wit("mu", ramp)});
}

void ex_4_4_indiscrete_case_split(Ctx& c, Outcome& o) {
  const Space& s = c.space();
  const FuzzyTopology indiscrete{
      FuzzyFamily(s, {FuzzySet::zero(s), FuzzySet::one(s)})};
  const PrimalSpace ps(indiscrete, c.primal());
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const FuzzySet expected = c.primal().contains(complement(lambda))
                                  ? FuzzySet::one(s)
                                  : FuzzySet::zero(s);
    if (diamond(ps, lambda) != expected) o.fail({wit("lambda", lambda)});
  });
}

void thm_4_5_i(Ctx& c, Outcome& o) {
  if (!is_zero(c.dia(FuzzySet::zero(c.space())))) o.fail({"diamond of 0_Y is nonzero"});
}

void thm_4_5_ii(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const FuzzySet d = c.dia(lambda);
    if (d != closure(c.topology(), d) || !leq(d, closure(c.topology(), lambda)))
      o.fail({wit("lambda", lambda)});
  });
}

void thm_4_5_iii(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    if (!c.primal().contains(complement(lambda)) && !is_zero(c.dia(lambda)))
      o.fail({wit("lambda", lambda)});
  });
}

void thm_4_5_iv(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& a, const FuzzySet& b) {
    if (leq(a, b) && !leq(c.dia(a), c.dia(b))) o.fail({wit("lambda", a), wit("mu", b)});
  });
}

void thm_4_5_v(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const FuzzySet d = c.dia(lambda);
    if (!leq(c.dia(d), d)) o.fail({wit("lambda", lambda)});
  });
}

void thm_4_5_vi(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& a, const FuzzySet& b) {
    if (c.dia(join(a, b)) != join(c.dia(a), c.dia(b)))
      o.fail({wit("lambda", a), wit("mu", b)});
  });
}

void thm_4_5_vii(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& a, const FuzzySet& b) {
    if (!leq(c.dia(meet(a, b)), meet(c.dia(a), c.dia(b))))
      o.fail({wit("lambda", a), wit("mu", b)});
  });
}

void thm_4_5_viii(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& a, const FuzzySet& b) {
    if (!c.primal().contains(complement(a)) && c.dia(join(a, b)) != c.dia(b))
      o.fail({wit("lambda", a), wit("mu", b)});
  });
}

void thm_4_6_intersection_form(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& mu) {
    const auto report = diamond_vs_closure_decomposition(c.ps(), mu, c.budget());
    if (!report.inclusion_ok)
      o.fail({wit("mu", mu), wit("lambda", *report.failure_lambda)});
    else if (!report.meet_equality_ok)
      o.fail({wit("mu", mu), "meet of closures differs from diamond"});
  });
}

void thm_4_6_single_witness(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& mu) {
    const auto report = diamond_vs_closure_decomposition(c.ps(), mu, c.budget());
    if (!report.single_witness_exists)
      o.fail({wit("mu", mu), "no single difference closure attains diamond"});
  });
}

void thm_4_7_i(Ctx& c, Outcome& o) {
  const bool nested_12 = std::includes(c.primal2().members.begin(), c.primal2().members.end(),
                                       c.primal().members.begin(), c.primal().members.end());
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const FuzzySet du = c.tableu().diamond_of(lambda);
    if (!leq(c.dia(lambda), du) || !leq(c.table2().diamond_of(lambda), du))
      o.fail({wit("lambda", lambda), "diamond not monotone toward the union primal"});
    if (nested_12 && !leq(c.dia(lambda), c.table2().diamond_of(lambda)))
      o.fail({wit("lambda", lambda), "diamond not monotone under primal containment"});
  });
}

void thm_4_7_ii(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    if (c.tableu().diamond_of(lambda) !=
        join(c.dia(lambda), c.table2().diamond_of(lambda)))
      o.fail({wit("lambda", lambda)});
  });
}

void thm_4_9_i(Ctx& c, Outcome& o) {
  if (!is_zero(c.cl_dia(FuzzySet::zero(c.space())))) o.fail({"closure of 0_Y is nonzero"});
}

void thm_4_9_ii(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    if (!leq(lambda, c.cl_dia(lambda))) o.fail({wit("lambda", lambda)});
  });
}

void thm_4_9_iii(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& a, const FuzzySet& b) {
    if (leq(a, b) && !leq(c.cl_dia(a), c.cl_dia(b))) o.fail({wit("lambda", a), wit("mu", b)});
  });
}

void thm_4_9_iv(Ctx& c, Outcome& o) {
  each_pair(c, o, [&](const FuzzySet& a, const FuzzySet& b) {
    if (c.cl_dia(join(a, b)) != join(c.cl_dia(a), c.cl_dia(b)))
      o.fail({wit("lambda", a), wit("mu", b)});
  });
}

void thm_4_9_v(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const FuzzySet once = c.cl_dia(lambda);
    if (c.cl_dia(once) != once) o.fail({wit("lambda", lambda)});
  });
}

void thm_4_10_kuratowski(Ctx& c, Outcome& o) {
  thm_4_9_i(c, o);
  thm_4_9_ii(c, o);
  thm_4_9_iv(c, o);
  thm_4_9_v(c, o);
}

void thm_4_11_topology(Ctx& c, Outcome& o) {
  const auto report = validate_topology(c.ptop().opens);
  if (!report.ok) {
    std::vector<std::string> w{"axiom=" + report.axiom};
    for (const auto& m : report.witnesses) w.push_back(wit("witness", m));
    o.fail(std::move(w));
  }
}

void thm_4_13_base(Ctx& c, Outcome& o) {
  const FuzzyFamily base = primal_base(c.ps(), c.budget());
  for (const auto& beta : base) {
    if (!in_primal_topology(c.ps(), beta)) {
      o.fail({wit("beta", beta), "base member not open in the generated topology"});
      return;
    }
  }
  if (!is_base_for(base, c.ptop())) o.fail({"base property fails"});
}

void thm_4_14_finer(Ctx& c, Outcome& o) {
  for (const auto& mu : c.topology().opens) {
    if (!in_primal_topology(c.ps(), mu)) {
      o.fail({wit("mu", mu), "original open missing from the generated topology"});
      return;
    }
  }
}

void ex_after_4_12_trivial(Ctx& c, Outcome& o) {
  const PrimalSpace trivial(c.topology(), make_trivial_primal(c.space(), c.budget()));
  if (primal_topology(trivial, c.budget()).opens != c.topology().opens)
    o.fail({"trivial primal does not reproduce the topology"});
  else if (primal_base(trivial, c.budget()) != c.topology().opens)
    o.fail({"trivial primal does not reproduce the base"});
}

void ex_4_15_included_point(Ctx& c, Outcome& o) {
  const Space& s = c.space();
  const int t0 = (s.denom() + 1) / 2;
  const FuzzyTopology indiscrete{FuzzyFamily(s, {FuzzySet::zero(s), FuzzySet::one(s)})};
  const PrimalSpace ps(indiscrete, make_point_excluding_primal(s, 0, t0, c.budget()));
  std::vector<FuzzySet> expected{FuzzySet::zero(s)};
  LatticeStream stream(s, c.budget());
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    if (lambda[0] >= t0) expected.push_back(std::move(lambda));
  }
  if (primal_topology(ps, c.budget()).opens != FuzzyFamily(s, std::move(expected)))
    o.fail({"included-point topology mismatch"});
}

void thm_4_16_i(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    if (!c.primal().contains(complement(lambda)) &&
        !in_primal_topology(c.ps(), complement(lambda)))
      o.fail({wit("lambda", lambda)});
  });
}

void thm_4_16_ii(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    if (!in_primal_topology(c.ps(), complement(c.dia(lambda)))) o.fail({wit("lambda", lambda)});
  });
}

void thm_4_17_antitone(Ctx& c, Outcome& o) {
  // The union primal contains both, so both generated topologies must
  // contain the union's.
  for (const auto& mu : c.ptopu().opens) {
    if (!in_primal_topology(c.ps(), mu) || !in_primal_topology(c.ps2(), mu)) {
      o.fail({wit("mu", mu)});
      return;
    }
  }
}

void thm_4_18_intersection(Ctx& c, Outcome& o) {
  if (c.ptopu().opens != c.ptop().opens.set_intersection(c.ptop2().opens))
    o.fail({"generated topology of the union primal differs from the intersection"});
}

void diamond_point_set_agreement(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const FuzzySet d = c.dia(lambda);
    each_point(c.space(), [&](FuzzyPoint p) {
      if (point_in_diamond(c.ps(), lambda, p) != (p.t <= d[p.elem]))
        o.fail({wit("lambda", lambda), wit("point", FuzzySet::point(c.space(), p))});
    });
  });
}

// ---------------------------------------------------------------------------
// Compatibility
// ---------------------------------------------------------------------------

void def_5_1_variants_agree(Ctx& c, Outcome& o) {
  const auto report = compatibility_report(c.ps(), c.budget());
  if (report.via_definition != report.via_support) {
    std::vector<std::string> w{"variants disagree"};
    if (report.witness) w.push_back(wit("lambda", *report.witness));
    o.fail(std::move(w));
  }
}

void thm_5_3_reconstruction(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const SquareView sq = square(c.ps(), lambda);
    if (lambda != join(sq.induced, meet(lambda, sq.dia))) o.fail({wit("lambda", lambda)});
  });
}

void thm_5_4_point_disjoint(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const SquareView sq = square(c.ps(), lambda);
    each_point(c.space(), [&](FuzzyPoint p) {
      if (!sq.point_predicate(p)) return;
      if (point_in_diamond(c.ps(), sq.induced, p) || point_in_diamond(c.ps(), lambda, p))
        o.fail({wit("lambda", lambda), wit("point", FuzzySet::point(c.space(), p))});
    });
  });
}

void thm_5_4_set_form(Ctx& c, Outcome& o) {
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const SquareView sq = square(c.ps(), lambda);
    if (!is_zero(meet(sq.induced, c.dia(sq.induced))))
      o.fail({wit("lambda", lambda), wit("square", sq.induced)});
  });
}

void thm_5_5_equivalence(Ctx& c, Outcome& o) {
  const auto report = c3_equivalence_report(c.ps(), c.budget());
  if (!report.all_equal()) {
    std::vector<std::string> w;
    for (int i = 0; i < 5; ++i) {
      w.push_back("clause" + std::to_string(i + 1) + "=" +
                  (report.clause[i] ? "true" : "false"));
      if (report.clause_witness[i]) w.push_back(wit("lambda", *report.clause_witness[i]));
    }
    o.fail(std::move(w));
  }
}

void thm_5_6_implied(Ctx& c, Outcome& o) {
  const auto report = c4_report(c.ps(), c.budget());
  if (!report.all_equal() || (report.compatible && !(report.clause[0] && report.clause[1] &&
                                                     report.clause[2]))) {
    std::vector<std::string> w{std::string("compatible=") +
                               (report.compatible ? "true" : "false")};
    for (int i = 0; i < 3; ++i) {
      w.push_back("clause" + std::to_string(i + 1) + "=" +
                  (report.clause[i] ? "true" : "false"));
      if (report.clause_witness[i]) w.push_back(wit("lambda", *report.clause_witness[i]));
    }
    o.fail(std::move(w));
  }
}

void thm_5_7_idempotent(Ctx& c, Outcome& o) {
  const auto report = c5_idempotence(c.ps(), c.budget());
  if (report.compatible && !report.idempotent) {
    std::vector<std::string> w{"diamond not idempotent on a compatible space"};
    if (report.witness) w.push_back(wit("lambda", *report.witness));
    o.fail(std::move(w));
  }
}

void thm_5_8_closed_union(Ctx& c, Outcome& o) {
  if (!is_compatible(c.ps(), c.budget())) return;  // precondition recorded by verdict Pass
  each_lattice(c, o, [&](const FuzzySet& lambda) {
    const bool closed = leq(c.dia(lambda), lambda);
    if (closed != closed_union_pair_exists(c.ps(), lambda, c.budget()))
      o.fail({wit("lambda", lambda),
              closed ? "closed set with no closed/null decomposition"
                     : "decomposable set that is not closed"});
  });
}

void thm_5_9_base_equals_topology(Ctx& c, Outcome& o) {
  const auto report = base_equals_topology(c.ps(), c.budget());
  if (report.compatible && !report.equal)
    o.fail({"base differs from the generated topology on a compatible space"});
}

void base_is_topology(Ctx& c, Outcome& o) {
  const auto report = validate_topology(primal_base(c.ps(), c.budget()));
  if (!report.ok) {
    std::vector<std::string> w{"axiom=" + report.axiom};
    for (const auto& m : report.witnesses) w.push_back(wit("witness", m));
    o.fail(std::move(w));
  }
}

using Evaluator = void (*)(Ctx&, Outcome&);

const std::pair<std::string_view, Evaluator> kEvaluators[] = {
    {"REMARK_2_6_i", remark_2_6_i},
    {"REMARK_2_6_ii", remark_2_6_ii},
    {"REMARK_2_6_iii_AS_PRINTED", remark_2_6_iii_as_printed},
    {"REMARK_2_6_iii_CORRECTED", remark_2_6_iii_corrected},
    {"LEMMA_2_10_i", lemma_2_10_i},
    {"LEMMA_2_10_ii", lemma_2_10_ii},
    {"LEMMA_2_10_iii", lemma_2_10_iii},
    {"THM_3_2_EQUIV", thm_3_2_equiv},
    {"EX_3_3_i", ex_3_3_i},
    {"EX_3_3_ii_AS_PRINTED", ex_3_3_ii_as_printed},
    {"EX_3_3_iii", ex_3_3_iii},
    {"EX_3_3_iv_AS_PRINTED", ex_3_3_iv_as_printed},
    {"THM_3_4_GRILL_TO_PRIMAL", thm_3_4_grill_to_primal},
    {"COR_3_4_PRIMAL_TO_GRILL", cor_3_4_primal_to_grill},
    {"DUALITY_ROUND_TRIP", duality_round_trip},
    {"THM_3_5_UNION", thm_3_5_union},
    {"EX_3_6_INTERSECTION", ex_3_6_intersection},
    {"PRIMAL_INTERSECTION_CLOSED", primal_intersection_closed},
    {"EX_4_3_DIAMOND_NOT_CONTRACTIVE", ex_4_3_diamond_not_contractive},
    {"EX_4_4_INDISCRETE_CASE_SPLIT", ex_4_4_indiscrete_case_split},
    {"THM_4_5_i", thm_4_5_i},
    {"THM_4_5_ii", thm_4_5_ii},
    {"THM_4_5_iii", thm_4_5_iii},
    {"THM_4_5_iv", thm_4_5_iv},
    {"THM_4_5_v", thm_4_5_v},
    {"THM_4_5_vi", thm_4_5_vi},
    {"THM_4_5_vii", thm_4_5_vii},
    {"THM_4_5_viii", thm_4_5_viii},
    {"THM_4_6_INTERSECTION_FORM", thm_4_6_intersection_form},
    {"THM_4_6_SINGLE_WITNESS", thm_4_6_single_witness},
    {"THM_4_7_i", thm_4_7_i},
    {"THM_4_7_ii", thm_4_7_ii},
    {"THM_4_9_i", thm_4_9_i},
    {"THM_4_9_ii", thm_4_9_ii},
    {"THM_4_9_iii", thm_4_9_iii},
    {"THM_4_9_iv", thm_4_9_iv},
    {"THM_4_9_v", thm_4_9_v},
    {"THM_4_10_KURATOWSKI", thm_4_10_kuratowski},
    {"THM_4_11_TOPOLOGY", thm_4_11_topology},
    {"THM_4_13_BASE", thm_4_13_base},
    {"THM_4_14_FINER", thm_4_14_finer},
    {"EX_AFTER_4_12_TRIVIAL", ex_after_4_12_trivial},
    {"EX_4_15_INCLUDED_POINT", ex_4_15_included_point},
    {"THM_4_16_i", thm_4_16_i},
    {"THM_4_16_ii", thm_4_16_ii},
    {"THM_4_17_ANTITONE", thm_4_17_antitone},
    {"THM_4_18_INTERSECTION", thm_4_18_intersection},
    {"DIAMOND_POINT_SET_AGREEMENT", diamond_point_set_agreement},
    {"DEF_5_1_VARIANTS_AGREE", def_5_1_variants_agree},
    {"THM_5_3_RECONSTRUCTION", thm_5_3_reconstruction},
    {"THM_5_4_POINT_DISJOINT", thm_5_4_point_disjoint},
    {"THM_5_4_SET_FORM", thm_5_4_set_form},
    {"THM_5_5_EQUIVALENCE", thm_5_5_equivalence},
    {"THM_5_6_IMPLIED", thm_5_6_implied},
    {"THM_5_7_IDEMPOTENT", thm_5_7_idempotent},
    {"THM_5_8_CLOSED_UNION", thm_5_8_closed_union},
    {"THM_5_9_BASE_EQUALS_TOPOLOGY", thm_5_9_base_equals_topology},
    {"BASE_IS_TOPOLOGY", base_is_topology},
};

Evaluator find_evaluator(std::string_view id) {
  for (const auto& [name, fn] : kEvaluators)
    if (name == id) return fn;
  return nullptr;
}

}  // namespace

std::vector<std::string> all_property_ids() {
  std::vector<std::string> ids;
  for (const auto& p : kPropertyRegistry) ids.emplace_back(p.id);
  return ids;
}

VerdictReport evaluate_property(std::string_view id, const GeneratedSpace& gs, Budget budget) {
  const PropertyDef* def = find_property(id);
  if (!def) throw std::invalid_argument("unknown property id: " + std::string(id));
  const Evaluator fn = find_evaluator(id);
  if (!fn) throw std::logic_error("property without evaluator: " + std::string(id));

  VerdictReport report;
  report.space_digest = gs.digest;
  report.property = std::string(id);

  const auto start = std::chrono::steady_clock::now();
  Ctx ctx(gs, budget);
  Outcome outcome;
  try {
    fn(ctx, outcome);
    if (outcome.holds) {
      report.verdict = Verdict::Pass;
    } else {
      report.verdict = def->kind == PropertyKind::Asserted ? Verdict::Fail
                                                           : Verdict::RefutedPaperClaim;
      report.witness = std::move(outcome.witness);
    }
  } catch (const BudgetExceeded& e) {
    report.verdict = Verdict::Incomplete;
    report.witness = {std::string("budget exceeded: ") + e.what()};
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<VerdictReport> run_suite_on(const GeneratedSpace& gs,
                                        const std::vector<std::string>& ids, Budget budget) {
  std::vector<VerdictReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) reports.push_back(evaluate_property(id, gs, budget));
  std::sort(reports.begin(), reports.end(), [](const VerdictReport& a, const VerdictReport& b) {
    return std::tie(a.space_digest, a.property) < std::tie(b.space_digest, b.property);
  });
  return reports;
}

std::vector<VerdictReport> run_suite(SpaceGenerator& gen, int space_count,
                                     const std::vector<std::string>& ids, Budget budget) {
  std::vector<VerdictReport> reports;
  for (int i = 0; i < space_count; ++i) {
    const GeneratedSpace gs = gen.next();
    for (const auto& id : ids) reports.push_back(evaluate_property(id, gs, budget));
  }
  std::sort(reports.begin(), reports.end(), [](const VerdictReport& a, const VerdictReport& b) {
    return std::tie(a.space_digest, a.property) < std::tie(b.space_digest, b.property);
  });
  return reports;
}

bool any_failure(const std::vector<VerdictReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return true;
  return false;
}

bool any_incomplete(const std::vector<VerdictReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Incomplete) return true;
  return false;
}

std::string to_text(const std::vector<VerdictReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.space_digest;
    out += ' ';
    out += r.property;
    out += ' ';
    out += verdict_name(r.verdict);
    if (!r.witness.empty()) {
      out += " witness";
      for (const auto& w : r.witness) {
        out += ' ';
        out += w;
      }
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<VerdictReport>& reports) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : reports) {
    array.push_back({{"property", r.property},
                     {"space", r.space_digest},
                     {"verdict", std::string(verdict_name(r.verdict))},
                     {"witness", r.witness},
                     {"runtime_ms", r.runtime_ms}});
  }
  return array.dump(2) + "\n";
}

GeneratedSpace generated_from(const RealizedSpace& rs) {
  FuzzyPrimal second = rs.primal2 ? *rs.primal2 : rs.primal;
  std::string digest = space_digest(rs.topology, rs.primal, &second);
  std::string summary = "n=" + std::to_string(rs.space.size()) +
                        " k=" + std::to_string(rs.space.denom()) +
                        " |T|=" + std::to_string(rs.topology.opens.size()) +
                        " |P|=" + std::to_string(rs.primal.members.size());
  return GeneratedSpace{PrimalSpace(rs.topology, rs.primal), std::move(second),
                        std::move(digest), std::move(summary)};
}

namespace {

/// Mutable raw instance used by the shrinker; rebuilt and revalidated after
/// every candidate move.
struct ShrinkState {
  std::vector<std::string> labels;
  int k = 1;
  std::vector<std::vector<int>> topo, p1, p2;

  static ShrinkState from(const GeneratedSpace& gs) {
    ShrinkState st;
    st.labels = gs.ps.space().labels();
    st.k = gs.ps.space().denom();
    for (const auto& m : gs.ps.topology().opens) st.topo.push_back(rows(m));
    for (const auto& m : gs.ps.primal().members) st.p1.push_back(rows(m));
    for (const auto& m : gs.primal2.members) st.p2.push_back(rows(m));
    return st;
  }

  static std::vector<int> rows(const FuzzySet& s) {
    return {s.nums().begin(), s.nums().end()};
  }

  std::optional<GeneratedSpace> build(Budget budget) const {
    try {
      Space space(labels, k);
      std::vector<FuzzySet> seed;
      for (const auto& row : topo) seed.emplace_back(space, row);
      FuzzyTopology topology = generate_topology(FuzzyFamily(space, std::move(seed)), budget);
      std::vector<FuzzySet> m1, m2;
      for (const auto& row : p1) m1.emplace_back(space, row);
      for (const auto& row : p2) m2.emplace_back(space, row);
      FuzzyFamily f1(space, std::move(m1)), f2(space, std::move(m2));
      if (!validate_primal_def(f1, budget).ok || !validate_primal_def(f2, budget).ok)
        return std::nullopt;
      FuzzyPrimal primal{std::move(f1)}, second{std::move(f2)};
      std::string digest = space_digest(topology, primal, &second);
      std::string summary = "n=" + std::to_string(space.size()) +
                            " k=" + std::to_string(space.denom()) + " (shrunk)";
      return GeneratedSpace{PrimalSpace(std::move(topology), std::move(primal)),
                            std::move(second), std::move(digest), std::move(summary)};
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

  SpaceDocument to_document(const GeneratedSpace& gs) const {
    SpaceDocument doc;
    doc.labels = gs.ps.space().labels();
    doc.denom = gs.ps.space().denom();
    doc.topology_generate = false;
    for (const auto& m : gs.ps.topology().opens) doc.topology_members.push_back(rows(m));
    doc.primal.kind = PrimalSpec::Kind::Explicit;
    for (const auto& m : gs.ps.primal().members) doc.primal.members.push_back(rows(m));
    PrimalSpec second;
    second.kind = PrimalSpec::Kind::Explicit;
    for (const auto& m : gs.primal2.members) second.members.push_back(rows(m));
    doc.primal2 = std::move(second);
    return doc;
  }
};

std::vector<std::vector<int>> project_rows(const std::vector<std::vector<int>>& rows, int drop) {
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> r = row;
    r.erase(r.begin() + drop);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<int>> clamp_rows(const std::vector<std::vector<int>>& rows, int new_k) {
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> r = row;
    for (int& v : r) v = std::min(v, new_k);
    out.push_back(std::move(r));
  }
  return out;
}

bool still_fails(std::string_view id, const GeneratedSpace& gs, Budget budget) {
  const Verdict v = evaluate_property(id, gs, budget).verdict;
  return v == Verdict::Fail || v == Verdict::RefutedPaperClaim;
}

// Greedy first-improvement shrinking: fewer elements, then a coarser grid,
// then fewer family members.
GeneratedSpace shrink(std::string_view id, GeneratedSpace found, Budget budget) {
  ShrinkState state = ShrinkState::from(found);
  bool improved = true;
  int guard = 0;
  while (improved && guard++ < 64) {
    improved = false;
    // Drop a universe element.
    for (int e = 0; e < static_cast<int>(state.labels.size()) && !improved; ++e) {
      if (state.labels.size() <= 1) break;
      ShrinkState candidate = state;
      candidate.labels.erase(candidate.labels.begin() + e);
      candidate.topo = project_rows(candidate.topo, e);
      candidate.p1 = project_rows(candidate.p1, e);
      candidate.p2 = project_rows(candidate.p2, e);
      if (auto gs = candidate.build(budget); gs && still_fails(id, *gs, budget)) {
        state = std::move(candidate);
        found = std::move(*gs);
        improved = true;
      }
    }
    // Coarsen the grid.
    if (!improved && state.k > 1) {
      ShrinkState candidate = state;
      candidate.k -= 1;
      candidate.topo = clamp_rows(candidate.topo, candidate.k);
      candidate.p1 = clamp_rows(candidate.p1, candidate.k);
      candidate.p2 = clamp_rows(candidate.p2, candidate.k);
      if (auto gs = candidate.build(budget); gs && still_fails(id, *gs, budget)) {
        state = std::move(candidate);
        found = std::move(*gs);
        improved = true;
      }
    }
    // Drop family members (topology seeds and primal members).
    for (auto* rows : {&state.topo, &state.p1, &state.p2}) {
      if (improved) break;
      for (std::size_t i = 0; i < rows->size() && !improved; ++i) {
        ShrinkState candidate = state;
        auto* target = rows == &state.topo ? &candidate.topo
                       : rows == &state.p1 ? &candidate.p1
                                           : &candidate.p2;
        target->erase(target->begin() + static_cast<std::ptrdiff_t>(i));
        if (auto gs = candidate.build(budget); gs && still_fails(id, *gs, budget)) {
          state = std::move(candidate);
          found = std::move(*gs);
          improved = true;
        }
      }
    }
  }
  return found;
}

}  // namespace

SearchOutcome search_counterexample(std::string_view id, SpaceGenerator& gen, int max_spaces,
                                    Budget budget) {
  SearchOutcome outcome;
  for (int i = 0; i < max_spaces; ++i) {
    GeneratedSpace gs = gen.next();
    ++outcome.spaces_tried;
    VerdictReport report = evaluate_property(id, gs, budget);
    if (report.verdict != Verdict::Fail && report.verdict != Verdict::RefutedPaperClaim)
      continue;
    GeneratedSpace shrunk = shrink(id, std::move(gs), budget);
    VerdictReport final_report = evaluate_property(id, shrunk, budget);
    outcome.found = true;
    outcome.digest = shrunk.digest;
    outcome.summary = shrunk.summary;
    outcome.witness = final_report.witness;
    outcome.document = ShrinkState::from(shrunk).to_document(shrunk);
    return outcome;
  }
  return outcome;
}

}  // namespace fpt
