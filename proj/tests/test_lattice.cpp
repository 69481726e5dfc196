#include "doctest.h"
#include "fpt/core.hpp"
#include "fpt/generator.hpp"

using namespace fpt;

namespace {

Space sp(int n, int k) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Space(std::move(labels), k);
}

FuzzySet fs(const Space& s, std::vector<int> v) { return FuzzySet(s, std::move(v)); }

}  // namespace

TEST_CASE("space invariants") {
  CHECK_THROWS_AS(Space({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Space({"a", "a"}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Space({"a"}, 0), std::invalid_argument);
  const Space s = sp(2, 3);
  CHECK(s.lattice_size() == 16);
  CHECK(s.index_of("b") == 1);
  CHECK(s.index_of("z") == -1);
}

TEST_CASE("fuzzy set invariants") {
  const Space s = sp(2, 2);
  CHECK_THROWS_AS(fs(s, {0}), std::invalid_argument);
  CHECK_THROWS_AS(fs(s, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fs(s, {-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FuzzySet::point(s, {0, 0}), std::invalid_argument);
  CHECK(FuzzySet::point(s, {1, 2}) == fs(s, {0, 2}));
}

TEST_CASE("complement examples") {
  const Space k1 = sp(2, 1);
  CHECK(complement(fs(k1, {0, 0})) == fs(k1, {1, 1}));
  const Space k2 = sp(2, 2);
  CHECK(complement(fs(k2, {1, 1})) == fs(k2, {1, 1}));  // midpoint is self-complementary
  CHECK(complement(fs(k2, {2, 1})) == fs(k2, {0, 1}));
}

TEST_CASE("meet and join examples") {
  const Space s = sp(2, 1);
  CHECK(meet(fs(s, {1, 0}), fs(s, {0, 1})) == fs(s, {0, 0}));
  CHECK(join(fs(s, {1, 0}), fs(s, {0, 1})) == fs(s, {1, 1}));
  const Space t = sp(2, 3);
  const FuzzySet lambda = fs(t, {2, 1});
  CHECK(meet(lambda, FuzzySet::one(t)) == lambda);
  CHECK_THROWS_AS(meet(fs(s, {1, 0}), fs(t, {0, 0})), std::invalid_argument);
}

TEST_CASE("lukasiewicz connectives") {
  const Space k2 = sp(2, 2);
  CHECK(oplus(fs(k2, {1, 1}), fs(k2, {1, 2})) == fs(k2, {2, 2}));
  CHECK(odot(fs(k2, {1, 1}), fs(k2, {1, 2})) == fs(k2, {0, 1}));
  const Space k4 = sp(2, 4);
  CHECK(oplus(fs(k4, {1, 0}), fs(k4, {1, 2})) == fs(k4, {2, 2}));
  const FuzzySet lambda = fs(k4, {3, 1});
  CHECK(oplus(lambda, FuzzySet::zero(k4)) == lambda);
  CHECK(odot(lambda, FuzzySet::one(k4)) == lambda);
  const Space k1 = sp(2, 1);
  CHECK(odot(FuzzySet::one(k1), FuzzySet::one(k1)) == FuzzySet::one(k1));
}

TEST_CASE("bounded sum coincides with oplus on the grid") {
  const Space s = sp(2, 2);
  LatticeStream a(s);
  while (!a.done()) {
    const FuzzySet x = a.next();
    LatticeStream b(s);
    while (!b.done()) {
      const FuzzySet y = b.next();
      CHECK(bounded_sum(x, y) == oplus(x, y));
    }
  }
}

TEST_CASE("truncated difference") {
  const Space s = sp(2, 2);
  CHECK(trunc_diff(fs(s, {2, 1}), fs(s, {1, 1})) == fs(s, {1, 0}));
  const FuzzySet lambda = fs(s, {1, 2});
  CHECK(trunc_diff(lambda, lambda) == FuzzySet::zero(s));
  CHECK(trunc_diff(lambda, complement(FuzzySet::one(s))) == lambda);
}

TEST_CASE("order and points") {
  const Space s = sp(2, 2);
  CHECK(leq(FuzzySet::zero(s), fs(s, {1, 2})));
  CHECK(!leq(fs(s, {1, 2}), fs(s, {2, 1})));
  CHECK(leq(fs(s, {1, 2}), fs(s, {1, 2})));

  CHECK(point_in({0, 1}, fs(s, {1, 0})));       // boundary t = mu(y)
  CHECK(!point_in({0, 2}, fs(s, {1, 0})));
  CHECK(point_in({1, 2}, FuzzySet::one(s)));

  CHECK(!quasi_coincident(FuzzyPoint{0, 1}, fs(s, {1, 0})));  // sum = 1 exactly
  CHECK(quasi_coincident(FuzzyPoint{0, 2}, fs(s, {1, 0})));
}

TEST_CASE("no set is quasi-coincident with its complement") {
  const Space s = sp(2, 3);
  LatticeStream stream(s);
  while (!stream.done()) {
    const FuzzySet lambda = stream.next();
    CHECK(!quasi_coincident(lambda, complement(lambda)));
  }
}

TEST_CASE("lattice enumeration") {
  {
    LatticeStream stream(sp(1, 1));
    CHECK(stream.count() == 2);
    CHECK(stream.next() == FuzzySet::zero(sp(1, 1)));
    CHECK(is_one(stream.next()));
    CHECK(stream.done());
  }
  {
    LatticeStream stream(sp(1, 2));
    CHECK(stream.count() == 3);
  }
  {
    const Space s = sp(2, 2);
    LatticeStream stream(s);
    CHECK(stream.count() == 9);
    FuzzySet first = stream.next();
    FuzzySet last = first;
    while (!stream.done()) last = stream.next();
    CHECK(is_zero(first));
    CHECK(is_one(last));
  }
  CHECK_THROWS_AS(LatticeStream(sp(2, 2), Budget{4}), BudgetExceeded);
}

TEST_CASE("rank round trip") {
  const Space s = sp(2, 3);
  for (std::uint64_t r = 0; r < s.lattice_size(); ++r)
    CHECK(rank_of(set_at_rank(s, r)) == r);
  CHECK_THROWS_AS(set_at_rank(s, s.lattice_size()), std::invalid_argument);
}

TEST_CASE("involution and De Morgan laws, exhaustive") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const Space s = sp(n, k);
      LatticeStream a(s);
      while (!a.done()) {
        const FuzzySet x = a.next();
        CHECK(complement(complement(x)) == x);
        LatticeStream b(s);
        while (!b.done()) {
          const FuzzySet y = b.next();
          CHECK(complement(meet(x, y)) == join(complement(x), complement(y)));
          CHECK(complement(join(x, y)) == meet(complement(x), complement(y)));
          CHECK(complement(oplus(x, y)) == odot(complement(x), complement(y)));
          CHECK(complement(odot(x, y)) == oplus(complement(x), complement(y)));
        }
      }
    }
  }
}

TEST_CASE("printed De Morgan form for oplus fails at the constant midpoint") {
  const Space s = sp(2, 2);
  const FuzzySet half = FuzzySet::constant(s, 1);
  CHECK(complement(oplus(half, half)) != oplus(complement(half), complement(half)));
}

TEST_CASE("oplus laws of the operation remark, exhaustive") {
  for (const auto& [n, k] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
    const Space s = sp(n, k);
    LatticeStream a(s);
    while (!a.done()) {
      const FuzzySet mu = a.next();
      LatticeStream b(s);
      while (!b.done()) {
        const FuzzySet nu = b.next();
        LatticeStream c(s);
        while (!c.done()) {
          const FuzzySet eta = c.next();
          if (leq(mu, nu)) CHECK(leq(oplus(mu, eta), oplus(nu, eta)));
          CHECK(meet(oplus(mu, eta), oplus(nu, eta)) == oplus(meet(mu, nu), eta));
        }
      }
    }
  }
}

TEST_CASE("quasi-coincidence lemma, exhaustive") {
  const Space s = sp(2, 2);
  const int k = s.denom();
  LatticeStream a(s);
  while (!a.done()) {
    const FuzzySet mu = a.next();
    // (ii) point membership iff not quasi-coincident with the complement
    for (int y = 0; y < s.size(); ++y)
      for (int t = 1; t <= k; ++t)
        CHECK(point_in({y, t}, mu) == !quasi_coincident(FuzzyPoint{y, t}, complement(mu)));
    LatticeStream b(s);
    while (!b.done()) {
      const FuzzySet nu = b.next();
      // (i) a quasi-coincidence point has nonzero meet there
      for (int y = 0; y < s.size(); ++y)
        if (mu[y] + nu[y] > k) CHECK(std::min(mu[y], nu[y]) != 0);
      // (iii) inclusion iff not quasi-coincident with the complement
      CHECK(leq(mu, nu) == !quasi_coincident(mu, complement(nu)));
    }
  }
}

TEST_CASE("grid closure under every operation, randomised") {
  SpaceGenerator gen(7);
  for (int i = 0; i < 50; ++i) {
    const Space s = sp(gen.rng().range(1, 3), gen.rng().range(1, 5));
    const FuzzySet x = set_at_rank(s, gen.rng().below(s.lattice_size()));
    const FuzzySet y = set_at_rank(s, gen.rng().below(s.lattice_size()));
    // FuzzySet construction rejects off-grid values, so surviving these calls
    // is the closure property.
    for (const FuzzySet& r : {complement(x), meet(x, y), join(x, y), oplus(x, y), odot(x, y),
                              bounded_sum(x, y), trunc_diff(x, y)})
      CHECK(r.size() == s.size());
  }
}
