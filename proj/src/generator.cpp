#include "fpt/generator.hpp"

#include <cstdio>

namespace fpt {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

SpaceGenerator::SpaceGenerator(std::uint64_t seed, GeneratorConfig config)
    : rng_(seed), config_(config) {}

Space SpaceGenerator::random_space() {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f"};
  const int n = rng_.range(config_.min_n, config_.max_n);
  const int k = rng_.range(config_.min_k, config_.max_k);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.emplace_back(kNames[i]);
  return Space(std::move(labels), k);
}

FuzzyTopology SpaceGenerator::random_topology(const Space& s) {
  const std::uint64_t lattice = s.lattice_size();
  const int seeds = rng_.range(0, config_.max_topology_seed);
  std::vector<FuzzySet> members;
  members.reserve(static_cast<std::size_t>(seeds));
  for (int i = 0; i < seeds; ++i) members.push_back(set_at_rank(s, rng_.below(lattice)));
  return generate_topology(FuzzyFamily(s, std::move(members)), config_.budget);
}

FuzzyPrimal principal_primal(const FuzzySet& phi, Budget budget) {
  std::vector<FuzzySet> members;
  LatticeStream stream(phi.space(), budget);
  while (!stream.done()) {
    FuzzySet lambda = stream.next();
    if (!leq(phi, lambda)) members.push_back(std::move(lambda));
  }
  return FuzzyPrimal{FuzzyFamily(phi.space(), std::move(members))};
}

FuzzyPrimal SpaceGenerator::random_primal(const Space& s) {
  const int kind = rng_.range(0, 3);
  switch (kind) {
    case 0:
      return make_trivial_primal(s, config_.budget);
    case 1:
      return make_point_excluding_primal(s, rng_.range(0, s.size() - 1),
                                         rng_.range(1, s.denom()), config_.budget);
    case 2: {
      auto p1 = make_point_excluding_primal(s, rng_.range(0, s.size() - 1),
                                            rng_.range(1, s.denom()), config_.budget);
      auto p2 = make_point_excluding_primal(s, rng_.range(0, s.size() - 1),
                                            rng_.range(1, s.denom()), config_.budget);
      return primal_union(p1, p2);
    }
    default:
      // Principal threshold: reaches every primal on the grid, including the
      // empty one (phi = 0_Y) and the trivial one (phi = 1_Y).
      return principal_primal(set_at_rank(s, rng_.below(s.lattice_size())), config_.budget);
  }
}

FuzzyGrill SpaceGenerator::random_grill(const Space& s) {
  return grill_from_primal(random_primal(s));
}

FuzzyFamily SpaceGenerator::random_family(const Space& s, int max_members) {
  const std::uint64_t lattice = s.lattice_size();
  const int count = rng_.range(0, max_members);
  std::vector<FuzzySet> members;
  members.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) members.push_back(set_at_rank(s, rng_.below(lattice)));
  return FuzzyFamily(s, std::move(members));
}

std::string space_digest(const FuzzyTopology& topology, const FuzzyPrimal& primal,
                         const FuzzyPrimal* second) {
  const Space& s = topology.space();
  std::string bytes = "n=" + std::to_string(s.size()) + ";k=" + std::to_string(s.denom()) + ";";
  for (const auto& l : s.labels()) bytes += l + ",";
  bytes += ";T:";
  for (const auto& m : topology.opens) bytes += std::to_string(rank_of(m)) + ",";
  bytes += ";P:";
  for (const auto& m : primal.members) bytes += std::to_string(rank_of(m)) + ",";
  if (second) {
    bytes += ";Q:";
    for (const auto& m : second->members) bytes += std::to_string(rank_of(m)) + ",";
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string(buf);
}

GeneratedSpace SpaceGenerator::next() {
  Space s = random_space();
  FuzzyTopology topology = random_topology(s);
  FuzzyPrimal primal = random_primal(s);
  FuzzyPrimal second = random_primal(s);
  std::string digest = space_digest(topology, primal, &second);
  std::string summary = "n=" + std::to_string(s.size()) + " k=" + std::to_string(s.denom()) +
                        " |T|=" + std::to_string(topology.opens.size()) +
                        " |P|=" + std::to_string(primal.members.size()) +
                        " |P2|=" + std::to_string(second.members.size());
  return GeneratedSpace{PrimalSpace(std::move(topology), std::move(primal)), std::move(second),
                        std::move(digest), std::move(summary)};
}

}  // namespace fpt
