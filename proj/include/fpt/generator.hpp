#pragma once

#include "fpt/diamond.hpp"

/// \file generator.hpp
/// Seeded, reproducible generation of test spaces: random topologies (seed
/// family closed under meet/join, so the distribution is over generated
/// topologies, not uniform), and random primals of mixed kinds.
///
/// On a finite grid the complement of a primal is a filter of the lattice and
/// therefore principal, so sampling one threshold set phi and taking
/// {lambda : not (lambda >= phi)} reaches every primal that exists on the
/// space; the generator mixes that with the named generator kinds.

namespace fpt {

/// splitmix64; tiny, fast, and stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  int range(int lo, int hi);  // inclusive

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  int min_n = 1, max_n = 2;
  int min_k = 1, max_k = 2;
  int max_topology_seed = 3;  // seed sets fed to generate_topology
  Budget budget{};
};

/// One generated instance: a primal fuzzy topological space plus a second
/// primal on the same space for the two-primal theorems.
struct GeneratedSpace {
  PrimalSpace ps;
  FuzzyPrimal primal2;
  std::string digest;   // stable hex digest of the whole instance
  std::string summary;  // short human description
};

std::string space_digest(const FuzzyTopology& topology, const FuzzyPrimal& primal,
                         const FuzzyPrimal* second = nullptr);

class SpaceGenerator {
 public:
  SpaceGenerator(std::uint64_t seed, GeneratorConfig config = {});

  GeneratedSpace next();

  // Building blocks, also used directly by tests.
  Space random_space();
  FuzzyTopology random_topology(const Space& s);
  FuzzyPrimal random_primal(const Space& s);
  FuzzyGrill random_grill(const Space& s);
  /// An arbitrary subset of the lattice; not validated against anything.
  FuzzyFamily random_family(const Space& s, int max_members);

  Rng& rng() { return rng_; }
  const GeneratorConfig& config() const { return config_; }

 private:
  Rng rng_;
  GeneratorConfig config_;
};

/// All sets that do not dominate phi; the empty primal when phi is 0_Y.
FuzzyPrimal principal_primal(const FuzzySet& phi, Budget budget = {});

}  // namespace fpt
