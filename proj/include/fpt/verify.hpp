#pragma once

#include "fpt/compatibility.hpp"
#include "fpt/generator.hpp"
#include "fpt/properties.hpp"
#include "fpt/spacedoc.hpp"

/// \file verify.hpp
/// The theorem harness: every registered property can be evaluated on any
/// generated or document-described space, producing one verdict per
/// (space, property) pair; falsified asserted properties fail with a witness,
/// falsified reported properties come back as refuted-paper-claim.  A
/// counterexample search drives the same evaluators over a seeded stream of
/// spaces and greedily shrinks whatever it finds.

namespace fpt {

enum class Verdict { Pass, Fail, RefutedPaperClaim, Incomplete };
std::string_view verdict_name(Verdict v);

struct VerdictReport {
  std::string space_digest;
  std::string property;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witness;  // canonical "name=numerators" strings
  double runtime_ms = 0.0;           // informational; not part of canonical text
};

/// Registry ids in registry order.
std::vector<std::string> all_property_ids();

VerdictReport evaluate_property(std::string_view id, const GeneratedSpace& gs, Budget budget);

/// Every id on every generated space; reports sorted by (digest, id) so the
/// output is independent of evaluation order.  Deterministic for a fixed
/// seed.  A budget overrun inside one evaluator yields an Incomplete verdict
/// for that pair instead of aborting the run.
std::vector<VerdictReport> run_suite(SpaceGenerator& gen, int space_count,
                                     const std::vector<std::string>& ids, Budget budget);
std::vector<VerdictReport> run_suite_on(const GeneratedSpace& gs,
                                        const std::vector<std::string>& ids, Budget budget);

bool any_failure(const std::vector<VerdictReport>& reports);
bool any_incomplete(const std::vector<VerdictReport>& reports);

/// Line-oriented canonical text: "<digest> <id> <verdict>[ witness ...]".
/// Byte-identical across runs with the same seed and budget.
std::string to_text(const std::vector<VerdictReport>& reports);
/// Structured records including runtimes.
std::string to_json(const std::vector<VerdictReport>& reports);

/// Adapts a document-described space to the harness (the second primal
/// defaults to a copy of the first when the document has none).
GeneratedSpace generated_from(const RealizedSpace& rs);

struct SearchOutcome {
  bool found = false;
  int spaces_tried = 0;
  std::string digest;
  std::string summary;
  std::vector<std::string> witness;
  /// The falsifying instance after greedy shrinking (fewer elements, smaller
  /// k, fewer members), as a serialisable document.
  std::optional<SpaceDocument> document;
};

/// First falsifying space in seed order, shrunk; not-found when the stream is
/// exhausted without a falsification.
SearchOutcome search_counterexample(std::string_view id, SpaceGenerator& gen, int max_spaces,
                                    Budget budget);

}  // namespace fpt
