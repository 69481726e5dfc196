#include <set>

#include "doctest.h"
#include "fpt/verify.hpp"

using namespace fpt;

namespace {

GeneratedSpace tiny_space(std::uint64_t seed) {
  SpaceGenerator gen(seed);
  return gen.next();
}

}  // namespace

TEST_CASE("every registered property has an evaluator") {
  const GeneratedSpace gs = tiny_space(1);
  for (const auto& id : all_property_ids()) {
    const VerdictReport report = evaluate_property(id, gs, Budget{});
    CHECK(report.property == id);
    CHECK(report.space_digest == gs.digest);
  }
  CHECK_THROWS_AS(evaluate_property("NO_SUCH_PROPERTY", gs, Budget{}),
                  std::invalid_argument);
}

TEST_CASE("reported properties never yield hard failures") {
  std::set<std::string, std::less<>> reported;
  for (const auto& def : kPropertyRegistry)
    if (def.kind == PropertyKind::Reported) reported.emplace(def.id);

  SpaceGenerator gen(2024);
  const auto reports = run_suite(gen, 12, all_property_ids(), Budget{});
  for (const auto& r : reports) {
    if (reported.count(r.property)) CHECK(r.verdict != Verdict::Fail);
    if (r.verdict == Verdict::RefutedPaperClaim) CHECK(reported.count(r.property) == 1);
  }
}

TEST_CASE("suite output is deterministic under a fixed seed") {
  const auto ids = all_property_ids();
  SpaceGenerator gen_a(42);
  SpaceGenerator gen_b(42);
  const std::string text_a = to_text(run_suite(gen_a, 6, ids, Budget{}));
  const std::string text_b = to_text(run_suite(gen_b, 6, ids, Budget{}));
  CHECK(text_a == text_b);
  CHECK(!text_a.empty());
}

TEST_CASE("the printed De Morgan form is refuted with the midpoint witness") {
  SpaceGenerator gen(7);
  GeneratedSpace gs = gen.next();
  while (gs.ps.space().denom() % 2 != 0) gs = gen.next();
  const VerdictReport report = evaluate_property("REMARK_2_6_iii_AS_PRINTED", gs, Budget{});
  CHECK(report.verdict == Verdict::RefutedPaperClaim);
  REQUIRE(report.witness.size() == 2);
  const int k = gs.ps.space().denom();
  std::string half = std::to_string(k / 2);
  for (int i = 1; i < gs.ps.space().size(); ++i) half += "," + std::to_string(k / 2);
  CHECK(report.witness[0] == "mu=" + half);
  CHECK(report.witness[1] == "nu=" + half);
}

TEST_CASE("asserted structural properties pass on generated spaces") {
  SpaceGenerator gen(11);
  const std::vector<std::string> ids = {
      "THM_4_5_i",  "THM_4_5_ii", "THM_4_5_vi", "THM_4_9_iv",
      "THM_4_11_TOPOLOGY", "THM_4_13_BASE", "THM_4_14_FINER", "EX_4_15_INCLUDED_POINT",
      "THM_4_7_ii", "THM_4_17_ANTITONE", "THM_4_18_INTERSECTION",
  };
  for (const auto& r : run_suite(gen, 10, ids, Budget{})) CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("witnesses of primal validation failures re-check") {
  SpaceGenerator gen(13);
  for (int i = 0; i < 10; ++i) {
    const GeneratedSpace gs = gen.next();
    const VerdictReport report =
        evaluate_property("PRIMAL_INTERSECTION_CLOSED", gs, Budget{});
    if (report.verdict != Verdict::RefutedPaperClaim) continue;
    // The evaluator's witness strings come from the validator, whose
    // witnesses satisfy the violated axiom check by construction; re-verify
    // the first reported pair through the public oracle.
    const FuzzyFamily inter = primal_intersection_raw(gs.ps.primal(), gs.primal2);
    const auto direct = validate_primal_def(inter);
    REQUIRE(!direct.ok);
    if (direct.axiom == "iii") {
      REQUIRE(direct.witnesses.size() == 2);
      CHECK(is_meet_prime_witness(inter, direct.witnesses[0], direct.witnesses[1]));
    }
  }
}

TEST_CASE("budget overruns surface as incomplete verdicts") {
  const GeneratedSpace gs = tiny_space(3);
  const auto reports = run_suite_on(gs, {"THM_4_5_vi"}, Budget{1});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::Incomplete);
  CHECK(any_incomplete(reports));
  CHECK(!any_failure(reports));
}

TEST_CASE("search finds the primal intersection counterexample and shrinks it") {
  SpaceGenerator gen(101);
  const SearchOutcome outcome =
      search_counterexample("PRIMAL_INTERSECTION_CLOSED", gen, 200, Budget{});
  REQUIRE(outcome.found);
  REQUIRE(outcome.document.has_value());
  // The shrunk instance still falsifies the property.
  const auto realized = realize(*outcome.document, Budget{});
  REQUIRE(realized.value.has_value());
  const auto report = evaluate_property("PRIMAL_INTERSECTION_CLOSED",
                                        generated_from(*realized.value), Budget{});
  CHECK(report.verdict == Verdict::RefutedPaperClaim);
}

TEST_CASE("search reports nothing for the union theorem") {
  SpaceGenerator gen(103);
  const SearchOutcome outcome = search_counterexample("THM_3_5_UNION", gen, 60, Budget{});
  CHECK(!outcome.found);
  CHECK(outcome.spaces_tried == 60);
}

TEST_CASE("json report carries every field") {
  const GeneratedSpace gs = tiny_space(5);
  const auto reports = run_suite_on(gs, {"THM_4_5_i"}, Budget{});
  const std::string json = to_json(reports);
  CHECK(json.find("\"property\"") != std::string::npos);
  CHECK(json.find("\"space\"") != std::string::npos);
  CHECK(json.find("\"verdict\"") != std::string::npos);
  CHECK(json.find("\"runtime_ms\"") != std::string::npos);
}

TEST_CASE("document-described spaces adapt to the harness") {
  const char* text =
      "fuzzyspace v1\n"
      "elements a b\n"
      "k 2\n"
      "topology explicit\n"
      "  0 0\n"
      "  2 2\n"
      "primal trivial\n";
  const auto realized = realize(parse_space_document(text), Budget{});
  REQUIRE(realized.value.has_value());
  const GeneratedSpace gs = generated_from(*realized.value);
  CHECK(gs.primal2.members == gs.ps.primal().members);  // defaulted second primal
  const auto reports = run_suite_on(gs, {"THM_4_5_i", "EX_AFTER_4_12_TRIVIAL"}, Budget{});
  for (const auto& r : reports) CHECK(r.verdict == Verdict::Pass);
}
