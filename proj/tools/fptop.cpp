// fptop: inspect and verify primal fuzzy topological spaces described by
// space documents.  See README.md for the document format and examples.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fpt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fpt::SpaceDocument load_document(const std::string& path) {
  try {
    return fpt::parse_space_document(read_file(path));
  } catch (const fpt::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

fpt::RealizedSpace realize_or_fail(const fpt::SpaceDocument& doc, fpt::Budget budget) {
  auto result = fpt::realize(doc, budget);
  if (!result.value) throw AssertionFailure(result.report.str());
  return std::move(*result.value);
}

fpt::FuzzySet parse_set(const fpt::Space& space, const std::string& text) {
  std::vector<int> vals;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string field =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    try {
      vals.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw UsageError("bad membership vector '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  try {
    return fpt::FuzzySet(space, std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad membership vector: ") + e.what());
  }
}

void print_family(const fpt::FuzzyFamily& family) {
  for (const auto& m : family) std::cout << m.str() << "\n";
}

std::vector<std::string> resolve_ids(const std::vector<std::string>& requested) {
  if (requested.empty()) return fpt::all_property_ids();
  std::vector<std::string> resolved;
  for (const auto& id : requested) {
    if (fpt::find_property(id)) {
      resolved.push_back(id);
      continue;
    }
    // A bare stem such as THM_4_9 selects every clause under it.
    bool matched = false;
    for (const auto& def : fpt::kPropertyRegistry) {
      const std::string_view candidate = def.id;
      if (candidate.size() > id.size() && candidate.substr(0, id.size()) == id &&
          candidate[id.size()] == '_') {
        resolved.emplace_back(candidate);
        matched = true;
      }
    }
    if (!matched) throw UsageError("unknown property id '" + id + "'");
  }
  return resolved;
}

int run(int argc, char** argv) {
  CLI::App app{"primal fuzzy topology workbench"};
  app.require_subcommand(1);

  fpt::Budget budget;
  app.add_option("--lattice-budget", budget.max_sets, "max sets per lattice enumeration")
      ->capture_default_str();

  std::string file, set_text, search_id;
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  int count_budget = 10;
  bool random_mode = false, json_mode = false;
  fpt::GeneratorConfig gen_cfg;

  auto* validate = app.add_subcommand("validate", "validate a space document");
  validate->add_option("file", file)->required();

  auto* dia = app.add_subcommand("diamond", "apply the diamond operator to a set");
  dia->add_option("file", file)->required();
  dia->add_option("--set", set_text, "membership numerators, e.g. 0,2")->required();

  auto* cld = app.add_subcommand("cl-diamond", "apply the diamond closure to a set");
  cld->add_option("file", file)->required();
  cld->add_option("--set", set_text, "membership numerators, e.g. 0,2")->required();

  auto* ptop = app.add_subcommand("gen-ptop", "print the generated primal fuzzy topology");
  ptop->add_option("file", file)->required();

  auto* base = app.add_subcommand("base", "print the base family and whether it is a topology");
  base->add_option("file", file)->required();

  auto* compat = app.add_subcommand("compat", "print the compatibility clause verdicts");
  compat->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "evaluate properties on a space or a seeded stream");
  verify->add_option("file", file, "space document (omit with --random)");
  verify->add_option("--random", seed, "seed for generated spaces")->trigger_on_parse();
  verify->add_flag("--json", json_mode, "machine-readable report");
  verify->add_option("--ids", ids, "property ids (default: all)")->delimiter(',');
  verify->add_option("--budget", count_budget, "number of generated spaces in --random mode")
      ->capture_default_str();
  verify->add_option("--max-n", gen_cfg.max_n, "largest generated universe")
      ->capture_default_str();
  verify->add_option("--max-k", gen_cfg.max_k, "largest generated denominator")
      ->capture_default_str();
  verify->callback([&] { random_mode = verify->count("--random") > 0; });

  auto* search = app.add_subcommand("search", "search for a counterexample to one property");
  search->add_option("id", search_id)->required();
  search->add_option("--seed", seed, "generator seed")->required();
  search->add_option("--budget", count_budget, "max spaces to try")->capture_default_str();
  search->add_option("--max-n", gen_cfg.max_n, "largest generated universe")
      ->capture_default_str();
  search->add_option("--max-k", gen_cfg.max_k, "largest generated denominator")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    const auto doc = load_document(file);
    const auto space = realize_or_fail(doc, budget);
    std::cout << "topology: valid (" << space.topology.opens.size() << " opens)\n";
    std::cout << "primal: valid (" << space.primal.members.size() << " members)\n";
    if (space.primal2)
      std::cout << "primal2: valid (" << space.primal2->members.size() << " members)\n";
    if (space.intersect) {
      const auto inter = fpt::primal_intersection_raw(space.primal, *space.primal2);
      const auto report = fpt::validate_primal_def(inter, budget);
      std::cout << "intersection " << report.str() << "\n";
      if (!report.ok) return kExitAssertion;
    }
    return kExitOk;
  }
  if (dia->parsed() || cld->parsed()) {
    const auto space = realize_or_fail(load_document(file), budget);
    const fpt::PrimalSpace ps = space.primal_space();
    const fpt::FuzzySet lambda = parse_set(space.space, set_text);
    std::cout << (dia->parsed() ? fpt::diamond(ps, lambda) : fpt::cl_diamond(ps, lambda)).str()
              << "\n";
    return kExitOk;
  }
  if (ptop->parsed()) {
    const auto space = realize_or_fail(load_document(file), budget);
    print_family(fpt::primal_topology(space.primal_space(), budget).opens);
    return kExitOk;
  }
  if (base->parsed()) {
    const auto space = realize_or_fail(load_document(file), budget);
    const auto family = fpt::primal_base(space.primal_space(), budget);
    print_family(family);
    std::cout << "base is a topology: "
              << (fpt::validate_topology(family).ok ? "yes" : "no") << "\n";
    return kExitOk;
  }
  if (compat->parsed()) {
    const auto space = realize_or_fail(load_document(file), budget);
    const fpt::PrimalSpace ps = space.primal_space();
    const auto cr = fpt::compatibility_report(ps, budget);
    const auto eq = fpt::c3_equivalence_report(ps, budget);
    std::cout << "via_definition: " << (cr.via_definition ? "true" : "false") << "\n";
    std::cout << "via_support: " << (cr.via_support ? "true" : "false") << "\n";
    for (int i = 0; i < 5; ++i)
      std::cout << "clause_" << i + 1 << ": " << (eq.clause[i] ? "true" : "false") << "\n";
    std::cout << "all_equal: " << (eq.all_equal() ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (verify->parsed()) {
    const auto resolved = resolve_ids(ids);
    std::vector<fpt::VerdictReport> reports;
    if (random_mode) {
      fpt::SpaceGenerator gen(seed, gen_cfg);
      reports = fpt::run_suite(gen, count_budget, resolved, budget);
    } else {
      if (file.empty()) throw UsageError("verify needs a file or --random <seed>");
      const auto space = realize_or_fail(load_document(file), budget);
      reports = fpt::run_suite_on(fpt::generated_from(space), resolved, budget);
    }
    std::cout << (json_mode ? fpt::to_json(reports) : fpt::to_text(reports));
    if (fpt::any_failure(reports)) return kExitAssertion;
    if (fpt::any_incomplete(reports)) return kExitBudget;
    return kExitOk;
  }
  if (search->parsed()) {
    const auto* def = fpt::find_property(search_id);
    if (!def) throw UsageError("unknown property id '" + search_id + "'");
    fpt::SpaceGenerator gen(seed, gen_cfg);
    const auto outcome = fpt::search_counterexample(search_id, gen, count_budget, budget);
    if (!outcome.found) {
      std::cout << "no counterexample in " << outcome.spaces_tried << " spaces\n";
      return kExitOk;
    }
    std::cout << "counterexample after " << outcome.spaces_tried << " spaces (" << outcome.summary
              << ")\n";
    for (const auto& w : outcome.witness) std::cout << "  " << w << "\n";
    if (outcome.document) std::cout << fpt::serialize(*outcome.document);
    return def->kind == fpt::PropertyKind::Asserted ? kExitAssertion : kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const AssertionFailure& e) {
    std::cout << e.what() << "\n";
    return kExitAssertion;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fpt::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
