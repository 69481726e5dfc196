#include "fpt/spacedoc.hpp"

#include <charconv>

namespace fpt {

ParseError::ParseError(int line_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}

namespace {

struct Lines {
  std::vector<std::string_view> items;
  int pos = 0;  // next line index

  bool done() const { return pos >= static_cast<int>(items.size()); }
  std::string_view peek() const { return items[static_cast<std::size_t>(pos)]; }
  std::string_view take() { return items[static_cast<std::size_t>(pos++)]; }
  int lineno() const { return pos + 1; }  // 1-based number of the next line
};

Lines split_lines(std::string_view text) {
  Lines out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos)
      throw ParseError(static_cast<int>(out.items.size()) + 1, "missing trailing newline");
    out.items.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (out.items.empty()) throw ParseError(1, "empty document");
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line, int lineno) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t sp = line.find(' ', start);
    const std::string_view field =
        sp == std::string_view::npos ? line.substr(start) : line.substr(start, sp - start);
    if (field.empty()) throw ParseError(lineno, "empty field (double or trailing space?)");
    fields.push_back(field);
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return fields;
}

int parse_int(std::string_view field, int lineno) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(lineno, "expected an integer, got '" + std::string(field) + "'");
  return value;
}

// Member lines: two-space indent, n single-space-separated numerators,
// sorted lexicographically, no duplicates.
std::vector<std::vector<int>> parse_members(Lines& lines, int n, int k) {
  std::vector<std::vector<int>> members;
  while (!lines.done() && lines.peek().starts_with("  ")) {
    const int lineno = lines.lineno();
    const std::string_view body = lines.take().substr(2);
    const auto fields = split_fields(body, lineno);
    if (static_cast<int>(fields.size()) != n)
      throw ParseError(lineno, "expected " + std::to_string(n) + " numerators");
    std::vector<int> vals;
    vals.reserve(fields.size());
    for (const auto& f : fields) {
      const int v = parse_int(f, lineno);
      if (v < 0 || v > k) throw ParseError(lineno, "numerator out of [0, k]");
      vals.push_back(v);
    }
    if (!members.empty() && !(members.back() < vals))
      throw ParseError(lineno, "member list must be sorted lexicographically without duplicates");
    members.push_back(std::move(vals));
  }
  return members;
}

PrimalSpec parse_primal_spec(Lines& lines, std::string_view keyword,
                             const std::vector<std::string>& labels, int k) {
  const int lineno = lines.lineno();
  const auto fields = split_fields(lines.take(), lineno);
  if (fields[0] != keyword)
    throw ParseError(lineno, "expected '" + std::string(keyword) + " ...'");
  PrimalSpec spec;
  if (fields.size() == 2 && fields[1] == "trivial") {
    spec.kind = PrimalSpec::Kind::Trivial;
  } else if (fields.size() == 4 && fields[1] == "point_excluding") {
    spec.kind = PrimalSpec::Kind::PointExcluding;
    spec.element = std::string(fields[2]);
    bool known = false;
    for (const auto& l : labels) known |= (l == spec.element);
    if (!known) throw ParseError(lineno, "unknown element '" + spec.element + "'");
    spec.t0 = parse_int(fields[3], lineno);
    if (spec.t0 < 1 || spec.t0 > k) throw ParseError(lineno, "t numerator must be in [1, k]");
  } else if (fields.size() == 2 && fields[1] == "explicit") {
    spec.kind = PrimalSpec::Kind::Explicit;
    spec.members = parse_members(lines, static_cast<int>(labels.size()), k);
  } else {
    throw ParseError(lineno, "expected 'trivial', 'point_excluding <label> <t>' or 'explicit'");
  }
  return spec;
}

}  // namespace

SpaceDocument parse_space_document(std::string_view text) {
  Lines lines = split_lines(text);
  SpaceDocument doc;

  if (lines.take() != "fuzzyspace v1") throw ParseError(1, "expected header 'fuzzyspace v1'");

  {
    const int lineno = lines.lineno();
    if (lines.done()) throw ParseError(lineno, "expected 'elements ...'");
    const auto fields = split_fields(lines.take(), lineno);
    if (fields[0] != "elements" || fields.size() < 2)
      throw ParseError(lineno, "expected 'elements <label>...'");
    for (std::size_t i = 1; i < fields.size(); ++i) doc.labels.emplace_back(fields[i]);
    for (std::size_t i = 0; i < doc.labels.size(); ++i)
      for (std::size_t j = i + 1; j < doc.labels.size(); ++j)
        if (doc.labels[i] == doc.labels[j])
          throw ParseError(lineno, "duplicate element label '" + doc.labels[i] + "'");
  }
  {
    const int lineno = lines.lineno();
    if (lines.done()) throw ParseError(lineno, "expected 'k <denominator>'");
    const auto fields = split_fields(lines.take(), lineno);
    if (fields.size() != 2 || fields[0] != "k")
      throw ParseError(lineno, "expected 'k <denominator>'");
    doc.denom = parse_int(fields[1], lineno);
    if (doc.denom < 1) throw ParseError(lineno, "denominator must be >= 1");
  }
  {
    const int lineno = lines.lineno();
    if (lines.done()) throw ParseError(lineno, "expected 'topology explicit|generate'");
    const auto fields = split_fields(lines.take(), lineno);
    if (fields.size() != 2 || fields[0] != "topology" ||
        (fields[1] != "explicit" && fields[1] != "generate"))
      throw ParseError(lineno, "expected 'topology explicit' or 'topology generate'");
    doc.topology_generate = (fields[1] == "generate");
    doc.topology_members = parse_members(lines, static_cast<int>(doc.labels.size()), doc.denom);
  }
  if (lines.done()) throw ParseError(lines.lineno(), "expected 'primal ...'");
  doc.primal = parse_primal_spec(lines, "primal", doc.labels, doc.denom);

  if (!lines.done() && lines.peek().starts_with("primal2 "))
    doc.primal2 = parse_primal_spec(lines, "primal2", doc.labels, doc.denom);

  if (!lines.done() && lines.peek() == "intersect") {
    const int lineno = lines.lineno();
    lines.take();
    if (!doc.primal2) throw ParseError(lineno, "'intersect' requires a second primal");
    doc.intersect = true;
  }
  if (!lines.done()) throw ParseError(lines.lineno(), "unexpected trailing content");
  return doc;
}

namespace {

void append_members(std::string& out, const std::vector<std::vector<int>>& members) {
  for (const auto& m : members) {
    out += "  ";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(m[i]);
    }
    out += '\n';
  }
}

void append_primal(std::string& out, std::string_view keyword, const PrimalSpec& spec) {
  out += keyword;
  switch (spec.kind) {
    case PrimalSpec::Kind::Trivial:
      out += " trivial\n";
      break;
    case PrimalSpec::Kind::PointExcluding:
      out += " point_excluding ";
      out += spec.element;
      out += ' ';
      out += std::to_string(spec.t0);
      out += '\n';
      break;
    case PrimalSpec::Kind::Explicit:
      out += " explicit\n";
      append_members(out, spec.members);
      break;
  }
}

}  // namespace

std::string serialize(const SpaceDocument& doc) {
  std::string out = "fuzzyspace v1\nelements";
  for (const auto& l : doc.labels) {
    out += ' ';
    out += l;
  }
  out += "\nk ";
  out += std::to_string(doc.denom);
  out += "\ntopology ";
  out += doc.topology_generate ? "generate" : "explicit";
  out += '\n';
  append_members(out, doc.topology_members);
  append_primal(out, "primal", doc.primal);
  if (doc.primal2) append_primal(out, "primal2", *doc.primal2);
  if (doc.intersect) out += "intersect\n";
  return out;
}

namespace {

FuzzyFamily family_from_rows(const Space& s, const std::vector<std::vector<int>>& rows) {
  std::vector<FuzzySet> sets;
  sets.reserve(rows.size());
  for (const auto& row : rows) sets.emplace_back(s, row);
  return FuzzyFamily(s, std::move(sets));
}

struct PrimalBuild {
  std::optional<FuzzyPrimal> primal;
  ValidationReport report;
};

PrimalBuild build_primal(const Space& s, const PrimalSpec& spec, Budget budget) {
  switch (spec.kind) {
    case PrimalSpec::Kind::Trivial:
      return {make_trivial_primal(s, budget), ValidationReport::pass("primal")};
    case PrimalSpec::Kind::PointExcluding:
      return {make_point_excluding_primal(s, s.index_of(spec.element), spec.t0, budget),
              ValidationReport::pass("primal")};
    case PrimalSpec::Kind::Explicit: {
      auto result = make_explicit_primal(family_from_rows(s, spec.members), budget);
      return {std::move(result.primal), std::move(result.report)};
    }
  }
  return {std::nullopt, ValidationReport::fail("primal", "i", "unknown primal kind", {})};
}

}  // namespace

RealizeResult realize(const SpaceDocument& doc, Budget budget) {
  Space space(doc.labels, doc.denom);

  FuzzyFamily top_family = family_from_rows(space, doc.topology_members);
  FuzzyTopology topology{FuzzyFamily(space)};
  if (doc.topology_generate) {
    topology = generate_topology(top_family, budget);
  } else {
    auto result = make_topology(std::move(top_family));
    if (!result.topology) return {std::nullopt, std::move(result.report)};
    topology = std::move(*result.topology);
  }

  auto primal1 = build_primal(space, doc.primal, budget);
  if (!primal1.primal) return {std::nullopt, std::move(primal1.report)};

  std::optional<FuzzyPrimal> primal2;
  if (doc.primal2) {
    auto built = build_primal(space, *doc.primal2, budget);
    if (!built.primal) return {std::nullopt, std::move(built.report)};
    primal2 = std::move(built.primal);
  }

  return {RealizedSpace{std::move(space), std::move(topology), std::move(*primal1.primal),
                        std::move(primal2), doc.intersect},
          ValidationReport::pass("space")};
}

}  // namespace fpt
