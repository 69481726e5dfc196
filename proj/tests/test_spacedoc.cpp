#include "doctest.h"
#include "fpt/spacedoc.hpp"

using namespace fpt;

namespace {

const char* kCanonical =
    "fuzzyspace v1\n"
    "elements y z\n"
    "k 10\n"
    "topology explicit\n"
    "  0 0\n"
    "  10 10\n"
    "primal point_excluding y 7\n"
    "primal2 point_excluding z 8\n"
    "intersect\n";

}  // namespace

TEST_CASE("canonical documents round-trip bit-exactly") {
  const SpaceDocument doc = parse_space_document(kCanonical);
  CHECK(serialize(doc) == kCanonical);
  CHECK(doc.labels == std::vector<std::string>{"y", "z"});
  CHECK(doc.denom == 10);
  CHECK(!doc.topology_generate);
  CHECK(doc.topology_members.size() == 2);
  CHECK(doc.primal.kind == PrimalSpec::Kind::PointExcluding);
  REQUIRE(doc.primal2.has_value());
  CHECK(doc.intersect);

  // serialize . parse is the identity on serialized output, too.
  CHECK(serialize(parse_space_document(serialize(doc))) == serialize(doc));
}

TEST_CASE("explicit primal and generate topology forms") {
  const char* text =
      "fuzzyspace v1\n"
      "elements a\n"
      "k 2\n"
      "topology generate\n"
      "  1\n"
      "primal explicit\n"
      "  0\n"
      "  1\n";
  const SpaceDocument doc = parse_space_document(text);
  CHECK(doc.topology_generate);
  CHECK(serialize(doc) == text);
  const auto realized = realize(doc);
  REQUIRE(realized.value.has_value());
  CHECK(realized.value->topology.opens.size() == 3);  // 0, the seed, 1
  CHECK(realized.value->primal.members.size() == 2);
}

TEST_CASE("parse errors are position annotated") {
  auto line_of = [](const char* text) {
    try {
      parse_space_document(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("nope\n") == 1);
  CHECK(line_of("fuzzyspace v1\nelements a a\nk 1\ntopology explicit\nprimal trivial\n") == 2);
  CHECK(line_of("fuzzyspace v1\nelements a\nk 0\ntopology explicit\nprimal trivial\n") == 3);
  CHECK(line_of("fuzzyspace v1\nelements a\nk 1\ntopology odd\nprimal trivial\n") == 4);
  CHECK(line_of("fuzzyspace v1\nelements a\nk 1\ntopology explicit\n  2\nprimal trivial\n") == 5);
  // Unsorted member lists are not canonical.
  CHECK(line_of("fuzzyspace v1\nelements a\nk 1\ntopology explicit\n  1\n  0\nprimal trivial\n") ==
        6);
  // The intersect directive requires a second primal.
  CHECK(line_of("fuzzyspace v1\nelements a\nk 1\ntopology explicit\n  0\n  1\n"
                "primal trivial\nintersect\n") == 8);
  // Unknown point-excluding element.
  CHECK(line_of("fuzzyspace v1\nelements a\nk 1\ntopology explicit\n  0\n  1\n"
                "primal point_excluding b 1\n") == 7);
  // Missing trailing newline.
  CHECK_THROWS_AS(parse_space_document("fuzzyspace v1"), ParseError);
  // Trailing content.
  CHECK(line_of("fuzzyspace v1\nelements a\nk 1\ntopology explicit\n  0\n  1\n"
                "primal trivial\nextra\n") == 8);
}

TEST_CASE("realize validates the declared structures") {
  // Explicit primal containing the full set is rejected on axiom (i).
  const char* bad_primal =
      "fuzzyspace v1\n"
      "elements a b\n"
      "k 1\n"
      "topology explicit\n"
      "  0 0\n"
      "  1 1\n"
      "primal explicit\n"
      "  0 0\n"
      "  1 1\n";
  const auto r1 = realize(parse_space_document(bad_primal));
  CHECK(!r1.value.has_value());
  CHECK(r1.report.structure == "primal");
  CHECK(r1.report.axiom == "i");

  // Explicit topology missing the bounds is rejected.
  const char* bad_top =
      "fuzzyspace v1\n"
      "elements a b\n"
      "k 1\n"
      "topology explicit\n"
      "  0 0\n"
      "primal trivial\n";
  const auto r2 = realize(parse_space_document(bad_top));
  CHECK(!r2.value.has_value());
  CHECK(r2.report.structure == "topology");

  // A valid indiscrete document realizes with the trivial primal.
  const char* good =
      "fuzzyspace v1\n"
      "elements a b\n"
      "k 2\n"
      "topology explicit\n"
      "  0 0\n"
      "  2 2\n"
      "primal trivial\n";
  const auto r3 = realize(parse_space_document(good));
  REQUIRE(r3.value.has_value());
  CHECK(r3.value->primal.members.size() == 8);  // all 9 sets except 1_Y
}

TEST_CASE("the bundled intersection document realizes and fails as documented") {
  const auto realized = realize(parse_space_document(kCanonical));
  REQUIRE(realized.value.has_value());
  REQUIRE(realized.value->primal2.has_value());
  CHECK(realized.value->intersect);
  const auto inter =
      primal_intersection_raw(realized.value->primal, *realized.value->primal2);
  const auto report = validate_primal_def(inter);
  CHECK(!report.ok);
  CHECK(report.axiom == "iii");
}
