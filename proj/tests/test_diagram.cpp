#include <string>

#include "doctest.h"
#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"

using namespace qcolor;

TEST_CASE("relations file: Hopf-sum table") {
  const LinkDiagram d = parse_relations_file(
      "x2 = x3 * x1\n"
      "x3 = x2 * x4\n"
      "x1 = x1 * x3\n"
      "x4 = x4 * x3\n");
  CHECK(d.arc_count() == 4);
  CHECK(d.crossing_count() == 4);
  for (const Crossing& c : d.crossings()) CHECK(c.sign == +1);
  CHECK(d.crossings()[0] == Crossing{+1, 3, 2, 1});
  CHECK(d == catalog("hopf_sum"));
}

TEST_CASE("relations file: circles header, comments, kink") {
  const LinkDiagram unknot = parse_relations_file("# the unknot\ncircles: 1\n");
  CHECK(unknot.crossing_count() == 0);
  CHECK(unknot.free_circles() == 1);
  CHECK(unknot.arc_count() == 1);

  const LinkDiagram kink = parse_relations_file("x1 = x1 * x1  # R1 loop\n");
  CHECK(kink.arc_count() == 1);
  CHECK(kink.crossing_count() == 1);
  CHECK(components(kink).size() == 1);

  const LinkDiagram neg = parse_relations_file("x1 = x1 / x2\n x2=x2/x1");
  CHECK(neg.crossings()[0].sign == -1);
  CHECK(neg.crossings()[1] == Crossing{-1, 2, 2, 1});
}

TEST_CASE("relations file: syntax errors carry line and column") {
  try {
    parse_relations_file("x1 = x1 * x1\nx2 = x1 + x1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_relations_file("x0 = x1 * x1\n"), ParseError);
  CHECK_THROWS_AS(parse_relations_file("x1 = x1 * x1 x2\n"), ParseError);
  CHECK_THROWS_AS(parse_relations_file("circles: 1\ncircles: 2\n"), ParseError);
  CHECK_THROWS_AS(parse_relations_file("y1 = x1 * x1\n"), ParseError);
  CHECK_THROWS_AS(parse_relations_file(""), ValidationError);
}

TEST_CASE("relations file: structural errors") {
  SUBCASE("arc index gap") {
    CHECK_THROWS_WITH_AS(parse_relations_file("x1 = x1 * x3\nx3 = x3 * x1\n"),
                         doctest::Contains("gap"), ValidationError);
  }
  SUBCASE("duplicate under-out arc") {
    CHECK_THROWS_WITH_AS(parse_relations_file("x1 = x2 * x2\nx1 = x1 * x2\n"),
                         doctest::Contains("duplicate under-out"), ValidationError);
  }
  SUBCASE("under-chain that does not close") {
    CHECK_THROWS_AS(parse_relations_file("x2 = x1 * x1\n"), ValidationError);
  }
  SUBCASE("presentation mode accepts shared outputs") {
    const LinkDiagram d =
        parse_relations_file("x1 = x2 * x2\nx1 = x1 * x2\n", Strictness::presentation);
    CHECK(d.crossing_count() == 2);
    CHECK(d.strictness() == Strictness::presentation);
  }
}

TEST_CASE("catalog entries") {
  struct Expected {
    const char* name;
    std::size_t crossings, arcs, components;
  };
  for (const Expected& e : {Expected{"unknot", 0, 1, 1}, Expected{"unlink2", 0, 2, 2},
                            Expected{"hopf", 2, 2, 2}, Expected{"trefoil", 3, 3, 1},
                            Expected{"hopf_sum", 4, 4, 3}, Expected{"allen_swenberg", 45, 45, 3}}) {
    CAPTURE(e.name);
    const CatalogEntry& entry = catalog_entry(e.name);
    CHECK(entry.diagram.crossing_count() == e.crossings);
    CHECK(entry.diagram.arc_count() == e.arcs);
    CHECK(components(entry.diagram).size() == e.components);
    CHECK(entry.expected_components == e.components);
  }
  CHECK_THROWS_AS(catalog("figure_eight"), ValidationError);
}

TEST_CASE("catalog: trefoil matches its crossing table") {
  const auto cs = catalog("trefoil").crossings();
  CHECK(cs[0] == Crossing{+1, 1, 3, 2});
  CHECK(cs[1] == Crossing{+1, 3, 2, 1});
  CHECK(cs[2] == Crossing{+1, 2, 1, 3});
}

TEST_CASE("catalog: Allen-Swenberg first and last rows") {
  const LinkDiagram& d = catalog("allen_swenberg");
  CHECK(d.crossings()[0] == Crossing{+1, 1, 2, 26});
  CHECK(d.crossings()[8] == Crossing{+1, 6, 3, 28});
  CHECK(d.crossings()[44] == Crossing{+1, 45, 38, 41});
  for (const Crossing& c : d.crossings()) CHECK(c.positive());
}

TEST_CASE("components") {
  CHECK(components(catalog("hopf_sum")) == ArcPartition{{1}, {2, 3}, {4}});
  CHECK(components(catalog("unlink2")) == ArcPartition{{1}, {2}});
  CHECK(components(catalog("trefoil")) == ArcPartition{{1, 2, 3}});

  const ArcPartition as = components(catalog("allen_swenberg"));
  REQUIRE(as.size() == 3);
  CHECK(as[0] == std::vector<ArcIndex>{1, 2});
  CHECK(as[1] == std::vector<ArcIndex>{3, 4, 5, 6});
  CHECK(as[2].size() == 39);
  CHECK(as[2].front() == 7);
  CHECK(as[2].back() == 45);
}

TEST_CASE("render then parse is the identity") {
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.name);
    const std::string text = render_relations(e.diagram);
    const LinkDiagram again = parse_relations_file(text, e.diagram.strictness());
    CHECK(again == e.diagram);
    CHECK(render_relations(again) == text);
  }
}
