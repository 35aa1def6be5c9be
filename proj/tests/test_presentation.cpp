#include "doctest.h"
#include "oracle.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/presentation.hpp"

using namespace qcolor;

TEST_CASE("extract follows crossing order") {
  const QuandlePresentation t = extract(catalog("trefoil"));
  CHECK(t.arc_count == 3);
  REQUIRE(t.relations.size() == 3);
  CHECK(t.relations[0] == CrossingRelation{3, 1, 2, true});
  CHECK(t.relations[1] == CrossingRelation{2, 3, 1, true});
  CHECK(t.relations[2] == CrossingRelation{1, 2, 3, true});

  const QuandlePresentation h = extract(catalog("hopf_sum"));
  CHECK(h.relations == std::vector<CrossingRelation>{
                           {2, 3, 1, true}, {3, 2, 4, true}, {1, 1, 3, true}, {4, 4, 3, true}});

  const QuandlePresentation u = extract(catalog("unknot"));
  CHECK(u.relations.empty());
  CHECK(u.arc_count == 1);

  const QuandlePresentation neg = extract(parse_relations_file("x1 = x1 / x2\nx2 = x2 / x1\n"));
  CHECK_FALSE(neg.relations[0].positive);
}

TEST_CASE("t = 1 classes") {
  CHECK(trivial_t_classes(extract(catalog("hopf_sum"))) == ArcPartition{{1}, {2, 3}, {4}});
  CHECK(trivial_t_classes(extract(catalog("trefoil"))) == ArcPartition{{1, 2, 3}});

  const ArcPartition as = trivial_t_classes(extract(catalog("allen_swenberg")));
  std::vector<ArcIndex> tail;
  for (ArcIndex a = 7; a <= 45; ++a) tail.push_back(a);
  CHECK(as == ArcPartition{{1, 2}, {3, 4, 5, 6}, tail});
}

TEST_CASE("t = 1 classes agree with components and with counting") {
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.name);
    const QuandlePresentation p = extract(e.diagram);
    const ArcPartition classes = trivial_t_classes(p);
    CHECK(classes == components(e.diagram));
    if (p.arc_count > 6) continue;
    for (std::uint32_t n = 2; n <= 4; ++n) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < classes.size(); ++i) expected *= n;
      CHECK(oracle::colorings(p, FiniteQuandle::alexander(n, 1)).size() == expected);
    }
  }
}

TEST_CASE("presentation rendering round trips with the parser") {
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.name);
    const QuandlePresentation p = extract(e.diagram);
    const std::string text = render_relations(p);
    CHECK(text == render_relations(e.diagram));
    CHECK(extract(parse_relations_file(text, Strictness::presentation)) == p);
  }
  CHECK(render_relations(extract(catalog("unlink2"))) == "circles: 2\n");
  CHECK(render_relations(extract(catalog("hopf_sum"))) ==
        "x2 = x3 * x1\nx3 = x2 * x4\nx1 = x1 * x3\nx4 = x4 * x3\n");
}
