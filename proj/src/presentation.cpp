#include "qcolor/presentation.hpp"

#include <algorithm>
#include <string>

#include "qcolor/detail/disjoint_sets.hpp"

namespace qcolor {

QuandlePresentation extract(const LinkDiagram& d) {
  QuandlePresentation p;
  p.arc_count = d.arc_count();
  p.relations.reserve(d.crossing_count());
  for (const Crossing& c : d.crossings())
    p.relations.push_back({c.under_out, c.under_in, c.over, c.positive()});
  return p;
}

ArcPartition trivial_t_classes(const QuandlePresentation& p) {
  detail::DisjointSets sets(p.arc_count + 1);
  for (const CrossingRelation& r : p.relations) sets.unite(r.in, r.out);
  ArcPartition classes;
  std::vector<std::size_t> slot(p.arc_count + 1, SIZE_MAX);
  for (ArcIndex a = 1; a <= p.arc_count; ++a) {
    std::size_t root = sets.find(a);
    if (slot[root] == SIZE_MAX) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(a);
  }
  return classes;
}

std::string render_relations(const QuandlePresentation& p) {
  ArcIndex highest = 0;
  for (const CrossingRelation& r : p.relations) highest = std::max({highest, r.out, r.in, r.over});
  std::string out;
  if (p.arc_count > highest) out += "circles: " + std::to_string(p.arc_count - highest) + "\n";
  for (const CrossingRelation& r : p.relations) {
    out += "x" + std::to_string(r.out) + " = x" + std::to_string(r.in) + (r.positive ? " * " : " / ") +
           "x" + std::to_string(r.over) + "\n";
  }
  return out;
}

}  // namespace qcolor
