#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcolor/diagram.hpp"

namespace qcolor {

/// out = in |> over when positive, out = in |>^-1 over otherwise.
struct CrossingRelation {
  ArcIndex out = 0;
  ArcIndex in = 0;
  ArcIndex over = 0;
  bool positive = true;

  friend bool operator==(const CrossingRelation&, const CrossingRelation&) = default;
};

/// Presentation of the fundamental quandle: one generator per arc and one
/// relation per crossing, in crossing order.
struct QuandlePresentation {
  std::size_t arc_count = 0;
  std::vector<CrossingRelation> relations;

  friend bool operator==(const QuandlePresentation&, const QuandlePresentation&) = default;
};

QuandlePresentation extract(const LinkDiagram& d);

/// Classes of arcs forced equal when t = 1 (x |> y = x), i.e. the
/// union-find closure of in ~ out over all relations.
ArcPartition trivial_t_classes(const QuandlePresentation& p);

/// Relations-file text for a presentation. Arcs not mentioned by any
/// relation are emitted as a `circles:` header.
std::string render_relations(const QuandlePresentation& p);

}  // namespace qcolor
