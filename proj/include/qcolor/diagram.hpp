#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcolor {

/// Arc labels are 1-based everywhere, matching x1, x2, ... in relation files.
using ArcIndex = std::uint32_t;

/// A set partition of arcs. Each class is sorted, classes are ordered by
/// their smallest arc.
using ArcPartition = std::vector<std::vector<ArcIndex>>;

/// One crossing of an oriented diagram. The under-strand enters on
/// `under_in` and leaves on `under_out`; `over` is the arc passing above.
/// A positive crossing induces `under_out = under_in |> over`, a negative
/// one `under_out = under_in |>^-1 over`.
struct Crossing {
  int sign = +1;
  ArcIndex under_in = 0;
  ArcIndex under_out = 0;
  ArcIndex over = 0;

  bool positive() const noexcept { return sign > 0; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// How much structure a diagram must have.
///
/// `strict` requires the under-strand successor map to be a partial
/// permutation whose domain equals its image, i.e. under-chains close into
/// cycles. `presentation` only checks index ranges and gaps; it admits
/// crossing tables that read as quandle presentations but reuse an arc as
/// the output of several crossings.
enum class Strictness { strict, presentation };

/// Immutable oriented link diagram.
///
/// Arcs referenced by crossings are numbered 1..referenced_arc_count()
/// without gaps. Crossing-free circles follow them, so
/// arc_count() = referenced_arc_count() + free_circles().
class LinkDiagram {
 public:
  /// Builds and validates. Throws ValidationError.
  static LinkDiagram from_crossings(std::vector<Crossing> crossings,
                                    std::size_t free_circles = 0,
                                    Strictness strictness = Strictness::strict);

  LinkDiagram() = default;

  std::size_t arc_count() const noexcept { return referenced_ + free_circles_; }
  std::size_t referenced_arc_count() const noexcept { return referenced_; }
  std::size_t free_circles() const noexcept { return free_circles_; }
  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  Strictness strictness() const noexcept { return strictness_; }

  bool is_free_circle(ArcIndex a) const noexcept {
    return a > referenced_ && a <= arc_count();
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.referenced_ == b.referenced_ && a.free_circles_ == b.free_circles_ &&
           a.crossings_ == b.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::size_t referenced_ = 0;
  std::size_t free_circles_ = 0;
  Strictness strictness_ = Strictness::strict;
};

/// Components as classes of arcs. Arcs joined by an under-crossing share a
/// class; an arc never passing under anything (free or over-only circle)
/// is a class on its own.
ArcPartition components(const LinkDiagram& d);

// ---------------------------------------------------------------------------
// Input formats

/// Parses the line-oriented relations format:
///
///     # comment
///     circles: 1
///     x2 = x3 * x1      positive crossing
///     x3 = x2 / x4      negative crossing
///
/// Throws ParseError (with line/column) or ValidationError.
LinkDiagram parse_relations_file(std::string_view text,
                                 Strictness strictness = Strictness::strict);

/// Writes a diagram in the relations format. parse_relations_file of the
/// result gives back an equal diagram.
std::string render_relations(const LinkDiagram& d);

/// Parses planar-diagram code: whitespace separated X(a,b,c,d) terms.
///
/// Labels are edges between crossings; each must occur exactly twice. In
/// X(a,b,c,d) the under-strand enters on a and leaves on c. Over-strand
/// direction is solved from the requirement that every edge has one head
/// and one tail; the crossing is positive when the over-strand runs d to b.
/// Quandle arcs are the edges merged through over-passes, numbered in order
/// of their smallest edge label.
LinkDiagram parse_pd_code(std::string_view text);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;
  LinkDiagram diagram;
  std::size_t expected_components;
};

/// Built-in diagrams: unknot, unlink2, hopf, trefoil, hopf_sum,
/// allen_swenberg. Throws ValidationError on an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);
const LinkDiagram& catalog(std::string_view name);
std::span<const CatalogEntry> catalog_entries();

// ---------------------------------------------------------------------------
// Transforms

/// Band-sums the component through a1 in d1 with the component through a2
/// in d2. Arcs of d2 are renumbered after those of d1.
LinkDiagram connected_sum(const LinkDiagram& d1, const LinkDiagram& d2, ArcIndex a1,
                          ArcIndex a2);

/// Adds a kink at the head end of arc a: the new crossing reads
/// a' = a |> a (or |>^-1 for sign -1) and a' takes over a's former
/// terminating under-crossing. The crossing is appended last.
LinkDiagram reidemeister_r1(const LinkDiagram& d, ArcIndex a, int sign = +1);

/// Removes a kink crossing added by reidemeister_r1.
LinkDiagram reidemeister_r1_inverse(const LinkDiagram& d, std::size_t crossing);

/// Pushes the head end of arc a under arc b twice:
/// c = a |> b, then a'' = c |>^-1 b (signs flipped for first_sign = -1).
/// Both crossings are appended last.
LinkDiagram reidemeister_r2(const LinkDiagram& d, ArcIndex a, ArcIndex b,
                            int first_sign = +1);

/// Removes the pair of crossings (first, first + 1) added by reidemeister_r2.
LinkDiagram reidemeister_r2_inverse(const LinkDiagram& d, std::size_t first);

}  // namespace qcolor
