#include <algorithm>
#include <string>
#include <vector>

#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"

namespace qcolor {

namespace {

// Mutable scratch copy of a diagram. Arcs above `next_arc - 1` are free
// circles; taking one out of the free pool gives it the next index.
struct Workspace {
  std::vector<Crossing> crossings;
  std::size_t free_circles = 0;
  ArcIndex next_arc = 1;
  Strictness strictness = Strictness::strict;
  std::vector<ArcIndex> dropped;  // merged away, not turned into circles

  explicit Workspace(const LinkDiagram& d)
      : crossings(d.crossings().begin(), d.crossings().end()),
        free_circles(d.free_circles()),
        next_arc(static_cast<ArcIndex>(d.referenced_arc_count() + 1)),
        strictness(d.strictness()) {}

  ArcIndex fresh_arc() { return next_arc++; }

  ArcIndex take_free_circle() {
    --free_circles;
    return fresh_arc();
  }

  // Index of the crossing where the under-strand arriving along `a` ends,
  // or -1 when `a` never passes under anything.
  long terminating_crossing(ArcIndex a) const {
    long found = -1;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (crossings[i].under_in != a) continue;
      if (found >= 0) {
        throw ValidationError("arc x" + std::to_string(a) +
                              " ends at several crossings; the move needs a strict diagram");
      }
      found = static_cast<long>(i);
    }
    return found;
  }

  void replace_arc(ArcIndex from, ArcIndex to) {
    dropped.push_back(from);
    for (Crossing& c : crossings) {
      if (c.under_in == from) c.under_in = to;
      if (c.under_out == from) c.under_out = to;
      if (c.over == from) c.over = to;
    }
  }

  bool referenced_outside(ArcIndex a, std::size_t skip_first, std::size_t skip_count) const {
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (i >= skip_first && i < skip_first + skip_count) continue;
      const Crossing& c = crossings[i];
      if (c.under_in == a || c.under_out == a || c.over == a) return true;
    }
    return false;
  }

  // Renumbers referenced arcs 1..k in their current order; arcs that lost
  // all their crossings join the free circles.
  LinkDiagram finish() {
    std::vector<bool> used(next_arc, false);
    for (const Crossing& c : crossings) used[c.under_in] = used[c.under_out] = used[c.over] = true;
    std::vector<bool> gone(next_arc, false);
    for (ArcIndex a : dropped) gone[a] = true;
    std::vector<ArcIndex> renumber(next_arc, 0);
    ArcIndex k = 0;
    for (ArcIndex a = 1; a < next_arc; ++a) {
      if (used[a])
        renumber[a] = ++k;
      else if (!gone[a])
        ++free_circles;
    }
    for (Crossing& c : crossings) {
      c.under_in = renumber[c.under_in];
      c.under_out = renumber[c.under_out];
      c.over = renumber[c.over];
    }
    return LinkDiagram::from_crossings(std::move(crossings), free_circles, strictness);
  }
};

void check_arc(const LinkDiagram& d, ArcIndex a, const char* what) {
  if (a == 0 || a > d.arc_count()) {
    throw ValidationError(std::string(what) + " x" + std::to_string(a) +
                          " is out of range 1.." + std::to_string(d.arc_count()));
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("crossing sign must be +1 or -1");
}

}  // namespace

LinkDiagram connected_sum(const LinkDiagram& d1, const LinkDiagram& d2, ArcIndex a1, ArcIndex a2) {
  check_arc(d1, a1, "arc");
  check_arc(d2, a2, "arc");

  Workspace w(d1);
  const auto offset = static_cast<ArcIndex>(d1.referenced_arc_count());
  for (Crossing c : d2.crossings()) {
    c.under_in += offset;
    c.under_out += offset;
    c.over += offset;
    w.crossings.push_back(c);
  }
  w.next_arc = static_cast<ArcIndex>(offset + d2.referenced_arc_count() + 1);
  w.free_circles += d2.free_circles();
  if (d1.strictness() == Strictness::presentation || d2.strictness() == Strictness::presentation)
    w.strictness = Strictness::presentation;

  // Summing with a crossing-free circle leaves the other component as is.
  if (d1.is_free_circle(a1) || d2.is_free_circle(a2)) {
    --w.free_circles;
    return w.finish();
  }

  const ArcIndex b = a2 + offset;
  long end1 = w.terminating_crossing(a1);
  long end2 = w.terminating_crossing(b);
  if (end1 >= 0 && end2 >= 0) {
    // Cut both arcs just before the crossings they run into and cross-connect.
    std::swap(w.crossings[end1].under_in, w.crossings[end2].under_in);
  } else if (end1 < 0) {
    // a1 is a whole over-only circle: it becomes part of arc b.
    w.replace_arc(a1, b);
  } else {
    w.replace_arc(b, a1);
  }
  return w.finish();
}

LinkDiagram reidemeister_r1(const LinkDiagram& d, ArcIndex a, int sign) {
  check_arc(d, a, "arc");
  check_sign(sign);
  Workspace w(d);
  if (d.is_free_circle(a)) {
    ArcIndex loop = w.take_free_circle();
    w.crossings.push_back({sign, loop, loop, loop});
    return w.finish();
  }
  long end = w.terminating_crossing(a);
  if (end < 0) {
    w.crossings.push_back({sign, a, a, a});
  } else {
    ArcIndex tail = w.fresh_arc();
    w.crossings[end].under_in = tail;
    w.crossings.push_back({sign, a, tail, a});
  }
  return w.finish();
}

LinkDiagram reidemeister_r1_inverse(const LinkDiagram& d, std::size_t crossing) {
  if (crossing >= d.crossing_count()) throw ValidationError("crossing index out of range");
  const Crossing kink = d.crossings()[crossing];
  if (kink.over != kink.under_in && kink.over != kink.under_out)
    throw ValidationError("crossing " + std::to_string(crossing + 1) + " is not a kink");
  Workspace w(d);
  w.crossings.erase(w.crossings.begin() + static_cast<long>(crossing));
  if (kink.under_in != kink.under_out) w.replace_arc(kink.under_out, kink.under_in);
  return w.finish();
}

LinkDiagram reidemeister_r2(const LinkDiagram& d, ArcIndex a, ArcIndex b, int first_sign) {
  check_arc(d, a, "arc");
  check_arc(d, b, "arc");
  check_sign(first_sign);
  Workspace w(d);

  const bool a_free = d.is_free_circle(a);
  ArcIndex under = a_free ? w.take_free_circle() : a;
  ArcIndex over = b;
  if (d.is_free_circle(b)) over = (a_free && a == b) ? under : w.take_free_circle();

  long end = a_free ? -1 : w.terminating_crossing(a);
  ArcIndex middle = w.fresh_arc();
  ArcIndex tail = under;
  if (end >= 0) {
    tail = w.fresh_arc();
    w.crossings[end].under_in = tail;
  }
  w.crossings.push_back({first_sign, under, middle, over});
  w.crossings.push_back({-first_sign, middle, tail, over});
  return w.finish();
}

LinkDiagram reidemeister_r2_inverse(const LinkDiagram& d, std::size_t first) {
  if (first + 1 >= d.crossing_count()) throw ValidationError("crossing index out of range");
  const Crossing c1 = d.crossings()[first];
  const Crossing c2 = d.crossings()[first + 1];
  if (c1.under_out != c2.under_in || c1.over != c2.over || c1.sign != -c2.sign)
    throw ValidationError("crossings " + std::to_string(first + 1) + " and " +
                          std::to_string(first + 2) + " do not form a removable bigon");
  Workspace w(d);
  const ArcIndex middle = c1.under_out;
  if (middle == c1.over || w.referenced_outside(middle, first, 2))
    throw ValidationError("the arc between the two crossings passes over other strands");
  w.crossings.erase(w.crossings.begin() + static_cast<long>(first),
                    w.crossings.begin() + static_cast<long>(first) + 2);
  w.dropped.push_back(middle);
  if (c2.under_out != c1.under_in) w.replace_arc(c2.under_out, c1.under_in);
  return w.finish();
}

}  // namespace qcolor
