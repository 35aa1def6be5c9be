#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcolor/detail/disjoint_sets.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"

namespace qcolor {

namespace {

using Quad = std::array<std::uint64_t, 4>;

// Slot order within X(a,b,c,d).
enum Slot { kUnderIn = 0, kOverB = 1, kUnderOut = 2, kOverD = 3 };

struct Occurrence {
  std::size_t crossing;
  Slot slot;
};

std::vector<Quad> scan_quads(std::string_view text) {
  std::vector<Quad> quads;
  std::size_t line = 1;
  std::size_t line_start = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("malformed quadruple: " + what, line, pos - line_start + 1);
  };
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                                 text[pos] == '\n')) {
      if (text[pos] == '\n') {
        ++line;
        line_start = pos + 1;
      }
      ++pos;
    }
  };
  auto expect = [&](char ch) {
    skip_space();
    if (pos >= text.size() || text[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != 'X') fail("expected 'X('");
    ++pos;
    expect('(');
    Quad q{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      skip_space();
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), q[k]);
      if (ec != std::errc()) fail("expected an edge label");
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    expect(')');
    quads.push_back(q);
  }
  return quads;
}

// Over-strand direction per crossing: true when it runs from d to b.
// An occurrence is a tail (the edge leaves the crossing) for slot c, for
// slot b when the over-strand runs d->b, and for slot d otherwise. Every
// edge needs exactly one tail, which gives parity constraints between the
// direction bits.
std::vector<bool> solve_over_directions(const std::vector<Quad>& quads,
                                        const std::map<std::uint64_t, std::vector<Occurrence>>& occ) {
  const std::size_t n = quads.size();
  struct Edge {
    std::size_t to;
    bool parity;  // dir[to] = dir[from] ^ parity
  };
  std::vector<std::vector<Edge>> graph(n);
  std::vector<int> forced(n, -1);

  auto fixed_tail = [](Slot s) { return s == kUnderOut; };
  auto is_over = [](Slot s) { return s == kOverB || s == kOverD; };
  // tail bit of an over slot = dir ^ offset
  auto offset = [](Slot s) { return s == kOverD; };

  auto inconsistent = [](std::uint64_t label) {
    throw ParseError("inconsistent orientation at edge " + std::to_string(label) +
                     ": no direction of the over-strands makes every edge run from one "
                     "crossing to the next");
  };
  auto force = [&](std::size_t c, bool value, std::uint64_t label) {
    if (forced[c] >= 0 && forced[c] != static_cast<int>(value)) inconsistent(label);
    forced[c] = value;
  };

  for (const auto& [label, where] : occ) {
    const Occurrence& u = where[0];
    const Occurrence& v = where[1];
    if (!is_over(u.slot) && !is_over(v.slot)) {
      if (fixed_tail(u.slot) == fixed_tail(v.slot)) inconsistent(label);
    } else if (is_over(u.slot) != is_over(v.slot)) {
      const Occurrence& var = is_over(u.slot) ? u : v;
      const Occurrence& fix = is_over(u.slot) ? v : u;
      // dir ^ offset must differ from the fixed tail bit.
      force(var.crossing, !fixed_tail(fix.slot) ^ offset(var.slot), label);
    } else if (u.crossing == v.crossing) {
      // b and d of one crossing always take opposite roles.
    } else {
      bool parity = !(offset(u.slot) ^ offset(v.slot));
      graph[u.crossing].push_back({v.crossing, parity});
      graph[v.crossing].push_back({u.crossing, parity});
    }
  }

  std::vector<int> dir(n, -1);
  auto propagate = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      for (const Edge& e : graph[c]) {
        int want = dir[c] ^ static_cast<int>(e.parity);
        if (dir[e.to] < 0) {
          dir[e.to] = want;
          stack.push_back(e.to);
        } else if (dir[e.to] != want) {
          throw ParseError("inconsistent orientation: over-strand directions conflict around crossing " +
                           std::to_string(e.to + 1));
        }
      }
    }
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (forced[c] < 0) continue;
    if (dir[c] >= 0) {
      if (dir[c] != forced[c])
        throw ParseError("inconsistent orientation at crossing " + std::to_string(c + 1));
      continue;
    }
    dir[c] = forced[c];
    propagate(c);
  }
  // Components that only ever pass over are free to choose; take d->b.
  for (std::size_t c = 0; c < n; ++c) {
    if (dir[c] >= 0) continue;
    dir[c] = 1;
    propagate(c);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (forced[c] >= 0 && dir[c] != forced[c])
      throw ParseError("inconsistent orientation at crossing " + std::to_string(c + 1));
  }
  return {dir.begin(), dir.end()};
}

}  // namespace

LinkDiagram parse_pd_code(std::string_view text) {
  std::vector<Quad> quads = scan_quads(text);
  if (quads.empty()) {
    throw ParseError(
        "empty diagram is not expressible as PD code; use the relations format with a "
        "circles: header");
  }

  std::map<std::uint64_t, std::vector<Occurrence>> occ;
  for (std::size_t i = 0; i < quads.size(); ++i)
    for (int k = 0; k < 4; ++k) occ[quads[i][k]].push_back({i, static_cast<Slot>(k)});
  for (const auto& [label, where] : occ) {
    if (where.size() != 2) {
      throw ParseError("malformed PD code: edge " + std::to_string(label) + " appears " +
                       std::to_string(where.size()) + " times, expected 2");
    }
  }

  std::vector<bool> d_to_b = solve_over_directions(quads, occ);

  // Edges glued through an over-pass form one arc.
  std::vector<std::uint64_t> labels;
  for (const auto& entry : occ) labels.push_back(entry.first);
  auto index_of = [&](std::uint64_t label) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) -
                                    labels.begin());
  };
  detail::DisjointSets sets(labels.size());
  for (const Quad& q : quads) sets.unite(index_of(q[kOverB]), index_of(q[kOverD]));

  // labels are sorted, so first sight of a root is its smallest label
  std::vector<ArcIndex> arc_of_root(labels.size(), 0);
  ArcIndex next_arc = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t root = sets.find(i);
    if (arc_of_root[root] == 0) arc_of_root[root] = next_arc++;
  }
  auto arc = [&](std::uint64_t label) { return arc_of_root[sets.find(index_of(label))]; };

  std::vector<Crossing> crossings;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    const Quad& q = quads[i];
    crossings.push_back(
        {d_to_b[i] ? +1 : -1, arc(q[kUnderIn]), arc(q[kUnderOut]), arc(q[kOverB])});
  }
  return LinkDiagram::from_crossings(std::move(crossings));
}

}  // namespace qcolor
