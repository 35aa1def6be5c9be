#include <array>
#include <string>
#include <vector>

#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"

namespace qcolor {

namespace {

// Crossing tables in relations format. All crossings are written with |>
// exactly as tabulated.

constexpr const char* kHopf = R"(x1 = x1 * x2
x2 = x2 * x1
)";

constexpr const char* kTrefoil = R"(x3 = x1 * x2
x2 = x3 * x1
x1 = x2 * x3
)";

constexpr const char* kHopfSum = R"(x2 = x3 * x1
x3 = x2 * x4
x1 = x1 * x3
x4 = x4 * x3
)";

// c1 .. c45. The table reuses some arcs as the output of two crossings
// (x3 at c4 and c9, for instance), so it is loaded as a presentation.
constexpr const char* kAllenSwenberg = R"(x2 = x1 * x26
x26 = x27 * x1
x1 = x2 * x3
x3 = x4 * x1
x4 = x5 * x3
x5 = x6 * x7
x8 = x7 * x6
x29 = x28 * x6
x3 = x6 * x28
x9 = x8 * x7
x7 = x10 * x9
x11 = x9 * x10
x10 = x12 * x11
x13 = x11 * x12
x12 = x14 * x13
x19 = x15 * x14
x22 = x15 * x13
x20 = x16 * x14
x21 = x16 * x13
x14 = x17 * x21
x13 = x18 * x21
x20 = x17 * x22
x19 = x18 * x22
x21 = x23 * x20
x22 = x24 * x20
x26 = x23 * x19
x25 = x24 * x19
x30 = x28 * x29
x29 = x31 * x30
x32 = x30 * x31
x31 = x33 * x32
x34 = x32 * x33
x33 = x35 * x34
x40 = x36 * x35
x38 = x36 * x34
x41 = x37 * x35
x39 = x37 * x34
x35 = x42 * x39
x34 = x43 * x39
x41 = x42 * x38
x40 = x43 * x38
x25 = x44 * x40
x39 = x44 * x41
x27 = x45 * x40
x38 = x45 * x41
)";

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"unknot", parse_relations_file("circles: 1\n"), 1});
  entries.push_back({"unlink2", parse_relations_file("circles: 2\n"), 2});
  entries.push_back({"hopf", parse_relations_file(kHopf), 2});
  entries.push_back({"trefoil", parse_relations_file(kTrefoil), 1});
  entries.push_back({"hopf_sum", parse_relations_file(kHopfSum), 3});
  entries.push_back(
      {"allen_swenberg", parse_relations_file(kAllenSwenberg, Strictness::presentation), 3});
  return entries;
}

}  // namespace

std::span<const CatalogEntry> catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return e;
  throw ValidationError("unknown catalog link '" + std::string(name) + "'");
}

const LinkDiagram& catalog(std::string_view name) { return catalog_entry(name).diagram; }

}  // namespace qcolor
