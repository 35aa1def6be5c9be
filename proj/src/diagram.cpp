#include "qcolor/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "qcolor/detail/disjoint_sets.hpp"
#include "qcolor/error.hpp"

namespace qcolor {

namespace {

std::string arc_name(ArcIndex a) { return "x" + std::to_string(a); }

void check_strict(const std::vector<Crossing>& crossings, std::size_t referenced) {
  std::vector<int> out_at(referenced + 1, -1);
  std::vector<int> in_at(referenced + 1, -1);
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    if (out_at[c.under_out] >= 0) {
      throw ValidationError("duplicate under-out arc " + arc_name(c.under_out) + " at crossings " +
                            std::to_string(out_at[c.under_out] + 1) + " and " +
                            std::to_string(i + 1));
    }
    out_at[c.under_out] = static_cast<int>(i);
    if (in_at[c.under_in] >= 0) {
      throw ValidationError("duplicate under-in arc " + arc_name(c.under_in) + " at crossings " +
                            std::to_string(in_at[c.under_in] + 1) + " and " +
                            std::to_string(i + 1));
    }
    in_at[c.under_in] = static_cast<int>(i);
  }
  for (ArcIndex a = 1; a <= referenced; ++a) {
    if ((out_at[a] >= 0) != (in_at[a] >= 0)) {
      throw ValidationError("under-strand through " + arc_name(a) +
                            " does not close: the arc " +
                            (out_at[a] >= 0 ? "starts at a crossing but never ends"
                                            : "ends at a crossing but never starts"));
    }
  }
}

}  // namespace

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, std::size_t free_circles,
                                        Strictness strictness) {
  if (crossings.empty() && free_circles == 0) {
    throw ValidationError("empty diagram: no crossings and no circles");
  }
  ArcIndex max_arc = 0;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    if (c.sign != 1 && c.sign != -1) {
      throw ValidationError("crossing " + std::to_string(i + 1) + " has sign " +
                            std::to_string(c.sign) + ", expected +1 or -1");
    }
    if (c.under_in == 0 || c.under_out == 0 || c.over == 0) {
      throw ValidationError("crossing " + std::to_string(i + 1) + " uses arc index 0");
    }
    max_arc = std::max({max_arc, c.under_in, c.under_out, c.over});
  }
  std::vector<bool> seen(max_arc + 1, false);
  for (const Crossing& c : crossings) {
    seen[c.under_in] = seen[c.under_out] = seen[c.over] = true;
  }
  for (ArcIndex a = 1; a <= max_arc; ++a) {
    if (!seen[a]) throw ValidationError("arc index gap: " + arc_name(a) + " is never referenced");
  }
  if (strictness == Strictness::strict) check_strict(crossings, max_arc);

  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.referenced_ = max_arc;
  d.free_circles_ = free_circles;
  d.strictness_ = strictness;
  return d;
}

ArcPartition components(const LinkDiagram& d) {
  detail::DisjointSets sets(d.arc_count() + 1);
  for (const Crossing& c : d.crossings()) sets.unite(c.under_in, c.under_out);
  ArcPartition classes;
  std::vector<std::size_t> slot(d.arc_count() + 1, SIZE_MAX);
  for (ArcIndex a = 1; a <= d.arc_count(); ++a) {
    std::size_t root = sets.find(a);
    if (slot[root] == SIZE_MAX) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(a);
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Relations format

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r'))
      ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  char peek() {
    skip_space();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  void expect(char ch, const char* what) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != ch) fail(std::string("expected ") + what);
    ++pos_;
  }

  std::uint64_t number(const char* what) {
    skip_space();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec == std::errc::result_out_of_range) fail(std::string(what) + " is too large");
    if (ec != std::errc()) fail(std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    return value;
  }

  ArcIndex arc() {
    expect('x', "arc label x<index>");
    std::size_t start = pos_;
    if (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t'))
      fail("expected arc index directly after 'x'");
    std::uint64_t v = number("arc index");
    if (v == 0) fail_at(start, "arc indices start at 1");
    if (v > 0xFFFFFFu) fail_at(start, "arc index is too large");
    return static_cast<ArcIndex>(v);
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(what, line_no_, pos + 1);
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t k) { pos_ += k; }
  std::string_view rest() const { return line_.substr(pos_); }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_relations_file(std::string_view text, Strictness strictness) {
  std::vector<Crossing> crossings;
  std::size_t circles = 0;
  bool circles_seen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner scan(line, line_no);
    if (scan.at_end()) continue;
    if (scan.rest().starts_with("circles")) {
      if (circles_seen) scan.fail("duplicate circles header");
      circles_seen = true;
      scan.advance(7);
      scan.expect(':', "':' after circles");
      circles = scan.number("circle count");
    } else {
      Crossing c;
      c.under_out = scan.arc();
      scan.expect('=', "'='");
      c.under_in = scan.arc();
      char op = scan.peek();
      if (op != '*' && op != '/') scan.fail("expected '*' or '/'");
      scan.advance(1);
      c.sign = op == '*' ? +1 : -1;
      c.over = scan.arc();
      crossings.push_back(c);
    }
    if (!scan.at_end()) scan.fail("unexpected trailing text");
  }
  return LinkDiagram::from_crossings(std::move(crossings), circles, strictness);
}

std::string render_relations(const LinkDiagram& d) {
  std::string out;
  if (d.free_circles() > 0) out += "circles: " + std::to_string(d.free_circles()) + "\n";
  for (const Crossing& c : d.crossings()) {
    out += arc_name(c.under_out) + " = " + arc_name(c.under_in) + (c.positive() ? " * " : " / ") +
           arc_name(c.over) + "\n";
  }
  return out;
}

}  // namespace qcolor
