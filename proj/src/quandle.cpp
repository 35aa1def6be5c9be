#include "qcolor/quandle.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "qcolor/error.hpp"

namespace qcolor {

std::optional<std::uint32_t> inverse_mod(std::int64_t t, std::uint32_t n) {
  if (n == 0) return std::nullopt;
  std::int64_t r0 = n, r1 = ((t % n) + n) % n;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) return std::nullopt;
  return static_cast<std::uint32_t>(((s0 % n) + n) % n);
}

FiniteQuandle FiniteQuandle::validate(const std::vector<std::vector<Element>>& table) {
  const auto m = static_cast<std::uint32_t>(table.size());
  if (m == 0) throw ValidationError("quandle table is empty");
  FiniteQuandle q;
  q.order_ = m;
  q.op_.resize(std::size_t{m} * m);
  for (std::uint32_t x = 0; x < m; ++x) {
    if (table[x].size() != m) {
      throw ValidationError("quandle table row " + std::to_string(x) + " has " +
                            std::to_string(table[x].size()) + " entries, expected " +
                            std::to_string(m));
    }
    for (std::uint32_t y = 0; y < m; ++y) {
      if (table[x][y] >= m) {
        throw ValidationError("quandle table entry (" + std::to_string(x) + ", " +
                              std::to_string(y) + ") = " + std::to_string(table[x][y]) +
                              " is out of range");
      }
      q.op_[x * m + y] = table[x][y];
    }
  }

  for (Element x = 0; x < m; ++x)
    if (q.op(x, x) != x) throw AxiomViolation(1, {x, 0, 0});

  q.dual_.assign(std::size_t{m} * m, m);
  for (Element y = 0; y < m; ++y) {
    for (Element x = 0; x < m; ++x) {
      Element& slot = q.dual_[q.op(x, y) * m + y];
      if (slot != m) throw AxiomViolation(2, {y, 0, 0});
      slot = x;
    }
  }

  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      for (Element z = 0; z < m; ++z)
        if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z))) throw AxiomViolation(3, {x, y, z});
  return q;
}

FiniteQuandle FiniteQuandle::alexander(std::uint32_t n, std::int64_t t) {
  if (n < 2) throw ValidationError("Alexander quandle modulus must be at least 2");
  if (!inverse_mod(t, n)) throw NotAUnit(t, n);
  const auto tr = static_cast<std::uint64_t>(((t % n) + n) % n);
  const std::uint64_t s = (n + 1 - tr) % n;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) table[x][y] = static_cast<Element>((tr * x + s * y) % n);
  FiniteQuandle q = validate(table);
  q.params_ = AlexanderParams{n, static_cast<std::uint32_t>(tr)};
  return q;
}

FiniteQuandle FiniteQuandle::takasaki(std::uint32_t n) {
  if (n < 2) throw ValidationError("Takasaki quandle modulus must be at least 2");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) table[x][y] = static_cast<Element>((2 * y + n - x) % n);
  FiniteQuandle q = validate(table);
  q.params_ = AlexanderParams{n, n - 1};
  return q;
}

FiniteQuandle FiniteQuandle::trivial(std::uint32_t m) {
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) table[x][y] = x;
  return validate(table);
}

std::vector<std::vector<Element>> FiniteQuandle::table() const {
  std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y) t[x][y] = op(x, y);
  return t;
}

bool is_involutory(const FiniteQuandle& q) {
  for (Element x = 0; x < q.order(); ++x)
    for (Element y = 0; y < q.order(); ++y)
      if (q.op(q.op(x, y), y) != x) return false;
  return true;
}

FiniteQuandle parse_quandle_table(std::string_view text) {
  std::vector<std::uint64_t> numbers;
  std::size_t line = 1, col = 1;
  std::size_t pos = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i, ++pos) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance(1);
  };
  skip_space();
  if (!text.substr(pos).starts_with("order")) throw ParseError("expected 'order: <m>' header", line, col);
  advance(5);
  skip_space();
  if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", line, col);
  advance(1);
  std::vector<std::pair<std::size_t, std::size_t>> where;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("expected a non-negative integer", line, col);
    numbers.push_back(v);
    where.emplace_back(line, col);
    advance(static_cast<std::size_t>(ptr - (text.data() + pos)));
  }
  if (numbers.empty()) throw ParseError("missing quandle order", line, col);
  const std::uint64_t m = numbers[0];
  if (m == 0 || m > 4096) throw ParseError("quandle order must be in 1..4096", where[0].first, where[0].second);
  if (numbers.size() != 1 + m * m) {
    throw ParseError("expected " + std::to_string(m * m) + " table entries, found " +
                     std::to_string(numbers.size() - 1));
  }
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (std::uint64_t i = 0; i < m * m; ++i) {
    std::uint64_t v = numbers[1 + i];
    if (v >= m) {
      throw ParseError("table entry " + std::to_string(v) + " is out of range", where[1 + i].first,
                       where[1 + i].second);
    }
    table[i / m][i % m] = static_cast<Element>(v);
  }
  return FiniteQuandle::validate(table);
}

std::string render_quandle_table(const FiniteQuandle& q) {
  std::ostringstream out;
  out << "order: " << q.order() << "\n";
  for (Element x = 0; x < q.order(); ++x) {
    for (Element y = 0; y < q.order(); ++y) out << (y ? " " : "") << q.op(x, y);
    out << "\n";
  }
  return out.str();
}

}  // namespace qcolor
