#include "qcolor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "qcolor/error.hpp"

namespace qcolor {

std::size_t image_size(const std::vector<Element>& assignment) {
  std::vector<Element> colors = assignment;
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

ColoringSystem build_system(const QuandlePresentation& p, const AlexanderParams& params) {
  const auto t_inv = inverse_mod(params.t, params.n);
  if (params.n < 2) throw ValidationError("modulus must be at least 2");
  if (!t_inv) throw NotAUnit(params.t, params.n);

  ColoringSystem sys;
  sys.params = params;
  sys.matrix = IntMatrix(p.relations.size(), p.arc_count);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const CrossingRelation& rel = p.relations[r];
    const long t = rel.positive ? static_cast<long>(params.t) : static_cast<long>(*t_inv);
    sys.matrix(r, rel.in - 1) += t;
    sys.matrix(r, rel.over - 1) += 1 - t;
    sys.matrix(r, rel.out - 1) -= 1;
  }
  return sys;
}

BigInt count_solutions(const SmithForm& snf, std::size_t cols, std::uint32_t n) {
  BigInt count;
  mpz_ui_pow_ui(count.get_mpz_t(), n, cols - snf.rank);
  const BigInt modulus = n;
  for (const BigInt& d : snf.diagonal) count *= gcd(d, modulus);
  return count;
}

BigInt count_solutions(const ColoringSystem& sys, std::uint32_t n) {
  if (n < 1) throw ValidationError("modulus must be positive");
  return count_solutions(smith_normal_form(sys.matrix), sys.cols(), n);
}

std::vector<Coloring> enumerate_solutions(const ColoringSystem& sys, std::uint32_t n,
                                          std::uint64_t cap) {
  const SmithForm snf = smith_normal_form(sys.matrix);
  const BigInt count = count_solutions(snf, sys.cols(), n);
  if (count > BigInt(static_cast<unsigned long>(cap))) throw CapExceeded(count.get_str(), cap);

  // Solutions are x = V y where d_i y_i = 0 (mod n) for i < rank and the
  // remaining y_i are free in Z_n. Since V is unimodular, distinct y give
  // distinct x.
  const std::size_t cols = sys.cols();
  const BigInt modulus = n;
  std::vector<std::uint64_t> v(cols * cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), snf.right(i, j).get_mpz_t(), modulus.get_mpz_t());
      v[i * cols + j] = r.get_ui();
    }
  std::vector<std::uint64_t> step(cols, 1);
  std::vector<std::uint64_t> choices(cols, n);
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const std::uint64_t g = BigInt(gcd(snf.diagonal[i], modulus)).get_ui();
    choices[i] = g;
    step[i] = n / g;
  }

  std::vector<Coloring> out;
  out.reserve(count.get_ui());
  std::vector<std::uint64_t> digit(cols, 0);
  std::vector<Element> x(cols);
  while (true) {
    for (std::size_t i = 0; i < cols; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc = (acc + v[i * cols + j] * ((digit[j] * step[j]) % n)) % n;
      x[i] = static_cast<Element>(acc);
    }
    out.push_back({x, image_size(x)});
    std::size_t pos = 0;
    while (pos < cols && ++digit[pos] == choices[pos]) digit[pos++] = 0;
    if (pos == cols) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t for_each_coloring(const QuandlePresentation& p, const FiniteQuandle& q,
                                const std::function<bool(const std::vector<Element>&)>& visit) {
  const std::size_t m = p.arc_count;
  const Element order = q.order();
  // Relations keyed by their largest arc: checkable once that arc is colored.
  std::vector<std::vector<CrossingRelation>> closing(m + 1);
  for (const CrossingRelation& r : p.relations) closing[std::max({r.out, r.in, r.over})].push_back(r);

  std::vector<Element> color(m + 1, 0);
  auto satisfied = [&](std::size_t arc) {
    for (const CrossingRelation& r : closing[arc]) {
      Element image = r.positive ? q.op(color[r.in], color[r.over]) : q.dual(color[r.in], color[r.over]);
      if (image != color[r.out]) return false;
    }
    return true;
  };

  std::uint64_t found = 0;
  std::vector<Element> assignment(m);
  if (m == 0) {
    visit(assignment);
    return 1;
  }
  // Iterative depth-first search; color[arc] == order marks "exhausted".
  std::size_t arc = 1;
  color[1] = 0;
  while (arc >= 1) {
    if (color[arc] == order) {
      --arc;
      if (arc >= 1) ++color[arc];
      continue;
    }
    if (!satisfied(arc)) {
      ++color[arc];
      continue;
    }
    if (arc == m) {
      ++found;
      std::copy(color.begin() + 1, color.end(), assignment.begin());
      if (!visit(assignment)) return found;
      ++color[arc];
    } else {
      color[++arc] = 0;
    }
  }
  return found;
}

std::vector<Coloring> brute_force_colorings(const QuandlePresentation& p, const FiniteQuandle& q,
                                            std::uint64_t cap) {
  std::vector<Coloring> out;
  bool over_cap = false;
  for_each_coloring(p, q, [&](const std::vector<Element>& a) {
    if (out.size() >= cap) {
      over_cap = true;
      return false;
    }
    out.push_back({a, image_size(a)});
    return true;
  });
  if (over_cap) throw CapExceeded("more than " + std::to_string(cap), cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::string dump_matrix(const IntMatrix& m, std::uint32_t n, std::uint32_t t) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << n << ' ' << t << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace qcolor
