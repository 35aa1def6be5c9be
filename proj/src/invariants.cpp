#include "qcolor/invariants.hpp"

#include <charconv>
#include <future>
#include <numeric>
#include <sstream>

#include "qcolor/error.hpp"

namespace qcolor {

std::uint64_t PhiPolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [exponent, coefficient] : terms) sum += coefficient;
  return sum;
}

std::string PhiPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [exponent, coefficient] : terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(coefficient) + "*q^" + std::to_string(exponent);
  }
  return out;
}

BigInt counting_invariant(const QuandlePresentation& p, const FiniteQuandle& q, std::uint64_t cap) {
  if (const auto& params = q.alexander_params())
    return count_solutions(build_system(p, *params), params->n);
  std::uint64_t found = 0;
  bool over_cap = false;
  for_each_coloring(p, q, [&](const std::vector<Element>&) {
    if (found >= cap) {
      over_cap = true;
      return false;
    }
    ++found;
    return true;
  });
  if (over_cap) throw CapExceeded("more than " + std::to_string(cap), cap);
  return BigInt(static_cast<unsigned long>(found));
}

PhiPolynomial phi_polynomial(const QuandlePresentation& p, const FiniteQuandle& q, std::uint64_t cap) {
  std::vector<Coloring> colorings;
  if (const auto& params = q.alexander_params())
    colorings = enumerate_solutions(build_system(p, *params), params->n, cap);
  else
    colorings = brute_force_colorings(p, q, cap);
  PhiPolynomial phi;
  for (const Coloring& c : colorings) ++phi.terms[c.image_size];
  return phi;
}

std::vector<std::uint32_t> units(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 1; t < n; ++t)
    if (std::gcd(t, n) == 1) out.push_back(t);
  if (n == 1) out.push_back(0);
  return out;
}

std::vector<std::uint32_t> involutory_units(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t : units(n))
    if ((std::uint64_t{t} * t) % n == 1 % n) out.push_back(t);
  return out;
}

std::vector<InvolutoryRow> involutory_analysis(const QuandlePresentation& p, std::uint32_t n) {
  if (n < 2) throw ValidationError("modulus must be at least 2");
  std::vector<InvolutoryRow> rows;
  for (std::uint32_t t : involutory_units(n))
    rows.push_back({t, count_solutions(build_system(p, {n, t}), n)});
  return rows;
}

TPolicy TPolicy::parse(const std::string& text) {
  if (text == "all-units") return all_units();
  if (text == "involutory" || text == "involutory-only") return involutory();
  std::int64_t t = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("t policy must be 'all-units', 'involutory' or an integer, got '" + text + "'");
  return single(t);
}

std::string TPolicy::to_string() const {
  switch (kind) {
    case Kind::all_units:
      return "all-units";
    case Kind::involutory:
      return "involutory";
    case Kind::single:
      break;
  }
  return std::to_string(t);
}

bool GridRow::differs() const {
  if (count_a != count_b) return true;
  return phi_a && phi_b && *phi_a != *phi_b;
}

namespace {

struct CellResult {
  BigInt count;
  std::optional<PhiPolynomial> phi;
};

CellResult evaluate_cell(const QuandlePresentation& p, std::uint32_t n, std::uint32_t t,
                         std::uint64_t cap) {
  const FiniteQuandle q = FiniteQuandle::alexander(n, t);
  CellResult cell;
  cell.count = counting_invariant(p, q, cap);
  if (cell.count <= BigInt(static_cast<unsigned long>(cap))) cell.phi = phi_polynomial(p, q, cap);
  return cell;
}

}  // namespace

DistinguishabilityReport compare(const QuandlePresentation& a, const QuandlePresentation& b,
                                 std::string link_a, std::string link_b,
                                 const std::vector<std::uint32_t>& n_values, TPolicy policy,
                                 std::uint64_t cap) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t n : n_values) {
    if (n < 2) throw ValidationError("modulus must be at least 2, got " + std::to_string(n));
    switch (policy.kind) {
      case TPolicy::Kind::all_units:
        for (std::uint32_t t : units(n)) cells.emplace_back(n, t);
        break;
      case TPolicy::Kind::involutory:
        for (std::uint32_t t : involutory_units(n)) cells.emplace_back(n, t);
        break;
      case TPolicy::Kind::single: {
        if (!inverse_mod(policy.t, n)) throw NotAUnit(policy.t, n);
        const auto t = static_cast<std::uint32_t>(((policy.t % n) + n) % n);
        cells.emplace_back(n, t);
        break;
      }
    }
  }

  std::vector<std::future<std::pair<CellResult, CellResult>>> pending;
  pending.reserve(cells.size());
  for (const auto& [n, t] : cells) {
    pending.push_back(std::async(std::launch::async, [&a, &b, n, t, cap] {
      return std::make_pair(evaluate_cell(a, n, t, cap), evaluate_cell(b, n, t, cap));
    }));
  }

  DistinguishabilityReport report;
  report.link_a = std::move(link_a);
  report.link_b = std::move(link_b);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [ca, cb] = pending[i].get();
    GridRow row{cells[i].first, cells[i].second, std::move(ca.count), std::move(cb.count),
                std::move(ca.phi), std::move(cb.phi)};
    report.distinguished = report.distinguished || row.differs();
    report.grid.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
  if (v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
  }
  return v.get_str();
}

BigInt bigint_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  throw ParseError("expected an integer count");
}

nlohmann::ordered_json to_json(const PhiPolynomial& phi) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [exponent, coefficient] : phi.terms)
    terms.push_back({{"exponent", exponent}, {"coefficient", coefficient}});
  return {{"text", phi.to_string()}, {"terms", terms}};
}

PhiPolynomial phi_from_json(const nlohmann::ordered_json& j) {
  PhiPolynomial phi;
  for (const auto& term : j.at("terms"))
    phi.terms[term.at("exponent").get<std::size_t>()] = term.at("coefficient").get<std::uint64_t>();
  return phi;
}

nlohmann::ordered_json to_json(const DistinguishabilityReport& r) {
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const GridRow& row : r.grid) {
    grid.push_back({{"n", row.n},
                    {"t", row.t},
                    {"count_a", bigint_to_json(row.count_a)},
                    {"count_b", bigint_to_json(row.count_b)},
                    {"phi_a", row.phi_a ? to_json(*row.phi_a) : nlohmann::ordered_json()},
                    {"phi_b", row.phi_b ? to_json(*row.phi_b) : nlohmann::ordered_json()}});
  }
  return {{"link_a", r.link_a}, {"link_b", r.link_b}, {"grid", grid}, {"verdict", r.verdict()}};
}

DistinguishabilityReport report_from_json(const nlohmann::ordered_json& j) {
  DistinguishabilityReport r;
  r.link_a = j.at("link_a").get<std::string>();
  r.link_b = j.at("link_b").get<std::string>();
  for (const auto& cell : j.at("grid")) {
    GridRow row;
    row.n = cell.at("n").get<std::uint32_t>();
    row.t = cell.at("t").get<std::uint32_t>();
    row.count_a = bigint_from_json(cell.at("count_a"));
    row.count_b = bigint_from_json(cell.at("count_b"));
    if (!cell.at("phi_a").is_null()) row.phi_a = phi_from_json(cell.at("phi_a"));
    if (!cell.at("phi_b").is_null()) row.phi_b = phi_from_json(cell.at("phi_b"));
    r.grid.push_back(std::move(row));
  }
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict != "distinguished" && verdict != "not distinguished")
    throw ParseError("unknown verdict '" + verdict + "'");
  r.distinguished = verdict == "distinguished";
  return r;
}

std::string to_text(const DistinguishabilityReport& r) {
  std::ostringstream out;
  out << "link_a: " << r.link_a << "\n"
      << "link_b: " << r.link_b << "\n";
  for (const GridRow& row : r.grid) {
    out << "n=" << row.n << " t=" << row.t << "  count_a=" << row.count_a.get_str()
        << " count_b=" << row.count_b.get_str()
        << "  phi_a=" << (row.phi_a ? row.phi_a->to_string() : "(count only)")
        << "  phi_b=" << (row.phi_b ? row.phi_b->to_string() : "(count only)") << "\n";
  }
  out << "verdict: " << r.verdict() << "\n";
  return out.str();
}

}  // namespace qcolor
