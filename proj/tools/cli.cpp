#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"
#include "qcolor/invariants.hpp"
#include "qcolor/presentation.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/smith.hpp"
#include "qcolor/solver.hpp"

namespace qcolor::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Catalog name, or a path to a relations / PD file.
LinkDiagram resolve_link(const std::string& link, bool lenient) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == link) return e.diagram;
  if (!std::filesystem::exists(link))
    throw ValidationError("'" + link + "' is neither a catalog link nor a readable file");
  const std::string text = read_file(link);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == 'X') return parse_pd_code(text);
  return parse_relations_file(text, lenient ? Strictness::presentation : Strictness::strict);
}

std::string plural(std::size_t k, const std::string& noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

Json coloring_json(const Coloring& c) {
  return {{"assignment", c.assignment}, {"image_size", c.image_size}};
}

std::string coloring_text(const Coloring& c) {
  std::string line;
  for (std::size_t i = 0; i < c.assignment.size(); ++i)
    line += (i ? " " : "") + std::to_string(c.assignment[i]);
  return line;
}

struct Options {
  std::string format = "text";
  std::string link;
  std::string link_b;
  std::optional<std::uint32_t> n;
  std::optional<std::int64_t> t;
  std::vector<std::uint32_t> n_list;
  std::string t_policy;
  std::string quandle_file;
  std::uint64_t cap = kDefaultCap;
  bool enumerate = false;
  bool lenient = false;
};

// Picks the target quandle from --n/--t or --quandle-file.
FiniteQuandle target_quandle(const Options& o) {
  const bool alexander = o.n.has_value() || o.t.has_value();
  if (alexander == !o.quandle_file.empty())
    throw CLI::ValidationError("give either --n and --t, or --quandle-file");
  if (!alexander) return parse_quandle_table(read_file(o.quandle_file));
  if (!o.n || !o.t) throw CLI::ValidationError("--n and --t must be given together");
  return FiniteQuandle::alexander(*o.n, *o.t);
}

Json inputs_json(const Options& o) {
  Json in;
  in["link"] = o.link;
  in["n"] = o.n ? Json(*o.n) : Json();
  in["t"] = o.t ? Json(*o.t) : Json();
  in["quandle_file"] = o.quandle_file.empty() ? Json() : Json(o.quandle_file);
  in["cap"] = o.cap;
  return in;
}

void emit(std::ostream& out, const std::string& command, const Json& inputs, const Json& results,
          int status) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["exit_status"] = status;
  out << doc.dump(2) << "\n";
}

int cmd_catalog(const Options& o, std::ostream& out) {
  Json links = Json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    const std::size_t k = components(e.diagram).size();
    if (o.format == "json") {
      links.push_back({{"name", e.name},
                       {"arcs", e.diagram.arc_count()},
                       {"crossings", e.diagram.crossing_count()},
                       {"components", k}});
    } else {
      out << e.name << " " << plural(e.diagram.arc_count(), "arc") << " "
          << plural(e.diagram.crossing_count(), "crossing") << " " << plural(k, "component") << "\n";
    }
  }
  if (o.format == "json") emit(out, "catalog", Json::object(), {{"links", links}}, kOk);
  return kOk;
}

int cmd_relations(const Options& o, std::ostream& out) {
  const LinkDiagram d = resolve_link(o.link, o.lenient);
  const QuandlePresentation p = extract(d);
  if (o.format == "json") {
    Json classes = components(d);
    emit(out, "relations", {{"link", o.link}},
         {{"arcs", d.arc_count()},
          {"crossings", d.crossing_count()},
          {"components", classes},
          {"relations", render_relations(p)}},
         kOk);
  } else {
    out << render_relations(p);
  }
  return kOk;
}

int cmd_validate_quandle(const Options& o, std::ostream& out) {
  const FiniteQuandle q = parse_quandle_table(read_file(o.quandle_file));
  const bool involutory = is_involutory(q);
  if (o.format == "json") {
    emit(out, "validate-quandle", {{"file", o.quandle_file}},
         {{"valid", true}, {"order", q.order()}, {"involutory", involutory}}, kOk);
  } else {
    out << "valid quandle of order " << q.order() << (involutory ? ", involutory" : ", not involutory")
        << "\n";
  }
  return kOk;
}

int cmd_colorings(const Options& o, std::ostream& out) {
  const FiniteQuandle q = target_quandle(o);
  const QuandlePresentation p = extract(resolve_link(o.link, o.lenient));
  const BigInt count = counting_invariant(p, q, o.cap);
  std::vector<Coloring> listed;
  if (o.enumerate) {
    if (const auto& params = q.alexander_params())
      listed = enumerate_solutions(build_system(p, *params), params->n, o.cap);
    else
      listed = brute_force_colorings(p, q, o.cap);
  }
  if (o.format == "json") {
    Json results = {{"count", bigint_to_json(count)}};
    if (o.enumerate) {
      Json list = Json::array();
      for (const Coloring& c : listed) list.push_back(coloring_json(c));
      results["colorings"] = list;
    }
    Json inputs = inputs_json(o);
    inputs["enumerate"] = o.enumerate;
    emit(out, "colorings", inputs, results, kOk);
  } else {
    out << count.get_str() << "\n";
    for (const Coloring& c : listed) out << coloring_text(c) << "\n";
  }
  return kOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const FiniteQuandle q = target_quandle(o);
  const QuandlePresentation p = extract(resolve_link(o.link, o.lenient));
  const PhiPolynomial phi = phi_polynomial(p, q, o.cap);
  if (o.format == "json") {
    Json results = to_json(phi);
    results["count"] = phi.total();
    emit(out, "phi", inputs_json(o), results, kOk);
  } else {
    out << phi.to_string() << "\n";
  }
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const QuandlePresentation a = extract(resolve_link(o.link, o.lenient));
  const QuandlePresentation b = extract(resolve_link(o.link_b, o.lenient));
  const TPolicy policy = TPolicy::parse(o.t_policy);
  const DistinguishabilityReport report = compare(a, b, o.link, o.link_b, o.n_list, policy, o.cap);
  if (o.format == "json") {
    emit(out, "compare",
         {{"link_a", o.link}, {"link_b", o.link_b}, {"n", o.n_list}, {"t", policy.to_string()},
          {"cap", o.cap}},
         to_json(report), kOk);
  } else {
    out << to_text(report);
  }
  return kOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  if (!o.n || !o.t) throw CLI::ValidationError("matrix needs --n and --t");
  const FiniteQuandle q = FiniteQuandle::alexander(*o.n, *o.t);
  const AlexanderParams params = *q.alexander_params();
  const QuandlePresentation p = extract(resolve_link(o.link, o.lenient));
  const ColoringSystem sys = build_system(p, params);
  const SmithForm snf = smith_normal_form(sys.matrix);
  const IntMatrix reduced = snf.diagonal_matrix(sys.rows(), sys.cols());
  const BigInt count = count_solutions(snf, sys.cols(), params.n);
  if (o.format == "json") {
    auto rows = [](const IntMatrix& m) {
      Json r = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(bigint_to_json(m(i, j)));
        r.push_back(row);
      }
      return r;
    };
    emit(out, "matrix", inputs_json(o),
         {{"rows", sys.rows()},
          {"cols", sys.cols()},
          {"before", rows(sys.matrix)},
          {"after", rows(reduced)},
          {"count", bigint_to_json(count)}},
         kOk);
  } else {
    out << "# coloring matrix\n"
        << dump_matrix(sys.matrix, params.n, params.t) << "# smith form\n"
        << dump_matrix(reduced, params.n, params.t) << "# solutions mod " << params.n << ": "
        << count.get_str() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quandle coloring invariants of oriented link diagrams", "qcolor"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_link = [&](CLI::App* sub) {
    sub->add_option("link", o.link, "Catalog name or diagram file")->required();
    sub->add_flag("--lenient", o.lenient,
                  "Accept crossing tables that reuse an arc as an under-out arc");
  };
  auto add_quandle = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Modulus of the Alexander quandle");
    sub->add_option("--t", o.t, "Unit t of the Alexander quandle");
    sub->add_option("--quandle-file", o.quandle_file, "Quandle table file");
    sub->add_option("--cap", o.cap, "Maximum number of colorings to enumerate")->capture_default_str();
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in links");
  add_format(catalog_cmd);

  auto* relations_cmd = app.add_subcommand("relations", "Print the crossing relations of a link");
  add_link(relations_cmd);
  add_format(relations_cmd);

  auto* validate_cmd = app.add_subcommand("validate-quandle", "Check a quandle table file");
  validate_cmd->add_option("file", o.quandle_file, "Quandle table file")->required();
  add_format(validate_cmd);

  auto* colorings_cmd = app.add_subcommand("colorings", "Count colorings of a link");
  add_link(colorings_cmd);
  add_quandle(colorings_cmd);
  colorings_cmd->add_flag("--enumerate", o.enumerate, "Also list the colorings");
  add_format(colorings_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "Enhanced counting polynomial of a link");
  add_link(phi_cmd);
  add_quandle(phi_cmd);
  add_format(phi_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Compare two links over Alexander quandles");
  compare_cmd->add_option("link_a", o.link, "First link")->required();
  compare_cmd->add_option("link_b", o.link_b, "Second link")->required();
  compare_cmd->add_option("--n", o.n_list, "Comma separated moduli")->delimiter(',')->required();
  compare_cmd->add_option("--t", o.t_policy, "all-units, involutory, or a single t")->required();
  compare_cmd->add_option("--cap", o.cap, "Maximum colorings per Phi cell")->capture_default_str();
  compare_cmd->add_flag("--lenient", o.lenient, "Accept presentation-style crossing tables");
  add_format(compare_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Dump the coloring matrix and its Smith form");
  add_link(matrix_cmd);
  matrix_cmd->add_option("--n", o.n, "Modulus")->required();
  matrix_cmd->add_option("--t", o.t, "Unit t")->required();
  add_format(matrix_cmd);

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(o, out);
    if (*relations_cmd) return cmd_relations(o, out);
    if (*validate_cmd) return cmd_validate_quandle(o, out);
    if (*colorings_cmd) return cmd_colorings(o, out);
    if (*phi_cmd) return cmd_phi(o, out);
    if (*compare_cmd) return cmd_compare(o, out);
    if (*matrix_cmd) return cmd_matrix(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const NotAUnit& e) {
    err << "error: " << e.what() << "\n";
    return kNotAUnit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace qcolor::cli
