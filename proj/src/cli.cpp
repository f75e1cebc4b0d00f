#include "gaugekit/cli.hpp"

#include "gaugekit/classify.hpp"
#include "gaugekit/decompose.hpp"
#include "gaugekit/homotopy_tables.hpp"
#include "gaugekit/manifold.hpp"
#include "gaugekit/matlin.hpp"

#include "json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gaugekit::cli {

using detail::json;

namespace {

struct Options {
  std::string group;
  std::string spec;
  std::string k;
  std::string k2;
  unsigned j = 0;
  std::string m;
  std::string x;
  std::string matrix;
  std::string moduli;
  std::string lookup;
  std::string connecting;
  std::string pi6;
  bool list = false;
  bool pointed = false;
  bool as_json = false;
  std::vector<std::string> tables;
};

std::vector<Integer> parse_list(const std::string& text, const char* flag) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      out.push_back(parse_integer(item));
    } catch (const DomainError&) {
      throw ParseError(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw ParseError(std::string(flag) + " needs a comma separated integer list");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConnectedSumSpec load_spec(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_spec_json(arg);
  return parse_spec_json(read_file(arg));
}

SpaceId load_group(const std::string& text) {
  try {
    return parse_group(text);
  } catch (const DomainError& e) {
    throw ParseError(std::string("--group: ") + e.what());
  }
}

json int_list_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(detail::integer_json(x));
  return a;
}

// Human-readable text, always derived from the JSON report.
std::string render_text(const std::string& command, const json& r) {
  std::ostringstream os;
  if (command == "classify") {
    os << "case: " << r.at("case").get<std::string>() << "\n";
    os << r.at("statement").get<std::string>() << "\n";
  } else if (command == "decompose") {
    os << r.at("pretty").get<std::string>() << "\n";
  } else if (command == "equivalent") {
    os << r.at("verdict").get<std::string>() << ": " << r.at("reason").get<std::string>() << "\n";
  } else if (command == "pi") {
    os << "pi_" << r.at("j").dump() << " = " << r.at("text").get<std::string>() << "\n";
  } else if (command == "orbit-reduce") {
    os << "canonical: " << r.at("canonical").dump() << "\n";
    os << "gcd_m: " << r.at("gcd").dump() << "\n";
    os << "transform: " << r.at("transform").dump() << " (det " << r.at("det").dump() << ")\n";
  } else if (command == "echelon") {
    os << "echelon: " << r.at("echelon").at("rows").dump() << " moduli "
       << r.at("echelon").at("moduli").dump() << "\n";
    os << "transform: " << r.at("transform").dump() << " (det " << r.at("det").dump() << ")\n";
    os << "rank: " << r.at("rank").dump() << "\n";
  } else if (command == "tables") {
    auto entry_line = [&](const json& e) {
      const auto& sp = e.at("space");
      os << "pi_" << e.at("degree").dump() << "("
         << (sp.contains("sphere") ? "S^" + sp.at("sphere").dump() : sp.at("lie").get<std::string>())
         << ") = " << e.at("group").at("text").get<std::string>() << "  ["
         << e.at("citation").get<std::string>() << "]\n";
    };
    if (r.contains("entries")) {
      for (const auto& e : r.at("entries")) entry_line(e);
    } else if (r.contains("degree")) {
      entry_line(r);
    } else if (r.contains("order")) {
      os << r.at("order").dump() << "  [" << r.at("citation").get<std::string>() << "]\n";
    } else {
      os << r.at("pi6_order").dump() << "\n";
    }
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

json cmd_classify(const Options& o, const HomotopyTables& t) {
  const auto g = load_group(o.group);
  const auto spec = load_spec(o.spec);
  const auto c = classify_conditions(g, spec, t);
  if (c.kind == CaseKind::Unsupported) throw DomainError("unsupported: " + c.reason);
  json r{{"group", to_string(g)}, {"spec", detail::spec_json(spec)}};
  r.update(detail::classification_json(prin_bundles(g, spec, t)));
  return r;
}

json cmd_decompose(const Options& o, const HomotopyTables& t) {
  const auto g = load_group(o.group);
  const auto spec = load_spec(o.spec);
  std::vector<Integer> k;
  if (!o.k.empty()) k = parse_list(o.k, "--k");
  if (!o.pointed && k.empty()) throw ParseError("decompose needs --k unless --pointed is given");
  const auto e = o.pointed ? decompose_pointed(g, spec, k, t) : decompose_unpointed(g, spec, k, t);
  json r{{"group", to_string(g)},
         {"spec", detail::spec_json(spec)},
         {"pointed", o.pointed},
         {"case", to_string(classify_conditions(g, spec, t).kind)}};
  if (!k.empty()) r["K"] = int_list_json(k);
  r.update(detail::expr_json(e));
  return r;
}

json cmd_equivalent(const Options& o, const HomotopyTables& t) {
  const auto g = load_group(o.group);
  const auto spec = load_spec(o.spec);
  const auto k = parse_list(o.k, "--k"), k2 = parse_list(o.k2, "--k2");
  json r = detail::verdict_json(equivalent(g, spec, k, k2, t));
  r["group"] = to_string(g);
  r["spec"] = detail::spec_json(spec);
  r["K"] = int_list_json(k);
  r["K2"] = int_list_json(k2);
  return r;
}

json cmd_pi(const Options& o, const HomotopyTables& t) {
  const auto g = load_group(o.group);
  const auto spec = load_spec(o.spec);
  json r{{"group", to_string(g)}, {"spec", detail::spec_json(spec)}, {"j", o.j}};
  r.update(detail::pi_result_json(pointed_homotopy_groups(g, spec, o.j, t)));
  return r;
}

json cmd_orbit_reduce(const Options& o) {
  const auto m = parse_list(o.m, "--m");
  if (m.size() != 1) throw ParseError("--m takes a single modulus");
  const Modulus mod(m[0]);
  const auto x = make_residues(mod, parse_list(o.x, "--x"));
  const auto cert = orbit_reduce(mod, x);
  std::vector<Integer> canonical;
  for (const auto& c : cert.canonical) canonical.push_back(c.value());
  return json{{"modulus", detail::integer_json(mod.value())},
              {"input", int_list_json(parse_list(o.x, "--x"))},
              {"canonical", int_list_json(canonical)},
              {"gcd", detail::integer_json(gcd_m(mod, x))},
              {"transform", detail::matrix_json(cert.transform)},
              {"det", detail::integer_json(determinant(cert.transform))}};
}

json cmd_echelon(const Options& o) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream ss(o.matrix);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_list(row, "--matrix"));
  if (rows.empty()) throw ParseError("--matrix needs rows separated by ';'");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("--matrix rows have different lengths");
  const std::size_t cols = rows.front().size();
  std::vector<Modulus> moduli(cols, Modulus(0));
  if (!o.moduli.empty()) {
    const auto ms = parse_list(o.moduli, "--moduli");
    if (ms.size() != cols) throw ParseError("--moduli needs one entry per column");
    for (std::size_t c = 0; c < cols; ++c) moduli[c] = Modulus(ms[c]);
  }
  IntMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols; ++c) a(i, c) = rows[i][c];
  const MixedMatrix mixed(a, moduli);
  const auto ech = row_echelon_mixed(mixed);
  return json{{"input", detail::mixed_matrix_json(mixed)},
              {"transform", detail::matrix_json(ech.transform)},
              {"echelon", detail::mixed_matrix_json(ech.echelon)},
              {"rank", echelon_rank(ech.echelon)},
              {"det", detail::integer_json(determinant(ech.transform))}};
}

json cmd_tables(const Options& o, const HomotopyTables& t) {
  if (!o.lookup.empty()) {
    const auto comma = o.lookup.rfind(',');
    if (comma == std::string::npos) throw ParseError("--lookup expects <space>,<degree>");
    SpaceId space = SpaceId::sphere(1);
    try {
      space = parse_space(o.lookup.substr(0, comma));
    } catch (const DomainError& e) {
      throw ParseError(std::string("--lookup: ") + e.what());
    }
    const auto deg = parse_list(o.lookup.substr(comma + 1), "--lookup degree");
    if (deg.size() != 1 || deg[0] < 0) throw ParseError("--lookup degree must be a non-negative integer");
    const auto k = static_cast<unsigned>(deg[0]);
    const auto e = t.lookup(space, k);
    if (!e)
      throw DomainError("missing table key pi_" + std::to_string(k) + "(" + to_string(space) + ")");
    return detail::table_entry_json(*e);
  }
  if (!o.connecting.empty()) {
    const auto comma = o.connecting.rfind(',');
    if (comma == std::string::npos) throw ParseError("--connecting expects <group>,<n>");
    const auto g = load_group(o.connecting.substr(0, comma));
    const auto n = parse_list(o.connecting.substr(comma + 1), "--connecting n");
    const auto e = t.connecting_order(g, static_cast<int>(n.at(0)));
    if (!e)
      throw DomainError("missing table key connecting order (" + to_string(g) + ", S^" +
                        to_string(n.at(0)) + ")");
    return json{{"group", to_string(g)},
                {"n", detail::integer_json(n.at(0))},
                {"order", detail::integer_json(e->order)},
                {"citation", e->citation}};
  }
  if (!o.pi6.empty()) {
    const auto g = load_group(o.pi6);
    return json{{"group", to_string(g)}, {"pi6_order", detail::integer_json(pi6_order(g, t))}};
  }
  json entries = json::array();
  for (const auto& e : t.explicit_entries()) entries.push_back(detail::table_entry_json(e));
  return json{{"entries", entries}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal bundles and gauge-group decompositions over connected sums"};
  app.name("gaugekit");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tables", o.tables, "Extra table files, highest precedence first")
        ->delimiter(',');
    sub->add_flag("--json", o.as_json, "Emit JSON");
  };
  auto add_group_spec = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Lie group, e.g. SU2, Sp3, G2")->required();
    sub->add_option("--spec", o.spec, "Manifold spec: inline JSON or a file path")->required();
  };

  auto* classify = app.add_subcommand("classify", "Classify principal G-bundles over M");
  add_group_spec(classify);
  add_common(classify);

  auto* decompose = app.add_subcommand("decompose", "Homotopy decomposition of the gauge group");
  add_group_spec(decompose);
  decompose->add_option("--k", o.k, "Bundle coordinates K, comma separated");
  decompose->add_flag("--pointed", o.pointed, "Pointed gauge group");
  add_common(decompose);

  auto* equiv = app.add_subcommand("equivalent", "Compare the gauge groups for K and K2");
  add_group_spec(equiv);
  equiv->add_option("--k", o.k, "First K")->required();
  equiv->add_option("--k2", o.k2, "Second K")->required();
  add_common(equiv);

  auto* pi = app.add_subcommand("pi", "Homotopy groups of the pointed gauge group");
  add_group_spec(pi);
  pi->add_option("--j", o.j, "Degree j")->default_val(0);
  pi->add_option("--k", o.k, "Ignored; pointed groups do not depend on K");
  add_common(pi);

  auto* orbit = app.add_subcommand("orbit-reduce", "gcd-orbit normal form with certificate");
  orbit->add_option("--m", o.m, "Modulus, 0 for the integers")->required();
  orbit->add_option("--x", o.x, "Vector, comma separated")->required();
  add_common(orbit);

  auto* echelon = app.add_subcommand("echelon", "Row echelon form over mixed Z / Z_m columns");
  echelon->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','")->required();
  echelon->add_option("--moduli", o.moduli, "Column moduli, default all 0");
  add_common(echelon);

  auto* tables = app.add_subcommand("tables", "Query the homotopy tables");
  tables->add_option("--lookup", o.lookup, "<space>,<degree>, e.g. sphere:3,6 or SU2,6");
  tables->add_option("--connecting", o.connecting, "<group>,<n>, connecting-map order");
  tables->add_option("--pi6", o.pi6, "|pi_6(G)|");
  tables->add_flag("--list", o.list, "List every explicit entry (the default)");
  add_common(tables);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    const auto t = HomotopyTables::from_sources(o.tables);
    json report;
    if (command == "classify")
      report = cmd_classify(o, t);
    else if (command == "decompose")
      report = cmd_decompose(o, t);
    else if (command == "equivalent")
      report = cmd_equivalent(o, t);
    else if (command == "pi")
      report = cmd_pi(o, t);
    else if (command == "orbit-reduce")
      report = cmd_orbit_reduce(o);
    else if (command == "echelon")
      report = cmd_echelon(o);
    else
      report = cmd_tables(o, t);

    if (o.as_json)
      out << report.dump(2) << "\n";
    else
      out << render_text(command, report);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace gaugekit::cli
