#include "json_io.hpp"

namespace gaugekit::detail {

json space_json(const SpaceId& s) {
  if (s.is_sphere()) return json{{"sphere", s.dim()}};
  return json{{"lie", to_string(s)}};
}

json spec_json(const ConnectedSumSpec& s) { return json::parse(to_json_string(s)); }

json element_json(const GroupElement& x) {
  json c = json::array();
  for (const auto& v : x.coeffs()) c.push_back(integer_json(v));
  return c;
}

json yf_json(const YFDescriptor& yf) {
  json j{{"resolved", yf.resolved}};
  if (!yf.resolved) return j;
  j["tbar"] = yf.tbar;
  json alpha = json::array();
  for (const auto& a : yf.alpha) alpha.push_back(element_json(a));
  j["alpha"] = alpha;
  return j;
}

json factor_json(const Factor& f) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GaugeOverSphere>) {
          json j{{"kind", "gauge_over_sphere"}, {"group", v.group}, {"n", v.n}};
          if (v.ell)
            j["ell"] = integer_json(*v.ell);
          else
            j["ell"] = json{{"symbolic", "gcd(o(delta_1), K)"}, {"k_gcd", integer_json(v.k_gcd)}};
          return j;
        } else if constexpr (std::is_same_v<T, LoopSpace>) {
          return json{{"kind", "loop_space"},
                      {"base", v.base},
                      {"degree", v.degree},
                      {"multiplicity", v.multiplicity}};
        } else if constexpr (std::is_same_v<T, MapStar>) {
          return json{{"kind", "map_star"}, {"group", v.group}, {"y_f", yf_json(v.yf)}};
        } else if constexpr (std::is_same_v<T, FibrePower>) {
          return json{{"kind", "fibre_power"}, {"k", integer_json(v.k)}, {"f", v.f}};
        } else {
          return json{{"kind", "unknown"}, {"label", v.label}};
        }
      },
      f);
}

json expr_json(const HomotopyTypeExpr& e) {
  json factors = json::array();
  for (const auto& f : e.factors()) factors.push_back(factor_json(f));
  return json{{"factors", factors}, {"pretty", render_factors(factors)}};
}

namespace {

std::string int_text(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string render_factor(const json& f) {
  const std::string kind = f.at("kind");
  if (kind == "gauge_over_sphere") {
    const auto& ell = f.at("ell");
    std::string exp;
    if (ell.is_object()) {
      const std::string g = int_text(ell.at("k_gcd"));
      exp = g == "0" ? "o(delta_1)" : "gcd(o(delta_1)," + g + ")";
    } else {
      exp = int_text(ell);
    }
    return "G^" + exp + "(S^" + f.at("n").dump() + ")";
  }
  if (kind == "loop_space") {
    const int d = f.at("degree");
    std::string base = (d == 1 ? "Omega " : "Omega^" + std::to_string(d) + " ") +
                       f.at("base").get<std::string>();
    const auto m = f.at("multiplicity").get<std::size_t>();
    return m == 1 ? base : "(" + base + ")^" + std::to_string(m);
  }
  if (kind == "map_star") return "Map*(Y_F, " + f.at("group").get<std::string>() + ")";
  if (kind == "fibre_power") {
    const std::string k = int_text(f.at("k"));
    const std::string fn = f.at("f");
    return k == "1" ? "F^" + fn : "F^(" + k + fn + ")";
  }
  return f.at("label").get<std::string>();
}

}  // namespace

std::string render_factors(const json& factors) {
  if (factors.empty()) return "*";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += render_factor(f);
  }
  return out;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json mixed_matrix_json(const MixedMatrix& m) {
  json moduli = json::array();
  for (const auto& mod : m.column_moduli()) moduli.push_back(integer_json(mod.value()));
  return json{{"rows", matrix_json(m.values())}, {"moduli", moduli}};
}

json case_json(const ClassificationCase& c) {
  return json{{"case", to_string(c.kind)}, {"reason", c.reason}};
}

json classification_json(const BundleClassification& b) {
  json j{{"case", to_string(b.which.kind)}, {"reason", b.which.reason}};
  if (b.group) {
    j["bundles"] = json{{"free_rank", b.group->free_rank()}, {"group", group_json(*b.group)}};
  } else {
    json terms = json::array();
    for (const auto& t : b.terms) {
      json term{{"label", t.label}, {"multiplicity", t.multiplicity_text}};
      term["group"] = t.group ? group_json(*t.group) : json(nullptr);
      terms.push_back(term);
    }
    j["bundles"] = json{{"formula", terms}};
  }
  j["statement"] = b.statement;
  return j;
}

json verdict_json(const EquivalenceVerdict& v) {
  return json{{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
}

json pi_result_json(const PiResult& p) {
  return json{{"known", group_json(p.known)},
              {"symbolic", p.symbolic},
              {"complete", p.complete()},
              {"text", to_string(p)}};
}

json table_entry_json(const TableEntry& e) {
  return json{{"space", space_json(e.space)},
              {"degree", e.degree},
              {"group", group_json(e.group)},
              {"citation", e.citation}};
}

}  // namespace gaugekit::detail
