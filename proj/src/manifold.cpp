#include "gaugekit/manifold.hpp"

#include "json_util.hpp"

#include <algorithm>

namespace gaugekit {

using detail::json;

namespace {

std::string missing_target(const ConnectedSumSpec& s, int shift) {
  // shift 0: pi_{n+q-1}(S^q), shift 1: pi_{n+q}(S^{q+1})
  return "pi_" + std::to_string(s.n + s.q - 1 + shift) + "(S^" + std::to_string(s.q + shift) + ")";
}

const CharacteristicMapEntry& require_map(const ConnectedSumSpec& s, const HomotopyTables& t,
                                          int shift) {
  const auto* cm = t.characteristic_map(s.n, s.q);
  if (!cm)
    throw DomainError("missing table key: characteristic map for (n=" + std::to_string(s.n) +
                      ", q=" + std::to_string(s.q) + ") giving " + missing_target(s, shift));
  return *cm;
}

void check_xi_shape(const ConnectedSumSpec& s, const CharacteristicMapEntry& cm) {
  for (const auto& x : s.xi)
    if (x.size() != cm.xi_group.generator_count())
      throw DomainError("xi entries need " + std::to_string(cm.xi_group.generator_count()) +
                        " coefficients for pi_" + std::to_string(s.n - 1) + "(SO(" +
                        std::to_string(s.q) + ")) = " + to_string(cm.xi_group));
}

// sum_c x_c * images[c], as an element of target
GroupElement image_of(const std::vector<Integer>& x, const FgAbGroup& xi_group,
                      const std::vector<std::vector<Integer>>& images, const FgAbGroup& target) {
  GroupElement out = GroupElement::zero(target);
  for (std::size_t c = 0; c < x.size(); ++c) {
    const Integer coeff = xi_group.generator_modulus(c).reduce(x[c]);
    out = out + coeff * GroupElement(target, images[c]);
  }
  return out;
}

bool all_xi_zero(const ConnectedSumSpec& s) {
  return std::all_of(s.xi.begin(), s.xi.end(), [](const std::vector<Integer>& x) {
    return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v.is_zero(); });
  });
}

}  // namespace

ConnectedSumSpec ConnectedSumSpec::scalar(int n, int q, const std::vector<Integer>& xi) {
  ConnectedSumSpec s;
  s.n = n;
  s.q = q;
  for (const auto& x : xi) s.xi.push_back({x});
  return s;
}

void validate(const ConnectedSumSpec& spec) {
  if (spec.n < 2) throw DomainError("spec needs n >= 2, got " + std::to_string(spec.n));
  if (spec.q < 2) throw DomainError("spec needs q >= 2, got " + std::to_string(spec.q));
  if (spec.xi.empty()) throw DomainError("spec needs at least one summand (xi is empty)");
  for (const auto& x : spec.xi)
    if (x.size() != spec.xi.front().size() || x.empty())
      throw DomainError("all xi entries must have the same positive length");
}

ConnectedSumSpec parse_spec_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed spec JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  ConnectedSumSpec s;
  try {
    for (const char* key : {"n", "q", "xi"})
      if (!j.contains(key)) throw ParseError(std::string("spec is missing field '") + key + "'");
    if (!j.at("n").is_number_integer() || !j.at("q").is_number_integer())
      throw ParseError("spec fields n and q must be integers");
    s.n = j.at("n").get<int>();
    s.q = j.at("q").get<int>();
    if (!j.at("xi").is_array()) throw ParseError("spec field xi must be an array");
    for (const auto& x : j.at("xi")) {
      if (x.is_array())
        s.xi.push_back(detail::json_integer_list(x, "xi"));
      else
        s.xi.push_back({detail::json_integer(x, "xi")});
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("spec: ") + e.what());
  }
  validate(s);
  return s;
}

std::string to_json_string(const ConnectedSumSpec& spec) {
  json xi = json::array();
  for (const auto& x : spec.xi) {
    if (x.size() == 1) {
      xi.push_back(detail::integer_json(x[0]));
    } else {
      json row = json::array();
      for (const auto& v : x) row.push_back(detail::integer_json(v));
      xi.push_back(row);
    }
  }
  return json{{"n", spec.n}, {"q", spec.q}, {"xi", xi}}.dump();
}

AttachingMap attaching_map(const ConnectedSumSpec& spec, const HomotopyTables& tables) {
  validate(spec);
  AttachingMap phi{spec.n, spec.q, {}};
  const auto* cm = tables.characteristic_map(spec.n, spec.q);
  if (cm) check_xi_shape(spec, *cm);
  for (const auto& x : spec.xi) {
    if (cm)
      phi.eta_bar.push_back(image_of(x, cm->xi_group, cm->j_images, cm->j_target));
    else
      phi.eta_bar.push_back(std::nullopt);
  }
  return phi;
}

std::string to_string(const AttachingMap& phi) {
  const std::string wp = "[i_" + std::to_string(phi.n) + ", i_" + std::to_string(phi.q) + "]";
  std::string out;
  for (std::size_t i = 0; i < phi.eta_bar.size(); ++i) {
    if (i) out += " + ";
    std::string eta = "?";
    if (const auto& e = phi.eta_bar[i]) {
      eta.clear();
      for (std::size_t c = 0; c < e->coeffs().size(); ++c)
        eta += (c ? "," : "") + to_string(e->coeffs()[c]);
      if (e->coeffs().size() != 1) eta = "(" + eta + ")";
    }
    out += "(" + eta + " + " + wp + ")";
  }
  return out;
}

MixedMatrix nf_matrix(const ConnectedSumSpec& spec, const HomotopyTables& tables) {
  validate(spec);
  const auto& cm = require_map(spec, tables, 1);
  check_xi_shape(spec, cm);
  std::vector<Modulus> moduli;
  for (std::size_t c = 0; c < cm.ej_target.generator_count(); ++c)
    moduli.push_back(cm.ej_target.generator_modulus(c));
  MixedMatrix m(spec.r(), moduli);
  for (std::size_t i = 0; i < spec.r(); ++i) {
    const auto row = image_of(spec.xi[i], cm.xi_group, cm.ej_images, cm.ej_target);
    for (std::size_t c = 0; c < moduli.size(); ++c) m.set(i, c, row.coeffs()[c]);
  }
  return m;
}

std::size_t tbar(const ConnectedSumSpec& spec, const HomotopyTables& tables) {
  validate(spec);
  // E∘J is a homomorphism, so zero characteristic elements give a zero matrix.
  if (all_xi_zero(spec)) return 0;
  const auto ech = row_echelon_mixed(nf_matrix(spec, tables));
  return std::min(spec.r(), echelon_rank(ech.echelon));
}

YFDescriptor yf_descriptor(const ConnectedSumSpec& spec, const HomotopyTables& tables) {
  validate(spec);
  YFDescriptor yf;
  if (all_xi_zero(spec)) return yf;

  const auto nf = nf_matrix(spec, tables);
  const auto ech = row_echelon_mixed(nf);
  yf.tbar = std::min(spec.r(), echelon_rank(ech.echelon));

  const auto& cm = *tables.characteristic_map(spec.n, spec.q);
  std::vector<GroupElement> j_rows;
  for (const auto& x : spec.xi) j_rows.push_back(image_of(x, cm.xi_group, cm.j_images, cm.j_target));
  for (std::size_t i = 0; i < yf.tbar; ++i) {
    GroupElement a = GroupElement::zero(cm.j_target);
    for (std::size_t k = 0; k < spec.r(); ++k) a = a + ech.transform(i, k) * j_rows[k];
    yf.alpha.push_back(a);
  }
  return yf;
}

SuspensionSplitting suspension_splitting(const ConnectedSumSpec& spec, const HomotopyTables& tables) {
  return {spec.n, spec.q, spec.r(), yf_descriptor(spec, tables)};
}

std::string to_string(const SuspensionSplitting& s) {
  std::string out;
  auto add = [&](const std::string& piece) {
    if (!out.empty()) out += " v ";
    out += piece;
  };
  for (std::size_t i = 0; i < s.r; ++i) add("S^" + std::to_string(s.n + 1));
  for (std::size_t i = 0; i < s.r - s.yf.tbar; ++i) add("S^" + std::to_string(s.q + 1));
  add("Sigma Y_F");
  return out;
}

}  // namespace gaugekit
