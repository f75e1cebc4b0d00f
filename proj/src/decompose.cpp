#include "gaugekit/decompose.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <map>

namespace gaugekit {

namespace {

Integer gcd_all(const Integer& start, const std::vector<Integer>& k) {
  Integer g = start;
  for (const auto& x : k) g = gcd(g, x);
  return g;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* la = std::get_if<LoopSpace>(&a)) {
    const auto& lb = std::get<LoopSpace>(b);
    if (la->base != lb.base) return la->base < lb.base;
    return la->degree > lb.degree;
  }
  return detail::factor_json(a).dump() < detail::factor_json(b).dump();
}

ClassificationCase require_decomposable(const SpaceId& g, const ConnectedSumSpec& spec,
                                        const HomotopyTables& tables) {
  const auto c = classify_conditions(g, spec, tables);
  if (!c.bijective())
    throw DomainError("decomposition needs the SU_stable, Sp_stable or Dim7_pi6coprime case; got " +
                      to_string(c.kind) + " (" + c.reason + ")");
  return c;
}

void require_length(const std::vector<Integer>& k, std::size_t r, const char* name) {
  if (k.size() != r)
    throw DomainError(std::string(name) + " has " + std::to_string(k.size()) +
                      " entries, expected r = " + std::to_string(r));
}

std::string pi_text(const SpaceId& g, unsigned k) {
  return "pi_" + std::to_string(k) + "(" + to_string(g) + ")";
}

// Exactly one xi^i = 1 mod 12 and every other xi^i = 0 mod 12.
bool unit_vector_shape(const ConnectedSumSpec& spec) {
  if (spec.n != 4 || spec.q != 3) return false;
  int ones = 0;
  for (const auto& x : spec.xi) {
    if (x.size() != 1) return false;
    const Integer v = Modulus(12).reduce(x[0]);
    if (v == 1)
      ++ones;
    else if (v != 0)
      return false;
  }
  return ones == 1;
}

// gcd(K) is only kept while ell itself is symbolic.
GaugeOverSphere gauge_factor(const SpaceId& g, int n, const std::vector<Integer>& k,
                             const HomotopyTables& tables) {
  auto l = ell(g, n, k, tables);
  return GaugeOverSphere{to_string(g), n, l, l ? Integer(0) : gcd_all(0, k)};
}

}  // namespace

HomotopyTypeExpr::HomotopyTypeExpr(std::vector<Factor> factors) {
  std::map<std::pair<std::string, int>, std::size_t> loops;
  std::vector<Factor> rest;
  for (auto& f : factors) {
    if (const auto* l = std::get_if<LoopSpace>(&f))
      loops[{l->base, l->degree}] += l->multiplicity;
    else
      rest.push_back(std::move(f));
  }
  for (const auto& [key, mult] : loops)
    if (mult > 0) rest.push_back(LoopSpace{key.first, key.second, mult});
  std::stable_sort(rest.begin(), rest.end(), factor_less);
  factors_ = std::move(rest);
}

std::string to_json_string(const HomotopyTypeExpr& e, int indent) {
  return detail::expr_json(e).dump(indent);
}

std::string to_pretty(const HomotopyTypeExpr& e) {
  return detail::expr_json(e).at("pretty").get<std::string>();
}

std::optional<Integer> ell(const SpaceId& g, int n, const std::vector<Integer>& k,
                           const HomotopyTables& tables) {
  if (k.empty()) throw DomainError("K must have at least one entry");
  const auto order = tables.connecting_order(g, n);
  if (!order) return std::nullopt;
  return gcd_all(order->order, k);
}

HomotopyTypeExpr decompose_wedge(const SpaceId& g, int n, std::size_t r, const std::vector<Integer>& k,
                                 const HomotopyTables& tables) {
  if (r < 1) throw DomainError("wedge decomposition needs r >= 1");
  require_length(k, r, "K");
  const std::string name = to_string(g);
  return HomotopyTypeExpr({gauge_factor(g, n, k, tables),
                           LoopSpace{name, n, r - 1}});
}

HomotopyTypeExpr decompose_unpointed(const SpaceId& g, const ConnectedSumSpec& spec,
                                     const std::vector<Integer>& k, const HomotopyTables& tables) {
  require_decomposable(g, spec, tables);
  const std::size_t r = spec.r();
  require_length(k, r, "K");
  if (r == 1) return decompose_wedge(g, spec.n, 1, k, tables);

  const std::string name = to_string(g);
  std::vector<Factor> factors{gauge_factor(g, spec.n, k, tables),
                              LoopSpace{name, spec.n, r - 1}};
  try {
    const auto yf = yf_descriptor(spec, tables);
    factors.push_back(LoopSpace{name, spec.q, r - yf.tbar});
    factors.push_back(MapStar{name, yf});
  } catch (const DomainError&) {
    factors.push_back(UnknownTerm{"(Omega^" + std::to_string(spec.q) + " " + name + ")^(r - tbar)"});
    factors.push_back(MapStar{name, YFDescriptor{0, {}, false}});
  }
  return HomotopyTypeExpr(std::move(factors));
}

HomotopyTypeExpr decompose_pointed(const SpaceId& g, const ConnectedSumSpec& spec,
                                   const std::vector<Integer>& k, const HomotopyTables& tables) {
  require_decomposable(g, spec, tables);
  const std::size_t r = spec.r();
  if (!k.empty()) require_length(k, r, "K");
  const std::string name = to_string(g);
  std::vector<Factor> factors{LoopSpace{name, spec.n, r}};
  try {
    const auto yf = yf_descriptor(spec, tables);
    factors.push_back(LoopSpace{name, spec.q, r - yf.tbar});
    factors.push_back(MapStar{name, yf});
  } catch (const DomainError&) {
    factors.push_back(UnknownTerm{"(Omega^" + std::to_string(spec.q) + " " + name + ")^(r - tbar)"});
    factors.push_back(MapStar{name, YFDescriptor{0, {}, false}});
  }
  return HomotopyTypeExpr(std::move(factors));
}

HomotopyTypeExpr fibre_decompose(const Integer& m, std::size_t r, const std::vector<Integer>& ks,
                                 const std::string& y) {
  if (r < 2) throw DomainError("fibre decomposition needs r >= 2");
  if (m < 0) throw DomainError("order of f must be non-negative");
  require_length(ks, r, "ks");
  return HomotopyTypeExpr({FibrePower{gcd_all(m, ks), "f"}, LoopSpace{y, 1, r - 1}});
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "Equivalent";
    case Verdict::NotEquivalent:
      return "NotEquivalent";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

EquivalenceVerdict equivalent(const SpaceId& g, const ConnectedSumSpec& spec,
                              const std::vector<Integer>& k, const std::vector<Integer>& k2,
                              const HomotopyTables& tables) {
  const auto c = require_decomposable(g, spec, tables);
  require_length(k, spec.r(), "K");
  require_length(k2, spec.r(), "K2");

  const auto order = tables.connecting_order(g, spec.n);
  const bool iff_branch = g == SpaceId::lie(LieFamily::SU, 2) && spec.n == 4 && spec.q == 3 &&
                          spec.r() >= 2 && c.kind == CaseKind::Dim7_pi6coprime && order &&
                          order->order == 12;
  if (iff_branch) {
    const Integer a = gcd_all(12, k), b = gcd_all(12, k2);
    const std::string cmp = "gcd(12, K) = " + to_string(a) + ", gcd(12, K2) = " + to_string(b);
    const std::string basis =
        "; for SU(2) over these 7-manifolds the gauge groups agree exactly when these gcds do "
        "(o(delta_1) = 12 over S^4: " + order->citation + ")";
    if (a == b) return {Verdict::Equivalent, cmp + basis};
    return {Verdict::NotEquivalent, cmp + basis};
  }

  if (order) {
    const Integer a = gcd_all(order->order, k), b = gcd_all(order->order, k2);
    const std::string cmp = "ell(K) = " + to_string(a) + ", ell(K2) = " + to_string(b) +
                            " with o(delta_1) = " + to_string(order->order) + " (" +
                            order->citation + ")";
    if (a == b) return {Verdict::Equivalent, cmp + "; equal ell gives equal decompositions"};
    return {Verdict::Unknown, cmp + "; differing ell is not known to separate homotopy types here"};
  }
  const Integer a = gcd_all(0, k), b = gcd_all(0, k2);
  const std::string cmp = "o(delta_1) for (" + to_string(g) + ", S^" + std::to_string(spec.n) +
                          ") is not tabulated; gcd(K) = " + to_string(a) + ", gcd(K2) = " + to_string(b);
  if (a == b) return {Verdict::Equivalent, cmp + "; equal gcd(K) forces equal ell"};
  return {Verdict::Unknown, cmp + "; ell cannot be compared"};
}

std::string to_string(const PiResult& p) {
  std::string out;
  if (!p.known.is_trivial() || p.symbolic.empty()) out = to_string(p.known);
  for (const auto& s : p.symbolic) out += (out.empty() ? "" : " (+) ") + s;
  return out;
}

PiResult pointed_homotopy_groups(const SpaceId& g, const ConnectedSumSpec& spec, unsigned j,
                                 const HomotopyTables& tables) {
  require_decomposable(g, spec, tables);
  const std::size_t r = spec.r();
  const auto n = static_cast<unsigned>(spec.n), q = static_cast<unsigned>(spec.q);
  std::vector<FgAbGroup> parts;
  PiResult out;

  auto add_power = [&](unsigned degree, std::optional<std::size_t> mult, const std::string& mult_text) {
    const auto grp = tables.lookup_pi(g, degree);
    if (grp && grp->is_trivial()) return;
    if (grp && mult) {
      for (std::size_t i = 0; i < *mult; ++i) parts.push_back(*grp);
      return;
    }
    if (mult && *mult == 0) return;
    out.symbolic.push_back(pi_text(g, degree) + "^" + mult_text);
  };

  add_power(j + n, r, std::to_string(r));

  std::optional<std::size_t> t;
  try {
    t = tbar(spec, tables);
  } catch (const DomainError&) {
  }
  add_power(j + q, t ? std::optional<std::size_t>(r - *t) : std::nullopt,
            t ? std::to_string(r - *t) : "(r - tbar)");

  const std::string mapstar = "pi_" + std::to_string(j) + "(Map*(Y_F, " + to_string(g) + "))";
  if (const auto user = tables.mapstar_group(g, spec.n, spec.q, spec.xi, j)) {
    parts.push_back(user->value);
  } else if (t && *t == 0) {
    // Y_F is S^{n+q} when tbar = 0
    if (const auto grp = tables.lookup_pi(g, j + n + q))
      parts.push_back(*grp);
    else
      out.symbolic.push_back(pi_text(g, j + n + q));
  } else if (j == 0 && unit_vector_shape(spec)) {
    // vanishes in this shape; nothing to add
  } else {
    out.symbolic.push_back(mapstar);
  }
  out.known = direct_sum(parts);
  return out;
}

Integer pi2_order_sphere_factor(const Integer& lambda) {
  if (lambda < 1) throw DomainError("lambda must be positive, got " + to_string(lambda));
  return lambda;
}

}  // namespace gaugekit
