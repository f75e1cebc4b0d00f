#include "gaugekit/classify.hpp"

namespace gaugekit {

namespace {

bool scalar_xi(const ConnectedSumSpec& s) {
  for (const auto& x : s.xi)
    if (x.size() != 1) return false;
  return true;
}

std::vector<Integer> scalars(const ConnectedSumSpec& s) {
  std::vector<Integer> out;
  for (const auto& x : s.xi) out.push_back(x[0]);
  return out;
}

std::string pi_label(const SpaceId& g, int k) {
  return "pi_" + std::to_string(k) + "(" + to_string(g) + ")";
}

}  // namespace

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::SU_stable:
      return "SU_stable";
    case CaseKind::Sp_stable:
      return "Sp_stable";
    case CaseKind::Dim7_pi6coprime:
      return "Dim7_pi6coprime";
    case CaseKind::Stable_wedge_formula:
      return "Stable_wedge_formula";
    case CaseKind::Unsupported:
      return "Unsupported";
  }
  return "Unsupported";
}

bool coker_check(const SpaceId& g, const std::vector<Integer>& xi, const HomotopyTables& tables) {
  Integer d = pi6_order(g, tables);
  for (const auto& x : xi) d = gcd(d, x);
  return d == 1;
}

ClassificationCase classify_conditions(const SpaceId& g, const ConnectedSumSpec& spec,
                                       const HomotopyTables& tables) {
  validate(spec);
  if (!g.is_lie()) return {CaseKind::Unsupported, to_string(g) + " is not a Lie group"};
  const int n = spec.n, q = spec.q, m = g.dim();

  std::string dim7_note;
  if (n == 4 && q == 3 && scalar_xi(spec)) {
    if (coker_check(g, scalars(spec), tables))
      return {CaseKind::Dim7_pi6coprime,
              "n = 4, q = 3 and gcd(|" + pi_label(g, 6) + "|, xi) = 1"};
    Integer d = pi6_order(g, tables);
    for (const auto& x : scalars(spec)) d = gcd(d, x);
    dim7_note = "gcd(|" + pi_label(g, 6) + "|, xi) = " + to_string(d) + " != 1";
  }
  if (stable_conditions_hold(g, n, q)) {
    if (g.family() == LieFamily::SU)
      return {CaseKind::SU_stable, "SU(m) with n = 2k, q = 2k' - 1, 2 <= k' <= k, k + k' <= m"};
    return {CaseKind::Sp_stable, "Sp(m) with n = 4k, q = 4k' - 1, 1 <= k' <= k, k + k' <= m"};
  }
  if (g.family() == LieFamily::SU && 2 * m >= n + q)
    return {CaseKind::Stable_wedge_formula, "SU(m) with 2m >= n + q"};
  if (g.family() == LieFamily::Sp && 4 * m >= n + q - 2)
    return {CaseKind::Stable_wedge_formula, "Sp(m) with 4m >= n + q - 2"};

  std::string reason = dim7_note.empty() ? "" : dim7_note + "; ";
  reason += "no stable range applies to " + to_string(g) + " with n = " + std::to_string(n) +
            ", q = " + std::to_string(q);
  return {CaseKind::Unsupported, reason};
}

BundleClassification prin_bundles(const SpaceId& g, const ConnectedSumSpec& spec,
                                  const HomotopyTables& tables) {
  BundleClassification out;
  out.which = classify_conditions(g, spec, tables);
  if (out.which.kind == CaseKind::Unsupported)
    throw DomainError("unsupported classification: " + out.which.reason);

  const std::size_t r = spec.r();
  if (out.which.bijective()) {
    out.group = FgAbGroup::integers(r);
    out.statement = "[M, BG] = Z^" + std::to_string(r) + "; p* from (+)_i " +
                    pi_label(g, spec.n - 1) + " is a bijection";
    return out;
  }

  auto lookup = [&](int k) -> BundleTerm {
    BundleTerm t;
    t.label = pi_label(g, k);
    if (k >= 0) t.group = tables.lookup_pi(g, static_cast<unsigned>(k));
    return t;
  };
  BundleTerm first = lookup(spec.n - 1);
  first.multiplicity = r;
  first.multiplicity_text = std::to_string(r);

  BundleTerm second = lookup(spec.q - 1);
  try {
    const auto t = tbar(spec, tables);
    second.multiplicity = r - t;
    second.multiplicity_text = std::to_string(r - t);
  } catch (const DomainError&) {
    second.multiplicity_text = "r - tbar";
  }

  BundleTerm last;
  last.label = "[Y_F, BG]";
  last.multiplicity = 1;
  last.multiplicity_text = "1";

  out.terms = {first, second, last};
  out.statement = "[M, BG] = (+)^r " + first.label + " (+) (+)^{r - tbar} " + second.label +
                  " (+) [Y_F, BG]";
  return out;
}

}  // namespace gaugekit
