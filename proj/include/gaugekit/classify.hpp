#pragma once

#include "gaugekit/manifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaugekit {

enum class CaseKind { SU_stable, Sp_stable, Dim7_pi6coprime, Stable_wedge_formula, Unsupported };

std::string to_string(CaseKind k);

struct ClassificationCase {
  CaseKind kind = CaseKind::Unsupported;
  std::string reason;

  /// One of the three cases where [M, BG] = Z^r via p*.
  [[nodiscard]] bool bijective() const {
    return kind == CaseKind::SU_stable || kind == CaseKind::Sp_stable ||
           kind == CaseKind::Dim7_pi6coprime;
  }
};

/// gcd(|pi_6(G)|, xi^1, ..., xi^r) == 1, for (n, q) = (4, 3).
bool coker_check(const SpaceId& g, const std::vector<Integer>& xi,
                 const HomotopyTables& tables = HomotopyTables::builtin());

/// Which classification applies. When the dimension-7 case and a stable case
/// both hold, the dimension-7 case is reported.
ClassificationCase classify_conditions(const SpaceId& g, const ConnectedSumSpec& spec,
                                       const HomotopyTables& tables = HomotopyTables::builtin());

/// A summand of the wedge formula: group^multiplicity, either known or named.
struct BundleTerm {
  std::string label;                   // "pi_3(SU(5))", "[Y_F, BG]"
  std::optional<FgAbGroup> group;      // nullopt when symbolic
  std::optional<std::size_t> multiplicity;  // nullopt when it depends on an unknown tbar
  std::string multiplicity_text;       // "2", "r - tbar"
};

struct BundleClassification {
  ClassificationCase which;
  /// Z^r for the bijective cases.
  std::optional<FgAbGroup> group;
  /// Wedge formula terms otherwise.
  std::vector<BundleTerm> terms;
  std::string statement;
};

/// Throws DomainError naming the reason when the case is Unsupported.
BundleClassification prin_bundles(const SpaceId& g, const ConnectedSumSpec& spec,
                                  const HomotopyTables& tables = HomotopyTables::builtin());

}  // namespace gaugekit
