#pragma once

#include "gaugekit/classify.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gaugekit {

/// G^ell(S^n). When the connecting-map order is not in the tables, ell is
/// kept symbolically as gcd(o(delta_1), k_gcd) with k_gcd = gcd(K).
struct GaugeOverSphere {
  std::string group;
  int n;
  std::optional<Integer> ell;
  Integer k_gcd;
  friend bool operator==(const GaugeOverSphere&, const GaugeOverSphere&) = default;
};

/// (Omega^degree base)^multiplicity
struct LoopSpace {
  std::string base;
  int degree;
  std::size_t multiplicity;
  friend bool operator==(const LoopSpace&, const LoopSpace&) = default;
};

/// Map_*(Y_F, G), opaque apart from its descriptor.
struct MapStar {
  std::string group;
  YFDescriptor yf;
  friend bool operator==(const MapStar&, const MapStar&) = default;
};

/// F^{k f}: fibre of k times the map f.
struct FibrePower {
  Integer k;
  std::string f;
  friend bool operator==(const FibrePower&, const FibrePower&) = default;
};

struct UnknownTerm {
  std::string label;
  friend bool operator==(const UnknownTerm&, const UnknownTerm&) = default;
};

using Factor = std::variant<GaugeOverSphere, FibrePower, LoopSpace, MapStar, UnknownTerm>;

/// Product of factors kept in canonical order: loop spaces over the same
/// (base, degree) are merged and empty ones dropped.
class HomotopyTypeExpr {
 public:
  HomotopyTypeExpr() = default;
  explicit HomotopyTypeExpr(std::vector<Factor> factors);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }

  friend bool operator==(const HomotopyTypeExpr&, const HomotopyTypeExpr&) = default;

 private:
  std::vector<Factor> factors_;
};

/// JSON AST: {"factors": [...], "pretty": "..."}.
std::string to_json_string(const HomotopyTypeExpr& e, int indent = 2);
/// Rendered from the JSON AST:
/// "G^1(S^4) x Omega^4 SU(2) x Omega^3 SU(2) x Map*(Y_F, SU(2))".
std::string to_pretty(const HomotopyTypeExpr& e);

/// gcd(o(delta_1), K), nullopt when the order is not tabulated.
std::optional<Integer> ell(const SpaceId& g, int n, const std::vector<Integer>& k,
                           const HomotopyTables& tables = HomotopyTables::builtin());

HomotopyTypeExpr decompose_wedge(const SpaceId& g, int n, std::size_t r, const std::vector<Integer>& k,
                                 const HomotopyTables& tables = HomotopyTables::builtin());

HomotopyTypeExpr decompose_unpointed(const SpaceId& g, const ConnectedSumSpec& spec,
                                     const std::vector<Integer>& k,
                                     const HomotopyTables& tables = HomotopyTables::builtin());

/// Independent of K; k is only checked for length when given.
HomotopyTypeExpr decompose_pointed(const SpaceId& g, const ConnectedSumSpec& spec,
                                   const std::vector<Integer>& k = {},
                                   const HomotopyTables& tables = HomotopyTables::builtin());

/// F^g = F^{k f} x (Omega Y)^{r-1}, k = gcd(m, ks); m = 0 means f has infinite order.
HomotopyTypeExpr fibre_decompose(const Integer& m, std::size_t r, const std::vector<Integer>& ks,
                                 const std::string& y = "Y");

enum class Verdict { Equivalent, NotEquivalent, Unknown };
std::string to_string(Verdict v);

struct EquivalenceVerdict {
  Verdict verdict;
  std::string reason;
};

EquivalenceVerdict equivalent(const SpaceId& g, const ConnectedSumSpec& spec,
                              const std::vector<Integer>& k, const std::vector<Integer>& k2,
                              const HomotopyTables& tables = HomotopyTables::builtin());

/// pi_j of the pointed gauge group: a known part plus named summands that
/// the tables cannot resolve.
struct PiResult {
  FgAbGroup known;
  std::vector<std::string> symbolic;

  [[nodiscard]] bool complete() const { return symbolic.empty(); }
};

std::string to_string(const PiResult& p);

PiResult pointed_homotopy_groups(const SpaceId& g, const ConnectedSumSpec& spec, unsigned j,
                                 const HomotopyTables& tables = HomotopyTables::builtin());

/// |pi_2(G^lambda(S^4))| for SU(2); equals lambda.
Integer pi2_order_sphere_factor(const Integer& lambda);

}  // namespace gaugekit
