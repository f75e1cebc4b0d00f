#pragma once

#include "gaugekit/homotopy_tables.hpp"
#include "gaugekit/matlin.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaugekit {

/// Malformed input text (bad JSON, missing or mistyped fields).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// M = M_1 # ... # M_r, each M_i an S^q-bundle over S^n with a cross
/// section, classified by xi^i in pi_{n-1}(SO(q)). Each xi^i is a coefficient
/// vector over the generators of that group; for (n, q) = (4, 3) it is a single
/// integer.
struct ConnectedSumSpec {
  int n = 4;
  int q = 3;
  std::vector<std::vector<Integer>> xi;

  [[nodiscard]] std::size_t r() const { return xi.size(); }

  /// One integer per summand.
  static ConnectedSumSpec scalar(int n, int q, const std::vector<Integer>& xi);

  friend bool operator==(const ConnectedSumSpec&, const ConnectedSumSpec&) = default;
};

/// Throws DomainError unless n >= 2, q >= 2, r >= 1 and all xi have one length.
void validate(const ConnectedSumSpec& spec);

/// {"n":4,"q":3,"xi":[1,0]}; xi entries may also be arrays. Throws ParseError
/// (with the byte position for syntax errors) or DomainError.
ConnectedSumSpec parse_spec_json(const std::string& text);
std::string to_json_string(const ConnectedSumSpec& spec);

/// phi = sum_i (eta_bar^i + [iota_n^i, iota_q^i]). The Whitehead products are
/// kept as markers; eta_bar^i = J(xi^i) when the table knows J, else nullopt.
struct AttachingMap {
  int n;
  int q;
  std::vector<std::optional<GroupElement>> eta_bar;
};

AttachingMap attaching_map(const ConnectedSumSpec& spec,
                           const HomotopyTables& tables = HomotopyTables::builtin());
std::string to_string(const AttachingMap& phi);

/// Rows EJ(xi^i) over the Smith generators of the E∘J target group.
MixedMatrix nf_matrix(const ConnectedSumSpec& spec,
                      const HomotopyTables& tables = HomotopyTables::builtin());

/// min(r, rank of N_F). Every xi = 0 gives 0 without consulting tables.
std::size_t tbar(const ConnectedSumSpec& spec,
                 const HomotopyTables& tables = HomotopyTables::builtin());

/// Y_F is the cofibre of alpha : S^{n+q-1} -> wedge of tbar copies of S^q.
/// resolved is false when alpha could not be expressed for lack of J data.
struct YFDescriptor {
  std::size_t tbar = 0;
  std::vector<GroupElement> alpha;
  bool resolved = true;

  friend bool operator==(const YFDescriptor&, const YFDescriptor&) = default;
};

YFDescriptor yf_descriptor(const ConnectedSumSpec& spec,
                           const HomotopyTables& tables = HomotopyTables::builtin());

/// Sigma M = wedge of r copies of S^{n+1}, r - tbar copies of S^{q+1}, Sigma Y_F.
struct SuspensionSplitting {
  int n;
  int q;
  std::size_t r;
  YFDescriptor yf;
};

SuspensionSplitting suspension_splitting(const ConnectedSumSpec& spec,
                                         const HomotopyTables& tables = HomotopyTables::builtin());
/// "S^5 v S^5 v S^4 v Sigma Y_F"
std::string to_string(const SuspensionSplitting& s);

}  // namespace gaugekit
