#pragma once

#include "gaugekit/exact_arith.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gaugekit {

/// Finitely generated abelian group Z^free (+) Z/s1 (+) ... (+) Z/sk in Smith
/// form: every s_j >= 2 and s_j | s_{j+1}.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  /// Validating constructor; the torsion list must already be a chain.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup integers(std::size_t rank = 1) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Integer& order);

  /// Z^? (+) (+)_i Z/d_i normalized; d_i = 0 contributes a free summand and
  /// d_i = 1 (or -1) nothing.
  static FgAbGroup from_cyclic_orders(std::span<const Integer> orders);

  [[nodiscard]] std::size_t free_rank() const { return free_rank_; }
  [[nodiscard]] const std::vector<Integer>& torsion() const { return torsion_; }
  [[nodiscard]] std::size_t generator_count() const {
    return free_rank_ + torsion_.size();
  }
  [[nodiscard]] bool is_trivial() const { return generator_count() == 0; }

  /// Modulus of the i-th generator: 0 for free generators, s_j for torsion.
  [[nodiscard]] Modulus generator_modulus(std::size_t i) const;

  /// Exponent of the group; 0 when infinite.
  [[nodiscard]] Integer exponent() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Element of a group, as coefficients over its Smith generators (free ones
/// first). Torsion coefficients are kept in [0, s_j).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FgAbGroup group, std::vector<Integer> coeffs);

  static GroupElement zero(const FgAbGroup& group);

  [[nodiscard]] const FgAbGroup& group() const { return group_; }
  [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(const Integer& k, const GroupElement& x);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FgAbGroup group_;
  std::vector<Integer> coeffs_;
};

FgAbGroup direct_sum(std::span<const FgAbGroup> groups);
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Least n >= 1 with n*x = 0, or 0 when x has infinite order.
Integer element_order(const GroupElement& x);

/// Number of elements, 0 when infinite.
Integer cardinality(const FgAbGroup& g);

/// "Z^2 (+) Z/2 (+) Z/12"; the trivial group renders as "0".
std::string to_string(const FgAbGroup& g);

}  // namespace gaugekit
