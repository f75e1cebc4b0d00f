#pragma once

#include "gaugekit/exact_arith.hpp"
#include "gaugekit/fgab.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gaugekit {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  /// row i += k * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);

  [[nodiscard]] std::vector<std::vector<Integer>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Matrix whose j-th column takes values in Z/m_j (m_j = 0 meaning Z).
/// Entries are kept canonical for their column modulus.
class MixedMatrix {
 public:
  MixedMatrix() = default;
  MixedMatrix(std::size_t rows, std::vector<Modulus> column_moduli);
  MixedMatrix(const IntMatrix& values, std::vector<Modulus> column_moduli);

  [[nodiscard]] std::size_t rows() const { return values_.rows(); }
  [[nodiscard]] std::size_t cols() const { return moduli_.size(); }
  [[nodiscard]] const std::vector<Modulus>& column_moduli() const { return moduli_; }
  [[nodiscard]] const IntMatrix& values() const { return values_; }

  [[nodiscard]] Residue at(std::size_t i, std::size_t j) const {
    return Residue(moduli_[j], values_(i, j));
  }
  void set(std::size_t i, std::size_t j, const Integer& v) {
    values_(i, j) = moduli_[j].reduce(v);
  }

  /// Left multiplication by an integer matrix, reduced column-wise.
  [[nodiscard]] MixedMatrix left_multiply(const IntMatrix& d) const;

  friend bool operator==(const MixedMatrix&, const MixedMatrix&) = default;

 private:
  IntMatrix values_;
  std::vector<Modulus> moduli_;
};

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// transform * input == (d, 0, ..., 0) mod m with d = gcd_m(input).
struct OrbitCertificate {
  IntMatrix transform;
  std::vector<Residue> canonical;
  Modulus modulus;
};

/// Reduces x to (gcd_m(x), 0, ..., 0) by elementary row operations: repeated
/// signed subtraction while two coordinates are non-zero, then one Bezout
/// row addition and a clearing step. Requires length >= 2.
OrbitCertificate orbit_reduce(const Modulus& modulus, std::span<const Residue> x);

/// x and y lie in the same GL_r orbit iff their gcd_m agree.
bool same_orbit(const Modulus& modulus, std::span<const Residue> x,
                std::span<const Residue> y);

struct IntEchelon {
  IntMatrix transform;  // D
  IntMatrix echelon;    // B = D * A
};

struct MixedEchelon {
  IntMatrix transform;
  MixedMatrix echelon;
};

// Normal form: Z pivots are positive and entries above them lie in
// [0, pivot); residue pivots are gcd_m of the column segment they reduce
// (except a lone last row, which can only be changed by sign).
IntEchelon row_echelon_int(const IntMatrix& a);
MixedEchelon row_echelon_mixed(const MixedMatrix& a);

bool is_echelon(const IntMatrix& b);
bool is_echelon(const MixedMatrix& b);

/// Number of non-zero rows; throws when the matrix is not in echelon form.
std::size_t echelon_rank(const IntMatrix& b);
std::size_t echelon_rank(const MixedMatrix& b);

/// Invariant factors d_1 | d_2 | ... (length min(rows, cols), zeros last).
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Generators Q (identity plus a (2,1) entry) and T ((-1)^(r-1) times the
/// cyclic permutation) of GL_r.
std::pair<IntMatrix, IntMatrix> glr_generators(std::size_t r);

/// result_i = sum_j a_ij v_j in the common group of the v_j.
std::vector<GroupElement> matrix_map_action(const IntMatrix& a,
                                            std::span<const GroupElement> v);

IntMatrix block_diag(const IntMatrix& d1, const IntMatrix& d2);

}  // namespace gaugekit
