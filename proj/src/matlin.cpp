#include "gaugekit/matlin.hpp"

#include <algorithm>
#include <string>

namespace gaugekit {

namespace {

std::string dims(const IntMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (auto v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DomainError("ragged matrix: row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DomainError("matrix product of " + dims(a) + " and " + dims(b));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

MixedMatrix::MixedMatrix(std::size_t rows, std::vector<Modulus> column_moduli)
    : values_(rows, column_moduli.size()), moduli_(std::move(column_moduli)) {}

MixedMatrix::MixedMatrix(const IntMatrix& values, std::vector<Modulus> column_moduli)
    : values_(values), moduli_(std::move(column_moduli)) {
  if (moduli_.size() != values_.cols())
    throw DomainError("mixed matrix has " + std::to_string(values_.cols()) +
                      " columns but " + std::to_string(moduli_.size()) + " moduli");
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) values_(i, j) = moduli_[j].reduce(values_(i, j));
}

MixedMatrix MixedMatrix::left_multiply(const IntMatrix& d) const {
  return MixedMatrix(d * values_, moduli_);
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DomainError("determinant of non-square " + dims(a) + " matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) return false;
  return abs(determinant(a)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) throw DomainError("matrix is not unimodular");
  auto [d, b] = row_echelon_int(a);
  // A unimodular echelon form with positive pivots and reduced upper entries
  // is the identity.
  if (b != IntMatrix::identity(a.rows())) throw DomainError("inverse: echelon form is not the identity");
  return d;
}

OrbitCertificate orbit_reduce(const Modulus& modulus, std::span<const Residue> x) {
  const std::size_t r = x.size();
  if (r < 2) throw DomainError("orbit_reduce needs a vector of length >= 2, got " + std::to_string(r));
  std::vector<Integer> vals(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i].modulus() != modulus)
      throw DomainError("orbit_reduce: residue modulo " + to_string(x[i].modulus().value()) +
                        " in a vector over modulus " + to_string(modulus.value()));
    vals[i] = x[i].value();
  }
  const Integer d = gcd_m(modulus, x);
  std::vector<Integer> target(r);
  target[0] = modulus.reduce(d);

  IntMatrix transform = IntMatrix::identity(r);
  auto nonzero_count = [&vals] {
    return std::count_if(vals.begin(), vals.end(), [](const Integer& v) { return !v.is_zero(); });
  };

  if (vals != target) {
    // Signed subtraction step. With canonical residues (m > 0) all values are
    // non-negative, so the reduced coordinate stays in [0, |x_i|).
    while (nonzero_count() >= 2) {
      std::size_t i = r, j = r;
      for (std::size_t k = 0; k < r; ++k) {
        if (vals[k].is_zero()) continue;
        if (i == r || abs(vals[k]) < abs(vals[i])) i = k;
      }
      for (std::size_t k = 0; k < r; ++k) {
        if (k == i || vals[k].is_zero()) continue;
        if (j == r || abs(vals[k]) > abs(vals[j])) j = k;
      }
      const Integer q = abs(vals[j]) / abs(vals[i]);
      const Integer k = ((vals[j] < 0) == (vals[i] < 0)) ? Integer(-q) : q;
      vals[j] = modulus.reduce(vals[j] + k * vals[i]);
      transform.add_row_multiple(j, i, k);
    }

    if (nonzero_count() == 1) {
      std::size_t idx = 0;
      while (vals[idx].is_zero()) ++idx;
      if (idx != 1) {
        std::swap(vals[1], vals[idx]);
        transform.swap_rows(1, idx);
      }
      const Integer a = bezout(vals[1], modulus.value()).u;
      vals[0] = modulus.reduce(vals[0] + a * vals[1]);
      transform.add_row_multiple(0, 1, a);
      const Integer c = vals[1] / d;
      vals[1] = modulus.reduce(vals[1] - c * vals[0]);
      transform.add_row_multiple(1, 0, -c);
    }
  }

  if (vals != target) throw std::logic_error("orbit_reduce did not reach the canonical vector");
  return {std::move(transform), make_residues(modulus, target), modulus};
}

bool same_orbit(const Modulus& modulus, std::span<const Residue> x,
                std::span<const Residue> y) {
  if (x.size() != y.size())
    throw DomainError("same_orbit: lengths " + std::to_string(x.size()) + " and " +
                      std::to_string(y.size()) + " differ");
  if (x.size() < 2) throw DomainError("same_orbit needs vectors of length >= 2");
  return gcd_m(modulus, x) == gcd_m(modulus, y);
}

namespace {

// Applies the segment transform t to rows [first, first + t.rows()).
void apply_segment(IntMatrix& m, std::size_t first, const IntMatrix& t,
                   const std::vector<Modulus>* moduli) {
  const std::size_t len = t.rows();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Integer> col(len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t k = 0; k < len; ++k)
        if (!t(i, k).is_zero()) col[i] += t(i, k) * m(first + k, c);
    for (std::size_t i = 0; i < len; ++i)
      m(first + i, c) = moduli ? (*moduli)[c].reduce(col[i]) : col[i];
  }
}

void reduce_row(IntMatrix& m, std::size_t row, const std::vector<Modulus>& moduli) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = moduli[c].reduce(m(row, c));
}

MixedEchelon echelon_impl(const MixedMatrix& a) {
  const std::size_t rows = a.rows();
  const auto& moduli = a.column_moduli();
  IntMatrix b = a.values();
  IntMatrix d = IntMatrix::identity(rows);

  std::size_t pivot = 0;
  for (std::size_t col = 0; col < a.cols() && pivot < rows; ++col) {
    const Modulus& m = moduli[col];
    bool any = false;
    for (std::size_t i = pivot; i < rows; ++i) any = any || !b(i, col).is_zero();
    if (!any) continue;

    if (rows - pivot >= 2) {
      std::vector<Residue> segment;
      for (std::size_t i = pivot; i < rows; ++i) segment.emplace_back(m, b(i, col));
      const auto cert = orbit_reduce(m, segment);
      apply_segment(b, pivot, cert.transform, &moduli);
      apply_segment(d, pivot, cert.transform, nullptr);
    } else {
      const Integer& e = b(pivot, col);
      if (m.is_integers() ? e < 0 : m.value() - e < e) {
        b.negate_row(pivot);
        reduce_row(b, pivot, moduli);
        d.negate_row(pivot);
      }
    }

    const Integer p = b(pivot, col);
    for (std::size_t i = 0; i < pivot; ++i) {
      const Integer q = floor_div(b(i, col), p);
      if (q.is_zero()) continue;
      b.add_row_multiple(i, pivot, -q);
      reduce_row(b, i, moduli);
      d.add_row_multiple(i, pivot, -q);
    }
    ++pivot;
  }
  return {std::move(d), MixedMatrix(b, moduli)};
}

template <class RowIsZero, class LeadOf>
bool echelon_predicate(std::size_t rows, RowIsZero row_is_zero, LeadOf lead_of) {
  bool seen_zero = false;
  std::ptrdiff_t last_lead = -1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_is_zero(i)) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    const auto lead = static_cast<std::ptrdiff_t>(lead_of(i));
    if (lead <= last_lead) return false;
    last_lead = lead;
  }
  return true;
}

}  // namespace

IntEchelon row_echelon_int(const IntMatrix& a) {
  auto [d, b] = echelon_impl(MixedMatrix(a, std::vector<Modulus>(a.cols())));
  return {std::move(d), b.values()};
}

MixedEchelon row_echelon_mixed(const MixedMatrix& a) { return echelon_impl(a); }

bool is_echelon(const IntMatrix& b) {
  return is_echelon(MixedMatrix(b, std::vector<Modulus>(b.cols())));
}

bool is_echelon(const MixedMatrix& b) {
  const auto& v = b.values();
  auto lead = [&](std::size_t i) {
    std::size_t j = 0;
    while (j < b.cols() && v(i, j).is_zero()) ++j;
    return j;
  };
  return echelon_predicate(
      b.rows(), [&](std::size_t i) { return lead(i) == b.cols(); }, lead);
}

std::size_t echelon_rank(const IntMatrix& b) {
  return echelon_rank(MixedMatrix(b, std::vector<Modulus>(b.cols())));
}

std::size_t echelon_rank(const MixedMatrix& b) {
  if (!is_echelon(b)) throw DomainError("echelon_rank: matrix is not in row echelon form");
  std::size_t rank = 0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b.values()(i, j).is_zero()) {
        ++rank;
        break;
      }
  return rank;
}

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  auto swap_cols = [&m, rows](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, x), m(i, y));
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest non-zero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!m(i, j).is_zero() && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      m.swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = m(i, t) / m(t, t);
        m.add_row_multiple(i, t, -q);
        clean = clean && m(i, t).is_zero();
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = m(t, j) / m(t, t);
        if (!q.is_zero())
          for (std::size_t i = 0; i < rows; ++i) m(i, j) -= q * m(i, t);
        clean = clean && m(t, j).is_zero();
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      m.add_row_multiple(t, bad, 1);
    }
  }
  std::vector<Integer> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = abs(m(t, t));
  return out;
}

std::pair<IntMatrix, IntMatrix> glr_generators(std::size_t r) {
  if (r < 2) throw DomainError("GL_r generators need r >= 2, got r = " + std::to_string(r));
  IntMatrix q = IntMatrix::identity(r);
  q(1, 0) = 1;
  const long long sign = (r - 1) % 2 == 0 ? 1 : -1;
  IntMatrix t(r, r);
  t(0, r - 1) = sign;
  for (std::size_t i = 1; i < r; ++i) t(i, i - 1) = sign;
  return {std::move(q), std::move(t)};
}

std::vector<GroupElement> matrix_map_action(const IntMatrix& a,
                                            std::span<const GroupElement> v) {
  if (!a.is_square() || a.rows() != v.size())
    throw DomainError("matrix map of size " + dims(a) + " applied to " +
                      std::to_string(v.size()) + " elements");
  std::vector<GroupElement> out;
  if (v.empty()) return out;
  const FgAbGroup& h = v.front().group();
  for (const auto& x : v)
    if (x.group() != h) throw DomainError("matrix map: elements lie in different groups");
  out.reserve(v.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    GroupElement acc = GroupElement::zero(h);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) acc = acc + a(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

IntMatrix block_diag(const IntMatrix& d1, const IntMatrix& d2) {
  if (!d1.is_square() || !d2.is_square())
    throw DomainError("block_diag needs square blocks, got " + dims(d1) + " and " + dims(d2));
  IntMatrix out(d1.rows() + d2.rows(), d1.cols() + d2.cols());
  for (std::size_t i = 0; i < d1.rows(); ++i)
    for (std::size_t j = 0; j < d1.cols(); ++j) out(i, j) = d1(i, j);
  for (std::size_t i = 0; i < d2.rows(); ++i)
    for (std::size_t j = 0; j < d2.cols(); ++j) out(d1.rows() + i, d1.cols() + j) = d2(i, j);
  return out;
}

}  // namespace gaugekit
