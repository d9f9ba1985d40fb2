#pragma once

// Dense matrices with typed row/column labels and exact linear algebra.
//
// Sizes in this library are small (at most a few hundred rows), so storage is
// dense and determinants use the fraction-free Bareiss scheme on an integer
// matrix obtained by clearing row denominators.  Pivoting is deterministic:
// the pivot is the first row (in current label order) with a nonzero entry,
// and row swaps contribute their sign to the result.

#include <tqft/labels.hpp>
#include <tqft/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tqft {

class LabeledMatrix {
 public:
  LabeledMatrix() = default;

  LabeledMatrix(std::vector<BasisLabel> rows, std::vector<BasisLabel> cols)
      : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size() * cols_.size()) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!row_index_.emplace(rows_[i], i).second)
        throw math_error("duplicate row label " + to_string(rows_[i]));
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (!col_index_.emplace(cols_[j], j).second)
        throw math_error("duplicate column label " + to_string(cols_[j]));
    }
  }

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return cols_.size(); }
  const std::vector<BasisLabel>& row_labels() const { return rows_; }
  const std::vector<BasisLabel>& col_labels() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_.size() + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }

  std::size_t row_index(const BasisLabel& l) const {
    auto it = row_index_.find(l);
    if (it == row_index_.end()) throw math_error("unknown row label " + to_string(l));
    return it->second;
  }
  std::size_t col_index(const BasisLabel& l) const {
    auto it = col_index_.find(l);
    if (it == col_index_.end()) throw math_error("unknown column label " + to_string(l));
    return it->second;
  }
  bool has_row(const BasisLabel& l) const { return row_index_.count(l) != 0; }
  bool has_col(const BasisLabel& l) const { return col_index_.count(l) != 0; }

  Scalar& at(const BasisLabel& r, const BasisLabel& c) { return at(row_index(r), col_index(c)); }
  const Scalar& at(const BasisLabel& r, const BasisLabel& c) const {
    return at(row_index(r), col_index(c));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
  }

  // Submatrix with rows/columns looked up by label, in the order given.
  LabeledMatrix select(const std::vector<BasisLabel>& rows,
                       const std::vector<BasisLabel>& cols) const {
    LabeledMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t si = row_index(rows[i]);
      for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(si, col_index(cols[j]));
    }
    return out;
  }

  LabeledMatrix transpose() const {
    LabeledMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < nrows(); ++i)
      for (std::size_t j = 0; j < ncols(); ++j) out.at(j, i) = at(i, j);
    return out;
  }

  // Label-checked product: the column labels of `a` must equal the row labels
  // of `b` as ordered lists.
  static LabeledMatrix product(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.col_labels() != b.row_labels())
      throw math_error("matrix product: inner labels do not match");
    LabeledMatrix out(a.row_labels(), b.col_labels());
    for (std::size_t i = 0; i < a.nrows(); ++i)
      for (std::size_t k = 0; k < a.ncols(); ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.ncols(); ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
        }
      }
    return out;
  }

  // Exact determinant (square matrices).  Row denominators are cleared first,
  // then the integer matrix is reduced by the fraction-free Bareiss scheme.
  Scalar determinant() const {
    if (nrows() != ncols()) throw math_error("determinant of a non-square matrix");
    const std::size_t n = nrows();
    if (n == 0) return Scalar(1);

    std::vector<Int> m(n * n);
    Int divisor = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Int l = 1;
      for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(at(i, j)));
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& x = at(i, j);
        m[i * n + j] = numerator(x) * (l / denominator(x));
      }
      divisor *= l;
    }

    int sgn = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      if (pivot != k) {
        for (std::size_t j = k; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
        sgn = -sgn;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j)
          m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        m[i * n + k] = 0;
      }
      prev = m[k * n + k];
    }
    Int det = m[n * n - 1];
    if (sgn < 0) det = -det;
    return Scalar(det, divisor);
  }

 private:
  std::vector<BasisLabel> rows_;
  std::vector<BasisLabel> cols_;
  std::vector<Scalar> data_;
  std::map<BasisLabel, std::size_t> row_index_;
  std::map<BasisLabel, std::size_t> col_index_;
};

// Greedy row selection: scans `candidates` in the order given and keeps each
// row that is linearly independent (restricted to columns `cols`) of the rows
// kept so far, stopping once `count` rows are found.  Throws if the candidate
// set has lower rank than requested.
inline std::vector<BasisLabel> select_independent_rows(const LabeledMatrix& m,
                                                       const std::vector<BasisLabel>& candidates,
                                                       const std::vector<BasisLabel>& cols,
                                                       std::size_t count) {
  std::vector<BasisLabel> kept;
  if (count == 0) return kept;
  // Echelon basis of the kept rows: (pivot position, reduced row).
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> basis;
  for (const BasisLabel& cand : candidates) {
    const std::size_t r = m.row_index(cand);
    std::vector<Scalar> row(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) row[j] = m.at(r, m.col_index(cols[j]));
    for (const auto& [p, b] : basis) {
      if (row[p].is_zero()) continue;
      const Scalar f = row[p] / b[p];
      for (std::size_t j = 0; j < cols.size(); ++j) row[j] -= f * b[j];
    }
    std::size_t p = 0;
    while (p < row.size() && row[p].is_zero()) ++p;
    if (p == row.size()) continue;
    basis.emplace_back(p, std::move(row));
    kept.push_back(cand);
    if (kept.size() == count) return kept;
  }
  throw math_error("rank deficiency: wanted " + std::to_string(count) +
                   " independent rows, found " + std::to_string(kept.size()));
}

}  // namespace tqft
