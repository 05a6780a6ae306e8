#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cardmetric/element.hpp"
#include "cardmetric/error.hpp"

namespace cardmetric {

/// Dense rectangular matrix of exact integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// Matrix whose columns are the given vectors. All must share `rows`.
  static IntegerMatrix from_columns(std::size_t rows,
                                    const std::vector<LatticeVector>& columns) {
    IntegerMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].rank() != rows)
        throw DimensionMismatch("basis column " + std::to_string(j) + " has length " +
                                std::to_string(columns[j].rank()) + ", expected " +
                                std::to_string(rows));
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  /// column[dst] -= factor * column[src]
  void subtract_column(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) -= factor * (*this)(r, src);
  }

  void negate_column(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Column-style Hermite normal form of a lattice basis. Column j of `form`
/// is zero above row `pivot_rows[j]`, carries a positive pivot there, and
/// pivot rows strictly increase. Entries left of a pivot in its row are
/// reduced into [0, pivot).
struct HermiteForm {
  IntegerMatrix form;                   // rows x rank
  std::vector<std::size_t> pivot_rows;  // one per nonzero column

  std::size_t rank() const { return pivot_rows.size(); }
};

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

inline HermiteForm hermite_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;

  for (std::size_t r = 0; r < rows && next < cols; ++r) {
    // Euclid across columns next..cols-1 until one nonzero remains in row r.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t c = next; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        if (!best || abs(m(r, c)) < abs(m(r, *best))) best = c;
      }
      if (!best) break;
      m.swap_columns(next, *best);
      bool reduced = true;
      for (std::size_t c = next + 1; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        m.subtract_column(c, next, detail::floor_div(m(r, c), m(r, next)));
        if (m(r, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (next >= cols || m(r, next) == 0) continue;

    if (m(r, next) < 0) m.negate_column(next);
    for (std::size_t c = 0; c < next; ++c)
      m.subtract_column(c, next, detail::floor_div(m(r, c), m(r, next)));
    pivots.push_back(r);
    ++next;
  }

  IntegerMatrix form(rows, pivots.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < pivots.size(); ++c) form(r, c) = m(r, c);
  return {std::move(form), std::move(pivots)};
}

/// True iff `v` lies in the integer span of the form's columns.
inline bool hermite_contains(const HermiteForm& h, const LatticeVector& v) {
  if (v.rank() != h.form.rows())
    throw DimensionMismatch("vector length " + std::to_string(v.rank()) +
                            " does not match basis length " +
                            std::to_string(h.form.rows()));
  std::vector<Integer> rest = v.coords();
  std::size_t col = 0;
  for (std::size_t r = 0; r < rest.size(); ++r) {
    if (col < h.rank() && h.pivot_rows[col] == r) {
      const Integer& pivot = h.form(r, col);
      if (rest[r] % pivot != 0) return false;
      Integer q = rest[r] / pivot;
      for (std::size_t i = r; i < rest.size(); ++i) rest[i] -= q * h.form(i, col);
      ++col;
    } else if (rest[r] != 0) {
      return false;
    }
  }
  return true;
}

/// Decides whether `v` is an integer combination of the columns of `basis`.
/// A basis with zero columns spans only the zero vector.
inline bool lattice_membership(const IntegerMatrix& basis, const LatticeVector& v) {
  if (basis.rows() != v.rank())
    throw DimensionMismatch("vector length " + std::to_string(v.rank()) +
                            " does not match basis length " + std::to_string(basis.rows()));
  return hermite_contains(hermite_normal_form(basis), v);
}

/// Index [ℤ^k : L] of the lattice spanned by the columns; nullopt when the
/// lattice has rank below k (infinite index).
inline std::optional<Integer> lattice_index(const IntegerMatrix& basis) {
  auto h = hermite_normal_form(basis);
  if (h.rank() < basis.rows()) return std::nullopt;
  Integer index = 1;
  for (std::size_t c = 0; c < h.rank(); ++c) index *= h.form(h.pivot_rows[c], c);
  return index;
}

}  // namespace cardmetric
