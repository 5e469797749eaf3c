#include "crn/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace crn {

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  assert(v.size() == cols_);
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Rational> RationalMatrix::apply_left(const std::vector<Rational>& v) const {
  assert(v.size() == rows_);
  std::vector<Rational> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) out[j] += v[i] * at(i, j);
  return out;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& indices) const {
  RationalMatrix m(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    assert(indices[i] < rows_);
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(indices[i], j);
  }
  return m;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (cols_ != other.cols_ && other.rows_ != 0 && rows_ != 0)
    throw std::invalid_argument("stacked: column mismatch");
  RationalMatrix m(rows_ + other.rows_, rows_ == 0 ? other.cols_ : cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
  return m;
}

namespace {

// Row-reduces a copy of m. Returns the pivot column of each pivot row; the
// matrix is left in reduced row echelon form.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    const Rational inv = Rational(1) / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return rref(work).size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix work = m;
  const std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols());
    v[free_col] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -work.at(p, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

}  // namespace crn
