#ifndef CRN_MATRIX_HPP
#define CRN_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Dense arbitrary-precision rational matrix. Every instance in this project
/// is tiny (desk-scale networks), so no sparsity or pivot scaling is needed.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RationalMatrix transposed() const;

  /// M v (v has cols() entries).
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  /// v^T M (v has rows() entries).
  std::vector<Rational> apply_left(const std::vector<Rational>& v) const;

  /// Keeps the listed rows, in the given order.
  RationalMatrix select_rows(const std::vector<std::size_t>& indices) const;

  /// Stacks other below this matrix (column counts must agree).
  RationalMatrix stacked(const RationalMatrix& other) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel {v : Mv = 0}; empty when the kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

bool is_zero_vector(const std::vector<Rational>& v);

}  // namespace crn

#endif
