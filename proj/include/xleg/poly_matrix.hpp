// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "xleg/poly.hpp"

namespace xleg {

/// Square matrix over Q[z], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n);
  static PolyMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Poly& at(std::size_t row, std::size_t col) { return e_[row * n_ + col]; }
  const Poly& at(std::size_t row, std::size_t col) const { return e_[row * n_ + col]; }

  /// Fraction-free Bareiss elimination with row pivoting. det of the 0x0
  /// matrix is 1.
  Poly det() const;
  /// Laplace expansion along the first row. Exponential; meant for n <= 4.
  Poly det_cofactor() const;
  /// Matrix with row `row` and column `col` removed.
  PolyMatrix minor(std::size_t row, std::size_t col) const;
  /// Transpose of the cofactor matrix, so adj(M) * M = det(M) * I.
  PolyMatrix adjugate() const;
  /// Copy with column `col` replaced by v.
  PolyMatrix with_column(std::size_t col, const std::vector<Poly>& v) const;

  std::vector<Poly> operator*(const std::vector<Poly>& v) const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Poly> e_;
};

}  // namespace xleg
