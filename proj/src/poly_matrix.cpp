// SPDX-License-Identifier: Apache-2.0
#include "xleg/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace xleg {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Poly::constant(1);
  return m;
}

Poly PolyMatrix::det() const {
  if (n_ == 0) return Poly::constant(1);
  std::vector<Poly> a = e_;
  auto el = [&](std::size_t r, std::size_t c) -> Poly& { return a[r * n_ + c]; };
  Poly prev = Poly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (el(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n_ && el(p, k).is_zero()) ++p;
      if (p == n_) return {};
      for (std::size_t c = 0; c < n_; ++c) std::swap(el(k, c), el(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        // Sylvester: the division by the previous pivot is exact.
        el(i, j) = exact_quotient(el(k, k) * el(i, j) - el(i, k) * el(k, j), prev);
      }
    }
    prev = el(k, k);
  }
  Poly d = std::move(el(n_ - 1, n_ - 1));
  return negate ? -d : d;
}

Poly PolyMatrix::det_cofactor() const {
  if (n_ == 0) return Poly::constant(1);
  if (n_ == 1) return e_[0];
  if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  Poly d;
  for (std::size_t c = 0; c < n_; ++c) {
    if (at(0, c).is_zero()) continue;
    const Poly term = at(0, c) * minor(0, c).det_cofactor();
    if (c % 2 == 0) d += term; else d -= term;
  }
  return d;
}

PolyMatrix PolyMatrix::minor(std::size_t row, std::size_t col) const {
  if (n_ == 0) throw std::out_of_range("minor of an empty matrix");
  PolyMatrix m(n_ - 1);
  for (std::size_t r = 0, mr = 0; r < n_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, mc = 0; c < n_; ++c) {
      if (c == col) continue;
      m.at(mr, mc++) = at(r, c);
    }
    ++mr;
  }
  return m;
}

PolyMatrix PolyMatrix::adjugate() const {
  PolyMatrix adj(n_);
  if (n_ == 1) {
    adj.at(0, 0) = Poly::constant(1);
    return adj;
  }
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      Poly cof = minor(r, c).det();
      adj.at(c, r) = (r + c) % 2 == 0 ? std::move(cof) : -cof;
    }
  }
  return adj;
}

PolyMatrix PolyMatrix::with_column(std::size_t col, const std::vector<Poly>& v) const {
  if (v.size() != n_ || col >= n_) throw std::invalid_argument("with_column: size mismatch");
  PolyMatrix m = *this;
  for (std::size_t r = 0; r < n_; ++r) m.at(r, col) = v[r];
  return m;
}

std::vector<Poly> PolyMatrix::operator*(const std::vector<Poly>& v) const {
  if (v.size() != n_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Poly> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out[r] += at(r, c) * v[c];
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      for (std::size_t k = 0; k < a.n_; ++k) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  }
  return out;
}

}  // namespace xleg
