#pragma once

#include <cstddef>
#include <vector>

#include "modvir/coeffring.hpp"

namespace modvir {

/// Dense row-major matrix of exact scalars over a single ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Ring& ring)
      : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols, ring.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  std::vector<Scalar> multiply(const std::vector<Scalar>& x) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Ring ring_;
  std::vector<Scalar> data_;
};

namespace linalg {

/// Reduced row echelon form over a field. Returns the pivot column of each
/// nonzero row; `m` is overwritten in place.
std::vector<std::size_t> rref(Matrix& m);

/// Rank over the matrix's field. Uses fraction-free (Bareiss) elimination over
/// Q and plain elimination over F_p.
std::size_t rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Rank by Gauss-Jordan on rationals, bypassing the fraction-free path.
std::size_t rank_gauss_jordan(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Entrywise image in F_p of a rational matrix.
Matrix reduce_mod_p(const Matrix& m, std::uint32_t p);

}  // namespace linalg
}  // namespace modvir
