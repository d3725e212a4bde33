#include "modvir/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace modvir {

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<Scalar> Matrix::multiply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Scalar> y(rows_, ring_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !x[j].is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

namespace linalg {

namespace {

void require_field(const Matrix& m) {
  if (!m.ring().is_field()) throw std::domain_error("elimination requires a field, got " + m.ring().name());
}

/// Integer row echelon form produced by fraction-free elimination.
struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivots;
};

IntegerEchelon bareiss(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  IntegerEchelon e;
  e.rows.assign(nr, std::vector<mpz_class>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class lcm(1);
    for (std::size_t j = 0; j < nc; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const Rational& q = m(i, j).rational();
      e.rows[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && e.rows[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(e.rows[piv], e.rows[r]);
    const mpz_class& p = e.rows[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      mpz_class f = e.rows[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class t = p * e.rows[i][j] - f * e.rows[r][j];
        mpz_divexact(e.rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.rows[i][c] = 0;
    }
    prev = p;
    e.pivots.push_back(c);
    ++r;
  }
  e.rows.resize(r);
  return e;
}

std::vector<std::vector<Scalar>> kernel_from_rref(const Matrix& reduced,
                                                  const std::vector<std::size_t>& pivots) {
  const std::size_t nc = reduced.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(nc, reduced.ring().zero());
    x[f] = reduced.ring().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<std::size_t> rref(Matrix& m) {
  require_field(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  require_field(m);
  if (m.ring().characteristic() == 0) return bareiss(m).pivots.size();
  Matrix copy = m;
  return rref(copy).size();
}

std::size_t rank_gauss_jordan(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  require_field(m);
  if (m.ring().characteristic() != 0) {
    Matrix copy = m;
    auto pivots = rref(copy);
    return kernel_from_rref(copy, pivots);
  }
  // Back-substitute through the integer echelon form.
  IntegerEchelon e = bareiss(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(nc, Rational(0));
    x[f] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      std::size_t pc = e.pivots[r];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < nc; ++j) {
        if (e.rows[r][j] != 0 && x[j] != 0) acc += Rational(e.rows[r][j]) * x[j];
      }
      x[pc] = -acc / Rational(e.rows[r][pc]);
    }
    std::vector<Scalar> v;
    v.reserve(nc);
    for (auto& q : x) v.emplace_back(q);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  require_field(m);
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  Scalar det = m.ring().one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return m.ring().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix reduce_mod_p(const Matrix& m, std::uint32_t p) {
  Ring target = Ring::prime_field(p);
  if (m.ring().is_polynomial()) target = target.polynomial();
  Matrix out(m.rows(), m.cols(), target);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = modvir::reduce_mod_p(m(i, j), p);
  }
  return out;
}

}  // namespace linalg
}  // namespace modvir
