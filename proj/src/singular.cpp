#include "modvir/singular.hpp"

#include <algorithm>
#include <stdexcept>

namespace modvir {

namespace {

std::vector<Partition> search_basis(int degree, SearchSpace space) {
  auto all = partitions(degree);
  if (space == SearchSpace::Verma) return all;
  std::vector<Partition> out;
  for (auto& p : all) {
    if (p.empty() || p.back() != 1) out.push_back(std::move(p));
  }
  return out;
}

VermaVector project(const VermaVector& v, SearchSpace space) {
  return space == SearchSpace::Verma ? v : v.vacuum_projection();
}

void check_space(const VermaModule& module, SearchSpace space) {
  if (space == SearchSpace::VacuumQuotient && !module.params().h().is_zero()) {
    throw std::invalid_argument("the vacuum quotient exists only for h = 0");
  }
}

}  // namespace

std::vector<std::size_t> CharacterTable::irreducible_dims() const {
  std::vector<std::size_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.irreducible);
  return out;
}

SingularBasis singular_space(const VermaModule& module, int degree, SearchSpace space) {
  if (degree < 1) throw std::invalid_argument("singular vectors live in positive degree");
  if (!module.ring().is_field()) throw std::domain_error("singular_space needs a field");
  check_space(module, space);
  const Ring& ring = module.ring();
  const auto basis = search_basis(degree, space);
  const auto below1 = search_basis(degree - 1, space);
  const auto below2 = degree >= 2 ? search_basis(degree - 2, space) : std::vector<Partition>{};

  Matrix m(below1.size() + below2.size(), basis.size(), ring);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    VermaVector mono = VermaVector::monomial(basis[j], ring.one());
    auto c1 = project(module.apply_mode(1, mono), space).coordinates(below1);
    auto c2 = project(module.apply_mode(2, mono), space).coordinates(below2);
    for (std::size_t i = 0; i < c1.size(); ++i) m(i, j) = c1[i];
    for (std::size_t i = 0; i < c2.size(); ++i) m(below1.size() + i, j) = c2[i];
  }
  auto kernel = linalg::nullspace(m);

  SingularBasis result;
  result.degree = degree;
  result.space = space;
  if (kernel.empty()) return result;

  // Row-reduce the kernel basis; columns are already in lexicographically
  // decreasing order, so each pivot is its row's leading partition.
  Matrix k(kernel.size(), basis.size(), ring);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) k(i, j) = kernel[i][j];
  }
  auto pivots = linalg::rref(k);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    VermaVector v(ring);
    for (std::size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j], k(i, j));
    result.vectors.push_back(std::move(v));
  }
  return result;
}

bool is_singular(const VermaVector& vec, const VermaModule& module, SearchSpace space) {
  if (vec.is_zero()) throw std::invalid_argument("is_singular: zero vector");
  if (!vec.degree()) throw std::invalid_argument("is_singular: vector is not homogeneous");
  check_space(module, space);
  return project(module.apply_mode(1, vec), space).is_zero() &&
         project(module.apply_mode(2, vec), space).is_zero();
}

CharacterTable irreducible_dims(const VermaModule& module, int max_degree) {
  if (!module.ring().is_field()) throw std::domain_error("irreducible_dims needs a field");
  CharacterTable table;
  for (int n = 0; n <= max_degree; ++n) {
    std::size_t dim = verma_dim(n);
    std::size_t rk = linalg::rank(module.gram_matrix(n));
    table.rows.push_back(CharacterRow{n, dim, dim - rk, rk});
  }
  return table;
}

VermaVector reduce_vector_mod_p(const VermaVector& vec, std::uint32_t p) {
  Ring target = Ring::prime_field(p);
  if (vec.ring().is_polynomial()) target = target.polynomial();
  VermaVector out(target);
  for (const auto& [part, c] : vec.terms()) out.add_term(part, reduce_mod_p(c, p));
  return out;
}

VermaVector normalize_leading(const VermaVector& vec) {
  if (vec.is_zero()) return vec;
  VermaVector out = vec;
  out *= vec.terms().begin()->second.inverse();
  return out;
}

bool in_span(const VermaVector& vec, const std::vector<VermaVector>& basis) {
  std::vector<Partition> support;
  auto collect = [&](const VermaVector& v) {
    for (const auto& [p, c] : v.terms()) {
      if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(p);
    }
  };
  collect(vec);
  for (const auto& b : basis) collect(b);
  const Ring& ring = vec.ring();
  Matrix m(basis.size() + 1, support.size(), ring);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto c = basis[i].coordinates(support);
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = c[j];
  }
  std::size_t without = basis.empty() ? 0 : [&] {
    Matrix b(basis.size(), support.size(), ring);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < support.size(); ++j) b(i, j) = m(i, j);
    }
    return linalg::rank(b);
  }();
  auto c = vec.coordinates(support);
  for (std::size_t j = 0; j < c.size(); ++j) m(basis.size(), j) = c[j];
  return linalg::rank(m) == without;
}

}  // namespace modvir
