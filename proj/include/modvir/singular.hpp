#pragma once

#include <cstddef>
#include <vector>

#include "modvir/virasoro.hpp"

namespace modvir {

/// Where singular vectors are searched for: the Verma module itself, or the
/// vacuum quotient V(c,0)/U(Vir)L(-1)v (requires h = 0).
enum class SearchSpace { Verma, VacuumQuotient };

struct SingularBasis {
  int degree = 0;
  SearchSpace space = SearchSpace::Verma;
  /// Row-reduced: each vector has coefficient 1 on its lexicographically
  /// largest partition, and that partition is absent from the others.
  std::vector<VermaVector> vectors;
};

struct CharacterRow {
  int degree;
  std::size_t verma;
  std::size_t radical;
  std::size_t irreducible;
};

struct CharacterTable {
  std::vector<CharacterRow> rows;
  std::vector<std::size_t> irreducible_dims() const;
};

/// Basis of {w in V(n) : L(1)w = L(2)w = 0}.
SingularBasis singular_space(const VermaModule& module, int degree,
                             SearchSpace space = SearchSpace::Verma);

/// True iff L(1) and L(2) annihilate vec (in the chosen space). Rejects zero and
/// inhomogeneous input.
bool is_singular(const VermaVector& vec, const VermaModule& module,
                 SearchSpace space = SearchSpace::Verma);

/// Per degree: dim L(c,h)(n) = rank of the Gram matrix.
CharacterTable irreducible_dims(const VermaModule& module, int max_degree);

/// Entrywise image in F_p. Terms that reduce to 0 are dropped; a denominator
/// divisible by p throws DenominatorDivisibleByP.
VermaVector reduce_vector_mod_p(const VermaVector& vec, std::uint32_t p);

/// Scales so the coefficient of the lexicographically largest partition is 1.
VermaVector normalize_leading(const VermaVector& vec);

/// True iff `vec` lies in the span of `basis` (all homogeneous of one degree).
bool in_span(const VermaVector& vec, const std::vector<VermaVector>& basis);

}  // namespace modvir
