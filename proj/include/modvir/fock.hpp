#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modvir/coeffring.hpp"

namespace modvir {

/// NS: half-odd-integer modes (V(H, Z+1/2)); Ramond: integer modes with a(0)^2 = 1/2.
enum class Sector { NS, Ramond };
enum class Parity { Even = 0, Odd = 1 };

std::string to_string(Sector s);
std::string to_string(Parity p);

/// a(-n1) a(-n2) ... a(-nk) applied to the vacuum, n1 > ... > nk >= 0. Each n
/// is stored doubled; in the Ramond sector a(0) can only appear last.
class FockMonomial {
 public:
  FockMonomial() = default;
  FockMonomial(Sector sector, std::vector<int> twice_n);

  Sector sector() const { return sector_; }
  std::span<const int> twice_n() const { return twice_n_; }
  std::size_t size() const { return twice_n_.size(); }
  Parity parity() const { return twice_n_.size() % 2 == 0 ? Parity::Even : Parity::Odd; }
  int twice_weight() const { return twice_weight_; }
  /// Sector-adjusted degree: NS parity s collects weight degree + s/2.
  int degree() const;
  bool has_zero_mode() const { return !twice_n_.empty() && twice_n_.back() == 0; }

  /// Doubled mode indices as they appear in a(m): {-3, -1} for a(-3/2)a(-1/2).
  std::vector<int> doubled_modes() const;

  std::string to_string() const;

  friend bool operator==(const FockMonomial&, const FockMonomial&) = default;

 private:
  friend class FockVector;
  friend std::optional<std::pair<Rational, FockMonomial>> apply_fermion_mono(int, const FockMonomial&);

  Sector sector_ = Sector::NS;
  std::vector<int> twice_n_;
  int twice_weight_ = 0;
};

/// Weight, then reverse-lexicographic on the doubled n lists.
struct FockOrder {
  bool operator()(const FockMonomial& a, const FockMonomial& b) const;
};

/// a(m) on one monomial, m given doubled: the coefficient (+-1 or +-1/2) and
/// the resulting monomial, or nullopt when the product vanishes.
std::optional<std::pair<Rational, FockMonomial>> apply_fermion_mono(int twice_mode,
                                                                    const FockMonomial& mono);

class FockVector {
 public:
  using Terms = std::map<FockMonomial, Scalar, FockOrder>;

  FockVector(Sector sector, Ring ring) : sector_(sector), ring_(ring) {}
  static FockVector vacuum(Sector sector, const Ring& ring);
  static FockVector monomial(const FockMonomial& m, const Scalar& coeff);

  Sector sector() const { return sector_; }
  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<int> degree() const;
  std::optional<Parity> parity() const;
  int max_twice_n() const;

  Scalar coeff(const FockMonomial& m) const;
  void add_term(const FockMonomial& m, const Scalar& coeff);
  void add_scaled(const FockVector& other, const Scalar& factor);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& s);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& s, FockVector a) { return a *= s; }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }

  std::vector<Scalar> coordinates(std::span<const FockMonomial> basis) const;
  std::string to_string() const;

 private:
  Sector sector_;
  Ring ring_;
  Terms terms_;
};

/// a(m) with m given doubled (odd in NS, even in Ramond).
FockVector apply_fermion(int twice_mode, const FockVector& vec);

/// L(n) = 1/2 sum_j j :a(-j)a(n+j): (+ 1/16 on the Ramond L(0)).
FockVector apply_virasoro_fock(int n, const FockVector& vec);

/// Monomials of the given sector and parity in one sector-adjusted degree.
std::vector<FockMonomial> fock_basis(Sector sector, Parity parity, int degree);
std::vector<std::size_t> sector_dims(Sector sector, Parity parity, int max_degree);

/// Graded dimensions of span{L(-k1)...L(-kj) start}, indexed by degree above
/// the start vector, up to max_degree.
std::vector<std::size_t> vir_span_dims(const FockVector& start, int max_degree);

/// Row-reduced bases of the same span, one slice per degree above the start.
std::vector<std::vector<FockVector>> vir_span_basis(const FockVector& start, int max_degree);

/// Row-reduced basis of the span of homogeneous vectors inside one slice.
std::vector<FockVector> span_basis(const std::vector<FockVector>& vectors,
                                   const std::vector<FockMonomial>& basis, Sector sector,
                                   const Ring& ring);

/// Basis of the joint kernel of L(1), L(2) on one sector/parity/degree slice,
/// row-reduced so each vector has coefficient 1 on its leading monomial.
std::vector<FockVector> fock_hw_vectors(Sector sector, Parity parity, int degree, const Ring& ring);

/// The canonical highest-weight vectors 1, a(-1/2), 1, a(0) with weights 0, 1/2, 1/16, 1/16.
FockVector fock_highest_weight_vector(Sector sector, Parity parity, const Ring& ring);

/// Ramond even -> odd: right multiplication by a(0).
FockVector sigma(const FockVector& vec);

/// Symmetric form with (a(n)u, v) = (u, a(-n)v). Monomials are orthogonal, NS
/// monomials have norm 1, and Ramond monomials ending in a(0) have norm 1/2.
Scalar fock_form(const FockVector& u, const FockVector& v);

/// Weight of a monomial slice as a string, "15/2" or "4".
std::string half_integer_string(int twice_value);

}  // namespace modvir
