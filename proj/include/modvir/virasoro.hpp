#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modvir/coeffring.hpp"
#include "modvir/linalg.hpp"

namespace modvir {

/// Weakly decreasing list of positive parts; indexes the PBW monomial
/// L(-n1)...L(-nk)v. The empty partition is the highest-weight vector.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts the parts into PBW order first.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int degree() const { return degree_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  Partition without_front() const;
  /// Prepends a part that is at least the current front.
  Partition with_front(int part) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Graded, then reverse-lexicographic on the part lists: [4] < [3,1] < [2,2] < ...
struct PbwOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Partitions of n in PbwOrder.
std::vector<Partition> partitions(int n);
std::size_t verma_dim(int n);

/// Central charge and highest weight, both in `ring`. When h is formal the
/// ring is a polynomial ring and c is a constant.
class ModuleParams {
 public:
  ModuleParams(Scalar c, Scalar h);

  const Scalar& c() const { return c_; }
  const Scalar& h() const { return h_; }
  const Ring& ring() const { return ring_; }

 private:
  Scalar c_;
  Scalar h_;
  Ring ring_;
};

/// Finite linear combination of PBW monomials with nonzero coefficients.
class VermaVector {
 public:
  using Terms = std::map<Partition, Scalar, PbwOrder>;

  explicit VermaVector(Ring ring) : ring_(ring) {}
  static VermaVector monomial(const Partition& p, const Scalar& coeff);
  static VermaVector monomial(const Partition& p, const Ring& ring) {
    return monomial(p, ring.one());
  }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Common degree of all terms; nullopt for zero or mixed-degree vectors.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  Scalar coeff(const Partition& p) const;
  void add_term(const Partition& p, const Scalar& coeff);
  void add_scaled(const VermaVector& other, const Scalar& factor);

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Scalar& s);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const Scalar& s, VermaVector a) { return a *= s; }

  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.terms_ == b.terms_; }

  /// Coordinates against `basis` (missing monomials are zero).
  std::vector<Scalar> coordinates(std::span<const Partition> basis) const;

  /// Keeps only monomials without a part equal to 1; this is the image in the
  /// vacuum quotient V(c,0) / U(Vir) L(-1)v.
  VermaVector vacuum_projection() const;

  std::string to_string() const;

 private:
  Ring ring_;
  Terms terms_;
};

/// The Verma module V(c,h): straightening of L(n) into the PBW basis, and the
/// contravariant form. Straightening results are memoized per (mode, monomial);
/// the cache is safe for concurrent readers.
class VermaModule {
 public:
  explicit VermaModule(ModuleParams params);

  const ModuleParams& params() const { return params_; }
  const Ring& ring() const { return params_.ring(); }

  VermaVector highest_weight_vector() const;
  VermaVector apply_mode(int n, const VermaVector& vec) const;
  VermaVector apply_mode(int n, const Partition& mono) const;
  /// L(-w1) L(-w2) ... applied to vec, rightmost first; `word` holds the mode indices.
  VermaVector apply_word(std::span<const int> word, const VermaVector& vec) const;

  /// G[i][j] = <L(-lambda_i)v, L(-mu_j)v> over partitions(degree), with <v,v> = 1.
  const Matrix& gram_matrix(int degree) const;

 private:
  struct Key {
    int mode;
    Partition mono;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  VermaVector straighten(int n, const Partition& mono) const;

  ModuleParams params_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<Key, VermaVector, KeyHash> memo_;
  mutable std::mutex gram_mutex_;
  mutable std::map<int, std::unique_ptr<Matrix>> gram_;
};

}  // namespace modvir
