#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace modvir {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a rational has no image in F_p because p divides its denominator.
class DenominatorDivisibleByP : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedCharacteristic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

class Scalar;

/// Coefficient ring descriptor: Q or F_p (p an odd prime), optionally
/// extended by a single formal variable h.
class Ring {
 public:
  Ring() = default;

  static Ring rationals() { return Ring{}; }
  static Ring prime_field(std::int64_t p);
  /// 0 selects Q; anything else must be an odd prime below 2^31.
  static Ring from_characteristic(std::int64_t p);

  Ring polynomial() const;
  Ring base() const;

  std::uint32_t characteristic() const { return p_; }
  bool is_polynomial() const { return poly_; }
  bool is_field() const { return !poly_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_rational(const Rational& q) const;
  /// The formal variable h; only valid on a polynomial ring.
  Scalar variable() const;

  /// Parses "3/4", "-2", "5 mod 7" or "h" into this ring.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  friend class Scalar;
  friend Scalar reduce_mod_p(const Scalar& q, std::uint32_t p);

  Ring(std::uint32_t p, bool poly) : p_(p), poly_(poly) {}

  std::uint32_t p_ = 0;
  bool poly_ = false;
};

/// An exact ring element. Immutable in spirit; all operations return new values.
class Scalar {
 public:
  enum class Kind { Rational, PrimeField, Polynomial };

  Scalar() : rep_(Rational(0)) {}
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(long long n) : Scalar(Rational(static_cast<long>(n))) {}  // NOLINT

  static Scalar residue(long long value, std::uint32_t p);
  /// Polynomial in h over Q (p = 0) or F_p; coeffs[i] multiplies h^i and
  /// must be base scalars of that characteristic. Trailing zeros are trimmed.
  static Scalar polynomial(std::uint32_t p, std::vector<Scalar> coeffs);

  Kind kind() const;
  Ring ring() const;
  std::uint32_t characteristic() const;

  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;
  std::uint32_t residue_value() const;
  /// Coefficients of a polynomial scalar, lowest degree first.
  const std::vector<Scalar>& coefficients() const;
  /// Polynomial degree; -1 for the zero polynomial, 0 for base scalars.
  int degree() const;
  /// Constant term of a polynomial, or the scalar itself.
  Scalar constant_term() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar& operator*=(long long n);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, long long n) { return a *= n; }
  friend Scalar operator*(long long n, Scalar a) { return a *= n; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den", "k mod p", or a readable polynomial such as "64*h^3 - 36*h^2 + 2*h".
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t p;
    std::uint32_t v;
  };
  struct Poly {
    std::uint32_t p;
    std::vector<Scalar> c;
  };

  friend class Ring;
  friend Scalar reduce_mod_p(const Scalar& q, std::uint32_t p);

  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(Poly q) : rep_(std::move(q)) {}

  void trim();
  Scalar as_polynomial() const;

  std::variant<Rational, Residue, Poly> rep_;
};

/// (m^3 - m)/12 in the ring: the exact integer (m^3 - m)/3 times 4^{-1}.
Scalar central_coeff(long long m, const Ring& ring);

/// Image of a rational in F_p.
Scalar reduce_mod_p(const Scalar& q, std::uint32_t p);

/// Horner evaluation of a polynomial scalar at a base-ring point.
Scalar poly_eval(const Scalar& f, const Scalar& x);

/// Exact binomial coefficient binom(n, k) for any integer n and k >= 0.
Rational binomial(long long n, long long k);

bool is_odd_prime(std::int64_t p);

}  // namespace modvir
