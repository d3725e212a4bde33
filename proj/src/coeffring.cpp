#include "modvir/coeffring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace modvir {

namespace {

std::uint32_t mod_reduce(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_reduce(const mpz_class& value, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(value.get_mpz_t(), p));
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  std::string s(trim_view(text));
  if (s.empty()) throw std::invalid_argument("empty scalar string");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  mpz_class num, den(1);
  auto digits_ok = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
  };
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(ns) || !digits_ok(ds)) throw std::invalid_argument("malformed scalar: " + s);
  num.set_str(ns, 10);
  den.set_str(ds, 10);
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ring

Ring Ring::prime_field(std::int64_t p) {
  if (p == 2) {
    throw UnsupportedCharacteristic(
        "characteristic 2 is not supported: the Virasoro structure constants need 1/2");
  }
  if (p >= (std::int64_t{1} << 31) || !is_odd_prime(p)) {
    throw UnsupportedCharacteristic("characteristic must be 0 or an odd prime below 2^31, got " +
                                    std::to_string(p));
  }
  return Ring(static_cast<std::uint32_t>(p), false);
}

Ring Ring::from_characteristic(std::int64_t p) { return p == 0 ? rationals() : prime_field(p); }

Ring Ring::polynomial() const { return Ring(p_, true); }
Ring Ring::base() const { return Ring(p_, false); }

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long long n) const {
  Scalar base = p_ == 0 ? Scalar(n) : Scalar(Scalar::Residue{p_, mod_reduce(n, p_)});
  if (!poly_) return base;
  return Scalar::polynomial(p_, {base});
}

Scalar Ring::from_rational(const Rational& q) const {
  Scalar base = p_ == 0 ? Scalar(q) : reduce_mod_p(Scalar(q), p_);
  if (!poly_) return base;
  return Scalar::polynomial(p_, {base});
}

Scalar Ring::variable() const {
  if (!poly_) throw RingMismatch("formal variable h requested from a non-polynomial ring");
  return Scalar::polynomial(p_, {base().zero(), base().one()});
}

Scalar Ring::parse(std::string_view text) const {
  auto t = trim_view(text);
  if (t == "h") {
    return polynomial().variable();
  }
  if (auto pos = t.find("mod"); pos != std::string_view::npos) {
    Rational k = parse_rational(t.substr(0, pos));
    std::string ps(trim_view(t.substr(pos + 3)));
    long long p = std::stoll(ps);
    if (p_ != 0 && static_cast<std::uint32_t>(p) != p_) {
      throw RingMismatch("scalar '" + std::string(t) + "' does not live in " + name());
    }
    Ring r = prime_field(p);
    Scalar v = r.from_rational(k);
    return poly_ ? Scalar::polynomial(p_, {v}) : v;
  }
  return from_rational(parse_rational(t));
}

std::string Ring::name() const {
  std::string base = p_ == 0 ? "Q" : "F_" + std::to_string(p_);
  return poly_ ? base + "[h]" : base;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& q) : rep_(q) { std::get<Rational>(rep_).canonicalize(); }

Scalar Scalar::residue(long long value, std::uint32_t p) {
  if (!is_odd_prime(p)) throw UnsupportedCharacteristic("not an odd prime: " + std::to_string(p));
  return Scalar(Residue{p, mod_reduce(value, p)});
}

Scalar Scalar::polynomial(std::uint32_t p, std::vector<Scalar> coeffs) {
  for (const auto& c : coeffs) {
    if (c.kind() == Kind::Polynomial || c.characteristic() != p) {
      throw RingMismatch("polynomial coefficients must be base scalars of characteristic " +
                         std::to_string(p));
    }
  }
  Scalar s(Poly{p, std::move(coeffs)});
  s.trim();
  return s;
}

Scalar::Kind Scalar::kind() const { return static_cast<Kind>(rep_.index()); }

std::uint32_t Scalar::characteristic() const {
  switch (kind()) {
    case Kind::Rational:
      return 0;
    case Kind::PrimeField:
      return std::get<Residue>(rep_).p;
    case Kind::Polynomial:
      return std::get<Poly>(rep_).p;
  }
  return 0;
}

Ring Scalar::ring() const {
  Ring r = Ring(characteristic(), false);
  return kind() == Kind::Polynomial ? r.polynomial() : r;
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case Kind::Rational:
      return std::get<Rational>(rep_) == 0;
    case Kind::PrimeField:
      return std::get<Residue>(rep_).v == 0;
    case Kind::Polynomial:
      return std::get<Poly>(rep_).c.empty();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind()) {
    case Kind::Rational:
      return std::get<Rational>(rep_) == 1;
    case Kind::PrimeField:
      return std::get<Residue>(rep_).v == 1;
    case Kind::Polynomial: {
      const auto& c = std::get<Poly>(rep_).c;
      return c.size() == 1 && c[0].is_one();
    }
  }
  return false;
}

const Rational& Scalar::rational() const {
  if (kind() != Kind::Rational) throw RingMismatch("scalar is not rational");
  return std::get<Rational>(rep_);
}

std::uint32_t Scalar::residue_value() const {
  if (kind() != Kind::PrimeField) throw RingMismatch("scalar is not a prime-field element");
  return std::get<Residue>(rep_).v;
}

const std::vector<Scalar>& Scalar::coefficients() const {
  if (kind() != Kind::Polynomial) throw RingMismatch("scalar is not a polynomial");
  return std::get<Poly>(rep_).c;
}

int Scalar::degree() const {
  if (kind() != Kind::Polynomial) return 0;
  return static_cast<int>(std::get<Poly>(rep_).c.size()) - 1;
}

Scalar Scalar::constant_term() const {
  if (kind() != Kind::Polynomial) return *this;
  const auto& poly = std::get<Poly>(rep_);
  if (poly.c.empty()) return Ring(poly.p, false).zero();
  return poly.c.front();
}

void Scalar::trim() {
  if (kind() != Kind::Polynomial) return;
  auto& c = std::get<Poly>(rep_).c;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar Scalar::as_polynomial() const {
  if (kind() == Kind::Polynomial) return *this;
  return polynomial(characteristic(), {*this});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  switch (kind()) {
    case Kind::Rational: {
      Rational q = 1 / std::get<Rational>(rep_);
      return Scalar(q);
    }
    case Kind::PrimeField: {
      const auto& r = std::get<Residue>(rep_);
      return Scalar(Residue{r.p, mod_pow(r.v, r.p - 2, r.p)});
    }
    case Kind::Polynomial: {
      const auto& poly = std::get<Poly>(rep_);
      if (poly.c.size() != 1) throw std::domain_error("non-constant polynomial is not invertible");
      return polynomial(poly.p, {poly.c[0].inverse()});
    }
  }
  return {};
}

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw RingMismatch("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (characteristic() != o.characteristic()) mismatch(*this, o);
  if (kind() != o.kind()) {
    if (kind() != Kind::Polynomial) *this = as_polynomial();
    return *this += o.as_polynomial();
  }
  switch (kind()) {
    case Kind::Rational:
      std::get<Rational>(rep_) += std::get<Rational>(o.rep_);
      break;
    case Kind::PrimeField: {
      auto& r = std::get<Residue>(rep_);
      r.v = static_cast<std::uint32_t>((std::uint64_t{r.v} + std::get<Residue>(o.rep_).v) % r.p);
      break;
    }
    case Kind::Polynomial: {
      auto& c = std::get<Poly>(rep_).c;
      const auto& oc = std::get<Poly>(o.rep_).c;
      if (c.size() < oc.size()) c.resize(oc.size(), Ring(characteristic(), false).zero());
      for (std::size_t i = 0; i < oc.size(); ++i) c[i] += oc[i];
      trim();
      break;
    }
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r *= -1;
  return r;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (characteristic() != o.characteristic()) mismatch(*this, o);
  if (kind() == Kind::Polynomial && o.kind() != Kind::Polynomial) {
    for (auto& c : std::get<Poly>(rep_).c) c *= o;
    trim();
    return *this;
  }
  if (kind() != Kind::Polynomial && o.kind() == Kind::Polynomial) {
    Scalar r = o;
    r *= *this;
    return *this = std::move(r);
  }
  switch (kind()) {
    case Kind::Rational:
      std::get<Rational>(rep_) *= std::get<Rational>(o.rep_);
      break;
    case Kind::PrimeField: {
      auto& r = std::get<Residue>(rep_);
      r.v = static_cast<std::uint32_t>(std::uint64_t{r.v} * std::get<Residue>(o.rep_).v % r.p);
      break;
    }
    case Kind::Polynomial: {
      const auto& a = std::get<Poly>(rep_).c;
      const auto& b = std::get<Poly>(o.rep_).c;
      if (a.empty() || b.empty()) {
        std::get<Poly>(rep_).c.clear();
        break;
      }
      std::vector<Scalar> out(a.size() + b.size() - 1,
                              Ring(characteristic(), false).zero());
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      }
      std::get<Poly>(rep_).c = std::move(out);
      trim();
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar& Scalar::operator*=(long long n) {
  switch (kind()) {
    case Kind::Rational:
      std::get<Rational>(rep_) *= Rational(static_cast<long>(n));
      break;
    case Kind::PrimeField: {
      auto& r = std::get<Residue>(rep_);
      r.v = static_cast<std::uint32_t>(std::uint64_t{r.v} * mod_reduce(n, r.p) % r.p);
      break;
    }
    case Kind::Polynomial:
      for (auto& c : std::get<Poly>(rep_).c) c *= n;
      trim();
      break;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.characteristic() != b.characteristic()) return false;
  if (a.kind() != b.kind()) {
    return a.as_polynomial() == b.as_polynomial();
  }
  switch (a.kind()) {
    case Scalar::Kind::Rational:
      return std::get<Rational>(a.rep_) == std::get<Rational>(b.rep_);
    case Scalar::Kind::PrimeField:
      return std::get<Scalar::Residue>(a.rep_).v == std::get<Scalar::Residue>(b.rep_).v;
    case Scalar::Kind::Polynomial:
      return std::get<Scalar::Poly>(a.rep_).c == std::get<Scalar::Poly>(b.rep_).c;
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (kind()) {
    case Kind::Rational:
      return std::get<Rational>(rep_).get_str();
    case Kind::PrimeField: {
      const auto& r = std::get<Residue>(rep_);
      return std::to_string(r.v) + " mod " + std::to_string(r.p);
    }
    case Kind::Polynomial: {
      const auto& poly = std::get<Poly>(rep_);
      if (poly.c.empty()) return poly.p == 0 ? "0" : "0 mod " + std::to_string(poly.p);
      std::ostringstream os;
      bool first = true;
      for (std::size_t i = poly.c.size(); i-- > 0;) {
        const Scalar& c = poly.c[i];
        if (c.is_zero()) continue;
        std::string cs;
        if (c.kind() == Kind::Rational) {
          cs = c.rational().get_str();
        } else {
          cs = std::to_string(c.residue_value());
        }
        bool negative = !cs.empty() && cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << '-';
        first = false;
        bool unit = cs == "1";
        if (i == 0) {
          os << cs;
        } else {
          if (!unit) os << cs << '*';
          os << 'h';
          if (i > 1) os << '^' << i;
        }
      }
      if (poly.p != 0) os << " mod " << poly.p;
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

Scalar central_coeff(long long m, const Ring& ring) {
  if (ring.characteristic() == 2) throw UnsupportedCharacteristic("characteristic 2");
  // m^3 - m is always divisible by 3
  mpz_class mm(static_cast<long>(m));
  mpz_class third = (mm * mm * mm - mm) / 3;
  return ring.from_rational(Rational(third, 4));
}

Scalar reduce_mod_p(const Scalar& q, std::uint32_t p) {
  if (!is_odd_prime(p)) throw UnsupportedCharacteristic("not an odd prime: " + std::to_string(p));
  if (q.kind() == Scalar::Kind::Polynomial) {
    if (q.characteristic() != 0) throw RingMismatch("reduce_mod_p expects coefficients over Q");
    std::vector<Scalar> c;
    c.reserve(q.coefficients().size());
    for (const auto& x : q.coefficients()) c.push_back(reduce_mod_p(x, p));
    return Scalar::polynomial(p, std::move(c));
  }
  if (q.kind() == Scalar::Kind::PrimeField) {
    if (q.characteristic() != p) throw RingMismatch("cannot reduce across prime fields");
    return q;
  }
  const Rational& r = q.rational();
  std::uint32_t den = mod_reduce(r.get_den(), p);
  if (den == 0) {
    throw DenominatorDivisibleByP(r.get_str() + " has no image mod " + std::to_string(p));
  }
  std::uint32_t num = mod_reduce(r.get_num(), p);
  return Scalar(Scalar::Residue{
      p, static_cast<std::uint32_t>(std::uint64_t{num} * mod_pow(den, p - 2, p) % p)});
}

Scalar poly_eval(const Scalar& f, const Scalar& x) {
  if (x.kind() == Scalar::Kind::Polynomial) throw RingMismatch("evaluation point must be a base scalar");
  if (f.kind() != Scalar::Kind::Polynomial) {
    if (f.characteristic() != x.characteristic()) throw RingMismatch("ring mismatch in poly_eval");
    return f;
  }
  if (f.characteristic() != x.characteristic()) throw RingMismatch("ring mismatch in poly_eval");
  const auto& c = f.coefficients();
  Scalar acc = x.ring().zero();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

Rational binomial(long long n, long long k) {
  if (k < 0) return Rational(0);
  mpz_class num(1), den(1);
  for (long long i = 0; i < k; ++i) {
    num *= mpz_class(static_cast<long>(n - i));
    den *= mpz_class(static_cast<long>(i + 1));
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace modvir
