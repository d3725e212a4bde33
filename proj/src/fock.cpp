#include "modvir/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "modvir/linalg.hpp"

namespace modvir {

std::string to_string(Sector s) { return s == Sector::NS ? "NS" : "R"; }
std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string half_integer_string(int twice_value) {
  if (twice_value % 2 == 0) return std::to_string(twice_value / 2);
  return std::to_string(twice_value) + "/2";
}

namespace {

void check_index(Sector sector, int twice) {
  bool odd = (std::abs(twice) % 2) == 1;
  if ((sector == Sector::NS) != odd) {
    throw std::invalid_argument("mode " + half_integer_string(twice) + " does not belong to the " +
                                to_string(sector) + " sector");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FockMonomial

FockMonomial::FockMonomial(Sector sector, std::vector<int> twice_n)
    : sector_(sector), twice_n_(std::move(twice_n)) {
  for (std::size_t i = 0; i < twice_n_.size(); ++i) {
    int t = twice_n_[i];
    if (t < 0 || (sector == Sector::NS && t == 0)) {
      throw std::invalid_argument("Fock monomials hold creation modes only");
    }
    check_index(sector, t);
    if (i > 0 && t >= twice_n_[i - 1]) {
      throw std::invalid_argument("Fock monomial modes must be strictly decreasing");
    }
    twice_weight_ += t;
  }
}

int FockMonomial::degree() const {
  if (sector_ == Sector::Ramond) return twice_weight_ / 2;
  return (twice_weight_ - static_cast<int>(parity())) / 2;
}

std::vector<int> FockMonomial::doubled_modes() const {
  std::vector<int> out;
  out.reserve(twice_n_.size());
  for (int t : twice_n_) out.push_back(-t);
  return out;
}

std::string FockMonomial::to_string() const {
  if (twice_n_.empty()) return "1";
  std::string s;
  for (int t : twice_n_) s += "a(" + (t == 0 ? std::string("0") : "-" + half_integer_string(t)) + ")";
  return s;
}

bool FockOrder::operator()(const FockMonomial& a, const FockMonomial& b) const {
  if (a.twice_weight() != b.twice_weight()) return a.twice_weight() < b.twice_weight();
  auto ta = a.twice_n();
  auto tb = b.twice_n();
  return std::lexicographical_compare(tb.begin(), tb.end(), ta.begin(), ta.end());
}

std::optional<std::pair<Rational, FockMonomial>> apply_fermion_mono(int twice_mode,
                                                                    const FockMonomial& mono) {
  check_index(mono.sector(), twice_mode);
  const auto& t = mono.twice_n_;
  FockMonomial out;
  out.sector_ = mono.sector_;
  out.twice_n_.reserve(t.size() + 1);
  auto sign_of = [](std::size_t k) { return k % 2 == 0 ? 1 : -1; };

  if (twice_mode > 0) {
    auto it = std::find(t.begin(), t.end(), twice_mode);
    if (it == t.end()) return std::nullopt;
    auto pos = static_cast<std::size_t>(it - t.begin());
    out.twice_n_.assign(t.begin(), it);
    out.twice_n_.insert(out.twice_n_.end(), it + 1, t.end());
    out.twice_weight_ = mono.twice_weight_ - twice_mode;
    return std::make_pair(Rational(sign_of(pos)), std::move(out));
  }
  if (twice_mode < 0) {
    const int n = -twice_mode;
    std::size_t pos = 0;
    while (pos < t.size() && t[pos] > n) ++pos;
    if (pos < t.size() && t[pos] == n) return std::nullopt;
    out.twice_n_.assign(t.begin(), t.begin() + static_cast<long>(pos));
    out.twice_n_.push_back(n);
    out.twice_n_.insert(out.twice_n_.end(), t.begin() + static_cast<long>(pos), t.end());
    out.twice_weight_ = mono.twice_weight_ + n;
    return std::make_pair(Rational(sign_of(pos)), std::move(out));
  }
  // a(0) moves past every other factor; a(0)^2 = 1/2.
  out.twice_weight_ = mono.twice_weight_;
  if (mono.has_zero_mode()) {
    out.twice_n_.assign(t.begin(), t.end() - 1);
    return std::make_pair(Rational(sign_of(t.size() - 1), 2), std::move(out));
  }
  out.twice_n_ = t;
  out.twice_n_.push_back(0);
  return std::make_pair(Rational(sign_of(t.size())), std::move(out));
}

// ---------------------------------------------------------------------------
// FockVector

FockVector FockVector::vacuum(Sector sector, const Ring& ring) {
  FockVector v(sector, ring);
  v.add_term(FockMonomial(sector, {}), ring.one());
  return v;
}

FockVector FockVector::monomial(const FockMonomial& m, const Scalar& coeff) {
  FockVector v(m.sector(), coeff.ring());
  v.add_term(m, coeff);
  return v;
}

std::optional<int> FockVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

std::optional<Parity> FockVector::parity() const {
  if (terms_.empty()) return std::nullopt;
  Parity p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_) {
    if (m.parity() != p) return std::nullopt;
  }
  return p;
}

int FockVector::max_twice_n() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    if (m.size() > 0) best = std::max(best, m.twice_n().front());
  }
  return best;
}

Scalar FockVector::coeff(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void FockVector::add_term(const FockMonomial& m, const Scalar& coeff) {
  if (m.sector() != sector_) throw std::invalid_argument("sector mismatch");
  if (coeff.is_zero()) return;
  if (coeff.characteristic() != ring_.characteristic() ||
      (coeff.kind() == Scalar::Kind::Polynomial && !ring_.is_polynomial())) {
    throw RingMismatch("coefficient ring differs from Fock vector ring");
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void FockVector::add_scaled(const FockVector& other, const Scalar& factor) {
  if (other.sector_ != sector_) throw std::invalid_argument("sector mismatch");
  if (factor.is_zero()) return;
  for (const auto& [m, c] : other.terms_) add_term(m, c * factor);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  add_scaled(o, ring_.one());
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  add_scaled(o, -ring_.one());
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

std::vector<Scalar> FockVector::coordinates(std::span<const FockMonomial> basis) const {
  std::vector<Scalar> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(coeff(m));
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*" << m.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Operators

FockVector apply_fermion(int twice_mode, const FockVector& vec) {
  check_index(vec.sector(), twice_mode);
  FockVector out(vec.sector(), vec.ring());
  for (const auto& [m, c] : vec.terms()) {
    auto r = apply_fermion_mono(twice_mode, m);
    if (r) out.add_term(r->second, c * vec.ring().from_rational(r->first));
  }
  return out;
}

FockVector apply_virasoro_fock(int n, const FockVector& vec) {
  const Sector sector = vec.sector();
  const Ring& ring = vec.ring();
  FockVector out(sector, ring);
  const int bound = vec.max_twice_n() + 2 * std::abs(n) + 2;
  const int step_start = sector == Sector::NS ? 1 : 0;

  for (const auto& [mono, coeff] : vec.terms()) {
    for (int J = -bound - step_start; J <= bound + step_start; ++J) {
      if ((std::abs(J) % 2 == 1) != (sector == Sector::NS) || J == 0) continue;
      const int a = -J;         // doubled index of a(-j)
      const int b = 2 * n + J;  // doubled index of a(n+j)
      // :a(a)a(b): = a(a)a(b) if a <= b, else -a(b)a(a); the right factor acts first.
      const int first = a <= b ? b : a;
      const int second = a <= b ? a : b;
      auto r1 = apply_fermion_mono(first, mono);
      if (!r1) continue;
      auto r2 = apply_fermion_mono(second, r1->second);
      if (!r2) continue;
      Rational factor = r1->first * r2->first * Rational(J, 4);
      if (a > b) factor = -factor;
      out.add_term(r2->second, coeff * ring.from_rational(factor));
    }
    if (sector == Sector::Ramond && n == 0) {
      out.add_term(mono, coeff * ring.from_rational(Rational(1, 16)));
    }
  }
  return out;
}

std::vector<FockMonomial> fock_basis(Sector sector, Parity parity, int degree) {
  std::vector<FockMonomial> out;
  if (degree < 0) return out;
  const int s = static_cast<int>(parity);
  std::vector<int> cur;
  if (sector == Sector::NS) {
    const int target = 2 * degree + s;
    std::function<void(int, int)> rec = [&](int remaining, int max_odd) {
      if (remaining == 0) {
        if (static_cast<int>(cur.size() % 2) == s) out.emplace_back(Sector::NS, cur);
        return;
      }
      for (int t = std::min(max_odd, remaining); t >= 1; --t) {
        if (t % 2 == 0) continue;
        cur.push_back(t);
        rec(remaining - t, t - 2);
        cur.pop_back();
      }
    };
    rec(target, target % 2 == 1 ? target : target - 1);
  } else {
    const int target = 2 * degree;
    std::function<void(int, int)> rec = [&](int remaining, int max_even) {
      if (remaining == 0) {
        std::vector<int> m = cur;
        if (static_cast<int>(m.size() % 2) != s) m.push_back(0);
        out.emplace_back(Sector::Ramond, std::move(m));
        return;
      }
      for (int t = std::min(max_even, remaining); t >= 2; t -= 2) {
        if (t % 2 != 0) continue;
        cur.push_back(t);
        rec(remaining - t, t - 2);
        cur.pop_back();
      }
    };
    rec(target, target);
  }
  std::sort(out.begin(), out.end(), FockOrder{});
  return out;
}

std::vector<std::size_t> sector_dims(Sector sector, Parity parity, int max_degree) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) dims.push_back(fock_basis(sector, parity, d).size());
  return dims;
}

std::vector<FockVector> span_basis(const std::vector<FockVector>& vectors,
                                   const std::vector<FockMonomial>& basis, Sector sector,
                                   const Ring& ring) {
  if (vectors.empty() || basis.empty()) return {};
  Matrix m(vectors.size(), basis.size(), ring);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto c = vectors[i].coordinates(basis);
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = c[j];
  }
  auto pivots = linalg::rref(m);
  std::vector<FockVector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    FockVector v(sector, ring);
    for (std::size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j], m(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> vir_span_dims(const FockVector& start, int max_degree) {
  std::vector<std::size_t> dims;
  for (const auto& s : vir_span_basis(start, max_degree)) dims.push_back(s.size());
  return dims;
}

std::vector<std::vector<FockVector>> vir_span_basis(const FockVector& start, int max_degree) {
  if (start.is_zero()) {
    return std::vector<std::vector<FockVector>>(static_cast<std::size_t>(max_degree) + 1);
  }
  auto d0 = start.degree();
  auto parity = start.parity();
  if (!d0 || !parity) throw std::invalid_argument("vir_span_dims: start vector must be homogeneous");
  if (!start.ring().is_field()) throw std::domain_error("vir_span_dims needs a field");

  std::vector<std::vector<FockVector>> slices;
  slices.push_back(span_basis({start}, fock_basis(start.sector(), *parity, *d0), start.sector(),
                               start.ring()));
  for (int k = 1; k <= max_degree; ++k) {
    std::vector<FockVector> candidates;
    for (int j = 1; j <= k; ++j) {
      for (const auto& b : slices[static_cast<std::size_t>(k - j)]) {
        auto w = apply_virasoro_fock(-j, b);
        if (!w.is_zero()) candidates.push_back(std::move(w));
      }
    }
    slices.push_back(span_basis(candidates, fock_basis(start.sector(), *parity, *d0 + k),
                                start.sector(), start.ring()));
  }
  return slices;
}

std::vector<FockVector> fock_hw_vectors(Sector sector, Parity parity, int degree, const Ring& ring) {
  if (!ring.is_field()) throw std::domain_error("fock_hw_vectors needs a field");
  const auto basis = fock_basis(sector, parity, degree);
  const auto below1 = fock_basis(sector, parity, degree - 1);
  const auto below2 = fock_basis(sector, parity, degree - 2);
  Matrix m(below1.size() + below2.size(), basis.size(), ring);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto mono = FockVector::monomial(basis[j], ring.one());
    auto c1 = apply_virasoro_fock(1, mono).coordinates(below1);
    auto c2 = apply_virasoro_fock(2, mono).coordinates(below2);
    for (std::size_t i = 0; i < c1.size(); ++i) m(i, j) = c1[i];
    for (std::size_t i = 0; i < c2.size(); ++i) m(below1.size() + i, j) = c2[i];
  }
  std::vector<FockVector> kernel;
  for (auto& x : linalg::nullspace(m)) {
    FockVector v(sector, ring);
    for (std::size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j], x[j]);
    kernel.push_back(std::move(v));
  }
  return span_basis(kernel, basis, sector, ring);
}

FockVector fock_highest_weight_vector(Sector sector, Parity parity, const Ring& ring) {
  FockVector v = FockVector::vacuum(sector, ring);
  if (parity == Parity::Even) return v;
  return apply_fermion(sector == Sector::NS ? -1 : 0, v);
}

FockVector sigma(const FockVector& vec) {
  if (vec.sector() != Sector::Ramond) throw std::invalid_argument("sigma acts on the Ramond sector");
  FockVector out(Sector::Ramond, vec.ring());
  const Scalar half = vec.ring().from_rational(Rational(1, 2));
  for (const auto& [m, c] : vec.terms()) {
    if (m.parity() != Parity::Even) throw std::invalid_argument("sigma expects even parity");
    std::vector<int> t(m.twice_n().begin(), m.twice_n().end());
    if (m.has_zero_mode()) {
      t.pop_back();
      out.add_term(FockMonomial(Sector::Ramond, std::move(t)), c * half);
    } else {
      t.push_back(0);
      out.add_term(FockMonomial(Sector::Ramond, std::move(t)), c);
    }
  }
  return out;
}

Scalar fock_form(const FockVector& u, const FockVector& v) {
  if (u.sector() != v.sector()) throw std::invalid_argument("fock_form: sector mismatch");
  if (u.ring() != v.ring()) throw RingMismatch("fock_form: ring mismatch");
  Scalar acc = u.ring().zero();
  const Scalar half = u.ring().from_rational(Rational(1, 2));
  for (const auto& [m, c] : u.terms()) {
    auto it = v.terms().find(m);
    if (it == v.terms().end()) continue;
    Scalar term = c * it->second;
    if (m.has_zero_mode()) term *= half;
    acc += term;
  }
  return acc;
}

}  // namespace modvir
