#include "modvir/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace modvir {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    degree_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::without_front() const {
  Partition p;
  p.parts_.assign(parts_.begin() + 1, parts_.end());
  p.degree_ = degree_ - parts_.front();
  return p;
}

Partition Partition::with_front(int part) const {
  if (!parts_.empty() && part < parts_.front()) {
    throw std::invalid_argument("with_front would break PBW order");
  }
  Partition p;
  p.parts_.reserve(parts_.size() + 1);
  p.parts_.push_back(part);
  p.parts_.insert(p.parts_.end(), parts_.begin(), parts_.end());
  p.degree_ = degree_ + part;
  return p;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

bool PbwOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto pa = a.parts();
  auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::size_t verma_dim(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  }
  return p[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// ModuleParams

ModuleParams::ModuleParams(Scalar c, Scalar h) {
  if (c.characteristic() != h.characteristic()) {
    throw RingMismatch("c and h must live in the same ring");
  }
  if (c.kind() == Scalar::Kind::Polynomial && c.degree() > 0) {
    throw std::invalid_argument("central charge must be a constant when h is formal");
  }
  Ring base = c.ring().base();
  if (base.characteristic() == 2) throw UnsupportedCharacteristic("characteristic 2");
  bool formal = c.kind() == Scalar::Kind::Polynomial || h.kind() == Scalar::Kind::Polynomial;
  ring_ = formal ? base.polynomial() : base;
  c_ = ring_.zero() + c;
  h_ = ring_.zero() + h;
}

// ---------------------------------------------------------------------------
// VermaVector

VermaVector VermaVector::monomial(const Partition& p, const Scalar& coeff) {
  VermaVector v(coeff.ring());
  v.add_term(p, coeff);
  return v;
}

std::optional<int> VermaVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

bool VermaVector::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

Scalar VermaVector::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void VermaVector::add_term(const Partition& p, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (coeff.characteristic() != ring_.characteristic() ||
      (coeff.kind() == Scalar::Kind::Polynomial && !ring_.is_polynomial())) {
    throw RingMismatch("coefficient in " + coeff.ring().name() + " added to a vector over " +
                       ring_.name());
  }
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (inserted) {
    if (ring_.is_polynomial() && coeff.kind() != Scalar::Kind::Polynomial) {
      it->second = ring_.zero() + coeff;
    }
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void VermaVector::add_scaled(const VermaVector& other, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [p, c] : other.terms_) add_term(p, c * factor);
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

VermaVector& VermaVector::operator*=(const Scalar& s) {
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

std::vector<Scalar> VermaVector::coordinates(std::span<const Partition> basis) const {
  std::vector<Scalar> out;
  out.reserve(basis.size());
  for (const auto& p : basis) out.push_back(coeff(p));
  return out;
}

VermaVector VermaVector::vacuum_projection() const {
  VermaVector out(ring_);
  for (const auto& [p, c] : terms_) {
    if (p.empty() || p.back() != 1) out.terms_.emplace(p, c);
  }
  return out;
}

std::string VermaVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*";
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      os << "L(-" << parts[i] << ')';
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
    os << 'v';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// VermaModule

std::size_t VermaModule::KeyHash::operator()(const Key& k) const noexcept {
  return PartitionHash{}(k.mono) * 31U + static_cast<std::size_t>(k.mode + 1024);
}

VermaModule::VermaModule(ModuleParams params) : params_(std::move(params)) {}

VermaVector VermaModule::highest_weight_vector() const {
  return VermaVector::monomial(Partition{}, ring().one());
}

VermaVector VermaModule::apply_mode(int n, const Partition& mono) const {
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(Key{n, mono});
    if (it != memo_.end()) return it->second;
  }
  VermaVector result = straighten(n, mono);
  std::unique_lock lock(memo_mutex_);
  memo_.try_emplace(Key{n, mono}, result);
  return result;
}

VermaVector VermaModule::apply_mode(int n, const VermaVector& vec) const {
  if (vec.ring() != ring()) throw RingMismatch("vector ring differs from module ring");
  VermaVector out(ring());
  for (const auto& [p, c] : vec.terms()) out.add_scaled(apply_mode(n, p), c);
  return out;
}

VermaVector VermaModule::apply_word(std::span<const int> word, const VermaVector& vec) const {
  VermaVector cur = vec;
  for (std::size_t i = word.size(); i-- > 0;) cur = apply_mode(word[i], cur);
  return cur;
}

// L(n) L(-m) R = L(-m) L(n) R + (n + m) L(n - m) R + delta_{n,m} (n^3 - n)/12 c R
VermaVector VermaModule::straighten(int n, const Partition& mono) const {
  const Ring& r = ring();
  if (n == 0) {
    return VermaVector::monomial(mono, params_.h() + r.from_int(mono.degree()));
  }
  if (mono.empty()) {
    if (n > 0) return VermaVector(r);
    return VermaVector::monomial(Partition({-n}), r.one());
  }
  if (n < 0 && -n >= mono.front()) {
    return VermaVector::monomial(mono.with_front(-n), r.one());
  }
  const int m = mono.front();
  const Partition rest = mono.without_front();
  VermaVector out = apply_mode(-m, apply_mode(n, rest));
  if (n + m != 0) {
    out.add_scaled(apply_mode(n - m, rest), r.from_int(n + m));
  }
  if (n == m) {
    out.add_term(rest, central_coeff(n, r.base()) * params_.c());
  }
  return out;
}

const Matrix& VermaModule::gram_matrix(int degree) const {
  if (degree < 0) throw std::invalid_argument("negative degree");
  {
    std::lock_guard lock(gram_mutex_);
    auto it = gram_.find(degree);
    if (it != gram_.end()) return *it->second;
  }
  const auto basis = partitions(degree);
  auto g = std::make_unique<Matrix>(basis.size(), basis.size(), ring());
  if (degree == 0) {
    (*g)(0, 0) = ring().one();
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Partition& lambda = basis[i];
      const int first = lambda.front();
      const Partition tail = lambda.without_front();
      const Matrix& lower = gram_matrix(degree - first);
      const auto lower_basis = partitions(degree - first);
      std::size_t tail_index =
          static_cast<std::size_t>(std::find(lower_basis.begin(), lower_basis.end(), tail) -
                                   lower_basis.begin());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        // <L(-tail) v, L(first) L(-mu) v>
        VermaVector w = apply_mode(first, basis[j]);
        Scalar acc = ring().zero();
        for (std::size_t k = 0; k < lower_basis.size(); ++k) {
          const Scalar& a = lower(tail_index, k);
          if (a.is_zero()) continue;
          Scalar b = w.coeff(lower_basis[k]);
          if (!b.is_zero()) acc += a * b;
        }
        (*g)(i, j) = acc;
      }
    }
  }
  std::lock_guard lock(gram_mutex_);
  auto [it, inserted] = gram_.try_emplace(degree, std::move(g));
  return *it->second;
}

}  // namespace modvir
