#include "modvir/battery.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "modvir/fock.hpp"
#include "modvir/linalg.hpp"
#include "modvir/modes.hpp"
#include "modvir/singular.hpp"

namespace modvir {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Reported:
      return "reported";
  }
  return "?";
}

bool VerificationReport::ok() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) {
    return c.status == CheckStatus::Fail;
  }));
}

std::vector<std::string> battery_groups() {
  return {"singular", "classification", "l2_action", "char7", "det7",
          "characters", "properties",   "fock",       "oracle"};
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string value;
};

Outcome verdict(bool ok, std::string value) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(value)};
}

struct CheckDef {
  std::string name;
  std::string group;
  int criterion;
  std::string provenance;
  std::function<Outcome()> run;
};

const std::vector<int> kSmallPrimes = {3, 5, 7, 11, 13};

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

VermaVector verma(const Ring& r, const std::vector<std::pair<std::vector<int>, const char*>>& terms) {
  VermaVector v(r);
  for (const auto& [parts, coeff] : terms) v.add_term(Partition(parts), r.parse(coeff));
  return v;
}

VermaModule ising(const Ring& r, const std::string& h) {
  return VermaModule(ModuleParams(r.parse("1/2"), r.parse(h)));
}

VermaModule ising_formal(const Ring& base) {
  Ring rh = base.polynomial();
  return VermaModule(ModuleParams(rh.zero() + base.parse("1/2"), rh.variable()));
}

std::vector<int> word_of(const Partition& p) {
  std::vector<int> w;
  for (int x : p.parts()) w.push_back(-x);
  return w;
}

VermaVector s_vector(const Ring& r) {
  return verma(r, {{{2, 2, 2}, "64"}, {{3, 3}, "93"}, {{4, 2}, "-264"}, {{6}, "-108"}});
}

VermaVector u_vector(const Ring& r) { return verma(r, {{{2, 2}, "1"}, {{4}, "-2"}}); }

std::string factorization(const Rational& q) {
  if (q.get_den() != 1) return q.get_str();
  mpz_class n = q.get_num();
  if (n == 0) return "0";
  std::ostringstream os;
  if (n < 0) {
    os << "-";
    n = -n;
  }
  bool first = true;
  for (mpz_class d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      os << (first ? "" : " * ") << d.get_str();
      first = false;
      n /= d;
    }
  }
  if (n > 1 || first) os << (first ? "" : " * ") << n.get_str();
  return os.str();
}

// ---------------------------------------------------------------------------
// Criterion 1

Outcome golden(const std::string& h, int degree, const VermaVector& expected, SearchSpace space) {
  Ring q = Ring::rationals();
  VermaModule m = ising(q, h);
  auto basis = singular_space(m, degree, space);
  if (basis.vectors.size() != 1) {
    return verdict(false, "singular space has dimension " + std::to_string(basis.vectors.size()));
  }
  VermaVector got = normalize_leading(basis.vectors.front());
  return verdict(got == normalize_leading(expected), got.to_string());
}

Outcome golden_h0_deg6() {
  Ring q = Ring::rationals();
  VermaModule m = ising(q, "0");
  VermaVector s = normalize_leading(s_vector(q));
  auto quotient = singular_space(m, 6, SearchSpace::VacuumQuotient);
  auto full = singular_space(m, 6, SearchSpace::Verma);
  bool ok = quotient.vectors.size() == 1 && normalize_leading(quotient.vectors[0]) == s &&
            full.vectors.size() == 1 &&
            normalize_leading(full.vectors[0].vacuum_projection()) == s;
  std::string value = quotient.vectors.empty() ? "none" : quotient.vectors[0].to_string();
  return verdict(ok, "quotient: " + value + "; Verma vector projects onto it: " +
                         (ok ? "yes" : "no"));
}

Outcome no_others(const std::string& h, const std::vector<int>& expected) {
  Ring q = Ring::rationals();
  VermaModule m = ising(q, h);
  std::vector<int> found;
  for (int d = 1; d <= 8; ++d) {
    if (!singular_space(m, d).vectors.empty()) found.push_back(d);
  }
  return verdict(found == expected,
                 "singular degrees <= 8: {" + join_ints(found) + "}, expected {" +
                     join_ints(expected) + "}");
}

Outcome h12_deg7_generated() {
  Ring q = Ring::rationals();
  VermaModule m = ising(q, "1/2");
  VermaVector w2 = verma(q, {{{2}, "4"}, {{1, 1}, "-3"}});
  VermaVector w3 = verma(q, {{{1, 1, 1}, "1"}, {{2, 1}, "-3"}, {{3}, "3/4"}});
  std::vector<VermaVector> gens;
  for (const auto& p : partitions(5)) gens.push_back(m.apply_word(word_of(p), w2));
  for (const auto& p : partitions(4)) gens.push_back(m.apply_word(word_of(p), w3));
  auto extra = singular_space(m, 7).vectors;
  bool ok = !extra.empty();
  for (const auto& w : extra) ok = ok && in_span(w, gens);
  return verdict(ok, std::to_string(extra.size()) +
                         " degree-7 singular vector(s), inside the submodule generated by the "
                         "degree-2 and degree-3 vectors: " +
                         (ok ? "yes" : "no"));
}

// ---------------------------------------------------------------------------
// Criteria 2 and 3

Outcome classification_piece(const std::vector<int>& word, const std::function<Scalar(const Scalar&)>& f) {
  VermaModule m = ising_formal(Ring::rationals());
  const Ring& r = m.ring();
  ModeEvaluator ev(m);
  VermaVector got = ev.apply(build_state(word, r), 5, m.highest_weight_vector());
  VermaVector expected = VermaVector::monomial(Partition{}, f(r.variable()));
  return verdict(got == expected, got.to_string());
}

Outcome classification_s5() {
  VermaModule m = ising_formal(Ring::rationals());
  const Ring& r = m.ring();
  Scalar h = r.variable();
  ModeEvaluator ev(m);
  VermaVector got = ev.apply(named_state("s", r), 5, m.highest_weight_vector());
  Scalar expected = h * (h - r.parse("1/2")) * (h - r.parse("1/16")) * 64;
  return verdict(got == VermaVector::monomial(Partition{}, expected), got.to_string());
}

struct SOnL2v {
  Scalar f_engine, g_engine, f_ref, g_ref;
  bool only_two_terms;
};

SOnL2v s_on_l2v() {
  VermaModule m = ising_formal(Ring::rationals());
  const Ring& r = m.ring();
  ModeEvaluator ev(m);
  const Scalar h = r.variable();
  const Scalar quarter = r.zero() + r.parse("1/4");
  VermaVector out = ev.apply(named_state("s", r), 5, VermaVector::monomial(Partition({2}), r.one()));
  Scalar p = (h * 6 + r.from_int(7)) * (h + quarter) + (h + r.from_int(2)) * (h * 11 + r.from_int(24)) +
             h * 18;
  Scalar q = (h + quarter) * 2 + h * 18 + r.from_int(54);
  Scalar h2 = h + r.from_int(2);
  Scalar f = p * 64 + (h2 * h2 * 4 + h2 * 6) * 93 -
             ((quarter + h) * 10 + h2 * (h * 3 + r.from_int(10))) * 264 - h2 * 540;
  Scalar g = q * 64 + r.from_int(93 * 18 - 264 * 21);
  SOnL2v result{out.coeff(Partition({2})), out.coeff(Partition({1, 1})), f, g, true};
  for (const auto& [part, c] : out.terms()) {
    if (!(part == Partition({2}) || part == Partition({1, 1}))) result.only_two_terms = false;
  }
  return result;
}

Outcome l2_action_operator_sums() {
  // Each component (L(-lambda)1)_n L(-2)v, expanded as a sum of Virasoro words.
  struct Case {
    std::vector<int> state;
    int mode;
    std::vector<std::pair<std::vector<int>, int>> words;
  };
  const std::vector<Case> cases = {
      {{-2, -2, -2},
       5,
       {{{-1, -1, 2}, 1}, {{-2, 0, 2}, 3}, {{0, -1, 1}, 1}, {{-1, 0, 1}, 1}, {{-2, 1, 1}, 3},
        {{1, -1, 0}, 1}, {{0, 0, 0}, 1}, {{-1, 1, 0}, 1}, {{-2, 2, 0}, 3}, {{2, -1, -1}, 1},
        {{1, 0, -1}, 1}, {{0, 1, -1}, 1}, {{-1, 2, -1}, 1}, {{-2, 3, -1}, 3}}},
      {{-3, -3}, 5, {{{-1, 1}, 3}, {{0, 0}, 4}, {{1, -1}, 3}}},
      {{-4, -2}, 5, {{{-2, 2}, 10}, {{-1, 1}, 6}, {{0, 0}, 3}, {{1, -1}, 1}}},
      {{-6}, 5, {{{0}, 5}}},
      {{-2, -2, -2},
       6,
       {{{0, -1, 2}, 1}, {{-1, 0, 2}, 1}, {{1, -1, 1}, 1}, {{0, 0, 1}, 1}, {{-1, 1, 1}, 1},
        {{2, -1, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{-1, 2, 0}, 1}, {{3, -1, -1}, 1},
        {{2, 0, -1}, 1}, {{1, 1, -1}, 1}, {{0, 2, -1}, 1}, {{-1, 3, -1}, 1}}},
      {{-3, -3}, 6, {{{-1, 2}, 4}, {{0, 1}, 6}, {{1, 0}, 6}, {{2, -1}, 4}}},
      {{-4, -2}, 6, {{{-1, 2}, 10}, {{0, 1}, 6}, {{1, 0}, 3}, {{2, -1}, 1}}},
      {{-6}, 6, {{{1}, 15}}},
  };
  VermaModule m = ising_formal(Ring::rationals());
  const Ring& r = m.ring();
  ModeEvaluator ev(m);
  const VermaVector target = VermaVector::monomial(Partition({2}), r.one());
  std::size_t matched = 0;
  for (const auto& c : cases) {
    VermaVector expected(r);
    for (const auto& [w, k] : c.words) expected.add_scaled(m.apply_word(w, target), r.from_int(k));
    if (ev.apply(build_state(c.state, r), c.mode, target) == expected) ++matched;
  }
  return verdict(matched == cases.size(), std::to_string(matched) + "/" +
                                              std::to_string(cases.size()) +
                                              " component expansions agree with straightening");
}

Outcome l2_action_proportional(const std::string& h, long long a, long long b) {
  SOnL2v l = s_on_l2v();
  Ring q = Ring::rationals();
  Scalar x = q.parse(h);
  Scalar f = poly_eval(l.f_engine, x);
  Scalar g = poly_eval(l.g_engine, x);
  bool ok = l.only_two_terms && !(f.is_zero() && g.is_zero()) && f * b == g * a;
  return verdict(ok, "(" + f.to_string() + ")*L(-2)v + (" + g.to_string() + ")*L(-1)^2v");
}

Outcome l2_action_h0_scalar() {
  Ring q = Ring::rationals();
  VermaModule m = ising(q, "0");
  ModeEvaluator ev(m);
  VermaVector out = ev.apply(named_state("s", q), 6, VermaVector::monomial(Partition({2}), q.one()));
  Scalar k = out.coeff(Partition({1}));
  Rational closed = Rational(64) * Rational(487, 4) + Rational(93 * 92) -
                    Rational(264) * Rational(191, 4) - Rational(108 * 45);
  closed.canonicalize();
  std::string value = "s_6 L(-2)v = " + out.to_string() + "; scalar " + k.to_string() + " = " +
                      factorization(k.rational()) +
                      "; reference closed form 64(121+3/4)+93*92-264(47+3/4)-108*45 = " +
                      closed.get_str() + " = " + factorization(closed);
  return {CheckStatus::Reported, value};
}

// ---------------------------------------------------------------------------
// Criterion 4

bool fock_in_span(const FockVector& v, const std::vector<FockVector>& basis) {
  auto slice = fock_basis(v.sector(), *v.parity(), *v.degree());
  std::vector<FockVector> with = basis;
  with.push_back(v);
  return span_basis(with, slice, v.sector(), v.ring()).size() ==
         span_basis(basis, slice, v.sector(), v.ring()).size();
}

FockVector fermion_word(const std::vector<int>& twice_modes, Sector sector, const Ring& r) {
  FockVector v = FockVector::vacuum(sector, r);
  for (std::size_t i = twice_modes.size(); i-- > 0;) v = apply_fermion(twice_modes[i], v);
  return v;
}

Outcome char7_u_singular() {
  Ring f7 = Ring::prime_field(7);
  VermaModule m = ising(f7, "0");
  VermaVector u = normalize_leading(u_vector(f7));
  auto quotient = singular_space(m, 4, SearchSpace::VacuumQuotient);
  auto full = singular_space(m, 4, SearchSpace::Verma);
  bool ok = is_singular(u_vector(f7), m, SearchSpace::VacuumQuotient) &&
            quotient.vectors.size() == 1 && normalize_leading(quotient.vectors[0]) == u &&
            full.vectors.size() == 1 &&
            normalize_leading(full.vectors[0].vacuum_projection()) == u;
  return verdict(ok, full.vectors.empty() ? "none" : "Verma: " + full.vectors[0].to_string());
}

Outcome char7_u_generates_s() {
  Ring f7 = Ring::prime_field(7);
  VermaModule m = ising(f7, "0");
  VermaVector u = u_vector(f7);
  VermaVector lhs = m.apply_mode(-2, u) + m.apply_word(std::vector<int>{-1, -1}, u);
  VermaVector got = lhs.vacuum_projection();
  return verdict(got == s_vector(f7), got.to_string());
}

Outcome char7_u3() {
  VermaModule m = ising_formal(Ring::prime_field(7));
  const Ring& r = m.ring();
  Scalar h = r.variable();
  VermaVector got = mode_apply(named_state("u", r), 3, m.highest_weight_vector(), m);
  return verdict(got == VermaVector::monomial(Partition{}, h * (h - r.from_int(4))), got.to_string());
}

Outcome char7_fock(Parity parity, int degree, const FockVector& expected) {
  Ring f7 = Ring::prime_field(7);
  auto hw = fock_hw_vectors(Sector::NS, parity, degree, f7);
  bool ok = !hw.empty() && fock_in_span(expected, hw);
  std::string value = std::to_string(hw.size()) + " vector(s); ";
  value += hw.empty() ? "none" : hw.front().to_string();
  return verdict(ok, value);
}

Outcome char7_decomposition(Parity parity, int hw_degree, int max_degree) {
  Ring f7 = Ring::prime_field(7);
  auto top = vir_span_basis(fock_highest_weight_vector(Sector::NS, parity, f7), max_degree);
  auto hw = fock_hw_vectors(Sector::NS, parity, hw_degree, f7);
  if (hw.empty()) return verdict(false, "no highest-weight vector at degree " + std::to_string(hw_degree));
  auto sub = vir_span_basis(hw.front(), max_degree - hw_degree);
  std::vector<std::size_t> a, b, total;
  bool ok = true;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<FockVector> combined = top[static_cast<std::size_t>(d)];
    std::size_t nb = 0;
    if (d >= hw_degree) {
      const auto& extra = sub[static_cast<std::size_t>(d - hw_degree)];
      combined.insert(combined.end(), extra.begin(), extra.end());
      nb = extra.size();
    }
    auto slice = fock_basis(Sector::NS, parity, d);
    std::size_t rank = span_basis(combined, slice, Sector::NS, f7).size();
    a.push_back(top[static_cast<std::size_t>(d)].size());
    b.push_back(nb);
    total.push_back(slice.size());
    ok = ok && rank == a.back() + nb && rank == slice.size();
  }
  return verdict(ok, "span(hw) " + join(a) + " + span(degree-" + std::to_string(hw_degree) +
                         " vector) " + join(b) + " = sector " + join(total));
}

// ---------------------------------------------------------------------------
// Criterion 5

Outcome det7() {
  Ring q = Ring::rationals();
  Matrix m(2, 2, q);
  m(0, 0) = q.from_int(3);
  m(0, 1) = q.from_int(1);
  m(1, 0) = q.parse("5/2");
  m(1, 1) = q.parse("-3/2");
  Scalar d = linalg::determinant(m);
  return verdict(d == q.from_int(-7), "det = " + d.to_string());
}

Outcome det7_mod_p() {
  Ring q = Ring::rationals();
  Matrix m(2, 2, q);
  m(0, 0) = q.from_int(3);
  m(0, 1) = q.from_int(1);
  m(1, 0) = q.parse("5/2");
  m(1, 1) = q.parse("-3/2");
  bool ok = true;
  std::string value;
  for (int p : kSmallPrimes) {
    Scalar d = linalg::determinant(linalg::reduce_mod_p(m, static_cast<std::uint32_t>(p)));
    ok = ok && (d.is_zero() == (p == 7));
    value += (value.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " + d.to_string();
  }
  return verdict(ok, value);
}

// ---------------------------------------------------------------------------
// Criterion 6

Outcome characters(int p, const std::string& h, Sector sector, Parity parity) {
  Ring r = Ring::from_characteristic(p);
  VermaModule m = ising(r, h);
  auto gram = irreducible_dims(m, 10).irreducible_dims();
  auto fock = sector_dims(sector, parity, 10);
  auto span = vir_span_dims(fock_highest_weight_vector(sector, parity, r), 10);
  return verdict(gram == fock && fock == span,
                 "gram " + join(gram) + " | fock " + join(fock) + " | span " + join(span));
}

Outcome characters_char7() {
  Ring f7 = Ring::prime_field(7);
  VermaModule m = ising(f7, "0");
  auto gram = irreducible_dims(m, 10).irreducible_dims();
  auto fock = sector_dims(Sector::NS, Parity::Even, 10);
  int first = -1;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i] != fock[i]) {
      first = static_cast<int>(i);
      break;
    }
  }
  return verdict(first == 4, "gram " + join(gram) + " | fock " + join(fock) +
                                 " | first difference at degree " + std::to_string(first));
}

// ---------------------------------------------------------------------------
// Criterion 7: Verma side

Outcome verma_bracket() {
  VermaModule m = ising_formal(Ring::rationals());
  const Ring& r = m.ring();
  std::size_t checked = 0, bad = 0;
  for (int d = 0; d <= 8; ++d) {
    for (const auto& p : partitions(d)) {
      VermaVector x = VermaVector::monomial(p, r.one());
      for (int a = -4; a <= 4; ++a) {
        for (int b = -4; b <= 4; ++b) {
          VermaVector lhs = m.apply_mode(a, m.apply_mode(b, x)) - m.apply_mode(b, m.apply_mode(a, x));
          VermaVector rhs = m.apply_mode(a + b, x);
          rhs *= r.from_int(a - b);
          if (a + b == 0) rhs.add_scaled(x, central_coeff(a, r.base()) * m.params().c());
          ++checked;
          if (!(lhs == rhs)) ++bad;
        }
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " bracket identities, " + std::to_string(bad) +
                               " violations");
}

Outcome radical_submodule() {
  std::size_t checked = 0, bad = 0;
  auto run = [&](const Ring& r, const std::string& h) {
    VermaModule m = ising(r, h);
    for (int n = 0; n <= 7; ++n) {
      const auto basis = partitions(n);
      for (const auto& x : linalg::nullspace(m.gram_matrix(n))) {
        VermaVector rad(r);
        for (std::size_t j = 0; j < basis.size(); ++j) rad.add_term(basis[j], x[j]);
        for (int k = 1; k <= 3; ++k) {
          VermaVector w = m.apply_mode(-k, rad);
          const auto up = partitions(n + k);
          auto y = m.gram_matrix(n + k).multiply(w.coordinates(up));
          ++checked;
          if (!std::all_of(y.begin(), y.end(), [](const Scalar& s) { return s.is_zero(); })) ++bad;
        }
      }
    }
  };
  Ring q = Ring::rationals();
  for (const char* h : {"0", "1/2", "1/16"}) run(q, h);
  run(Ring::prime_field(7), "0");
  run(Ring::prime_field(7), "1/2");
  return verdict(bad == 0 && checked > 0,
                 std::to_string(checked) + " radical images, " + std::to_string(bad) + " outside");
}

Outcome gram_symmetric() {
  Ring q = Ring::rationals();
  bool ok = true;
  for (const char* h : {"0", "1/2", "1/16", "3/7"}) {
    VermaModule m = VermaModule(ModuleParams(q.parse("-22/5"), q.parse(h)));
    VermaModule ii = ising(q, h);
    for (int n = 0; n <= 8; ++n) ok = ok && m.gram_matrix(n).is_symmetric() && ii.gram_matrix(n).is_symmetric();
  }
  return verdict(ok, ok ? "symmetric through degree 8" : "asymmetric Gram matrix found");
}

Outcome base_change_gram() {
  Ring q = Ring::rationals();
  std::size_t checked = 0, bad = 0;
  for (const char* h : {"0", "1/2", "1/16"}) {
    VermaModule mq = ising(q, h);
    for (int p : kSmallPrimes) {
      VermaModule mp = ising(Ring::prime_field(p), h);
      for (int n = 0; n <= 8; ++n) {
        ++checked;
        if (!(linalg::reduce_mod_p(mq.gram_matrix(n), static_cast<std::uint32_t>(p)) == mp.gram_matrix(n))) ++bad;
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " Gram matrices compared, " + std::to_string(bad) +
                               " mismatches");
}

Outcome modes_commutator() {
  // [w_s, w_t] = sum_i binom(s,i) (w_i w)_{s+t-i}, with w_i w computed in the vacuum module.
  VermaModule target = ising_formal(Ring::rationals());
  const Ring& r = target.ring();
  VermaModule vac = VermaModule(ModuleParams(target.params().c(), r.zero()));
  ModeEvaluator ev(target);
  StateWord omega = build_state(std::vector<int>{-2}, r);
  const VermaVector omega_v = VermaVector::monomial(Partition({2}), r.one());
  std::vector<StateWord> products;
  for (int i = 0; i <= 3; ++i) products.push_back(state_from_verma(vac.apply_mode(i - 1, omega_v)));
  std::size_t checked = 0, bad = 0;
  bool l0 = ev.apply(omega, 1, target.highest_weight_vector()) ==
            VermaVector::monomial(Partition{}, r.variable());
  for (int d = 0; d <= 4; ++d) {
    for (const auto& p : partitions(d)) {
      VermaVector x = VermaVector::monomial(p, r.one());
      for (int s = -3; s <= 3; ++s) {
        for (int t = -3; t <= 3; ++t) {
          VermaVector lhs = ev.apply(omega, s, ev.apply(omega, t, x)) - ev.apply(omega, t, ev.apply(omega, s, x));
          VermaVector rhs(r);
          for (int i = 0; i <= 3; ++i) {
            Rational b = binomial(s, i);
            if (b == 0 || products[static_cast<std::size_t>(i)].is_zero()) continue;
            rhs.add_scaled(ev.apply(products[static_cast<std::size_t>(i)], s + t - i, x), r.from_rational(b));
          }
          ++checked;
          if (!(lhs == rhs)) ++bad;
        }
      }
    }
  }
  return verdict(l0 && bad == 0, "w_1 = L(0): " + std::string(l0 ? "yes" : "no") + "; " +
                                     std::to_string(checked) + " commutator identities, " +
                                     std::to_string(bad) + " violations");
}

// ---------------------------------------------------------------------------
// Criterion 7: Fock side

struct SectorParity {
  Sector sector;
  Parity parity;
};

const std::vector<SectorParity> kSlices = {{Sector::NS, Parity::Even},
                                           {Sector::NS, Parity::Odd},
                                           {Sector::Ramond, Parity::Even},
                                           {Sector::Ramond, Parity::Odd}};

std::vector<FockVector> monomials_up_to(Sector sector, Parity parity, int max_degree, const Ring& r) {
  std::vector<FockVector> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : fock_basis(sector, parity, d)) out.push_back(FockVector::monomial(m, r.one()));
  }
  return out;
}

std::vector<int> fermion_modes(Sector sector, int bound) {
  std::vector<int> out;
  for (int m = -bound; m <= bound; ++m) {
    if ((std::abs(m) % 2 == 1) == (sector == Sector::NS)) out.push_back(m);
  }
  return out;
}

Outcome fock_bracket() {
  Ring q = Ring::rationals();
  const Scalar c = q.parse("1/2");
  std::size_t checked = 0, bad = 0;
  for (const auto& sp : kSlices) {
    for (const auto& x : monomials_up_to(sp.sector, sp.parity, 8, q)) {
      for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
          FockVector lhs = apply_virasoro_fock(a, apply_virasoro_fock(b, x)) -
                           apply_virasoro_fock(b, apply_virasoro_fock(a, x));
          FockVector rhs = q.from_int(a - b) * apply_virasoro_fock(a + b, x);
          if (a + b == 0) rhs.add_scaled(x, central_coeff(a, q) * c);
          ++checked;
          if (!(lhs == rhs)) ++bad;
        }
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " bracket identities, " + std::to_string(bad) +
                               " violations");
}

Outcome fock_anticommutation() {
  Ring q = Ring::rationals();
  std::size_t checked = 0, bad = 0;
  for (const auto& sp : kSlices) {
    const auto modes = fermion_modes(sp.sector, 9);
    for (const auto& x : monomials_up_to(sp.sector, sp.parity, 8, q)) {
      for (int m : modes) {
        for (int n : modes) {
          FockVector lhs = apply_fermion(m, apply_fermion(n, x)) + apply_fermion(n, apply_fermion(m, x));
          FockVector rhs(sp.sector, q);
          if (m + n == 0) rhs = x;
          ++checked;
          if (!(lhs == rhs)) ++bad;
        }
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " anticommutators, " + std::to_string(bad) +
                               " violations");
}

Outcome fock_mixed() {
  Ring q = Ring::rationals();
  std::size_t checked = 0, bad = 0;
  for (const auto& sp : kSlices) {
    const auto modes = fermion_modes(sp.sector, 7);
    for (const auto& x : monomials_up_to(sp.sector, sp.parity, 6, q)) {
      for (int p = -3; p <= 3; ++p) {
        for (int m : modes) {
          FockVector lhs = apply_virasoro_fock(p, apply_fermion(m, x)) - apply_fermion(m, apply_virasoro_fock(p, x));
          // -(q + p/2) a(p+q) with q = m/2.
          FockVector rhs = q.from_rational(Rational(-(m + p), 2)) * apply_fermion(2 * p + m, x);
          ++checked;
          if (!(lhs == rhs)) ++bad;
        }
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " commutators, " + std::to_string(bad) +
                               " violations");
}

Outcome fock_contravariance() {
  Ring q = Ring::rationals();
  std::size_t checked = 0, bad = 0;
  for (const auto& sp : kSlices) {
    for (int d = 0; d <= 5; ++d) {
      for (const auto& mv : fock_basis(sp.sector, sp.parity, d)) {
        FockVector v = FockVector::monomial(mv, q.one());
        for (int n = 0; n <= 3; ++n) {
          for (const auto& mu : fock_basis(sp.sector, sp.parity, d + n)) {
            FockVector u = FockVector::monomial(mu, q.one());
            ++checked;
            if (!(fock_form(apply_virasoro_fock(n, u), v) == fock_form(u, apply_virasoro_fock(-n, v)))) ++bad;
          }
        }
      }
    }
    // Fermion adjoints, within one sector.
    for (const auto& v : monomials_up_to(sp.sector, sp.parity, 5, q)) {
      for (int m : fermion_modes(sp.sector, 7)) {
        FockVector w = apply_fermion(-m, v);
        if (w.is_zero()) continue;
        ++checked;
        if (!(fock_form(apply_fermion(m, w), v) == fock_form(w, apply_fermion(-m, v)))) ++bad;
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " adjoint pairs, " + std::to_string(bad) +
                               " violations");
}

Outcome fock_sigma() {
  Ring q = Ring::rationals();
  std::size_t checked = 0, bad = 0;
  const auto modes = fermion_modes(Sector::Ramond, 6);
  for (const auto& x : monomials_up_to(Sector::Ramond, Parity::Even, 6, q)) {
    for (int s : modes) {
      for (int t : modes) {
        if (s <= t) continue;
        FockVector lhs = apply_fermion(s, apply_fermion(t, sigma(x)));
        FockVector rhs = sigma(apply_fermion(s, apply_fermion(t, x)));
        ++checked;
        if (!(lhs == rhs)) ++bad;
      }
    }
  }
  bool bijective = true;
  for (int d = 0; d <= 6; ++d) {
    std::vector<FockVector> images;
    for (const auto& m : fock_basis(Sector::Ramond, Parity::Even, d)) {
      images.push_back(sigma(FockVector::monomial(m, q.one())));
    }
    auto odd = fock_basis(Sector::Ramond, Parity::Odd, d);
    bijective = bijective && images.size() == odd.size() &&
                span_basis(images, odd, Sector::Ramond, q).size() == odd.size();
  }
  return verdict(bad == 0 && bijective, std::to_string(checked) + " intertwining identities, " +
                                            std::to_string(bad) + " violations; bijective per degree: " +
                                            (bijective ? "yes" : "no"));
}

FockVector reduce_fock(const FockVector& v, std::uint32_t p) {
  FockVector out(v.sector(), Ring::prime_field(p));
  for (const auto& [m, c] : v.terms()) out.add_term(m, reduce_mod_p(c, p));
  return out;
}

Outcome fock_base_change() {
  Ring q = Ring::rationals();
  std::size_t checked = 0, bad = 0;
  for (int p : kSmallPrimes) {
    Ring fp = Ring::prime_field(p);
    const auto up = static_cast<std::uint32_t>(p);
    for (const auto& sp : kSlices) {
      for (int d = 0; d <= 6; ++d) {
        for (const auto& mono : fock_basis(sp.sector, sp.parity, d)) {
          FockVector xq = FockVector::monomial(mono, q.one());
          FockVector xp = FockVector::monomial(mono, fp.one());
          for (int n = -3; n <= 3; ++n) {
            ++checked;
            if (!(reduce_fock(apply_virasoro_fock(n, xq), up) == apply_virasoro_fock(n, xp))) ++bad;
          }
          for (int m : fermion_modes(sp.sector, 5)) {
            ++checked;
            if (!(reduce_fock(apply_fermion(m, xq), up) == apply_fermion(m, xp))) ++bad;
          }
        }
      }
    }
  }
  return verdict(bad == 0, std::to_string(checked) + " actions compared, " + std::to_string(bad) +
                               " mismatches");
}

// ---------------------------------------------------------------------------
// Criterion 8

/// Coefficients of prod_{n in steps} (1 + x q^n), split by the parity of the
/// x-degree; exponents are doubled so half-odd weights stay integral.
std::array<std::vector<std::size_t>, 2> product_series(int first, int step, int max_twice) {
  std::array<std::vector<std::size_t>, 2> c;
  c[0].assign(static_cast<std::size_t>(max_twice) + 1, 0);
  c[1].assign(static_cast<std::size_t>(max_twice) + 1, 0);
  c[0][0] = 1;
  for (int e = first; e <= max_twice; e += step) {
    for (int w = max_twice; w >= e; --w) {
      const auto wi = static_cast<std::size_t>(w), si = static_cast<std::size_t>(w - e);
      const std::size_t even = c[0][wi] + c[1][si];
      const std::size_t odd = c[1][wi] + c[0][si];
      c[0][wi] = even;
      c[1][wi] = odd;
    }
  }
  return c;
}

Outcome oracle(const std::string& h) {
  const int n = 10;
  std::vector<std::size_t> expected;
  if (h == "1/16") {
    auto c = product_series(2, 2, 2 * n);
    for (int d = 0; d <= n; ++d) expected.push_back(c[0][2 * d] + c[1][2 * d]);
  } else {
    const int s = h == "0" ? 0 : 1;
    auto c = product_series(1, 2, 2 * n + 1);
    for (int d = 0; d <= n; ++d) expected.push_back(c[static_cast<std::size_t>(s)][2 * d + s]);
  }
  VermaModule m = ising(Ring::rationals(), h);
  auto gram = irreducible_dims(m, n).irreducible_dims();
  return verdict(gram == expected, "gram " + join(gram) + " | oracle " + join(expected));
}

// ---------------------------------------------------------------------------

std::vector<CheckDef> all_checks() {
  Ring q = Ring::rationals();
  std::vector<CheckDef> defs;
  auto add = [&](std::string name, std::string group, int criterion, std::string prov,
                 std::function<Outcome()> fn) {
    defs.push_back({std::move(name), std::move(group), criterion, std::move(prov), std::move(fn)});
  };

  // 1
  add("c1.golden.h0.deg1", "singular", 1, "reference",
      [q] { return golden("0", 1, verma(q, {{{1}, "1"}}), SearchSpace::Verma); });
  add("c1.golden.h0.deg6", "singular", 1, "reference", golden_h0_deg6);
  add("c1.golden.h1_2.deg2", "singular", 1, "reference",
      [q] { return golden("1/2", 2, verma(q, {{{2}, "4"}, {{1, 1}, "-3"}}), SearchSpace::Verma); });
  add("c1.golden.h1_2.deg3", "singular", 1, "reference", [q] {
    return golden("1/2", 3, verma(q, {{{1, 1, 1}, "1"}, {{2, 1}, "-3"}, {{3}, "3/4"}}), SearchSpace::Verma);
  });
  add("c1.golden.h1_16.deg2", "singular", 1, "reference",
      [q] { return golden("1/16", 2, verma(q, {{{2}, "3"}, {{1, 1}, "-4"}}), SearchSpace::Verma); });
  add("c1.golden.h1_16.deg4", "singular", 1, "reference", [q] {
    // u = -25/12: 2u = -25/6, u^2 - 4 = 49/144, 2u + 6 = 11/6, 3u + 6 = -1/4.
    return golden("1/16", 4,
                  verma(q, {{{1, 1, 1, 1}, "1"}, {{2, 1, 1}, "-25/6"}, {{2, 2}, "49/144"},
                            {{3, 1}, "11/6"}, {{4}, "-1/4"}}),
                  SearchSpace::Verma);
  });
  add("c1.no_others.h0", "singular", 1, "reference", [] { return no_others("0", {1, 6}); });
  add("c1.no_others.h1_2", "singular", 1, "reference", [] { return no_others("1/2", {2, 3}); });
  add("c1.no_others.h1_16", "singular", 1, "reference", [] { return no_others("1/16", {2, 4}); });
  add("c1.extra_h1_2_deg7_generated", "singular", 1, "computed", h12_deg7_generated);

  // 2
  add("c2.piece.L2_cubed", "classification", 2, "reference", [] {
    return classification_piece({-2, -2, -2}, [](const Scalar& h) { return h * h * h + h * h * 6 + h * 8; });
  });
  add("c2.piece.L3_squared", "classification", 2, "reference", [] {
    return classification_piece({-3, -3}, [](const Scalar& h) { return h * h * 4 + h * 6; });
  });
  add("c2.piece.L4_L2", "classification", 2, "reference", [] {
    return classification_piece({-4, -2}, [](const Scalar& h) { return h * h * 3 + h * 2; });
  });
  add("c2.piece.L6", "classification", 2, "reference",
      [] { return classification_piece({-6}, [](const Scalar& h) { return h * 5; }); });
  add("c2.s5_v", "classification", 2, "reference", classification_s5);

  // 3
  add("c3.component_expansions", "l2_action", 3, "reference", l2_action_operator_sums);
  add("c3.f_matches_closed_form", "l2_action", 3, "reference", [] {
    SOnL2v l = s_on_l2v();
    return verdict(l.only_two_terms && l.f_engine == l.f_ref,
                   "engine f = " + l.f_engine.to_string() + "; closed form f = " + l.f_ref.to_string());
  });
  add("c3.g_matches_closed_form", "l2_action", 3, "reference", [] {
    SOnL2v l = s_on_l2v();
    return verdict(l.only_two_terms && l.g_engine == l.g_ref,
                   "engine g = " + l.g_engine.to_string() + "; closed form g = " + l.g_ref.to_string());
  });
  add("c3.proportional.h1_2", "l2_action", 3, "reference", [] { return l2_action_proportional("1/2", 4, -3); });
  add("c3.proportional.h1_16", "l2_action", 3, "reference", [] { return l2_action_proportional("1/16", 3, -4); });
  add("c3.h0_scalar", "l2_action", 3, "computed", l2_action_h0_scalar);

  // 4
  add("c4.u_singular", "char7", 4, "reference", char7_u_singular);
  add("c4.u_generates_s", "char7", 4, "reference", char7_u_generates_s);
  add("c4.u3_formal", "char7", 4, "reference", char7_u3);
  add("c4.fock_hw.ns_even_deg4", "char7", 4, "reference", [] {
    Ring f7 = Ring::prime_field(7);
    FockVector e = fermion_word({-1, -7}, Sector::NS, f7);
    e.add_scaled(fermion_word({-3, -5}, Sector::NS, f7), f7.from_int(-3));
    return char7_fock(Parity::Even, 4, e);
  });
  add("c4.fock_hw.ns_odd_weight15_2", "char7", 4, "reference", [] {
    Ring f7 = Ring::prime_field(7);
    FockVector e = fermion_word({-15}, Sector::NS, f7);
    e *= f7.from_int(-1);
    e += fermion_word({-1, -3, -11}, Sector::NS, f7);
    e += fermion_word({-1, -5, -9}, Sector::NS, f7);
    e.add_scaled(fermion_word({-3, -5, -7}, Sector::NS, f7), f7.from_int(3));
    return char7_fock(Parity::Odd, 7, e);
  });
  add("c4.decomposition.ns_even", "char7", 4, "computed", [] { return char7_decomposition(Parity::Even, 4, 8); });
  add("c4.decomposition.ns_odd", "char7", 4, "computed", [] { return char7_decomposition(Parity::Odd, 7, 8); });

  // 5
  add("c5.det", "det7", 5, "reference", det7);
  add("c5.det_mod_p", "det7", 5, "reference", det7_mod_p);

  // 6
  for (int p : {0, 3, 5, 11, 13}) {
    const std::string prefix = "c6.char" + std::to_string(p) + ".";
    add(prefix + "h0_ns_even", "characters", 6, "reference",
        [p] { return characters(p, "0", Sector::NS, Parity::Even); });
    add(prefix + "h1_2_ns_odd", "characters", 6, "reference",
        [p] { return characters(p, "1/2", Sector::NS, Parity::Odd); });
    add(prefix + "h1_16_r_even", "characters", 6, "reference",
        [p] { return characters(p, "1/16", Sector::Ramond, Parity::Even); });
    add(prefix + "h1_16_r_odd", "characters", 6, "reference",
        [p] { return characters(p, "1/16", Sector::Ramond, Parity::Odd); });
  }
  add("c6.char7.h0_first_difference", "characters", 6, "reference", characters_char7);

  // 7
  add("c7.properties.verma_bracket", "properties", 7, "derived", verma_bracket);
  add("c7.properties.gram_symmetric", "properties", 7, "derived", gram_symmetric);
  add("c7.properties.radical_submodule", "properties", 7, "derived", radical_submodule);
  add("c7.properties.base_change_gram", "properties", 7, "derived", base_change_gram);
  add("c7.properties.mode_commutator", "properties", 7, "reference", modes_commutator);
  add("c7.fock.bracket", "fock", 7, "reference", fock_bracket);
  add("c7.fock.anticommutation", "fock", 7, "reference", fock_anticommutation);
  add("c7.fock.mixed_commutator", "fock", 7, "reference", fock_mixed);
  add("c7.fock.contravariance", "fock", 7, "reference", fock_contravariance);
  add("c7.fock.sigma_intertwining", "fock", 7, "reference", fock_sigma);
  add("c7.fock.base_change", "fock", 7, "reference", fock_base_change);

  // 8
  add("c8.oracle.h0", "oracle", 8, "derived", [] { return oracle("0"); });
  add("c8.oracle.h1_2", "oracle", 8, "derived", [] { return oracle("1/2"); });
  add("c8.oracle.h1_16", "oracle", 8, "derived", [] { return oracle("1/16"); });
  return defs;
}

bool selected(const CheckDef& def, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  const std::string criterion = "c" + std::to_string(def.criterion);
  for (const auto& o : only) {
    if (o == def.group || o == criterion || def.name.rfind(o, 0) == 0) return true;
  }
  return false;
}

}  // namespace

VerificationReport run_battery(const std::vector<std::string>& only) {
  VerificationReport report;
  for (const auto& def : all_checks()) {
    if (!selected(def, only)) continue;
    CheckResult r{def.name, def.group, def.criterion, CheckStatus::Fail, def.provenance, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = def.run();
      r.status = o.status;
      r.value = std::move(o.value);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.value = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report.checks.push_back(std::move(r));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace modvir
