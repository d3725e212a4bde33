// Randomized invariants with fixed seeds, so failures reproduce.
#include "doctest.h"

#include <random>

#include "modvir/fock.hpp"
#include "modvir/linalg.hpp"
#include "modvir/singular.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Partition random_partition(std::mt19937& rng, int max_degree) {
  int degree = std::uniform_int_distribution<int>(0, max_degree)(rng);
  auto all = partitions(degree);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

FockVector random_fock(std::mt19937& rng, Sector sector, const Ring& ring, int max_degree) {
  Parity parity = std::uniform_int_distribution<int>(0, 1)(rng) ? Parity::Odd : Parity::Even;
  int degree = std::uniform_int_distribution<int>(0, max_degree)(rng);
  FockVector v(sector, ring);
  std::uniform_int_distribution<int> num(-5, 5);
  for (const auto& m : fock_basis(sector, parity, degree)) v.add_term(m, ring.from_int(num(rng)));
  return v;
}

VermaVector bracket_lhs(const VermaModule& mod, int m, int n, const VermaVector& t) {
  return mod.apply_mode(m, mod.apply_mode(n, t)) - mod.apply_mode(n, mod.apply_mode(m, t));
}

VermaVector bracket_rhs(const VermaModule& mod, int m, int n, const VermaVector& t) {
  const Ring& r = mod.ring();
  VermaVector out = r.from_int(m - n) * mod.apply_mode(m + n, t);
  if (m + n == 0) out.add_scaled(t, central_coeff(m, r) * mod.params().c());
  return out;
}

FockVector fock_bracket(int m, int n, const FockVector& v) {
  return apply_virasoro_fock(m, apply_virasoro_fock(n, v)) -
         apply_virasoro_fock(n, apply_virasoro_fock(m, v));
}

FockVector reduce(const FockVector& v, std::uint32_t p) {
  FockVector out(v.sector(), Ring::prime_field(p));
  for (const auto& [m, c] : v.terms()) out.add_term(m, reduce_mod_p(c, p));
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("Virasoro bracket on Verma modules") {
    std::mt19937 rng(7);
    Ring qh = Qh();
    std::vector<ModuleParams> params{
        ModuleParams(q("1/2"), q("1/16")),       ModuleParams(q("-22/5"), q("-1/5")),
        ModuleParams(q("1/2", F(7)), F(7).zero()), ModuleParams(F(13).from_int(3), F(13).from_int(5)),
        ModuleParams(qh.parse("1/2"), qh.variable())};
    std::uniform_int_distribution<int> mode(-4, 4);
    for (const auto& pm : params) {
      VermaModule mod(pm);
      for (int trial = 0; trial < 60; ++trial) {
        auto t = VermaVector::monomial(random_partition(rng, 6), mod.ring());
        int m = mode(rng), n = mode(rng);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(bracket_lhs(mod, m, n, t) == bracket_rhs(mod, m, n, t));
      }
    }
  }

  TEST_CASE("Gram matrices are symmetric and their radicals are submodules") {
    for (auto [c, h, p] : {std::tuple{"1/2", "0", 0}, {"1/2", "1/2", 0}, {"1/2", "1/16", 0},
                           {"1/2", "0", 7}, {"1/2", "0", 3}, {"-2", "-1/8", 0}}) {
      VermaModule mod = module(c, h, Ring::from_characteristic(p));
      for (int n = 1; n <= 7; ++n) {
        const Matrix& g = mod.gram_matrix(n);
        CHECK(g.is_symmetric());
        auto basis = partitions(n);
        for (const auto& x : linalg::nullspace(g)) {
          VermaVector w(mod.ring());
          for (std::size_t i = 0; i < basis.size(); ++i) w.add_term(basis[i], x[i]);
          for (int k : {1, 2}) {
            if (k > n) continue;
            auto image = mod.apply_mode(k, w);
            auto lower = partitions(n - k);
            auto y = mod.gram_matrix(n - k).multiply(image.coordinates(lower));
            for (const auto& e : y) CHECK(e.is_zero());
          }
        }
      }
    }
  }

  TEST_CASE("Gram matrices commute with reduction mod p") {
    for (auto [c, h] : {std::pair{"1/2", "0"}, {"1/2", "1/16"}, {"7/3", "-2/5"}}) {
      VermaModule q0 = module(c, h);
      for (int p : {3, 5, 7, 11, 13}) {
        Scalar cp, hp;
        try {
          cp = reduce_mod_p(q(c), p);
          hp = reduce_mod_p(q(h), p);
        } catch (const DenominatorDivisibleByP&) {
          continue;
        }
        VermaModule mp{ModuleParams(cp, hp)};
        for (int n = 0; n <= 6; ++n) CHECK(linalg::reduce_mod_p(q0.gram_matrix(n), p) == mp.gram_matrix(n));
      }
    }
  }

  TEST_CASE("Fock Virasoro bracket with c = 1/2") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> mode(-4, 4);
    for (Sector sector : {Sector::NS, Sector::Ramond}) {
      for (int trial = 0; trial < 40; ++trial) {
        auto v = random_fock(rng, sector, Q(), 6);
        int m = mode(rng), n = mode(rng);
        FockVector rhs = Q().from_int(m - n) * apply_virasoro_fock(m + n, v);
        if (m + n == 0) rhs.add_scaled(v, central_coeff(m, Q()) * q("1/2"));
        CHECK(fock_bracket(m, n, v) == rhs);
      }
    }
  }

  TEST_CASE("fermion anticommutation and the mixed commutator") {
    std::mt19937 rng(13);
    for (Sector sector : {Sector::NS, Sector::Ramond}) {
      const int offset = sector == Sector::NS ? 1 : 0;
      std::uniform_int_distribution<int> half(-4, 4);
      for (int trial = 0; trial < 40; ++trial) {
        auto v = random_fock(rng, sector, Q(), 5);
        int tm = 2 * half(rng) + offset, tn = 2 * half(rng) + offset;
        FockVector anti = apply_fermion(tm, apply_fermion(tn, v)) + apply_fermion(tn, apply_fermion(tm, v));
        CHECK(anti == (tm + tn == 0 ? v : FockVector(sector, Q())));

        int p = std::uniform_int_distribution<int>(-3, 3)(rng);
        FockVector lhs = apply_virasoro_fock(p, apply_fermion(tn, v)) - apply_fermion(tn, apply_virasoro_fock(p, v));
        // [L(p), a(q)] = -(q + p/2) a(p+q), with q = tn/2
        Scalar factor = Q().from_rational(Rational(-(tn + p), 2));
        CHECK(lhs == factor * apply_fermion(tn + 2 * p, v));
      }
    }
  }

  TEST_CASE("contravariance and sigma") {
    std::mt19937 rng(17);
    for (Sector sector : {Sector::NS, Sector::Ramond}) {
      for (int trial = 0; trial < 30; ++trial) {
        auto u = random_fock(rng, sector, Q(), 5);
        auto v = random_fock(rng, sector, Q(), 5);
        int n = std::uniform_int_distribution<int>(-3, 3)(rng);
        CHECK(fock_form(apply_virasoro_fock(n, u), v) == fock_form(u, apply_virasoro_fock(-n, v)));
        int tm = 2 * std::uniform_int_distribution<int>(-3, 3)(rng) + (sector == Sector::NS ? 1 : 0);
        CHECK(fock_form(apply_fermion(tm, u), v) == fock_form(u, apply_fermion(-tm, v)));
      }
    }
    for (int trial = 0; trial < 30; ++trial) {
      FockVector v(Sector::Ramond, Q());
      int degree = trial % 6;
      for (const auto& m : fock_basis(Sector::Ramond, Parity::Even, degree)) v.add_term(m, Q().from_int(trial + 1));
      int n = trial % 7 - 3;
      CHECK(sigma(apply_virasoro_fock(n, v)) == apply_virasoro_fock(n, sigma(v)));
    }
  }

  TEST_CASE("Fock actions commute with reduction mod p") {
    std::mt19937 rng(19);
    for (int p : {3, 5, 7, 11, 13}) {
      for (Sector sector : {Sector::NS, Sector::Ramond}) {
        for (int trial = 0; trial < 10; ++trial) {
          auto v = random_fock(rng, sector, Q(), 5);
          int n = std::uniform_int_distribution<int>(-3, 3)(rng);
          CHECK(reduce(apply_virasoro_fock(n, v), p) == apply_virasoro_fock(n, reduce(v, p)));
        }
      }
    }
  }
}
