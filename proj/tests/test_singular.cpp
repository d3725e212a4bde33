#include "doctest.h"

#include "modvir/singular.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing;

namespace {

VermaVector s_vector(const Ring& r) {
  return verma(r, {{{2, 2, 2}, r.from_int(64)},
                   {{3, 3}, r.from_int(93)},
                   {{4, 2}, r.from_int(-264)},
                   {{6}, r.from_int(-108)}});
}

}  // namespace

TEST_SUITE("singular") {
  TEST_CASE("degree-6 vacuum vector") {
    VermaModule m = module("1/2", "0");
    auto basis = singular_space(m, 6, SearchSpace::VacuumQuotient);
    REQUIRE(basis.vectors.size() == 1);
    CHECK(basis.vectors[0] == normalize_leading(s_vector(Q())));
    CHECK(is_singular(s_vector(Q()), m, SearchSpace::VacuumQuotient));
    // the Verma-space vector projects onto it
    auto verma_basis = singular_space(m, 6);
    REQUIRE(verma_basis.vectors.size() == 1);
    CHECK(verma_basis.vectors[0].vacuum_projection() == basis.vectors[0]);
  }

  TEST_CASE("h = 1/2, degree 2") {
    VermaModule m = module("1/2", "1/2");
    auto basis = singular_space(m, 2);
    REQUIRE(basis.vectors.size() == 1);
    CHECK(basis.vectors[0] == normalize_leading(verma(Q(), {{{2}, q("4")}, {{1, 1}, q("-3")}})));
  }

  TEST_CASE("characteristic 7, degree 4") {
    VermaModule m = module("1/2", "0", F(7));
    auto basis = singular_space(m, 4, SearchSpace::VacuumQuotient);
    REQUIRE(basis.vectors.size() == 1);
    auto u = verma(F(7), {{{2, 2}, F(7).one()}, {{4}, F(7).from_int(-2)}});
    CHECK(basis.vectors[0] == normalize_leading(u));
    CHECK(singular_space(module("1/2", "0"), 4, SearchSpace::VacuumQuotient).vectors.empty());
  }

  TEST_CASE("empty spaces") {
    CHECK(singular_space(module("1/2", "0"), 2).vectors.empty());
    CHECK(singular_space(module("1/2", "0"), 3).vectors.empty());
    CHECK(singular_space(module("1/2", "0"), 3, SearchSpace::VacuumQuotient).vectors.empty());
    CHECK(singular_space(module("3/5", "2/3"), 4).vectors.empty());
  }

  TEST_CASE("is_singular") {
    VermaModule m0 = module("1/2", "0");
    CHECK(is_singular(VermaVector::monomial(Partition({1}), Q()), m0));
    CHECK_FALSE(is_singular(VermaVector::monomial(Partition({2}), Q()), m0));
    VermaModule mh = module("1/2", "1/2");
    auto w = verma(Q(), {{{1, 1, 1}, q("1")}, {{2, 1}, q("-3")}, {{3}, q("3/4")}});
    CHECK(is_singular(w, mh));
    CHECK_THROWS(is_singular(VermaVector(Q()), mh));
    CHECK_THROWS(is_singular(w + VermaVector::monomial(Partition({1}), Q()), mh));
  }

  TEST_CASE("irreducible dimensions") {
    CHECK(irreducible_dims(module("1/2", "0"), 4).irreducible_dims() ==
          std::vector<std::size_t>{1, 0, 1, 1, 2});
    CHECK(irreducible_dims(module("1/2", "1/2"), 4).irreducible_dims() ==
          std::vector<std::size_t>{1, 1, 1, 1, 2});
    auto t7 = irreducible_dims(module("1/2", "0", F(7)), 4);
    CHECK(t7.irreducible_dims()[4] < 2);
    for (const auto& row : t7.rows) {
      CHECK(row.verma == verma_dim(row.degree));
      CHECK(row.radical + row.irreducible == row.verma);
    }
    // generic weight: the form is nondegenerate
    CHECK(irreducible_dims(module("3/5", "2/3"), 5).irreducible_dims() ==
          std::vector<std::size_t>{1, 1, 2, 3, 5, 7});
  }

  TEST_CASE("Gram ranks match the fermionic count") {
    for (auto [h, sixteen_h] : {std::pair{"0", 0}, {"1/2", 8}, {"1/16", 1}}) {
      CAPTURE(h);
      CHECK(irreducible_dims(module("1/2", h), 8).irreducible_dims() ==
            oracle::ising_dims(sixteen_h, 8));
    }
  }

  TEST_CASE("reduce_vector_mod_p") {
    auto s7 = reduce_vector_mod_p(s_vector(Q()), 7);
    // -264 = -38*7 + 2
    CHECK(s7 == verma(F(7), {{{2, 2, 2}, F(7).from_int(1)},
                             {{3, 3}, F(7).from_int(2)},
                             {{4, 2}, F(7).from_int(2)},
                             {{6}, F(7).from_int(4)}}));
    for (int p : {3, 5, 7, 11}) {
      auto L1 = VermaVector::monomial(Partition({1}), Q());
      CHECK(reduce_vector_mod_p(L1, p) == VermaVector::monomial(Partition({1}), F(p)));
    }
    auto three_quarters = verma(Q(), {{{3}, q("3/4")}});
    CHECK(reduce_vector_mod_p(three_quarters, 3).is_zero());
    CHECK_THROWS_AS(reduce_vector_mod_p(verma(Q(), {{{3}, q("1/3")}}), 3), DenominatorDivisibleByP);
  }

  TEST_CASE("in_span") {
    auto a = verma(Q(), {{{2}, q("1")}});
    auto b = verma(Q(), {{{1, 1}, q("1")}});
    CHECK(in_span(a + q("3") * b, {a, b}));
    CHECK_FALSE(in_span(b, {a}));
    CHECK(in_span(VermaVector(Q()), {a}));
  }
}
