#include "doctest.h"

#include "modvir/virasoro.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("virasoro") {
  TEST_CASE("partitions and PBW order") {
    CHECK(verma_dim(0) == 1);
    CHECK(verma_dim(4) == 5);
    CHECK(verma_dim(6) == 11);
    CHECK(verma_dim(10) == 42);
    auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  }

  TEST_CASE("single brackets with formal h") {
    VermaModule m = formal_module("1/2");
    const Ring& r = m.ring();
    Scalar h = r.variable();
    auto L1v = VermaVector::monomial(Partition({1}), r);
    auto L2v = VermaVector::monomial(Partition({2}), r);
    auto v = m.highest_weight_vector();
    CHECK(m.apply_mode(1, L1v) == (2 * h) * v);
    CHECK(m.apply_mode(2, L2v) == (4 * h + r.parse("1/4")) * v);
    CHECK(m.apply_mode(-1, L2v) == verma(r, {{{2, 1}, r.one()}, {{3}, r.one()}}));
    CHECK(m.apply_mode(0, L2v) == (h + r.from_int(2)) * L2v);
    CHECK(m.apply_mode(3, L2v).is_zero());
  }

  TEST_CASE("central term scales with c") {
    VermaModule m = module("3/7", "2");
    auto L2v = VermaVector::monomial(Partition({2}), Q());
    CHECK(m.apply_mode(2, L2v) == q("8") * m.highest_weight_vector() + q("3/14") * m.highest_weight_vector());
  }

  TEST_CASE("apply_word acts rightmost first") {
    VermaModule m = module("1/2", "1/2");
    auto v = m.highest_weight_vector();
    std::vector<int> word{-1, -2};
    CHECK(m.apply_word(word, v) == verma(Q(), {{{2, 1}, q("1")}, {{3}, q("1")}}));
  }

  TEST_CASE("Gram matrices") {
    VermaModule m = formal_module("1/2");
    const Ring& r = m.ring();
    Scalar h = r.variable();
    const Matrix& g1 = m.gram_matrix(1);
    REQUIRE(g1.rows() == 1);
    CHECK(g1(0, 0) == 2 * h);
    const Matrix& g2 = m.gram_matrix(2);
    REQUIRE(g2.rows() == 2);
    CHECK(g2(0, 0) == 4 * h + r.parse("1/4"));
    CHECK(g2(0, 1) == 6 * h);
    CHECK(g2(1, 0) == 6 * h);
    CHECK(g2(1, 1) == 4 * h * (2 * h + r.one()));
    CHECK(module("1/2", "0").gram_matrix(1)(0, 0).is_zero());

    VermaModule generic = module("3/5", "2/3");
    const Matrix& g = generic.gram_matrix(2);
    CHECK(g(0, 0) == q("8/3") + q("3/10"));
    CHECK(generic.gram_matrix(0)(0, 0) == Q().one());
    for (int n = 0; n <= 6; ++n) CHECK(generic.gram_matrix(n).is_symmetric());
  }

  TEST_CASE("Verma vector algebra") {
    auto a = verma(Q(), {{{2}, q("1")}, {{1, 1}, q("-3/4")}});
    auto b = verma(Q(), {{{2}, q("-1")}});
    auto c = a + b;
    CHECK(c.size() == 1);
    CHECK(c.coeff(Partition({1, 1})) == q("-3/4"));
    CHECK(c.coeff(Partition({2})).is_zero());
    CHECK(c.degree() == 2);
    CHECK((a - a).is_zero());
    CHECK_FALSE((a - a).degree().has_value());
    auto mixed = a + VermaVector::monomial(Partition({3}), Q());
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(verma(Q(), {{{3, 1}, q("1")}, {{4}, q("2")}}).vacuum_projection() ==
          verma(Q(), {{{4}, q("2")}}));
  }
}
