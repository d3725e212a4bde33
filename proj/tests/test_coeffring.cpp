#include "doctest.h"

#include "modvir/coeffring.hpp"
#include "modvir/linalg.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("coeffring") {
  TEST_CASE("central_coeff") {
    CHECK(central_coeff(1, Q()) == Q().zero());
    CHECK(central_coeff(2, Q()) == q("1/2"));
    CHECK(central_coeff(5, F(7)) == F(7).from_int(3));
    CHECK(central_coeff(-3, Q()) == q("-2"));
    // denominators 3 and 4 stay invertible in every admissible characteristic
    CHECK(central_coeff(4, F(3)) == F(3).from_int(5));
  }

  TEST_CASE("reduce_mod_p") {
    CHECK(reduce_mod_p(q("3/4"), 7) == F(7).from_int(6));
    CHECK(reduce_mod_p(q("-108"), 7) == F(7).from_int(4));
    CHECK_THROWS_AS(reduce_mod_p(q("1/7"), 7), DenominatorDivisibleByP);
    CHECK(reduce_mod_p(q("1/2"), 7) == reduce_mod_p(q("1/16"), 7));
  }

  TEST_CASE("poly_eval") {
    Ring r = Qh();
    Scalar h = r.variable();
    CHECK(poly_eval(h, q("1/2")) == q("1/2"));
    Scalar f = 64 * h * (h - r.parse("1/2")) * (h - r.parse("1/16"));
    CHECK(poly_eval(f, q("1/16")) == Q().zero());
    CHECK(poly_eval(f, q("1/2")) == Q().zero());
    CHECK(poly_eval(f, q("1")) == q("30"));

    Ring r7 = F(7).polynomial();
    Scalar h7 = r7.variable();
    Scalar g = h7 * (h7 - r7.from_int(4));
    CHECK(poly_eval(g, F(7).from_int(4)) == F(7).zero());
    CHECK(poly_eval(g, F(7).from_int(1)) == F(7).from_int(4));
  }

  TEST_CASE("field arithmetic") {
    Ring f7 = F(7);
    CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());
    CHECK(f7.from_int(3).inverse() == f7.from_int(5));
    CHECK(f7.parse("1/2") == f7.from_int(4));
    CHECK(f7.parse("1/16") == f7.from_int(4));
    CHECK(f7.parse("5 mod 7") == f7.from_int(-2));
    CHECK(q("2/3") + q("1/6") == q("5/6"));
    CHECK(q("2/3") / q("-4") == q("-1/6"));
    CHECK_THROWS(Q().zero().inverse());
    CHECK_THROWS(f7.parse("1/7"));
  }

  TEST_CASE("string forms") {
    CHECK(q("6/8").to_string() == "3/4");
    CHECK(q("-5").to_string() == "-5");
    CHECK(F(7).from_int(-1).to_string() == "6 mod 7");
    CHECK(poly({"0", "2", "-36", "64"}).to_string() == "64*h^3 - 36*h^2 + 2*h");
    for (const char* text : {"3/4", "-17/5", "0", "12"}) CHECK(q(text).to_string() == text);
  }

  TEST_CASE("polynomial arithmetic") {
    Ring r = Qh();
    Scalar h = r.variable();
    Scalar a = (h + r.one()) * (h - r.one());
    CHECK(a == h * h - r.one());
    CHECK(a.degree() == 2);
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(a.constant_term() == q("-1"));
    CHECK_THROWS_AS(h + F(7).polynomial().variable(), RingMismatch);
  }

  TEST_CASE("characteristic checks") {
    CHECK_THROWS_AS(Ring::from_characteristic(2), UnsupportedCharacteristic);
    CHECK_THROWS_AS(Ring::from_characteristic(9), UnsupportedCharacteristic);
    CHECK_THROWS_AS(Ring::from_characteristic(-3), UnsupportedCharacteristic);
    CHECK(Ring::from_characteristic(0) == Q());
    CHECK(Ring::from_characteristic(13).characteristic() == 13);
    CHECK(is_odd_prime(2147483647));
    CHECK_FALSE(is_odd_prime(1));
  }

  TEST_CASE("binomial") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-5, 2) == 15);
    CHECK(binomial(3, 5) == 0);
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("determinant of the induction-step matrix") {
    Matrix m(2, 2, Q());
    m(0, 0) = q("3");
    m(0, 1) = q("1");
    m(1, 0) = q("5/2");
    m(1, 1) = q("-3/2");
    CHECK(linalg::determinant(m) == q("-7"));
    CHECK(linalg::rank(m) == 2);
    Matrix m7 = linalg::reduce_mod_p(m, 7);
    CHECK(linalg::determinant(m7).is_zero());
    CHECK(linalg::rank(m7) == 1);
    for (int p : {3, 5, 11, 13}) CHECK(linalg::rank(linalg::reduce_mod_p(m, p)) == 2);
  }

  TEST_CASE("nullspace and rref") {
    Matrix m(2, 3, Q());
    int entries[2][3] = {{1, 2, 3}, {2, 4, 7}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Q().from_int(entries[i][j]);
    auto kernel = linalg::nullspace(m);
    REQUIRE(kernel.size() == 1);
    auto image = m.multiply(kernel[0]);
    for (const auto& x : image) CHECK(x.is_zero());
    Matrix r = m;
    auto pivots = linalg::rref(r);
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    CHECK(linalg::rank(m) == linalg::rank_gauss_jordan(m));
  }
}
