#include <doctest.h>

#include "weylfaces/extpoly.hpp"

using namespace weylfaces;

TEST_CASE("extended counts absorb infinity correctly") {
  const ExtInt inf = ExtInt::infinity();
  CHECK((inf + ExtInt(5)).is_infinite());
  CHECK((ExtInt(5) + inf).is_infinite());
  CHECK((inf * ExtInt(3)).is_infinite());
  CHECK((inf * ExtInt(0)) == ExtInt(0));
  CHECK((ExtInt(0) * inf) == ExtInt(0));
  CHECK(ExtInt(6) * ExtInt(7) == ExtInt(42));
  CHECK(inf.str() == "inf");
}

TEST_CASE("polynomial arithmetic and normalization") {
  ExtPolynomial p;
  p.add_term(2, ExtInt(3));
  p.add_term(0, ExtInt(1));
  p.add_term(2, ExtInt(0));  // no-op
  CHECK(p.coeff(2) == ExtInt(3));
  CHECK(p.coeff(5) == ExtInt(0));
  CHECK(p.min_exponent() == 0);
  CHECK(p.max_exponent() == 2);

  const ExtPolynomial q = ExtPolynomial::one_plus_q_pow(2);
  CHECK(q.coeff(0) == ExtInt(1));
  CHECK(q.coeff(1) == ExtInt(2));
  CHECK(q.coeff(2) == ExtInt(1));
  CHECK(q.eval_one() == ExtInt(4));

  const ExtPolynomial shifted = q.shifted(-1);
  CHECK(shifted.min_exponent() == -1);
  CHECK(shifted.coeff(-1) == ExtInt(1));
  CHECK(shifted.shifted(1) == q);
}

TEST_CASE("infinite coefficients survive sums and products") {
  ExtPolynomial p = ExtPolynomial::monomial(0, ExtInt::infinity());
  p.add_term(1, ExtInt(2));
  const ExtPolynomial scaled = p * ExtPolynomial::one_plus_q_pow(1);
  CHECK(scaled.coeff(0).is_infinite());
  CHECK(scaled.coeff(1).is_infinite());  // inf + 2
  CHECK(scaled.coeff(2) == ExtInt(2));
  CHECK(scaled.eval_one().is_infinite());
}

TEST_CASE("string form is readable") {
  ExtPolynomial p;
  p.add_term(0, ExtInt(24));
  p.add_term(1, ExtInt(36));
  p.add_term(3, ExtInt(1));
  CHECK(p.str() == "24 + 36*q + q^3");
}
