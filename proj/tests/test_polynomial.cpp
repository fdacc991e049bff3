#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trop/polynomial.hpp"
#include "trop/error.hpp"

using namespace trop;

TEST_CASE("univariate arithmetic and evaluation") {
  UnivarPoly t = UnivarPoly::var();
  UnivarPoly p = t * t + t * BigInt(2) + UnivarPoly(1);  // (t+1)^2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == 2);
  CHECK(p.eval(BigRat(3)) == BigRat(16));
  CHECK(p.eval_int(BigInt(-1)) == 0);

  UnivarPoly q = (t - UnivarPoly(1)).pow(3);
  CHECK(q.coeff(0) == -1);
  CHECK(q.coeff(1) == 3);
  CHECK(q.coeff(2) == -3);
  CHECK(q.coeff(3) == 1);
  CHECK(q.derivative().coeff(1) == -6);

  CHECK(UnivarPoly().degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("univariate evaluation is a ring homomorphism") {
  // Small deterministic sweep: eval(p*q) == eval(p)*eval(q), eval(p+q) == ...
  UnivarPoly t = UnivarPoly::var();
  std::vector<UnivarPoly> pool = {
      UnivarPoly(0), UnivarPoly(7), t, t * t - UnivarPoly(5),
      (t + UnivarPoly(2)).pow(3), t.pow(5) - t * BigInt(11) + UnivarPoly(1)};
  for (const auto& p : pool)
    for (const auto& q : pool)
      for (long x : {-3L, -1L, 0L, 1L, 2L, 10L}) {
        BigRat xv(x);
        CHECK((p * q).eval(xv) == p.eval(xv) * q.eval(xv));
        CHECK((p + q).eval(xv) == p.eval(xv) + q.eval(xv));
      }
}

TEST_CASE("truncation keeps low-degree part") {
  UnivarPoly t = UnivarPoly::var();
  UnivarPoly p = UnivarPoly(1) + t * BigInt(2) + t.pow(2) * BigInt(3) + t.pow(5);
  UnivarPoly low = p.truncate_below(2);
  CHECK(low.coeff(0) == 1);
  CHECK(low.coeff(1) == 2);
  CHECK(low.coeff(2) == 0);
  CHECK(low.degree() == 1);
}

TEST_CASE("exact division round-trips and rejects non-divisors") {
  UnivarPoly t = UnivarPoly::var();
  UnivarPoly a = (t.pow(2) + t * BigInt(3) - UnivarPoly(2)).pow(2);
  UnivarPoly b = t.pow(2) + t * BigInt(3) - UnivarPoly(2);
  CHECK(exact_divide(a, b) == b);
  CHECK(exact_divide(UnivarPoly(), b).is_zero());
  CHECK_THROWS_AS(exact_divide(t + UnivarPoly(1), t), InvariantError);
}

TEST_CASE("Laurent bivariate basics") {
  LaurentBivarPoly uv = LaurentBivarPoly::monomial(1, 1, 1);
  LaurentBivarPoly one(1);
  LaurentBivarPoly p = (uv - one).pow(2);
  CHECK(p.coeff(2, 2) == 1);
  CHECK(p.coeff(1, 1) == -2);
  CHECK(p.coeff(0, 0) == 1);
  CHECK(exact_divide(p, uv - one) == uv - one);

  LaurentBivarPoly u = LaurentBivarPoly::monomial(1, 0, 1);
  LaurentBivarPoly v = LaurentBivarPoly::monomial(0, 1, 1);
  // (u^-1 + v)(u) == 1 + uv : genuine Laurent support.
  LaurentBivarPoly q = (LaurentBivarPoly::monomial(-1, 0, 1) + v) * u;
  CHECK(q == one + uv);
  CHECK((uv - one).eval(BigRat(2), BigRat(3)) == BigRat(5));
  CHECK(p.symmetric_uv());
  CHECK_FALSE((u + one).symmetric_uv());
  CHECK((u * v.pow(2)).laurent_free());
  CHECK_FALSE(LaurentBivarPoly::monomial(-1, 2, 5).laurent_free());
}

TEST_CASE("substitutions from univariate polynomials") {
  UnivarPoly t = UnivarPoly::var();
  UnivarPoly s = UnivarPoly(1) + t * BigInt(2) + t.pow(2) * BigInt(3);
  LaurentBivarPoly via_uv = LaurentBivarPoly::from_univar_uv(s);
  CHECK(via_uv.coeff(0, 0) == 1);
  CHECK(via_uv.coeff(1, 1) == 2);
  CHECK(via_uv.coeff(2, 2) == 3);
  LaurentBivarPoly via_vu = LaurentBivarPoly::from_univar_u_inv_v(s);
  CHECK(via_vu.coeff(0, 0) == 1);
  CHECK(via_vu.coeff(-1, 1) == 2);
  CHECK(via_vu.coeff(-2, 2) == 3);
}

TEST_CASE("setting v to 1 collapses to a univariate polynomial") {
  LaurentBivarPoly u = LaurentBivarPoly::monomial(1, 0, 1);
  LaurentBivarPoly v = LaurentBivarPoly::monomial(0, 1, 1);
  LaurentBivarPoly p = u * v - u * BigInt(2) + v.pow(3) + LaurentBivarPoly(4);
  UnivarPoly q = p.specialize_v_to_1();
  CHECK(q.coeff(1) == -1);  // uv and -2u both land on u^1
  CHECK(q.coeff(0) == 5);   // v^3 and the constant land on u^0
}

TEST_CASE("Laurent exact division requires divisibility") {
  LaurentBivarPoly uv = LaurentBivarPoly::monomial(1, 1, 1);
  LaurentBivarPoly one(1);
  CHECK_THROWS_AS(exact_divide(uv - LaurentBivarPoly(2), uv - one),
                  InvariantError);
}
