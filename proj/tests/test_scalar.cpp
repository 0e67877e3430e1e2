#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crlie/gauss.hpp"
#include "crlie/multipoly.hpp"
#include "crlie/ratfunc.hpp"
#include "crlie/rational.hpp"
#include "crlie/rng.hpp"

using namespace crlie;

TEST_CASE("rational reduction and printing") {
  Rational a(6, 4);
  CHECK(a == Rational(3, 2));
  CHECK(a.str() == "3/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("3/2") == a);
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational power") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2), -2) == Rational(1, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("gaussian conjugation") {
  GaussRational z{Rational(1), Rational(2)};
  CHECK(conj(z) == GaussRational{Rational(1), Rational(-2)});
  CHECK(conj(conj(z)) == z);
  GaussRational r{Rational(3, 4)};
  CHECK(conj(r) == r);
  CHECK(conj(GaussRational(0)) == GaussRational(0));
}

TEST_CASE("norm is real and nonnegative") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    GaussRational z = rng.gauss();
    GaussRational nn = z * conj(z);
    CHECK(nn.is_real());
    CHECK(nn.re.sign() >= 0);
    CHECK(nn.re == z.norm2());
  }
}

TEST_CASE("field axioms on random triples") {
  Rng rng(42);
  for (int k = 0; k < 60; ++k) {
    GaussRational a = rng.gauss(), b = rng.gauss(), c = rng.gauss();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == GaussRational(0));
    if (!a.is_zero()) CHECK(a * a.inv() == GaussRational(1));
  }
}

TEST_CASE("rational function evaluation") {
  // (1/4)(1/s^2 + s^2) * i  evaluates to i/2 at s = 1
  RatFuncS s = RatFuncS::var();
  RatFuncS quarter_i{GaussRational(Rational(0), Rational(1, 4))};
  RatFuncS f = quarter_i * (RatFuncS(GaussRational(1)) / (s * s) + s * s);
  CHECK(f.eval(Rational(1)) == GaussRational(Rational(0), Rational(1, 2)));

  CHECK(RatFuncS::var().eval(Rational(2)) == GaussRational(2));
  CHECK_THROWS_AS((RatFuncS(GaussRational(1)) / RatFuncS::var()).eval(Rational(0)), PoleError);
}

TEST_CASE("rational function canonical form") {
  RatFuncS s = RatFuncS::var();
  RatFuncS f = (s * s - RatFuncS(GaussRational(1))) / (s - RatFuncS(GaussRational(1)));
  // reduces to s + 1
  CHECK(f == s + RatFuncS(GaussRational(1)));
  RatFuncS g = (s + s) / (RatFuncS(GaussRational(2)) * s * s);  // = 1/s
  CHECK(g == RatFuncS(GaussRational(1)) / s);
}

TEST_CASE("rational function arithmetic commutes with evaluation") {
  Rng rng(11);
  RatFuncS s = RatFuncS::var();
  RatFuncS f = (s * s + RatFuncS(GaussRational::i())) / (s + RatFuncS(GaussRational(3)));
  RatFuncS g = RatFuncS(GaussRational(2)) * s - RatFuncS(GaussRational(1)) / s;
  for (int k = 0; k < 40; ++k) {
    Rational s0 = rng.nonzero_rational();
    if (s0 == Rational(-3)) continue;
    CHECK((f + g).eval(s0) == f.eval(s0) + g.eval(s0));
    CHECK((f * g).eval(s0) == f.eval(s0) * g.eval(s0));
    CHECK((f - g).eval(s0) == f.eval(s0) - g.eval(s0));
  }
}

TEST_CASE("multivariate polynomial identity checks") {
  MultiPoly a = MultiPoly::var(0), b = MultiPoly::var(1);
  CHECK((a * b - b * a).is_zero());
  CHECK_FALSE((a * a + MultiPoly(GaussRational(1))).is_zero());
  MultiPoly p = (a + b) * (a - b) - (a * a - b * b);
  CHECK(p.is_zero());
}

TEST_CASE("multipoly substitution and evaluation") {
  MultiPoly a = MultiPoly::var(0), b = MultiPoly::var(1);
  MultiPoly p = a * a * b + MultiPoly(GaussRational(3)) * b;
  MultiPoly q = p.substitute(0, GaussRational(2));
  CHECK(q == MultiPoly(GaussRational(7)) * b);
  CHECK(p.eval({GaussRational(2), GaussRational(5)}) == GaussRational(35));
  CHECK(p.degree_in(0) == 2);
  CHECK(p.total_degree() == 3);
}

TEST_CASE("upoly gcd and rational roots") {
  UPoly s = UPoly::var();
  UPoly p = (s * s - UPoly(GaussRational(1))) * s;  // roots 0, 1, -1
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rational(-1));
  CHECK(roots[1] == Rational(0));
  CHECK(roots[2] == Rational(1));

  UPoly a = (s - UPoly(GaussRational(2))) * (s + UPoly(GaussRational(5)));
  UPoly b = (s - UPoly(GaussRational(2))) * s;
  CHECK(gcd(a, b) == (s - UPoly(GaussRational(2))));
}
