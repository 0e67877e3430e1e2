#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crlie/embed.hpp"
#include "crlie/rng.hpp"

using namespace crlie;

namespace {

EmbeddingParams params(std::vector<int> eps, GaussRational delta = GaussRational(1)) {
  EmbeddingParams p;
  p.eps = std::move(eps);
  p.delta = std::move(delta);
  return p;
}

}  // namespace

TEST_CASE("heisenberg embedding point values") {
  // m=1, eps=+1, delta=1, (t,x,y,z) = (0,1,0,0) -> (1, 1/2)
  auto pt = embed_heisenberg(params({1}), Rational(0), {Rational(1)}, {Rational(0)}, Rational(0));
  REQUIRE(pt.size() == 2);
  CHECK(pt[0] == GaussRational(1));
  CHECK(pt[1] == GaussRational(Rational(1, 2)));

  // origin maps to the origin
  auto zero = embed_heisenberg(params({1}), Rational(0), {Rational(0)}, {Rational(0)}, Rational(0));
  CHECK(zero[0].is_zero());
  CHECK(zero[1].is_zero());

  // m=2, eps=(+1,-1): (0,(1,1),(0,0),0) -> ((1,1), 0) since |x|^2 = 1 - 1 = 0
  auto mix = embed_heisenberg(params({1, -1}), Rational(0), {Rational(1), Rational(1)},
                              {Rational(0), Rational(0)}, Rational(0));
  CHECK(mix[0] == GaussRational(1));
  CHECK(mix[1] == GaussRational(1));
  CHECK(mix[2].is_zero());

  CHECK_THROWS_AS(
      embed_heisenberg(params({1}, GaussRational(Rational(0), Rational(1))), Rational(0),
                       {Rational(1)}, {Rational(0)}, Rational(0)),
      Error);  // Re(delta) = 0
}

TEST_CASE("quadric residual basics") {
  Mat<GaussRational> H(1, 1);
  H(0, 0) = GaussRational(Rational(1, 2));
  Hyperquadric qre = make_hyperquadric(H, Hyperquadric::Conv::Re);
  Hyperquadric qim = make_hyperquadric(H, Hyperquadric::Conv::Im);

  auto pt = embed_heisenberg(params({1}), Rational(0), {Rational(1)}, {Rational(0)}, Rational(0));
  CHECK(quadric_residual(qre, pt) == Rational(0));

  // point (0, i) with the Im convention: v = 1, form = 0
  std::vector<GaussRational> p2{GaussRational(0), GaussRational::i()};
  CHECK(quadric_residual(qim, p2) == Rational(1));

  // degenerate H rejected
  Mat<GaussRational> zero(1, 1);
  CHECK_THROWS_AS(make_hyperquadric(zero, Hyperquadric::Conv::Re), Error);
  // non-Hermitian H rejected
  Mat<GaussRational> nh(2, 2);
  nh(0, 1) = GaussRational(1);
  CHECK_THROWS_AS(make_hyperquadric(nh, Hyperquadric::Conv::Re), Error);
}

TEST_CASE("calibration picks the Re convention with H = diag(eps/2)") {
  for (auto eps : {std::vector<int>{1}, {1, -1}, {1, 1}}) {
    EmbeddingParams p = params(eps);
    Hyperquadric q = calibrate_quadric(p, 20, 7);
    CHECK(q.conv == Hyperquadric::Conv::Re);
    for (int i = 0; i < p.m(); ++i)
      CHECK(q.H(i, i) == GaussRational(Rational(eps[i], 2)));
  }
}

TEST_CASE("heisenberg residuals vanish exactly on random samples") {
  uint64_t seed = 11;
  for (auto eps : {std::vector<int>{1}, {1, -1}, {1, 1}}) {
    for (GaussRational delta :
         {GaussRational(1), GaussRational(Rational(1), Rational(1))}) {
      EmbeddingParams p = params(eps, delta);
      Hyperquadric q = calibrate_quadric(p, 20, seed);
      Rng rng(seed + 1);
      int m = p.m();
      for (int s = 0; s < 100; ++s) {
        std::vector<Rational> x(m), y(m);
        for (int i = 0; i < m; ++i) {
          x[i] = rng.rational(9, 7);
          y[i] = rng.rational(9, 7);
        }
        auto pt = embed_heisenberg(p, Rational(0), x, y, rng.rational(9, 7));
        CHECK(quadric_residual(q, pt) == Rational(0));
      }
    }
  }
}

TEST_CASE("membership is closed under the group law") {
  EmbeddingParams p = params({1, 1});
  Hyperquadric q = calibrate_quadric(p, 20, 3);
  Rng rng(5);
  auto sample = [&]() {
    HeisPoint h;
    h.x = {rng.rational(5, 3), rng.rational(5, 3)};
    h.y = {rng.rational(5, 3), rng.rational(5, 3)};
    h.z = rng.rational(5, 3);
    return h;
  };
  for (int s = 0; s < 50; ++s) {
    HeisPoint a = sample(), b = sample();
    HeisPoint ab = heis_mul(a, b);
    auto pt = embed_heisenberg(p, Rational(0), ab.x, ab.y, ab.z);
    CHECK(quadric_residual(q, pt) == Rational(0));
  }
  // associativity of the group law while we are here
  HeisPoint a = sample(), b = sample(), c = sample();
  HeisPoint l = heis_mul(heis_mul(a, b), c), r = heis_mul(a, heis_mul(b, c));
  CHECK(l.z == r.z);
  CHECK(l.x == r.x);
  CHECK(l.y == r.y);
}

TEST_CASE("su2 exponential map and norm law") {
  Su2Image base = embed_su2({1.0, 0.0}, 0.0, {1.0, 0.0}, {0.0, 0.0});
  CHECK(std::abs(base.z1 - std::complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(base.norm2 - 1.0) < 1e-15);

  Su2Image e1 = embed_su2({1.0, 0.0}, 1.0, {1.0, 0.0}, {0.0, 0.0});
  CHECK(std::abs(e1.z1 - std::complex<double>(std::exp(1.0), 0)) < 1e-12);
  CHECK(std::abs(e1.norm2 - std::exp(2.0)) < 1e-9);

  // log |Phi|^2 = 2kt within 1e-9 across samples
  Rng rng(9);
  for (double k : {1.0, 2.0, 0.5}) {
    for (int s = 0; s < 40; ++s) {
      double a = rng.range(-100, 100) / 101.0, b = rng.range(-100, 100) / 101.0;
      double c = rng.range(-100, 100) / 101.0, d = rng.range(-100, 100) / 101.0;
      double n = std::sqrt(a * a + b * b + c * c + d * d);
      if (n < 1e-6) continue;
      std::complex<double> z1{a / n, b / n}, z2{c / n, d / n};
      double t = rng.range(-200, 200) / 100.0;
      double l = rng.range(-100, 100) / 50.0;
      Su2Image img = embed_su2({k, l}, t, z1, z2);
      CHECK(std::abs(std::log(img.norm2) - 2 * k * t) < 1e-9);
    }
  }

  CHECK_THROWS_AS(embed_su2({1.0, 0.0}, 0.0, {1.0, 0.0}, {0.5, 0.0}), Error);
}

TEST_CASE("sl2 image lands in the upper half plane times C*") {
  Sl2Image id = embed_sl2({1.0, 0.0}, 0.0, 1, 0, 0, 1);
  CHECK(std::abs(id.half_plane - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(id.fiber - std::complex<double>(1, 0)) < 1e-15);

  Rng rng(13);
  int tried = 0;
  while (tried < 100) {
    double a = rng.range(-100, 100) / 23.0;
    if (std::abs(a) < 1e-3) continue;
    double b = rng.range(-100, 100) / 31.0;
    double c = rng.range(-100, 100) / 29.0;
    double d = (1.0 + b * c) / a;
    double t = rng.range(-150, 150) / 100.0;
    Sl2Image img = embed_sl2({1.0, 0.5}, t, a, b, c, d);
    CHECK(img.half_plane.imag() > 0);
    CHECK(std::abs(img.fiber) > 0);
    ++tried;
  }

  CHECK_THROWS_AS(embed_sl2({1.0, 0.0}, 0.0, 2, 0, 0, 1), Error);
}
