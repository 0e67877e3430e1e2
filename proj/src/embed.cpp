#include "crlie/embed.hpp"

#include <cmath>

#include "crlie/rng.hpp"

namespace crlie {

std::vector<GaussRational> embed_heisenberg(const EmbeddingParams& params, const Rational& t,
                                            const std::vector<Rational>& x,
                                            const std::vector<Rational>& y, const Rational& z) {
  int m = params.m();
  if (params.delta.re.is_zero()) throw Error("embed_heisenberg: Re(delta) must be nonzero");
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m)
    throw Error("embed_heisenberg: coordinate length mismatch");
  const Rational k = params.delta.re, l = params.delta.im;
  auto dot = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational acc(0);
    for (int i = 0; i < m; ++i) {
      Rational term = u[i] * v[i];
      acc += (params.eps[i] > 0) ? term : -term;
    }
    return acc;
  };
  std::vector<GaussRational> out;
  out.reserve(m + 1);
  for (int i = 0; i < m; ++i) out.emplace_back(x[i], y[i]);
  Rational re = Rational(2) * k * t + (dot(x, x) + dot(y, y)) / Rational(2);
  Rational im = Rational(2) * (l * t + z) - dot(x, y);
  out.emplace_back(re, im);
  return out;
}

Hyperquadric make_hyperquadric(Mat<GaussRational> H, Hyperquadric::Conv conv) {
  if (H.rows != H.cols) throw Error("hyperquadric: H must be square");
  if (H != conj_transpose(H)) throw Error("hyperquadric: H must be Hermitian");
  Signature sig = hermitian_signature(H);
  if (sig.zero != 0) throw Error("hyperquadric: H must be non-degenerate");
  Hyperquadric q;
  q.H = std::move(H);
  q.conv = conv;
  return q;
}

Rational quadric_residual(const Hyperquadric& Q, const std::vector<GaussRational>& point) {
  int m = Q.H.rows;
  if (static_cast<int>(point.size()) != m + 1)
    throw Error("quadric_residual: point must have m + 1 coordinates");
  GaussRational form(0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (Q.H(i, j).is_zero()) continue;
      form += Q.H(i, j) * point[i] * conj(point[j]);
    }
  if (!form.is_real())
    throw Error("quadric_residual: form value is not real; H is not Hermitian");
  Rational lhs = (Q.conv == Hyperquadric::Conv::Re) ? point[m].re : point[m].im;
  return lhs - form.re;
}

Hyperquadric calibrate_quadric(const EmbeddingParams& params, int samples, uint64_t seed) {
  int m = params.m();
  std::vector<Hyperquadric> candidates;
  Mat<GaussRational> H(m, m);
  for (int i = 0; i < m; ++i) H(i, i) = GaussRational(Rational(params.eps[i], 2));
  candidates.push_back(make_hyperquadric(H, Hyperquadric::Conv::Re));
  candidates.push_back(make_hyperquadric(H, Hyperquadric::Conv::Im));

  Rng rng(seed);
  std::vector<std::vector<GaussRational>> points;
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x(m), y(m);
    for (int i = 0; i < m; ++i) {
      x[i] = rng.rational(6, 4);
      y[i] = rng.rational(6, 4);
    }
    points.push_back(embed_heisenberg(params, Rational(0), x, y, rng.rational(6, 4)));
  }
  const Hyperquadric* fit = nullptr;
  for (const auto& cand : candidates) {
    bool all_zero = true;
    for (const auto& pt : points)
      if (!quadric_residual(cand, pt).is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      if (fit) throw Error("calibrate_quadric: fit is not unique");
      fit = &cand;
    }
  }
  if (!fit) throw Error("calibrate_quadric: no candidate fits the samples");
  return *fit;
}

HeisPoint heis_mul(const HeisPoint& a, const HeisPoint& b) {
  size_t m = a.x.size();
  if (b.x.size() != m || a.y.size() != m || b.y.size() != m)
    throw Error("heis_mul: dimension mismatch");
  HeisPoint out;
  out.x.resize(m);
  out.y.resize(m);
  Rational cross(0);
  for (size_t i = 0; i < m; ++i) {
    out.x[i] = a.x[i] + b.x[i];
    out.y[i] = a.y[i] + b.y[i];
    cross += a.x[i] * b.y[i] - a.y[i] * b.x[i];
  }
  out.z = a.z + b.z - cross / Rational(2);
  return out;
}

Su2Image embed_su2(std::complex<double> delta, double t, std::complex<double> z1,
                   std::complex<double> z2) {
  double unit = std::norm(z1) + std::norm(z2);
  if (std::abs(unit - 1.0) > 1e-12)
    throw Error("embed_su2: |z1|^2 + |z2|^2 must be 1 (defect " + std::to_string(unit - 1.0) +
                ")");
  std::complex<double> f = std::exp(delta * t);
  Su2Image out;
  out.z1 = f * z1;
  out.z2 = f * z2;
  out.norm2 = std::norm(out.z1) + std::norm(out.z2);
  return out;
}

Sl2Image embed_sl2(std::complex<double> delta, double t, double a, double b, double c, double d) {
  double det = a * d - b * c;
  if (std::abs(det - 1.0) > 1e-12)
    throw Error("embed_sl2: determinant must be 1 (defect " + std::to_string(det - 1.0) + ")");
  double cc = c * c + d * d;
  Sl2Image out;
  out.half_plane = std::complex<double>((a * c + b * d) / cc, 1.0 / cc);
  out.fiber = std::exp(delta * t) * std::complex<double>(d, c);
  return out;
}

}  // namespace crlie
