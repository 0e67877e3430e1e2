#pragma once

#include <complex>
#include <vector>

#include "crlie/linalg.hpp"

namespace crlie {

struct EmbeddingParams {
  GaussRational delta;    // k + i l with k != 0
  std::vector<int> eps;   // signs, one per Heisenberg pair

  int m() const { return static_cast<int>(eps.size()); }
};

/// Image of (t, x, y, z) under the Heisenberg-type map into C^{m+1}:
/// (x + i y, (2kt + (|x|^2 + |y|^2)/2) + i (2(lt + z) - x.y)) with the
/// eps-weighted dot products. Everything exact.
std::vector<GaussRational> embed_heisenberg(const EmbeddingParams& params, const Rational& t,
                                            const std::vector<Rational>& x,
                                            const std::vector<Rational>& y, const Rational& z);

struct Hyperquadric {
  enum class Conv { Re, Im };
  Mat<GaussRational> H;  // Hermitian, non-degenerate
  Conv conv = Conv::Re;  // which real coordinate of z_{m+1} carries the form
};

/// Validates Hermitian-ness and non-degeneracy.
Hyperquadric make_hyperquadric(Mat<GaussRational> H, Hyperquadric::Conv conv);

/// (designated real part of z_{m+1}) - sum h_ij z_i conj(z_j); exact, and
/// zero exactly on the quadric. Throws if the form value comes out non-real.
Rational quadric_residual(const Hyperquadric& Q, const std::vector<GaussRational>& point);

/// Fits (H, convention) over the candidates H = diag(eps_i / 2) with the Re
/// and Im conventions against exact samples on the t = 0 slice; returns the
/// unique exactly-fitting pair.
Hyperquadric calibrate_quadric(const EmbeddingParams& params, int samples, uint64_t seed);

/// Heisenberg group law in exponential coordinates from the bracket
/// [X_i, Y_i] = -Z: z-component composes as z + z' - (x.y' - y.x')/2 with
/// the plain dot product.
struct HeisPoint {
  std::vector<Rational> x, y;
  Rational z;
};
HeisPoint heis_mul(const HeisPoint& a, const HeisPoint& b);

/// Floating-point exponential maps for the deformation families.
struct Su2Image {
  std::complex<double> z1, z2;
  double norm2 = 0;  // = e^{2kt} on the unit sphere slice
};
Su2Image embed_su2(std::complex<double> delta, double t, std::complex<double> z1,
                   std::complex<double> z2);

struct Sl2Image {
  std::complex<double> half_plane;  // first coordinate, Im > 0
  std::complex<double> fiber;       // second coordinate, nonzero
};
Sl2Image embed_sl2(std::complex<double> delta, double t, double a, double b, double c, double d);

}  // namespace crlie
