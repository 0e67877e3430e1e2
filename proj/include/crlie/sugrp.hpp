#pragma once

#include <array>

#include "crlie/forms.hpp"
#include "crlie/liealg.hpp"

namespace crlie {

/// su(p+1, q+1) in the anti-diagonal Hermitian-form realization, with the
/// distinguished subalgebras and the 5-step grading. Basis ordering:
///   Z | X_1..X_m | Y_1..Y_m | U | V_1..V_m | W.. (off-diagonal u(p,q)) |
///   P_1..P_m | Q_1..Q_m | B
/// where {X,Y,Z} span the Heisenberg part, U spans t, {V_k} span s, and the
/// remaining grade-0, +1, +2 pieces fill the isotropy subalgebra h0.
struct SUModel {
  int p = 0, q = 0, m = 0;  // m = p + q
  int msize = 0;            // matrices are msize x msize, msize = m + 2
  std::vector<int> eps;     // diagonal of I_{p,q}

  LieAlgebra algebra;
  std::vector<Mat<GaussRational>> basis_mats;
  Mat<GaussRational> form;        // the Hermitian form F
  Mat<GaussRational> coord_left;  // dim x msize^2 left inverse of vectorization

  Subspace heis, h0, cartan_a, t_part, s_part, borel;
  std::array<Subspace, 5> grade;  // g^{-2} .. g^{+2}

  int idx_Z() const { return 0; }
  int idx_X(int k) const { return 1 + k; }          // k = 0..m-1
  int idx_Y(int k) const { return 1 + m + k; }      // k = 0..m-1
  int idx_U() const { return 1 + 2 * m; }
  int idx_V(int k) const { return 2 + 2 * m + k; }  // k = 0..m-1
  int idx_B() const { return algebra.dim() - 1; }

  int dim() const { return algebra.dim(); }

  /// Row-major vectorization of an msize x msize matrix.
  template <class K>
  Vec<K> vectorize(const Mat<K>& M) const {
    if (M.rows != msize || M.cols != msize) throw Error("SUModel: matrix size mismatch");
    return M.a;
  }

  /// Coordinates of a matrix in the model basis; throws when the matrix is
  /// not in the real span (membership is re-verified after the solve).
  template <class K>
  Vec<K> coords_of_matrix(const Mat<K>& M) const {
    Vec<K> v = vectorize(M);
    Vec<K> coords(dim(), K(0));
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < msize * msize; ++c) {
        const GaussRational& l = coord_left(r, c);
        if (!l.is_zero()) coords[r] = coords[r] + promote_scalar<K>(l) * v[c];
      }
    // Verify the solution reproduces M exactly.
    Mat<K> back(msize, msize);
    for (int b = 0; b < dim(); ++b) {
      if (coords[b] == K(0)) continue;
      for (int r = 0; r < msize; ++r)
        for (int c = 0; c < msize; ++c) {
          const GaussRational& e = basis_mats[b](r, c);
          if (!e.is_zero()) back(r, c) = back(r, c) + coords[b] * promote_scalar<K>(e);
        }
    }
    if (!(back == M)) throw Error("SUModel: matrix is not in su(p+1,q+1)");
    return coords;
  }

  template <class K>
  Mat<K> matrix_of_coords(const Vec<K>& coords) const {
    Mat<K> out(msize, msize);
    for (int b = 0; b < dim(); ++b) {
      if (coords[b] == K(0)) continue;
      for (int r = 0; r < msize; ++r)
        for (int c = 0; c < msize; ++c) {
          const GaussRational& e = basis_mats[b](r, c);
          if (!e.is_zero()) out(r, c) = out(r, c) + coords[b] * promote_scalar<K>(e);
        }
    }
    return out;
  }
};

/// Builds the model and verifies the defining relation F M + M* F = 0 and
/// tracelessness for every basis matrix, bracket closure of the named parts,
/// and the grading inclusions. Aborts with the offending matrix otherwise.
SUModel build_su(int p, int q);

/// The five grading summands with their dimensions; recomputes the
/// inclusion [g^i, g^j] in g^{i+j} and reports the first failure.
struct GradingReport {
  bool ok = true;
  std::array<int, 5> dims{};
  std::string failure;
};
GradingReport grading(const SUModel& model);

/// Checks the ad_U / ad_{V_k} action tables on the Heisenberg basis.
struct AdTableReport {
  bool ok = true;
  std::string failure;
};
AdTableReport ad_table_check(const SUModel& model);

/// Whether L is a vector-space complement of the isotropy subalgebra.
bool complement_check(const SUModel& model, const Subspace& L);

}  // namespace crlie
