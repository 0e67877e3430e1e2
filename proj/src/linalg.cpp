#include "crlie/linalg.hpp"

namespace crlie {

Mat<GaussRational> conj_transpose(const Mat<GaussRational>& A) {
  Mat<GaussRational> t(A.cols, A.rows);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) t(c, r) = conj(A(r, c));
  return t;
}

Signature hermitian_signature(Mat<GaussRational> h) {
  if (h.rows != h.cols) throw Error("hermitian_signature: matrix not square");
  const int n = h.rows;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c)
      if (h(r, c) != conj(h(c, r))) throw Error("hermitian_signature: matrix not Hermitian");

  Signature sig;
  int k = 0;
  while (k < n) {
    // Prefer a nonzero diagonal entry in the active block.
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (!h(r, r).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      // All-zero diagonal: find an off-diagonal entry and complete it onto
      // the diagonal via v_r += lambda * v_c.
      int fr = -1, fc = -1;
      for (int r = k; r < n && fr < 0; ++r)
        for (int c = k; c < n; ++c)
          if (r != c && !h(r, c).is_zero()) {
            fr = r;
            fc = c;
            break;
          }
      if (fr < 0) {
        sig.zero += n - k;
        return sig;
      }
      GaussRational lambda = h(fr, fc).re.is_zero() ? GaussRational::i() : GaussRational(1);
      // Row then column update for the congruence by I + lambda*E_{fr,fc}.
      for (int c = 0; c < n; ++c) h(fr, c) += lambda * h(fc, c);
      for (int r = 0; r < n; ++r) h(r, fr) += conj(lambda) * h(r, fc);
      piv = fr;
    }
    if (piv != k) {
      // Swap basis vectors k and piv.
      for (int c = 0; c < n; ++c) std::swap(h(k, c), h(piv, c));
      for (int r = 0; r < n; ++r) std::swap(h(r, k), h(r, piv));
    }
    GaussRational d = h(k, k);
    if (!d.is_real()) throw Error("hermitian_signature: non-real diagonal entry");
    std::vector<GaussRational> factors(n, GaussRational(0));
    for (int r = k + 1; r < n; ++r) factors[r] = h(r, k) / d;
    for (int r = k + 1; r < n; ++r) {
      if (factors[r].is_zero()) continue;
      for (int c = 0; c < n; ++c) h(r, c) -= factors[r] * h(k, c);
    }
    for (int c = k + 1; c < n; ++c) {
      if (factors[c].is_zero()) continue;
      for (int r = 0; r < n; ++r) h(r, c) -= conj(factors[c]) * h(r, k);
    }
    if (d.re.sign() > 0)
      ++sig.pos;
    else
      ++sig.neg;
    ++k;
  }
  return sig;
}

}  // namespace crlie
