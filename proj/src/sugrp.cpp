#include "crlie/sugrp.hpp"

namespace crlie {

namespace {

Mat<GaussRational> unit(int n, int r, int c, GaussRational v) {
  Mat<GaussRational> m(n, n);
  m(r, c) = std::move(v);
  return m;
}

}  // namespace

SUModel build_su(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw Error("build_su: need p, q >= 0 with p + q >= 1");
  SUModel md;
  md.p = p;
  md.q = q;
  md.m = p + q;
  md.msize = md.m + 2;
  const int m = md.m, N = md.msize;
  md.eps.resize(m);
  for (int k = 0; k < m; ++k) md.eps[k] = (k < p) ? 1 : -1;

  // Hermitian form with anti-diagonal i corners and I_{p,q} middle block.
  md.form = Mat<GaussRational>(N, N);
  md.form(0, N - 1) = GaussRational::i();
  md.form(N - 1, 0) = -GaussRational::i();
  for (int k = 0; k < m; ++k) md.form(1 + k, 1 + k) = GaussRational(Rational(md.eps[k]));

  const GaussRational half{Rational(1, 2)};
  const GaussRational I = GaussRational::i();
  std::vector<Mat<GaussRational>> mats;
  std::vector<std::string> names;

  // grade -2: Z (the a-parameter, scaled as in the Heisenberg basis)
  mats.push_back(unit(N, N - 1, 0, half));
  names.push_back("Z");
  // grade -1: X_k, Y_k (the u-parameter)
  for (int k = 0; k < m; ++k) {
    GaussRational e{Rational(md.eps[k])};
    Mat<GaussRational> X = unit(N, 1 + k, 0, half);
    X(N - 1, 1 + k) = I * e * half;
    mats.push_back(std::move(X));
    names.push_back("X" + std::to_string(k + 1));
  }
  for (int k = 0; k < m; ++k) {
    GaussRational e{Rational(md.eps[k])};
    Mat<GaussRational> Y = unit(N, 1 + k, 0, I * e * half);
    Y(N - 1, 1 + k) = half;
    mats.push_back(std::move(Y));
    names.push_back("Y" + std::to_string(k + 1));
  }
  // grade 0: U spanning t, V_k spanning s, then off-diagonal u(p,q)
  {
    Mat<GaussRational> U(N, N);
    U(0, 0) = GaussRational(-1);
    U(N - 1, N - 1) = GaussRational(1);
    mats.push_back(std::move(U));
    names.push_back("U");
  }
  for (int k = 0; k < m; ++k) {
    // V_k = eps_k * S(d) with corner -i d, middle i(2d/m + d_j),
    // d = 1/(m+2), d_j = delta_{jk} - 1/m; then ad_{V_k} X_k = Y_k exactly.
    Rational d(1, m + 2);
    Mat<GaussRational> V(N, N);
    GaussRational e{Rational(md.eps[k])};
    V(0, 0) = e * (-I) * GaussRational(d);
    V(N - 1, N - 1) = e * (-I) * GaussRational(d);
    for (int j = 0; j < m; ++j) {
      Rational dj = (j == k) ? Rational(m - 1, m) : Rational(-1, m);
      Rational middle = Rational(2, m * (m + 2)) + dj;
      V(1 + j, 1 + j) = e * I * GaussRational(middle);
    }
    mats.push_back(std::move(V));
    names.push_back("V" + std::to_string(k + 1));
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      GaussRational ee{Rational(md.eps[j] * md.eps[k])};
      Mat<GaussRational> Wre(N, N), Wim(N, N);
      Wre(1 + j, 1 + k) = GaussRational(1);
      Wre(1 + k, 1 + j) = -ee;
      Wim(1 + j, 1 + k) = I;
      Wim(1 + k, 1 + j) = I * ee;
      mats.push_back(std::move(Wre));
      names.push_back("Wre" + std::to_string(j + 1) + std::to_string(k + 1));
      mats.push_back(std::move(Wim));
      names.push_back("Wim" + std::to_string(j + 1) + std::to_string(k + 1));
    }
  // grade +1: P_k, Q_k (the v-parameter)
  for (int k = 0; k < m; ++k) {
    GaussRational e{Rational(md.eps[k])};
    Mat<GaussRational> P = unit(N, 0, 1 + k, -I * e);
    P(1 + k, N - 1) = GaussRational(1);
    mats.push_back(std::move(P));
    names.push_back("P" + std::to_string(k + 1));
  }
  for (int k = 0; k < m; ++k) {
    GaussRational e{Rational(md.eps[k])};
    Mat<GaussRational> Q = unit(N, 0, 1 + k, -e);
    Q(1 + k, N - 1) = I;
    mats.push_back(std::move(Q));
    names.push_back("Q" + std::to_string(k + 1));
  }
  // grade +2: B (the b-parameter)
  mats.push_back(unit(N, 0, N - 1, GaussRational(1)));
  names.push_back("B");

  const int dim = static_cast<int>(mats.size());
  if (dim != (m + 2) * (m + 2) - 1) throw Error("build_su: internal dimension mismatch");

  // Defining relation and tracelessness for each basis matrix.
  for (int b = 0; b < dim; ++b) {
    Mat<GaussRational> rel = md.form * mats[b] + conj_transpose(mats[b]) * md.form;
    if (!vec_is_zero(rel.a))
      throw Error("build_su: matrix '" + names[b] + "' violates the defining relation");
    if (!trace(mats[b]).is_zero()) throw Error("build_su: matrix '" + names[b] + "' has trace != 0");
  }

  // Left inverse of the vectorization: L = (A* A)^{-1} A*.
  Mat<GaussRational> A(N * N, dim);
  for (int b = 0; b < dim; ++b)
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) A(r * N + c, b) = mats[b](r, c);
  Mat<GaussRational> Astar = conj_transpose(A);
  auto gram_inv = inverse(Astar * A);
  if (!gram_inv) throw Error("build_su: basis matrices are linearly dependent");
  md.coord_left = *gram_inv * Astar;
  md.basis_mats = std::move(mats);

  // Structure constants from matrix commutators.
  std::vector<std::tuple<int, int, Vec<GaussRational>>> brackets;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Mat<GaussRational> comm = commutator(md.basis_mats[i], md.basis_mats[j]);
      Vec<GaussRational> v(dim, GaussRational(0));
      if (!vec_is_zero(comm.a)) {
        for (int r = 0; r < dim; ++r) {
          GaussRational acc(0);
          for (int c = 0; c < N * N; ++c) {
            const GaussRational& l = md.coord_left(r, c);
            if (!l.is_zero()) acc += l * comm.a[c];
          }
          if (!acc.is_real())
            throw Error("build_su: non-real structure constant; commutator outside the real span");
          v[r] = acc;
        }
        // Confirm the expansion reproduces the commutator.
        Mat<GaussRational> back(N, N);
        for (int b = 0; b < dim; ++b)
          if (!v[b].is_zero()) back = back + scale(md.basis_mats[b], v[b]);
        if (!(back == comm)) throw Error("build_su: commutator not in the basis span");
      }
      brackets.emplace_back(i, j, std::move(v));
    }
  md.algebra = LieAlgebra::from_brackets(dim, names, brackets, true);
  md.algebra.set_name("su(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");

  // Named parts as coordinate subspaces.
  auto coord_span = [&](int lo, int hi) {  // [lo, hi)
    std::vector<Vec<GaussRational>> vecs;
    for (int k = lo; k < hi; ++k) vecs.push_back(md.algebra.basis_vector(k));
    return Subspace::span(dim, vecs);
  };
  int g0_lo = 1 + 2 * m, g0_hi = g0_lo + 1 + m + m * (m - 1);
  int g1_hi = g0_hi + 2 * m;
  md.grade[0] = coord_span(0, 1);            // g^{-2}
  md.grade[1] = coord_span(1, 1 + 2 * m);    // g^{-1}
  md.grade[2] = coord_span(g0_lo, g0_hi);    // g^0
  md.grade[3] = coord_span(g0_hi, g1_hi);    // g^{+1}
  md.grade[4] = coord_span(g1_hi, dim);      // g^{+2}
  md.heis = coord_span(0, 1 + 2 * m);
  md.t_part = coord_span(md.idx_U(), md.idx_U() + 1);
  md.s_part = coord_span(md.idx_V(0), md.idx_V(0) + m);
  md.cartan_a = md.t_part.sum(md.s_part);
  md.borel = md.heis.sum(md.cartan_a);
  md.h0 = md.grade[2].sum(md.grade[3]).sum(md.grade[4]);

  for (const auto& [part, label] :
       {std::pair<const Subspace*, const char*>{&md.heis, "heis"},
        {&md.h0, "h0"},
        {&md.cartan_a, "cartan_a"},
        {&md.borel, "borel"}})
    if (!subalgebra_closed(md.algebra, *part))
      throw Error(std::string("build_su: part '") + label + "' is not bracket-closed");

  GradingReport gr = grading(md);
  if (!gr.ok) throw Error("build_su: grading inclusion failed: " + gr.failure);
  if (md.heis.sum(md.h0).dim() != dim) throw Error("build_su: heis + h0 != g");
  return md;
}

GradingReport grading(const SUModel& md) {
  GradingReport rep;
  for (int a = 0; a < 5; ++a) rep.dims[a] = md.grade[a].dim();
  for (int a = 0; a < 5 && rep.ok; ++a)
    for (int b = 0; b < 5 && rep.ok; ++b) {
      int ga = a - 2, gb = b - 2;
      int gc = ga + gb;
      Subspace target = (gc < -2 || gc > 2) ? Subspace::zero(md.dim()) : md.grade[gc + 2];
      for (int r = 0; r < md.grade[a].dim() && rep.ok; ++r)
        for (int s = 0; s < md.grade[b].dim(); ++s) {
          Vec<GaussRational> br =
              md.algebra.bracket(md.grade[a].basis_vector(r), md.grade[b].basis_vector(s));
          if (!target.contains(br)) {
            rep.ok = false;
            rep.failure = "[g^" + std::to_string(ga) + ", g^" + std::to_string(gb) +
                          "] escapes g^" + std::to_string(gc);
            break;
          }
        }
    }
  return rep;
}

AdTableReport ad_table_check(const SUModel& md) {
  AdTableReport rep;
  const LieAlgebra& g = md.algebra;
  auto expect = [&](const Vec<GaussRational>& got, const Vec<GaussRational>& want,
                    const std::string& what) {
    if (rep.ok && got != want) {
      rep.ok = false;
      rep.failure = what;
    }
  };
  Vec<GaussRational> U = g.basis_vector(md.idx_U());
  expect(g.bracket(U, g.basis_vector(md.idx_Z())),
         vec_scale(g.basis_vector(md.idx_Z()), GaussRational(2)), "ad_U(Z) != 2Z");
  for (int k = 0; k < md.m; ++k) {
    expect(g.bracket(U, g.basis_vector(md.idx_X(k))), g.basis_vector(md.idx_X(k)),
           "ad_U(X" + std::to_string(k + 1) + ") != X" + std::to_string(k + 1));
    expect(g.bracket(U, g.basis_vector(md.idx_Y(k))), g.basis_vector(md.idx_Y(k)),
           "ad_U(Y" + std::to_string(k + 1) + ") != Y" + std::to_string(k + 1));
  }
  for (int k = 0; k < md.m; ++k) {
    Vec<GaussRational> Vk = g.basis_vector(md.idx_V(k));
    expect(g.bracket(Vk, g.basis_vector(md.idx_Z())), Vec<GaussRational>(md.dim(), GaussRational(0)),
           "ad_V(Z) != 0");
    for (int j = 0; j < md.m; ++j) {
      Vec<GaussRational> want_x =
          (j == k) ? g.basis_vector(md.idx_Y(k)) : Vec<GaussRational>(md.dim(), GaussRational(0));
      Vec<GaussRational> want_y = (j == k)
                                      ? vec_scale(g.basis_vector(md.idx_X(k)), GaussRational(-1))
                                      : Vec<GaussRational>(md.dim(), GaussRational(0));
      expect(g.bracket(Vk, g.basis_vector(md.idx_X(j))), want_x,
             "ad_V" + std::to_string(k + 1) + "(X" + std::to_string(j + 1) + ") mismatch");
      expect(g.bracket(Vk, g.basis_vector(md.idx_Y(j))), want_y,
             "ad_V" + std::to_string(k + 1) + "(Y" + std::to_string(j + 1) + ") mismatch");
    }
  }
  return rep;
}

bool complement_check(const SUModel& md, const Subspace& L) {
  if (L.ambient() != md.dim()) throw Error("complement_check: ambient mismatch");
  return L.intersect(md.h0).dim() == 0 && L.dim() + md.h0.dim() == md.dim();
}

}  // namespace crlie
