#include "crlie/cr.hpp"

namespace crlie {

Vec<GaussRational> CRStructure::apply_J(const Vec<GaussRational>& v) const {
  auto coords = D.coords_of(v);
  if (!coords) throw Error("CRStructure: vector not in the distribution");
  Vec<GaussRational> jc = mat_vec(J, *coords);
  Vec<GaussRational> out(D.ambient(), GaussRational(0));
  for (int r = 0; r < D.dim(); ++r)
    for (int c = 0; c < D.ambient(); ++c) out[c] += jc[r] * D.basis()(r, c);
  return out;
}

CRStructure make_cr(const LieAlgebra& g, Subspace D, Mat<GaussRational> J) {
  if (g.dim() % 2 == 0) throw Error("make_cr: ambient dimension must be odd");
  if (g.dim() < 3) throw Error("make_cr: ambient dimension must be at least 3");
  if (D.ambient() != g.dim() || D.dim() != g.dim() - 1)
    throw Error("make_cr: distribution must have codimension 1");
  if (J.rows != D.dim() || J.cols != D.dim()) throw Error("make_cr: J shape mismatch");
  for (const auto& c : J.a)
    if (!c.is_real()) throw Error("make_cr: J must be real on a real distribution");
  Mat<GaussRational> j2 = J * J;
  Mat<GaussRational> minus_id = scale(Mat<GaussRational>::identity(D.dim()), GaussRational(-1));
  if (j2 != minus_id) throw Error("make_cr: J^2 != -id");
  CRStructure cr;
  cr.g = &g;
  cr.D = std::move(D);
  cr.J = std::move(J);
  return cr;
}

CRSubalgebra pair_to_k(const CRStructure& cr) {
  std::vector<Vec<GaussRational>> gens;
  for (int r = 0; r < cr.D.dim(); ++r) {
    Vec<GaussRational> x = cr.D.basis_vector(r);
    Vec<GaussRational> jx = cr.apply_J(x);
    // X - i J X
    Vec<GaussRational> w(x.size());
    for (size_t k = 0; k < x.size(); ++k) w[k] = x[k] - GaussRational::i() * jx[k];
    gens.push_back(std::move(w));
  }
  CRSubalgebra out;
  out.g = cr.g;
  out.k = Subspace::span(cr.D.ambient(), gens);
  return out;
}

CRStructure k_to_pair(const LieAlgebra& g, const Subspace& k) {
  if (!g.real_form()) throw Error("k_to_pair: ambient algebra must be a real form");
  if (k.intersect(k.conjugate()).dim() != 0)
    throw Error("k_to_pair: k intersects its conjugate");
  int m = k.dim();
  if (g.dim() != 2 * m + 1)
    throw Error("k_to_pair: k must have complex dimension (dim g - 1)/2");
  std::vector<Vec<GaussRational>> reals;
  for (int r = 0; r < m; ++r) {
    Vec<GaussRational> w = k.basis_vector(r);
    Vec<GaussRational> re(w.size()), im(w.size());
    for (size_t c = 0; c < w.size(); ++c) {
      re[c] = GaussRational(w[c].re);
      im[c] = GaussRational(w[c].im);
    }
    reals.push_back(std::move(re));
    reals.push_back(std::move(im));
  }
  Subspace D = Subspace::span(g.dim(), reals);
  if (D.dim() != 2 * m) throw Error("k_to_pair: real span degenerate");

  // J on D: decompose d = w + conj(w) with w in k, then J d = i w + conj(i w).
  Subspace kconj = k.conjugate();
  Mat<GaussRational> system(g.dim(), 2 * m);
  for (int a = 0; a < m; ++a)
    for (int r = 0; r < g.dim(); ++r) {
      system(r, a) = k.basis()(a, r);
      system(r, m + a) = kconj.basis()(a, r);
    }
  Mat<GaussRational> J(2 * m, 2 * m);
  for (int b = 0; b < 2 * m; ++b) {
    Vec<GaussRational> dvec = D.basis_vector(b);
    auto sol = solve(system, dvec);
    if (!sol) throw Error("k_to_pair: vector not in k + conj(k)");
    Vec<GaussRational> jd(g.dim(), GaussRational(0));
    for (int a = 0; a < m; ++a) {
      GaussRational ca = GaussRational::i() * (*sol)[a];
      GaussRational cb = -GaussRational::i() * (*sol)[m + a];
      for (int r = 0; r < g.dim(); ++r)
        jd[r] += ca * k.basis()(a, r) + cb * kconj.basis()(a, r);
    }
    auto coords = D.coords_of(jd);
    if (!coords) throw Error("k_to_pair: J image escapes the distribution");
    for (int r = 0; r < 2 * m; ++r) J(r, b) = (*coords)[r];
  }
  return make_cr(g, std::move(D), std::move(J));
}

bool is_cr_integrable(const CRStructure& cr) {
  const LieAlgebra& g = *cr.g;
  for (int a = 0; a < cr.D.dim(); ++a) {
    Vec<GaussRational> x = cr.D.basis_vector(a);
    Vec<GaussRational> jx = cr.apply_J(x);
    for (int b = a + 1; b < cr.D.dim(); ++b) {
      Vec<GaussRational> y = cr.D.basis_vector(b);
      Vec<GaussRational> jy = cr.apply_J(y);
      Vec<GaussRational> u = vec_add(g.bracket(jx, y), g.bracket(x, jy));
      if (!cr.D.contains(u)) return false;
      Vec<GaussRational> n = vec_sub(g.bracket(jx, jy), g.bracket(x, y));
      n = vec_sub(n, cr.apply_J(u));
      if (!vec_is_zero(n)) return false;
    }
  }
  return true;
}

bool is_regular(const LieAlgebra& g, const Subspace& k) {
  Subspace kc = k.conjugate();
  if (k.intersect(kc).dim() != 0) return false;
  return !subalgebra_closed(g, k.sum(kc));
}

LeviReport levi(const LieAlgebra& g, const Subspace& k, const KForm<GaussRational>& phi) {
  if (phi.deg != 1 || phi.n != g.dim()) throw Error("levi: phi must be a 1-form on g");
  for (const auto& [t, c] : phi.terms)
    if (!c.is_real()) throw Error("levi: phi must be real");
  int m = k.dim();
  Subspace dc = k.sum(k.conjugate());
  if (dc.dim() != 2 * m) throw Error("levi: k + conj(k) is degenerate");
  for (int r = 0; r < dc.dim(); ++r)
    if (!(phi.eval1(dc.basis_vector(r)) == GaussRational(0)))
      throw Error("levi: ker(phi) does not contain k + conj(k)");
  Mat<GaussRational> h(m, m);
  for (int a = 0; a < m; ++a) {
    Vec<GaussRational> va = k.basis_vector(a);
    for (int b = 0; b < m; ++b) {
      Vec<GaussRational> wb = k.basis_vector(b);
      for (auto& c : wb) c = conj(c);
      h(a, b) = -GaussRational::i() * phi.eval1(g.bracket(va, wb));
    }
  }
  LeviReport rep;
  rep.signature = hermitian_signature(h);
  rep.matrix = std::move(h);
  rep.normalizing_form = phi;
  return rep;
}

bool is_nondegenerate(const LeviReport& rep) { return rep.signature.zero == 0; }
bool is_strictly_pseudoconvex(const LeviReport& rep) {
  return rep.signature.zero == 0 && (rep.signature.pos == 0 || rep.signature.neg == 0);
}

KForm<GaussRational> annihilator_form(const LieAlgebra& g, const Subspace& D) {
  if (D.dim() != g.dim() - 1) throw Error("annihilator_form: expects codimension 1");
  Mat<GaussRational> rows(D.dim(), g.dim());
  for (int r = 0; r < D.dim(); ++r) rows.set_row(r, D.basis_vector(r));
  Mat<GaussRational> ann = nullspace(rows);
  if (ann.rows != 1) throw Error("annihilator_form: unexpected annihilator dimension");
  KForm<GaussRational> phi(g.dim(), 1);
  for (int c = 0; c < g.dim(); ++c) phi.add_term({c}, ann(0, c));
  return phi;
}

LeviReport levi_of(const CRStructure& cr) {
  CRSubalgebra k = pair_to_k(cr);
  return levi(*cr.g, k.k, annihilator_form(*cr.g, cr.D));
}

ReebResult reeb(const LieAlgebra& g, const KForm<GaussRational>& phi, int m) {
  if (phi.deg != 1) throw Error("reeb: phi must be a 1-form");
  int n = g.dim();
  if (n != 2 * m + 1) throw Error("reeb: dimension mismatch with m");
  KForm<GaussRational> dphi = d(g, phi);
  ReebResult out;
  KForm<GaussRational> vol = wedge(phi, wedge_power(dphi, m));
  out.contact = !vol.is_zero();

  // Linear system: phi(eta) = 1 and (i(eta) dphi)(e_j) = 0 for all j.
  Mat<GaussRational> A(1 + n, n);
  Vec<GaussRational> b(1 + n, GaussRational(0));
  for (int i = 0; i < n; ++i) A(0, i) = phi.coeff({i});
  b[0] = GaussRational(1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      // dphi(e_i, e_j)
      GaussRational v =
          (i < j) ? dphi.coeff({i, j}) : -dphi.coeff({j, i});
      A(1 + j, i) = v;
    }
  auto sol = solve(A, b);
  if (sol) {
    out.eta = *sol;
    out.multiplicity = n - rank(A);
  }
  return out;
}

bool is_normal(const LieAlgebra& g, const Subspace& k, const Vec<GaussRational>& eta) {
  for (int a = 0; a < k.dim(); ++a)
    if (!k.contains(g.bracket(eta, k.basis_vector(a)))) return false;
  return true;
}

bool cr_equivalent_via(const LinearMap& map, const CRStructure& cr1, const CRStructure& cr2) {
  auto inv = inverse(map.matrix);
  if (!inv) throw Error("cr_equivalent_via: map must be invertible");
  std::vector<Vec<GaussRational>> image;
  for (int r = 0; r < cr1.D.dim(); ++r) image.push_back(map.apply(cr1.D.basis_vector(r)));
  if (Subspace::span(cr2.D.ambient(), image) != cr2.D) return false;
  for (int r = 0; r < cr1.D.dim(); ++r) {
    Vec<GaussRational> x = cr1.D.basis_vector(r);
    Vec<GaussRational> lhs = map.apply(cr1.apply_J(x));
    Vec<GaussRational> rhs = cr2.apply_J(map.apply(x));
    if (lhs != rhs) return false;
  }
  return true;
}

NijenhuisReport nijenhuis_full(const LieAlgebra& g, const Mat<GaussRational>& J) {
  int n = g.dim();
  if (n % 2 != 0) throw Error("nijenhuis_full: algebra dimension must be even");
  if (J.rows != n || J.cols != n) throw Error("nijenhuis_full: J shape mismatch");
  if (J * J != scale(Mat<GaussRational>::identity(n), GaussRational(-1)))
    throw Error("nijenhuis_full: J^2 != -id");
  NijenhuisReport rep;
  for (int i = 0; i < n && rep.zero; ++i) {
    Vec<GaussRational> x = g.basis_vector(i);
    Vec<GaussRational> jx = J.col(i);
    for (int j = i + 1; j < n; ++j) {
      Vec<GaussRational> y = g.basis_vector(j);
      Vec<GaussRational> jy = J.col(j);
      // N(X,Y) = [JX,JY] - [X,Y] - J([X,JY] + [JX,Y])
      Vec<GaussRational> nv = vec_sub(g.bracket(jx, jy), g.bracket_basis(i, j));
      Vec<GaussRational> u = vec_add(g.bracket(x, jy), g.bracket(jx, y));
      nv = vec_sub(nv, mat_vec(J, u));
      if (!vec_is_zero(nv)) {
        rep.zero = false;
        rep.witness = {i, j};
        rep.defect = std::move(nv);
        break;
      }
    }
  }
  return rep;
}

ContactSearch contact_possible(const LieAlgebra& g, int m) {
  int n = g.dim();
  if (n != 2 * m + 1) throw Error("contact_possible: dimension mismatch with m");
  KForm<MultiPoly> phi(n, 1);
  for (int i = 0; i < n; ++i) phi.add_term({i}, MultiPoly::var(i));
  KForm<MultiPoly> vol = wedge(phi, wedge_power(d(g, phi), m));
  ContactSearch out;
  std::vector<int> top(n);
  for (int i = 0; i < n; ++i) top[i] = i;
  out.volume = vol.coeff(top);
  if (out.volume.is_zero()) return out;
  out.possible = true;

  // Deterministic witness: substitute variables one at a time, keeping the
  // polynomial nonzero; a nonzero value among 0, ±1, ±2, ... always exists
  // because the degree per variable is bounded.
  MultiPoly p = out.volume;
  std::vector<GaussRational> point(n, GaussRational(0));
  for (int k = 0; k < n; ++k) {
    int dk = p.degree_in(k);
    bool found = false;
    for (int mag = 0; mag <= dk + 1 && !found; ++mag) {
      for (int sign : {1, -1}) {
        GaussRational cand{Rational(sign * mag)};
        MultiPoly sub = p.substitute(k, cand);
        if (!sub.is_zero()) {
          point[k] = cand;
          p = std::move(sub);
          found = true;
          break;
        }
        if (mag == 0) break;
      }
    }
    if (!found) throw Error("contact_possible: witness search failed unexpectedly");
  }
  KForm<GaussRational> witness(n, 1);
  for (int i = 0; i < n; ++i) witness.add_term({i}, point[i]);
  out.witness = std::move(witness);
  return out;
}

}  // namespace crlie
