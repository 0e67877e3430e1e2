#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crlie/catalog.hpp"
#include "crlie/cr.hpp"
#include "crlie/expr.hpp"
#include "crlie/rng.hpp"

using namespace crlie;

namespace {

CatalogEntry load(const std::string& name) {
  return load_catalog(default_catalog_dir() + "/" + name + ".json");
}

using GForm = KForm<GaussRational>;

Subspace k_from_entry(const CatalogEntry& e) {
  std::vector<Vec<GaussRational>> vecs;
  for (const auto& expr : e.cr->k)
    vecs.push_back(parse_linear_combination(expr, e.algebra.basis_names()));
  return Subspace::span(e.algebra.dim(), vecs);
}

GForm form_from_entry(const CatalogEntry& e) {
  Vec<GaussRational> coeffs = parse_linear_combination(e.cr->phi, e.algebra.basis_names());
  GForm phi(e.algebra.dim(), 1);
  for (int i = 0; i < e.algebra.dim(); ++i) phi.add_term({i}, coeffs[i]);
  return phi;
}

// k_t = <X + t i Y> on su2 (t > 0); k_{Z,t} = <X - t i Y> on sl2R.
Subspace su2_kt(const LieAlgebra& su2, const Rational& t) {
  Vec<GaussRational> v = su2.basis_vector(0);
  v[1] = GaussRational(Rational(0), t);
  return Subspace::span(3, {v});
}
Subspace sl2_kZt(const LieAlgebra& sl2, const Rational& t) {
  Vec<GaussRational> v = sl2.basis_vector(0);
  v[1] = GaussRational(Rational(0), -t);
  return Subspace::span(3, {v});
}
Subspace sl2_kXt(const LieAlgebra& sl2, const Rational& t) {
  Vec<GaussRational> v = sl2.basis_vector(1);  // Y - t i Z
  v[2] = GaussRational(Rational(0), -t);
  return Subspace::span(3, {v});
}

}  // namespace

TEST_CASE("pair_to_k and k_to_pair on heis3") {
  CatalogEntry h3 = load("heis3");
  Subspace k = k_from_entry(h3);
  CRStructure cr = k_to_pair(h3.algebra, k);
  CHECK(cr.D.dim() == 2);
  CHECK(cr.D.contains(h3.algebra.basis_vector(0)));
  CHECK(cr.D.contains(h3.algebra.basis_vector(1)));
  // JX = Y for k = <X - iY>
  CHECK(cr.apply_J(h3.algebra.basis_vector(0)) == h3.algebra.basis_vector(1));
  CRSubalgebra back = pair_to_k(cr);
  CHECK(back.k == k);

  // A real line is self-conjugate and must be rejected.
  Subspace bad = Subspace::span(3, {h3.algebra.basis_vector(0)});
  CHECK_THROWS_AS(k_to_pair(h3.algebra, bad), Error);
}

TEST_CASE("pair to k to pair round trip") {
  CatalogEntry h5 = load("heis5");
  Rng rng(27);
  int built = 0;
  while (built < 8) {
    // random symplectic-compatible J on D = span(X, Y): block J with
    // J e_a = sum c_ab e_b constrained by J^2 = -1 via a 2x2-block trick
    Rational a = rng.rational(2, 2);
    Rational b = rng.nonzero_rational(2, 2);
    Rational c = (Rational(-1) - a * a) / b;
    Mat<GaussRational> J(4, 4);
    J(0, 0) = GaussRational(a);
    J(1, 0) = GaussRational(b);
    J(0, 1) = GaussRational(c);
    J(1, 1) = GaussRational(-a);
    J(2, 2) = GaussRational(a);
    J(3, 2) = GaussRational(b);
    J(2, 3) = GaussRational(c);
    J(3, 3) = GaussRational(-a);
    std::vector<Vec<GaussRational>> dv;
    for (int k = 0; k < 4; ++k) dv.push_back(h5.algebra.basis_vector(k));
    CRStructure cr = make_cr(h5.algebra, Subspace::span(5, dv), J);
    CRSubalgebra k = pair_to_k(cr);
    CRStructure back = k_to_pair(h5.algebra, k.k);
    CHECK(back.D == cr.D);
    CHECK(back.J == cr.J);
    ++built;
  }
}

TEST_CASE("cr constructor rejections") {
  CatalogEntry h3 = load("heis3");
  LieAlgebra even = LieAlgebra::from_brackets(4, {"A", "B", "C", "D"}, {});
  Subspace D3 = Subspace::span(4, {even.basis_vector(0), even.basis_vector(1),
                                   even.basis_vector(2)});
  Mat<GaussRational> J(3, 3);
  CHECK_THROWS_AS(make_cr(even, D3, J), Error);  // even ambient

  LieAlgebra r1 = LieAlgebra::from_brackets(1, {"A"}, {});
  CHECK_THROWS_AS(make_cr(r1, Subspace::zero(1), Mat<GaussRational>(0, 0)), Error);  // dim < 3

  // J^2 != -id rejected
  Subspace D = Subspace::span(3, {h3.algebra.basis_vector(0), h3.algebra.basis_vector(1)});
  Mat<GaussRational> badJ = Mat<GaussRational>::identity(2);
  CHECK_THROWS_AS(make_cr(h3.algebra, D, badJ), Error);
}

TEST_CASE("integrability examples") {
  CatalogEntry h3 = load("heis3");
  CHECK(is_cr_integrable(k_to_pair(h3.algebra, k_from_entry(h3))));

  // heis5 with JX1 = Y1, JX2 = -Y2
  CatalogEntry h5 = load("heis5");
  Subspace k = Subspace::span(
      5, {parse_linear_combination("X1 - i Y1", h5.algebra.basis_names()),
          parse_linear_combination("X2 + i Y2", h5.algebra.basis_names())});
  CHECK(is_cr_integrable(k_to_pair(h5.algebra, k)));
}

TEST_CASE("any 3-dimensional contact pair is integrable") {
  // On 3-dimensional algebras N_J vanishes identically on the 2-plane D.
  Rng rng(13);
  for (const char* name : {"su2", "sl2R", "heis3", "aff_plus_R", "l1"}) {
    LieAlgebra g = load(name).algebra;
    int built = 0;
    while (built < 6) {
      // random J with J^2 = -1 on a random 2-plane: J e1 = a e1 + b e2,
      // J e2 = c e1 - a e2 with a^2 + bc = -1
      Rational a = rng.rational(2, 2);
      Rational b = rng.nonzero_rational(2, 2);
      Rational c = (Rational(-1) - a * a) / b;
      Vec<GaussRational> u(3), v(3);
      for (int k = 0; k < 3; ++k) {
        u[k] = GaussRational(rng.rational(2, 1));
        v[k] = GaussRational(rng.rational(2, 1));
      }
      Subspace D = Subspace::span(3, {u, v});
      if (D.dim() != 2) continue;
      Mat<GaussRational> J(2, 2);
      J(0, 0) = GaussRational(a);
      J(1, 0) = GaussRational(b);
      J(0, 1) = GaussRational(c);
      J(1, 1) = GaussRational(-a);
      CRStructure cr = make_cr(g, D, J);
      CHECK(is_cr_integrable(cr));
      ++built;
    }
  }
}

TEST_CASE("regularity") {
  CatalogEntry h3 = load("heis3");
  const auto& names = h3.algebra.basis_names();
  CHECK(is_regular(h3.algebra, Subspace::span(3, {parse_linear_combination("X1 - i Y1", names)})));
  CHECK_FALSE(is_regular(h3.algebra, Subspace::span(3, {parse_linear_combination("X1", names)})));
  // k = <X - iZ> is degenerate: span{X, Z} is a subalgebra
  CHECK_FALSE(is_regular(h3.algebra, Subspace::span(3, {parse_linear_combination("X1 - i Z", names)})));
}

TEST_CASE("levi forms on heisenberg algebras") {
  CatalogEntry h3 = load("heis3");
  Subspace k = k_from_entry(h3);
  GForm z = form_from_entry(h3);
  LeviReport rep = levi(h3.algebra, k, z);
  CHECK(rep.matrix.rows == 1);
  CHECK(rep.matrix(0, 0) == GaussRational(-2));
  CHECK(rep.signature == Signature{0, 1, 0});
  CHECK(is_nondegenerate(rep));
  CHECK(is_strictly_pseudoconvex(rep));

  CatalogEntry h5 = load("heis5");
  Subspace kmix = Subspace::span(
      5, {parse_linear_combination("X1 - i Y1", h5.algebra.basis_names()),
          parse_linear_combination("X2 + i Y2", h5.algebra.basis_names())});
  LeviReport mix = levi(h5.algebra, kmix, form_from_entry(h5));
  CHECK(mix.signature == Signature{1, 1, 0});
  CHECK(is_nondegenerate(mix));
  CHECK_FALSE(is_strictly_pseudoconvex(mix));

  // degenerate: k = <X - iZ> with phi = y
  GForm y(3, 1);
  y.add_term({1}, GaussRational(1));
  Subspace kdeg =
      Subspace::span(3, {parse_linear_combination("X1 - i Z", h3.algebra.basis_names())});
  LeviReport deg = levi(h3.algebra, kdeg, y);
  CHECK(deg.signature == Signature{0, 0, 1});
  CHECK_FALSE(is_nondegenerate(deg));
  CHECK_FALSE(is_strictly_pseudoconvex(deg));
}

TEST_CASE("levi properties: hermitian, sign flip, scale invariance") {
  CatalogEntry h5 = load("heis5");
  Subspace k = k_from_entry(h5);
  GForm z = form_from_entry(h5);
  Rng rng(19);
  LeviReport rep = levi(h5.algebra, k, z);
  // Hermitian
  CHECK(rep.matrix == conj_transpose(rep.matrix));
  // phi -> -phi flips the signature
  LeviReport neg = levi(h5.algebra, k, GaussRational(-1) * z);
  CHECK(neg.signature.pos == rep.signature.neg);
  CHECK(neg.signature.neg == rep.signature.pos);
  // nondegeneracy invariant under nonzero scaling
  for (int t = 0; t < 5; ++t) {
    GaussRational c{rng.nonzero_rational()};
    LeviReport sc = levi(h5.algebra, k, c * z);
    CHECK(is_nondegenerate(sc) == is_nondegenerate(rep));
  }
  // congruence invariance under change of k-basis
  for (int t = 0; t < 5; ++t) {
    Mat<GaussRational> T(2, 2);
    do {
      for (auto& v : T.a) v = rng.gauss(2, 1);
    } while (!inverse(T));
    std::vector<Vec<GaussRational>> newb;
    for (int r = 0; r < 2; ++r) {
      Vec<GaussRational> w(5, GaussRational(0));
      for (int s = 0; s < 2; ++s)
        w = vec_add(w, vec_scale(k.basis_vector(s), T(r, s)));
      newb.push_back(w);
    }
    LeviReport rep2 = levi(h5.algebra, Subspace::span(5, newb), z);
    CHECK(rep2.signature == rep.signature);
  }
}

TEST_CASE("reeb fields") {
  CatalogEntry h3 = load("heis3");
  ReebResult r = reeb(h3.algebra, form_from_entry(h3), 1);
  CHECK(r.contact);
  REQUIRE(r.eta.has_value());
  CHECK(*r.eta == h3.algebra.basis_vector(2));  // Z
  CHECK(r.multiplicity == 0);

  // aff_plus_R with phi = z (the dual of Z' in the primed frame): eta = Z - Y
  CatalogEntry aff = load("aff_plus_R");
  GForm z(3, 1);
  z.add_term({2}, GaussRational(1));
  ReebResult ra = reeb(aff.algebra, z, 1);
  CHECK(ra.contact);
  REQUIRE(ra.eta.has_value());
  Vec<GaussRational> exp_eta = parse_linear_combination("Z - Y", aff.algebra.basis_names());
  CHECK(*ra.eta == exp_eta);
  // the defining identities hold exactly
  GForm dz = d(aff.algebra, z);
  CHECK(interior(*ra.eta, dz).is_zero());
  CHECK(z.eval1(*ra.eta) == GaussRational(1));

  // abelian R^3: no contact form
  LieAlgebra ab = LieAlgebra::from_brackets(3, {"X", "Y", "Z"}, {});
  ReebResult rab = reeb(ab, z, 1);
  CHECK_FALSE(rab.contact);
  CHECK(rab.multiplicity == 2);  // d phi = 0 leaves a 2-dimensional solution set
}

TEST_CASE("reeb uniqueness on contact forms") {
  Rng rng(43);
  CatalogEntry h5 = load("heis5");
  for (int t = 0; t < 10; ++t) {
    // random contact form z + (small perturbation keeping contact)
    GForm phi(5, 1);
    phi.add_term({4}, GaussRational(rng.nonzero_rational(3, 2)));
    phi.add_term({0}, GaussRational(rng.rational(2, 2)));
    phi.add_term({2}, GaussRational(rng.rational(2, 2)));
    ReebResult r = reeb(h5.algebra, phi, 2);
    if (!r.contact) continue;
    REQUIRE(r.eta.has_value());
    CHECK(r.multiplicity == 0);
    CHECK(phi.eval1(*r.eta) == GaussRational(1));
    CHECK(interior(*r.eta, d(h5.algebra, phi)).is_zero());
  }
}

TEST_CASE("normality of the deformation families") {
  CatalogEntry su2 = load("su2");
  CatalogEntry sl2 = load("sl2R");
  GForm z(3, 1);
  z.add_term({2}, GaussRational(1));
  std::vector<Rational> ts{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  for (const Rational& t : ts) {
    ReebResult rsu = reeb(su2.algebra, z, 1);
    REQUIRE(rsu.eta.has_value());
    CHECK(is_normal(su2.algebra, su2_kt(su2.algebra, t), *rsu.eta) == (t == Rational(1)));

    ReebResult rsl = reeb(sl2.algebra, z, 1);
    REQUIRE(rsl.eta.has_value());
    CHECK(is_normal(sl2.algebra, sl2_kZt(sl2.algebra, t), *rsl.eta) == (t == Rational(1)));

    // k_{X,t} lives over D_X = <Y, Z> with contact form x
    GForm x(3, 1);
    x.add_term({0}, GaussRational(1));
    ReebResult rx = reeb(sl2.algebra, x, 1);
    REQUIRE(rx.eta.has_value());
    CHECK_FALSE(is_normal(sl2.algebra, sl2_kXt(sl2.algebra, t), *rx.eta));
  }
  // heis5: normality holds for any epsilon pattern
  CatalogEntry h5 = load("heis5");
  for (const char* e2 : {"X2 - i Y2", "X2 + i Y2"}) {
    Subspace k = Subspace::span(
        5, {parse_linear_combination("X1 - i Y1", h5.algebra.basis_names()),
            parse_linear_combination(e2, h5.algebra.basis_names())});
    CHECK(is_normal(h5.algebra, k, h5.algebra.basis_vector(4)));
  }
}

TEST_CASE("strict pseudoconvexity of the su2 family") {
  CatalogEntry su2 = load("su2");
  GForm z(3, 1);
  z.add_term({2}, GaussRational(1));
  for (const Rational& t : {Rational(1, 2), Rational(1), Rational(3)}) {
    LeviReport rep = levi(su2.algebra, su2_kt(su2.algebra, t), z);
    CHECK(is_strictly_pseudoconvex(rep));
  }
}

TEST_CASE("cr equivalence via linear maps") {
  CatalogEntry aff = load("aff_plus_R");
  CatalogEntry sl2 = load("sl2R");
  CRStructure cr_aff = k_to_pair(aff.algebra, k_from_entry(aff));
  CRStructure cr_sl2 = k_to_pair(sl2.algebra, sl2_kZt(sl2.algebra, Rational(1)));
  LinearMap id{3, 3, Mat<GaussRational>::identity(3)};
  CHECK(cr_equivalent_via(id, cr_aff, cr_sl2));
  CHECK(cr_equivalent_via(id, cr_aff, cr_aff));

  // su2: k_1 vs k_2 differ as CR structures even though D agrees
  CatalogEntry su2 = load("su2");
  CRStructure c1 = k_to_pair(su2.algebra, su2_kt(su2.algebra, Rational(1)));
  CRStructure c2 = k_to_pair(su2.algebra, su2_kt(su2.algebra, Rational(2)));
  CHECK_FALSE(cr_equivalent_via(id, c1, c2));
}

TEST_CASE("nijenhuis on the complex-structure families") {
  // R + heis3 with J from the k=1, l=0, eps=+1 family member:
  // J T = Z, J Z = -T, J X = Y, J Y = -X  (basis order T, X1, Y1, Z)
  CatalogEntry rh3 = load("r_plus_heis3");
  Mat<GaussRational> J(4, 4);
  J(3, 0) = GaussRational(1);   // T -> Z
  J(0, 3) = GaussRational(-1);  // Z -> -T
  J(2, 1) = GaussRational(1);   // X -> Y
  J(1, 2) = GaussRational(-1);  // Y -> -X
  CHECK(nijenhuis_full(rh3.algebra, J).zero);

  // u(2) with the delta = 1 family member: J T = Z, J Z = -T, J X = Y, J Y = -X
  CatalogEntry u2 = load("u2");
  CHECK(nijenhuis_full(u2.algebra, J).zero);

  // an arbitrary J off the family is not integrable:
  // T -> X, X -> -T, Y -> Z, Z -> -Y
  Mat<GaussRational> J2(4, 4);
  J2(1, 0) = GaussRational(1);
  J2(0, 1) = GaussRational(-1);
  J2(3, 2) = GaussRational(1);
  J2(2, 3) = GaussRational(-1);
  NijenhuisReport bad = nijenhuis_full(rh3.algebra, J2);
  CHECK_FALSE(bad.zero);
  CHECK(bad.witness.has_value());

  // J^2 != -id rejected
  CHECK_THROWS_AS(nijenhuis_full(rh3.algebra, Mat<GaussRational>::identity(4)), Error);
}

TEST_CASE("contact possibility certificates") {
  // equal-weight R^2 x| R: phi ^ dphi vanishes identically
  LieAlgebra r2r = LieAlgebra::from_brackets(
      3, {"X", "Y", "U"},
      {{0, 2, parse_linear_combination("X", {"X", "Y", "U"})},
       {1, 2, parse_linear_combination("Y", {"X", "Y", "U"})}});
  ContactSearch cs = contact_possible(r2r, 1);
  CHECK_FALSE(cs.possible);
  CHECK(cs.volume.is_zero());

  // heis3: contact exists with a rational witness
  CatalogEntry h3 = load("heis3");
  ContactSearch ch = contact_possible(h3.algebra, 1);
  CHECK(ch.possible);
  REQUIRE(ch.witness.has_value());
  GForm vol = wedge(*ch.witness, d(h3.algebra, *ch.witness));
  CHECK_FALSE(vol.is_zero());

  // equal-weight R^4 x| R at m = 2: identically zero again
  std::vector<std::tuple<int, int, Vec<GaussRational>>> br;
  for (int k = 0; k < 4; ++k) {
    Vec<GaussRational> v(5, GaussRational(0));
    v[k] = GaussRational(1);
    br.emplace_back(k, 4, v);
  }
  LieAlgebra r4r = LieAlgebra::from_brackets(5, {"E1", "E2", "E3", "E4", "U"}, br);
  ContactSearch c4 = contact_possible(r4r, 2);
  CHECK_FALSE(c4.possible);

  // weight-(1,2) algebra l1 does admit a contact form
  ContactSearch cl1 = contact_possible(load("l1").algebra, 1);
  CHECK(cl1.possible);
  REQUIRE(cl1.witness.has_value());
}

TEST_CASE("center equals the Reeb span on heis5 and heis7") {
  // randomized non-degenerate CR structures: random eps patterns and random
  // symplectic basis changes; the center is spanned by the Reeb field and
  // d(phi) is non-degenerate on the quotient by the center.
  Rng rng(42);
  for (const char* name : {"heis5", "heis7"}) {
    CatalogEntry e = load(name);
    const LieAlgebra& g = e.algebra;
    int m = (g.dim() - 1) / 2;
    GForm z(g.dim(), 1);
    z.add_term({g.dim() - 1}, GaussRational(1));
    int done = 0;
    while (done < 20) {
      // random eps pattern
      std::vector<int> eps(m);
      for (int k = 0; k < m; ++k) eps[k] = rng.range(0, 1) ? 1 : -1;
      // random symplectic map via generators acting on (X..., Y...) coords
      Mat<GaussRational> S = Mat<GaussRational>::identity(2 * m);
      for (int step = 0; step < 4; ++step) {
        Mat<GaussRational> Gm = Mat<GaussRational>::identity(2 * m);
        int kind = static_cast<int>(rng.range(0, 2));
        if (kind == 0) {
          // [[I, B],[0, I]] with B symmetric
          for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
              GaussRational v{rng.rational(1, 1)};
              Gm(a, m + b) = v;
              Gm(b, m + a) = v;
            }
        } else if (kind == 1) {
          for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
              GaussRational v{rng.rational(1, 1)};
              Gm(m + a, b) = v;
              Gm(m + b, a) = v;
            }
        } else {
          // [[A, 0],[0, A^{-T}]]
          Mat<GaussRational> A(m, m);
          do {
            for (auto& v : A.a) v = GaussRational(rng.rational(1, 1));
          } while (!inverse(A));
          Mat<GaussRational> AiT = transpose(*inverse(A));
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              Gm(a, b) = A(a, b);
              Gm(m + a, m + b) = AiT(a, b);
            }
        }
        S = S * Gm;
      }
      // J_eps conjugated by S, acting on the distribution D = span(X, Y)
      Mat<GaussRational> J0(2 * m, 2 * m);
      for (int k = 0; k < m; ++k) {
        J0(m + k, k) = GaussRational(Rational(eps[k]));
        J0(k, m + k) = GaussRational(Rational(-eps[k]));
      }
      Mat<GaussRational> J = S * J0 * *inverse(S);
      std::vector<Vec<GaussRational>> dvecs;
      for (int k = 0; k < 2 * m; ++k) dvecs.push_back(g.basis_vector(k));
      CRStructure cr = make_cr(g, Subspace::span(g.dim(), dvecs), J);
      REQUIRE(is_cr_integrable(cr));
      LeviReport rep = levi_of(cr);
      REQUIRE(is_nondegenerate(rep));

      ReebResult r = reeb(g, z, m);
      REQUIRE(r.contact);
      REQUIRE(r.eta.has_value());
      Subspace zc = center(g);
      CHECK(zc == Subspace::span(g.dim(), {*r.eta}));

      // the quotient 2-form: d(phi) pushed to g/center is non-degenerate
      Quotient quo = quotient(g, zc);
      GForm dz = d(g, z);
      Mat<GaussRational> omega(quo.algebra.dim(), quo.algebra.dim());
      // choose lifts: free columns are the non-pivot coordinates
      std::vector<int> lifts;
      std::vector<bool> piv(g.dim(), false);
      for (int pcol : zc.pivots()) piv[pcol] = true;
      for (int c = 0; c < g.dim(); ++c)
        if (!piv[c]) lifts.push_back(c);
      for (size_t a = 0; a < lifts.size(); ++a)
        for (size_t b = 0; b < lifts.size(); ++b) {
          int i = lifts[a], j = lifts[b];
          omega(static_cast<int>(a), static_cast<int>(b)) =
              (i < j) ? dz.coeff({i, j}) : (i > j ? -dz.coeff({j, i}) : GaussRational(0));
        }
      CHECK(rank(omega) == quo.algebra.dim());
      ++done;
    }
  }
}

TEST_CASE("a J that skews the symplectic pairing is not integrable") {
  CatalogEntry h5 = load("heis5");
  // Basis order X1, X2, Y1, Y2. JX1 = Y1, JY1 = -X1,
  // JX2 = Y2 + X1, JY2 = -X2 - Y1: J^2 = -id but omega(J.,J.) != omega(.,.)
  Mat<GaussRational> J(4, 4);
  J(2, 0) = GaussRational(1);
  J(0, 2) = GaussRational(-1);
  J(3, 1) = GaussRational(1);
  J(0, 1) = GaussRational(1);
  J(1, 3) = GaussRational(-1);
  J(2, 3) = GaussRational(-1);
  std::vector<Vec<GaussRational>> dv;
  for (int k = 0; k < 4; ++k) dv.push_back(h5.algebra.basis_vector(k));
  CRStructure cr = make_cr(h5.algebra, Subspace::span(5, dv), J);
  CHECK_FALSE(is_cr_integrable(cr));
}
