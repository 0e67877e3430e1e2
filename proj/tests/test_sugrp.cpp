#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crlie/sugrp.hpp"

using namespace crlie;

TEST_CASE("su(2,1) dimensions and parts") {
  SUModel md = build_su(1, 0);
  CHECK(md.dim() == 8);
  CHECK(md.heis.dim() == 3);
  CHECK(md.h0.dim() == 5);
  CHECK(md.borel.dim() == 5);
  CHECK(md.cartan_a.dim() == 2);
  CHECK(check_jacobi(md.algebra).pass);
}

TEST_CASE("su sizes for the other configurations") {
  SUModel a = build_su(2, 0);
  CHECK(a.dim() == 15);
  CHECK(check_jacobi(a.algebra).pass);
  SUModel b = build_su(1, 1);
  CHECK(b.dim() == 15);
  CHECK(check_jacobi(b.algebra).pass);
}

TEST_CASE("basis matrices are traceless") {
  SUModel md = build_su(1, 1);
  for (const auto& M : md.basis_mats) CHECK(trace(M).is_zero());
}

TEST_CASE("grading dims and inclusions") {
  for (auto [p, q] : {std::pair<int, int>{1, 0}, {2, 0}, {1, 1}}) {
    SUModel md = build_su(p, q);
    CAPTURE(p);
    CAPTURE(q);
    GradingReport gr = grading(md);
    CHECK(gr.ok);
    int m = p + q;
    CHECK(gr.dims[0] == 1);
    CHECK(gr.dims[1] == 2 * m);
    CHECK(gr.dims[2] == m * m + 1);
    CHECK(gr.dims[3] == 2 * m);
    CHECK(gr.dims[4] == 1);
  }
}

TEST_CASE("h0 is the sum of the nonnegative grades") {
  SUModel md = build_su(1, 1);
  CHECK(md.h0 == md.grade[2].sum(md.grade[3]).sum(md.grade[4]));
  CHECK(md.cartan_a == md.t_part.sum(md.s_part));
}

TEST_CASE("heis + h0 = g and borel derived algebra") {
  for (auto [p, q] : {std::pair<int, int>{1, 0}, {2, 0}, {1, 1}}) {
    SUModel md = build_su(p, q);
    CHECK(md.heis.sum(md.h0).dim() == md.dim());
    CHECK(md.heis.intersect(md.h0).dim() == 0);
    CHECK(bracket_span(md.algebra, md.borel, md.borel) == md.heis);
  }
}

TEST_CASE("heisenberg brackets inside the model") {
  SUModel md = build_su(1, 1);
  const LieAlgebra& g = md.algebra;
  for (int i = 0; i < md.m; ++i)
    for (int j = 0; j < md.m; ++j) {
      Vec<GaussRational> br = g.bracket(g.basis_vector(md.idx_X(i)), g.basis_vector(md.idx_Y(j)));
      Vec<GaussRational> want(md.dim(), GaussRational(0));
      if (i == j) want[md.idx_Z()] = GaussRational(-1);
      CHECK(br == want);  // [X_i, Y_j] = -delta_{ij} Z
    }
}

TEST_CASE("ad tables match") {
  for (auto [p, q] : {std::pair<int, int>{1, 0}, {2, 0}, {1, 1}}) {
    AdTableReport rep = ad_table_check(build_su(p, q));
    CAPTURE(rep.failure);
    CHECK(rep.ok);
  }
}

TEST_CASE("killing signature against the compact/noncompact split") {
  // pos = 2(p+1)(q+1), neg = (p+1)^2 + (q+1)^2 - 1 for su(p+1,q+1)
  for (auto [p, q] : {std::pair<int, int>{1, 0}, {2, 0}, {1, 1}}) {
    SUModel md = build_su(p, q);
    Signature sig = killing_signature(md.algebra);
    CHECK(sig.pos == 2 * (p + 1) * (q + 1));
    CHECK(sig.neg == (p + 1) * (p + 1) + (q + 1) * (q + 1) - 1);
    CHECK(sig.zero == 0);
  }
}

TEST_CASE("complement predicate") {
  SUModel md = build_su(1, 0);
  CHECK(complement_check(md, md.heis));
  CHECK_FALSE(complement_check(md, md.borel));
  CHECK_FALSE(complement_check(md, md.h0));
}

TEST_CASE("radical of the model and of the borel part") {
  SUModel md = build_su(1, 0);
  CHECK(radical(md.algebra).dim() == 0);  // semisimple
  LieAlgebra borel = subalgebra_on(md.algebra, md.borel);
  CHECK(radical(borel).dim() == borel.dim());  // solvable
}

TEST_CASE("matrix coordinate round trip rejects outsiders") {
  SUModel md = build_su(1, 0);
  Vec<GaussRational> coords(md.dim(), GaussRational(0));
  coords[md.idx_X(0)] = GaussRational(Rational(2, 3));
  coords[md.idx_B()] = GaussRational(-1);
  Mat<GaussRational> M = md.matrix_of_coords(coords);
  CHECK(md.coords_of_matrix(M) == coords);

  Mat<GaussRational> bad(md.msize, md.msize);
  bad(0, 0) = GaussRational(1);  // not traceless-compatible with the form
  CHECK_THROWS_AS(md.coords_of_matrix(bad), Error);
}
