#include "crlie/liealg.hpp"

#include <algorithm>

namespace crlie {

LieAlgebra LieAlgebra::from_brackets(
    int dim, std::vector<std::string> names,
    const std::vector<std::tuple<int, int, Vec<GaussRational>>>& brackets, bool real_form) {
  if (dim <= 0) throw Error("LieAlgebra: dimension must be positive");
  if (static_cast<int>(names.size()) != dim) throw Error("LieAlgebra: name count != dim");
  LieAlgebra g;
  g.dim_ = dim;
  g.names_ = std::move(names);
  g.real_form_ = real_form;
  g.table_.assign(static_cast<size_t>(dim) * dim, Vec<GaussRational>(dim, GaussRational(0)));
  for (const auto& [i, j, v] : brackets) {
    if (i < 0 || j < 0 || i >= dim || j >= dim) throw Error("LieAlgebra: bracket index out of range");
    if (i == j) {
      if (!vec_is_zero(v)) throw Error("LieAlgebra: nonzero bracket [e_i, e_i]");
      continue;
    }
    if (static_cast<int>(v.size()) != dim) throw Error("LieAlgebra: bracket vector length != dim");
    int a = std::min(i, j), b = std::max(i, j);
    Vec<GaussRational> w = (i < j) ? v : vec_scale(v, GaussRational(-1));
    if (!vec_is_zero(g.table_[g.pair_index(a, b)]))
      throw Error("LieAlgebra: duplicate bracket entry for (" + std::to_string(a) + "," +
                  std::to_string(b) + ")");
    g.table_[g.pair_index(a, b)] = std::move(w);
  }
  if (real_form) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (const auto& c : g.table_[g.pair_index(i, j)])
          if (!c.is_real()) throw Error("LieAlgebra: real form with non-real structure constant");
  }
  return g;
}

LieAlgebra LieAlgebra::from_tensor(int dim, std::vector<std::string> names,
                                   const std::vector<GaussRational>& c, bool real_form) {
  if (static_cast<int>(c.size()) != dim * dim * dim)
    throw Error("LieAlgebra: tensor size must be dim^3");
  auto at = [&](int i, int j, int k) { return c[static_cast<size_t>((i * dim + j)) * dim + k]; };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < dim; ++k)
        if (at(i, j, k) != -at(j, i, k))
          throw Error("LieAlgebra: antisymmetry violated at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
  std::vector<std::tuple<int, int, Vec<GaussRational>>> brackets;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Vec<GaussRational> v(dim);
      for (int k = 0; k < dim; ++k) v[k] = at(i, j, k);
      if (!vec_is_zero(v)) brackets.emplace_back(i, j, std::move(v));
    }
  return from_brackets(dim, std::move(names), brackets, real_form);
}

int LieAlgebra::name_index(const std::string& name) const {
  for (int k = 0; k < dim_; ++k)
    if (names_[k] == name) return k;
  throw Error("LieAlgebra: unknown basis name '" + name + "'");
}

Vec<GaussRational> LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw Error("bracket_basis: index out of range");
  if (i == j) return Vec<GaussRational>(dim_, GaussRational(0));
  if (i < j) return table_[pair_index(i, j)];
  return vec_scale(table_[pair_index(j, i)], GaussRational(-1));
}

GaussRational LieAlgebra::structure_constant(int i, int j, int k) const {
  return bracket_basis(i, j)[k];
}

Mat<GaussRational> LieAlgebra::ad(const Vec<GaussRational>& v) const {
  Mat<GaussRational> m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec<GaussRational> col = bracket(v, basis_vector(j));
    for (int k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Mat<GaussRational>(0, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  return row_span(Mat<GaussRational>::identity(ambient_dim));
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec<GaussRational>>& vectors) {
  Mat<GaussRational> m(static_cast<int>(vectors.size()), ambient_dim);
  for (size_t r = 0; r < vectors.size(); ++r) {
    if (static_cast<int>(vectors[r].size()) != ambient_dim)
      throw Error("Subspace::span: vector length mismatch");
    m.set_row(static_cast<int>(r), vectors[r]);
  }
  return row_span(m);
}

Subspace Subspace::row_span(const Mat<GaussRational>& rows) {
  Mat<GaussRational> m = rows;
  std::vector<int> pivots = echelonize(m);
  Subspace s;
  s.ambient_ = rows.cols;
  s.pivots_ = pivots;
  s.basis_ = Mat<GaussRational>(static_cast<int>(pivots.size()), rows.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int c = 0; c < rows.cols; ++c) s.basis_(static_cast<int>(r), c) = m(static_cast<int>(r), c);
  return s;
}

std::optional<Vec<GaussRational>> Subspace::coords_of(const Vec<GaussRational>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("Subspace: vector length mismatch");
  Vec<GaussRational> rem = v;
  Vec<GaussRational> coords(basis_.rows, GaussRational(0));
  for (int r = 0; r < basis_.rows; ++r) {
    GaussRational c = rem[pivots_[r]];
    if (c.is_zero()) continue;
    coords[r] = c;
    for (int k = 0; k < ambient_; ++k) rem[k] -= c * basis_(r, k);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec<GaussRational>& v) const { return coords_of(v).has_value(); }

bool Subspace::is_real() const {
  for (const auto& c : basis_.a)
    if (!c.is_real()) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error("Subspace::sum: ambient mismatch");
  Mat<GaussRational> m(basis_.rows + other.basis_.rows, ambient_);
  for (int r = 0; r < basis_.rows; ++r) m.set_row(r, basis_.row(r));
  for (int r = 0; r < other.basis_.rows; ++r) m.set_row(basis_.rows + r, other.basis_.row(r));
  return row_span(m);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error("Subspace::intersect: ambient mismatch");
  // Solve a*B1 + b*B2 = 0; intersection vectors are a*B1 parts.
  int n1 = basis_.rows, n2 = other.basis_.rows;
  if (n1 == 0 || n2 == 0) return zero(ambient_);
  Mat<GaussRational> stacked(ambient_, n1 + n2);
  for (int c = 0; c < n1; ++c)
    for (int k = 0; k < ambient_; ++k) stacked(k, c) = basis_(c, k);
  for (int c = 0; c < n2; ++c)
    for (int k = 0; k < ambient_; ++k) stacked(k, n1 + c) = other.basis_(c, k);
  Mat<GaussRational> null = nullspace(stacked);
  std::vector<Vec<GaussRational>> vecs;
  for (int r = 0; r < null.rows; ++r) {
    Vec<GaussRational> v(ambient_, GaussRational(0));
    for (int c = 0; c < n1; ++c)
      for (int k = 0; k < ambient_; ++k) v[k] += null(r, c) * basis_(c, k);
    vecs.push_back(std::move(v));
  }
  return span(ambient_, vecs);
}

Subspace Subspace::conjugate() const {
  Mat<GaussRational> m = basis_;
  for (auto& c : m.a) c = conj(c);
  return row_span(m);
}

// ---------------------------------------------------------------------------
// Structural operations

JacobiReport check_jacobi(const LieAlgebra& g) {
  JacobiReport rep;
  int n = g.dim();
  for (int i = 0; i < n; ++i) {
    Vec<GaussRational> ei = g.basis_vector(i);
    for (int j = i + 1; j < n; ++j) {
      Vec<GaussRational> ej = g.basis_vector(j);
      for (int k = j + 1; k < n; ++k) {
        Vec<GaussRational> ek = g.basis_vector(k);
        Vec<GaussRational> d = g.bracket(g.bracket_basis(i, j), ek);
        d = vec_add(d, g.bracket(g.bracket_basis(j, k), ei));
        d = vec_add(d, g.bracket(g.bracket_basis(k, i), ej));
        if (!vec_is_zero(d)) {
          rep.pass = false;
          rep.violations.push_back({i, j, k, std::move(d)});
        }
      }
    }
  }
  return rep;
}

Subspace center(const LieAlgebra& g) {
  int n = g.dim();
  // Rows indexed by (j, k): sum_i x_i c^k_{ij} = 0.
  Mat<GaussRational> m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m(j * n + k, i) = g.structure_constant(i, j, k);
  return Subspace::row_span(nullspace(m));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& A, const Subspace& B) {
  std::vector<Vec<GaussRational>> vecs;
  for (int r = 0; r < A.dim(); ++r)
    for (int s = 0; s < B.dim(); ++s) vecs.push_back(g.bracket(A.basis_vector(r), B.basis_vector(s)));
  return Subspace::span(g.dim(), vecs);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = bracket_span(g, series.front(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }
bool is_abelian(const LieAlgebra& g) {
  return bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim())).dim() == 0;
}

Mat<GaussRational> killing_form(const LieAlgebra& g) {
  int n = g.dim();
  // K_ij = sum_{a,b} c^a_{ib} c^b_{ja}
  Mat<GaussRational> K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      GaussRational acc(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          GaussRational c1 = g.structure_constant(i, b, a);
          if (c1.is_zero()) continue;
          acc += c1 * g.structure_constant(j, a, b);
        }
      K(i, j) = acc;
      K(j, i) = acc;
    }
  return K;
}

Signature killing_signature(const LieAlgebra& g) {
  if (!g.real_form()) throw Error("killing_signature: defined for real forms");
  return hermitian_signature(killing_form(g));
}

Subspace radical(const LieAlgebra& g) {
  Mat<GaussRational> K = killing_form(g);
  Subspace derived = bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
  Mat<GaussRational> m(derived.dim(), g.dim());
  for (int s = 0; s < derived.dim(); ++s) {
    Vec<GaussRational> Kd = mat_vec(K, derived.basis_vector(s));
    m.set_row(s, Kd);
  }
  Subspace rad = Subspace::row_span(nullspace(m));
  if (!is_ideal(g, rad))
    throw Error("radical: internal consistency failure, computed space is not an ideal");
  if (rad.dim() > 0 && !is_solvable(subalgebra_on(g, rad)))
    throw Error("radical: internal consistency failure, computed ideal is not solvable");
  return rad;
}

bool subalgebra_closed(const LieAlgebra& g, const Subspace& S) {
  for (int r = 0; r < S.dim(); ++r)
    for (int s = r + 1; s < S.dim(); ++s)
      if (!S.contains(g.bracket(S.basis_vector(r), S.basis_vector(s)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& S) {
  for (int j = 0; j < g.dim(); ++j)
    for (int r = 0; r < S.dim(); ++r)
      if (!S.contains(g.bracket(g.basis_vector(j), S.basis_vector(r)))) return false;
  return true;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw Error("quotient: subspace is not an ideal");
  int n = g.dim();
  // Free coordinates (non-pivot columns of the ideal) give a complement basis.
  std::vector<bool> pivot_col(n, false);
  for (int p : ideal.pivots()) pivot_col[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!pivot_col[c]) free_cols.push_back(c);
  int q = static_cast<int>(free_cols.size());

  // Projection: reduce modulo the ideal, then read the free coordinates.
  Mat<GaussRational> proj(q, n);
  for (int c = 0; c < n; ++c) {
    Vec<GaussRational> v = g.basis_vector(c);
    for (int r = 0; r < ideal.dim(); ++r) {
      GaussRational f = v[ideal.pivots()[r]];
      if (!f.is_zero())
        for (int cc = 0; cc < n; ++cc) v[cc] -= f * ideal.basis()(r, cc);
    }
    for (int k = 0; k < q; ++k) proj(k, c) = v[free_cols[k]];
  }

  std::vector<std::string> names;
  names.reserve(q);
  for (int k = 0; k < q; ++k) names.push_back(g.basis_names()[free_cols[k]] + "~");

  std::vector<std::tuple<int, int, Vec<GaussRational>>> brackets;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Vec<GaussRational> br = g.bracket_basis(free_cols[a], free_cols[b]);
      Vec<GaussRational> pb = mat_vec(proj, br);
      if (!vec_is_zero(pb)) brackets.emplace_back(a, b, pb);
    }
  Quotient out;
  out.algebra = LieAlgebra::from_brackets(q, names, brackets, g.real_form());
  out.algebra.set_name(g.name().empty() ? "quotient" : g.name() + "/ideal");
  out.projection = proj;
  return out;
}

LieAlgebra subalgebra_on(const LieAlgebra& g, const Subspace& S,
                         const std::vector<std::string>& names) {
  int q = S.dim();
  std::vector<std::string> use_names = names;
  if (use_names.empty())
    for (int k = 0; k < q; ++k) use_names.push_back("b" + std::to_string(k));
  std::vector<std::tuple<int, int, Vec<GaussRational>>> brackets;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      auto coords = S.coords_of(g.bracket(S.basis_vector(a), S.basis_vector(b)));
      if (!coords) throw Error("subalgebra_on: subspace is not bracket-closed");
      if (!vec_is_zero(*coords)) brackets.emplace_back(a, b, *coords);
    }
  bool real = g.real_form() && S.is_real();
  LieAlgebra out = LieAlgebra::from_brackets(q, use_names, brackets, real);
  out.set_name(g.name().empty() ? "subalgebra" : g.name() + "|sub");
  return out;
}

LieAlgebra change_of_basis(const LieAlgebra& g, const Mat<GaussRational>& T) {
  if (T.rows != g.dim() || T.cols != g.dim()) throw Error("change_of_basis: shape mismatch");
  auto Tinv = inverse(T);
  if (!Tinv) throw Error("change_of_basis: matrix not invertible");
  int n = g.dim();
  std::vector<std::tuple<int, int, Vec<GaussRational>>> brackets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<GaussRational> br = g.bracket(T.col(i), T.col(j));
      Vec<GaussRational> nb = mat_vec(*Tinv, br);
      if (!vec_is_zero(nb)) brackets.emplace_back(i, j, nb);
    }
  bool real = g.real_form();
  if (real)
    for (const auto& c : T.a)
      if (!c.is_real()) real = false;
  LieAlgebra out = LieAlgebra::from_brackets(n, g.basis_names(), brackets, real);
  out.set_name(g.name());
  return out;
}

std::string Fingerprint::str() const {
  switch (label) {
    case Label::su2: return "su2";
    case Label::sl2R: return "sl2R";
    case Label::aff_plus_R: return "aff_plus_R";
    case Label::heis3: return "heis3";
    case Label::other: return descriptor;
  }
  return "?";
}

Fingerprint fingerprint3(const LieAlgebra& g) {
  if (g.dim() != 3) throw Error("fingerprint3: algebra must be 3-dimensional");
  Fingerprint fp;
  bool solv = is_solvable(g);
  Subspace derived = bracket_span(g, Subspace::full(3), Subspace::full(3));
  int dd = derived.dim();
  int zc = center(g).dim();
  if (!solv) {
    Signature sig = killing_signature(g);
    if (sig == Signature{0, 3, 0}) {
      fp.label = Fingerprint::Label::su2;
      return fp;
    }
    if (sig == Signature{2, 1, 0}) {
      fp.label = Fingerprint::Label::sl2R;
      return fp;
    }
    fp.descriptor = "other(nonsolvable,killing=" + std::to_string(sig.pos) + "," +
                    std::to_string(sig.neg) + "," + std::to_string(sig.zero) + ")";
    return fp;
  }
  bool nilp = is_nilpotent(g);
  if (dd == 1 && nilp) {
    fp.label = Fingerprint::Label::heis3;
    return fp;
  }
  if (dd == 1 && !nilp) {
    fp.label = Fingerprint::Label::aff_plus_R;
    return fp;
  }
  std::string desc = "other(solvable,derived=" + std::to_string(dd) + ",center=" + std::to_string(zc);
  if (dd == 2 && bracket_span(g, derived, derived).dim() == 0) {
    // ad of any complement element on the abelian derived algebra; the ratio
    // trace^2/det is independent of the choice.
    for (int c = 0; c < 3; ++c) {
      if (derived.contains(g.basis_vector(c))) continue;
      Vec<GaussRational> x = g.basis_vector(c);
      Mat<GaussRational> adm(2, 2);
      for (int b = 0; b < 2; ++b) {
        auto coords = derived.coords_of(g.bracket(x, derived.basis_vector(b)));
        if (!coords) throw Error("fingerprint3: derived space not ad-stable");
        for (int a = 0; a < 2; ++a) adm(a, b) = (*coords)[a];
      }
      GaussRational tr = adm(0, 0) + adm(1, 1);
      GaussRational det = adm(0, 0) * adm(1, 1) - adm(0, 1) * adm(1, 0);
      if (!det.is_zero())
        desc += ",adweights tr^2/det=" + (tr * tr / det).str();
      else
        desc += ",adweights det=0";
      break;
    }
  }
  if (dd == 0) desc = "other(abelian";
  fp.descriptor = desc + ")";
  return fp;
}

}  // namespace crlie
