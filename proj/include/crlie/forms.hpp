#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <utility>

#include "crlie/liealg.hpp"

namespace crlie {

/// Alternating k-form on the coefficient space of a Lie algebra. Coefficients
/// sit on strictly increasing index tuples; the wedge normalization is
/// (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X) with no 1/2 factors.
template <class K>
struct KForm {
  int n = 0;    // ambient dimension
  int deg = 0;  // form degree
  std::map<std::vector<int>, K> terms;

  KForm() = default;
  KForm(int n_, int deg_) : n(n_), deg(deg_) {}

  /// Dual basis 1-form theta^i.
  static KForm dual(int n, int i) {
    KForm f(n, 1);
    f.terms[{i}] = K(1);
    return f;
  }

  bool is_zero() const { return terms.empty(); }

  K coeff(const std::vector<int>& tuple) const {
    auto it = terms.find(tuple);
    return it == terms.end() ? K(0) : it->second;
  }

  void add_term(const std::vector<int>& tuple, const K& c) {
    if (c == K(0)) return;
    auto it = terms.find(tuple);
    if (it == terms.end()) {
      terms.emplace(tuple, c);
    } else {
      it->second = it->second + c;
      if (it->second == K(0)) terms.erase(it);
    }
  }

  /// Value of a 1-form at a coefficient vector.
  K eval1(const Vec<K>& v) const {
    if (deg != 1) throw Error("KForm::eval1: not a 1-form");
    K acc(0);
    for (const auto& [t, c] : terms) acc = acc + c * v[t[0]];
    return acc;
  }

  KForm operator-() const {
    KForm out(n, deg);
    for (const auto& [t, c] : terms) out.terms.emplace(t, K(0) - c);
    return out;
  }
  friend KForm operator+(const KForm& a, const KForm& b) {
    if (a.n != b.n || a.deg != b.deg) throw Error("KForm: shape mismatch in +");
    KForm out = a;
    for (const auto& [t, c] : b.terms) out.add_term(t, c);
    return out;
  }
  friend KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }
  KForm& operator+=(const KForm& o) { return *this = *this + o; }
  KForm& operator-=(const KForm& o) { return *this = *this - o; }

  friend KForm operator*(const K& s, const KForm& a) {
    KForm out(a.n, a.deg);
    for (const auto& [t, c] : a.terms) out.add_term(t, s * c);
    return out;
  }

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.n == b.n && a.deg == b.deg && a.terms == b.terms;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }
};

/// Merges two strictly increasing tuples; returns the sign of the shuffle or
/// 0 when they overlap.
inline int merge_tuples(const std::vector<int>& s, const std::vector<int>& t,
                        std::vector<int>& out) {
  out.clear();
  out.reserve(s.size() + t.size());
  size_t a = 0, b = 0;
  int inversions = 0;
  while (a < s.size() && b < t.size()) {
    if (s[a] == t[b]) return 0;
    if (s[a] < t[b]) {
      out.push_back(s[a++]);
    } else {
      // t[b] jumps over the remaining elements of s
      inversions += static_cast<int>(s.size() - a);
      out.push_back(t[b++]);
    }
  }
  while (a < s.size()) out.push_back(s[a++]);
  while (b < t.size()) out.push_back(t[b++]);
  return (inversions % 2 == 0) ? 1 : -1;
}

template <class K>
KForm<K> wedge(const KForm<K>& x, const KForm<K>& y) {
  if (x.n != y.n) throw Error("wedge: ambient mismatch");
  KForm<K> out(x.n, x.deg + y.deg);
  std::vector<int> merged;
  for (const auto& [s, cs] : x.terms) {
    for (const auto& [t, ct] : y.terms) {
      int sign = merge_tuples(s, t, merged);
      if (sign == 0) continue;
      K c = cs * ct;
      if (sign < 0) c = K(0) - c;
      out.add_term(merged, c);
    }
  }
  return out;
}

/// Chevalley-Eilenberg differential with d theta(X,Y) = -theta([X,Y]),
/// extended as a degree +1 derivation. d∘d = 0 exactly when Jacobi holds.
template <class K>
KForm<K> d(const LieAlgebra& g, const KForm<K>& a) {
  if (a.n != g.dim()) throw Error("d: form ambient does not match algebra");
  int n = g.dim();
  // d theta^k = - sum_{i<j} c^k_{ij} theta^i ^ theta^j
  std::vector<KForm<K>> dtheta(n, KForm<K>(n, 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<GaussRational> br = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (!br[k].is_zero()) dtheta[k].add_term({i, j}, K(0) - promote_scalar<K>(br[k]));
    }
  KForm<K> out(n, a.deg + 1);
  for (const auto& [t, c] : a.terms) {
    for (size_t pos = 0; pos < t.size(); ++pos) {
      std::vector<int> rest;
      rest.reserve(t.size() - 1);
      for (size_t q = 0; q < t.size(); ++q)
        if (q != pos) rest.push_back(t[q]);
      // dtheta is even degree, so it slides to the front with sign (-1)^pos.
      std::vector<int> merged;
      for (const auto& [dt, dc] : dtheta[t[pos]].terms) {
        int sign = merge_tuples(dt, rest, merged);
        if (sign == 0) continue;
        if (pos % 2 == 1) sign = -sign;
        K coeff = c * dc;
        if (sign < 0) coeff = K(0) - coeff;
        out.add_term(merged, coeff);
      }
    }
  }
  return out;
}

/// Interior product: degree -1 contraction in the first slot.
template <class K>
KForm<K> interior(const Vec<K>& v, const KForm<K>& a) {
  if (static_cast<int>(v.size()) != a.n) throw Error("interior: vector length mismatch");
  if (a.deg == 0) return KForm<K>(a.n, 0);
  KForm<K> out(a.n, a.deg - 1);
  for (const auto& [t, c] : a.terms) {
    for (size_t pos = 0; pos < t.size(); ++pos) {
      if (v[t[pos]] == K(0)) continue;
      std::vector<int> rest;
      rest.reserve(t.size() - 1);
      for (size_t q = 0; q < t.size(); ++q)
        if (q != pos) rest.push_back(t[q]);
      K coeff = v[t[pos]] * c;
      if (pos % 2 == 1) coeff = K(0) - coeff;
      out.add_term(rest, coeff);
    }
  }
  return out;
}

template <class K>
KForm<K> wedge_power(const KForm<K>& a, int m) {
  if (m <= 0) throw Error("wedge_power: exponent must be positive");
  KForm<K> out = a;
  for (int k = 1; k < m; ++k) out = wedge(out, a);
  return out;
}

/// Renders in dual-name notation, e.g. "x^y - 2 z^u". Names are the
/// lowercased basis names of the ambient algebra.
template <class K>
std::string form_str(const KForm<K>& a, const std::vector<std::string>& basis_names) {
  if (a.terms.empty()) return "0";
  auto dual_name = [&](int i) {
    std::string s = basis_names[i];
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
  };
  std::string out;
  for (const auto& [t, c] : a.terms) {
    std::string mono;
    for (size_t q = 0; q < t.size(); ++q) {
      if (q) mono += "^";
      mono += dual_name(t[q]);
    }
    std::string cs = ScalarOps<K>::str(c);
    bool simple = cs.find_first_of("+* /") == std::string::npos &&
                  cs.find('-', 1) == std::string::npos;
    bool negative = simple && !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cs == "1")
      body = mono;
    else
      body = (simple ? cs : "(" + cs + ")") + " " + mono;
    if (out.empty())
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

/// Linear map into another algebra's coefficient space, treated as a
/// target-valued 1-form. Columns are the images of the source basis.
template <class K>
struct GValuedOneForm {
  const LieAlgebra* source = nullptr;
  const LieAlgebra* target = nullptr;
  Mat<K> matrix;  // target_dim x source_dim

  Vec<K> apply_basis(int i) const { return matrix.col(i); }
};

/// Curvature of a target-valued 1-form: Omega(X,Y) = [w X, w Y] - w [X,Y].
/// Zero exactly when the form is a Lie algebra homomorphism.
template <class K>
struct Curvature {
  int src_dim = 0;
  std::map<std::pair<int, int>, Vec<K>> entries;  // only nonzero ones

  bool is_zero() const { return entries.empty(); }
  std::optional<std::pair<int, int>> witness() const {
    if (entries.empty()) return std::nullopt;
    return entries.begin()->first;
  }
};

template <class K>
Curvature<K> curvature(const GValuedOneForm<K>& w) {
  if (!w.source || !w.target) throw Error("curvature: unbound form");
  const LieAlgebra& src = *w.source;
  const LieAlgebra& dst = *w.target;
  if (w.matrix.rows != dst.dim() || w.matrix.cols != src.dim())
    throw Error("curvature: matrix shape mismatch");
  Curvature<K> omega;
  omega.src_dim = src.dim();
  for (int i = 0; i < src.dim(); ++i) {
    Vec<K> wi = w.matrix.col(i);
    for (int j = i + 1; j < src.dim(); ++j) {
      Vec<K> br = dst.bracket(wi, w.matrix.col(j));
      Vec<GaussRational> sb = src.bracket_basis(i, j);
      for (int k = 0; k < src.dim(); ++k) {
        if (sb[k].is_zero()) continue;
        K f = promote_scalar<K>(sb[k]);
        Vec<K> wk = w.matrix.col(k);
        for (int r = 0; r < dst.dim(); ++r) br[r] = br[r] - f * wk[r];
      }
      if (!vec_is_zero(br)) omega.entries.emplace(std::make_pair(i, j), std::move(br));
    }
  }
  return omega;
}

}  // namespace crlie
