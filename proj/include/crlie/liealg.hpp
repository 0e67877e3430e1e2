#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "crlie/linalg.hpp"
#include "crlie/scalar.hpp"

namespace crlie {

/// Finite-dimensional Lie algebra described by structure constants on a named
/// basis. Antisymmetry is enforced at construction; the Jacobi identity is
/// checkable, not assumed. Real algebras carry real constants; complex
/// coefficient vectors over the same constants act as the complexification.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Builds from the brackets [e_i, e_j] for i < j; the rest follows by
  /// antisymmetry.
  static LieAlgebra from_brackets(int dim, std::vector<std::string> names,
                                  const std::vector<std::tuple<int, int, Vec<GaussRational>>>& brackets,
                                  bool real_form = true);

  /// Builds from a full tensor c[k + dim*(j + dim*i)] = c^k_{ij}; rejects any
  /// violation of c^k_{ij} = -c^k_{ji}.
  static LieAlgebra from_tensor(int dim, std::vector<std::string> names,
                                const std::vector<GaussRational>& c, bool real_form = true);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool real_form() const { return real_form_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int name_index(const std::string& name) const;

  /// [e_i, e_j] as a coefficient vector.
  Vec<GaussRational> bracket_basis(int i, int j) const;
  GaussRational structure_constant(int i, int j, int k) const;

  template <class K>
  Vec<K> bracket(const Vec<K>& v, const Vec<K>& w) const {
    if (static_cast<int>(v.size()) != dim_ || static_cast<int>(w.size()) != dim_)
      throw Error("bracket: vector length does not match algebra dimension");
    Vec<K> out(dim_, K(0));
    for (int i = 0; i < dim_; ++i) {
      for (int j = i + 1; j < dim_; ++j) {
        K coeff = v[i] * w[j] - v[j] * w[i];
        if (coeff == K(0)) continue;
        const Vec<GaussRational>& b = table_[pair_index(i, j)];
        for (int k = 0; k < dim_; ++k)
          if (!b[k].is_zero()) out[k] = out[k] + coeff * promote_scalar<K>(b[k]);
      }
    }
    return out;
  }

  /// Matrix of ad_v acting on coefficient vectors.
  Mat<GaussRational> ad(const Vec<GaussRational>& v) const;

  Vec<GaussRational> basis_vector(int i) const {
    Vec<GaussRational> e(dim_, GaussRational(0));
    e[i] = GaussRational(1);
    return e;
  }

 private:
  int pair_index(int i, int j) const { return i * dim_ + j; }
  int dim_ = 0;
  bool real_form_ = true;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Vec<GaussRational>> table_;  // only i < j slots populated
};

/// Linear subspace of a coefficient space, stored as reduced row echelon
/// basis rows so equality is structural.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, const std::vector<Vec<GaussRational>>& vectors);
  static Subspace row_span(const Mat<GaussRational>& rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Mat<GaussRational>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec<GaussRational> basis_vector(int r) const { return basis_.row(r); }

  bool contains(const Vec<GaussRational>& v) const;
  std::optional<Vec<GaussRational>> coords_of(const Vec<GaussRational>& v) const;
  bool is_real() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace conjugate() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_ = 0;
  Mat<GaussRational> basis_;  // rref rows
  std::vector<int> pivots_;
};

/// Linear map between coefficient spaces of two algebras.
struct LinearMap {
  int source_dim = 0, target_dim = 0;
  Mat<GaussRational> matrix;  // target_dim x source_dim

  Vec<GaussRational> apply(const Vec<GaussRational>& v) const { return mat_vec(matrix, v); }
};

struct JacobiViolation {
  int i, j, k;
  Vec<GaussRational> defect;
};

struct JacobiReport {
  bool pass = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport check_jacobi(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

/// Span of [a, b] for a in A, b in B.
Subspace bracket_span(const LieAlgebra& g, const Subspace& A, const Subspace& B);

std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);

Mat<GaussRational> killing_form(const LieAlgebra& g);
Signature killing_signature(const LieAlgebra& g);

/// Radical by Cartan's criterion: { x : K(x, [g,g]) = 0 }. The result is
/// postcondition-checked to be a solvable ideal.
Subspace radical(const LieAlgebra& g);

bool subalgebra_closed(const LieAlgebra& g, const Subspace& S);
bool is_ideal(const LieAlgebra& g, const Subspace& S);

struct Quotient {
  LieAlgebra algebra;
  Mat<GaussRational> projection;  // quotient_dim x dim
};
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// The abstract Lie algebra carried by a bracket-closed subspace, with its
/// basis given by the subspace's echelon rows.
LieAlgebra subalgebra_on(const LieAlgebra& g, const Subspace& S,
                         const std::vector<std::string>& names = {});

/// Structure constants in the new basis given by the columns of T.
LieAlgebra change_of_basis(const LieAlgebra& g, const Mat<GaussRational>& T);

struct Fingerprint {
  enum class Label { su2, sl2R, aff_plus_R, heis3, other };
  Label label = Label::other;
  std::string descriptor;

  std::string str() const;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.label == b.label && a.descriptor == b.descriptor;
  }
};

/// Classifies a 3-dimensional algebra among the labels above by exact
/// invariants (Killing signature, solvability, derived and center
/// dimensions); anything else lands in `other` with the invariant tuple.
Fingerprint fingerprint3(const LieAlgebra& g);

}  // namespace crlie
