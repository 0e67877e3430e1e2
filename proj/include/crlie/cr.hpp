#pragma once

#include <optional>

#include "crlie/forms.hpp"
#include "crlie/liealg.hpp"

namespace crlie {

/// CR structure as a codimension-1 distribution D with a complex operator J
/// on it. J is stored as a matrix in the echelon basis of D.
struct CRStructure {
  const LieAlgebra* g = nullptr;
  Subspace D;
  Mat<GaussRational> J;

  /// Applies J to an ambient vector lying in D.
  Vec<GaussRational> apply_J(const Vec<GaussRational>& v) const;
};

/// Complex subalgebra presentation of a CR structure.
struct CRSubalgebra {
  const LieAlgebra* g = nullptr;
  Subspace k;
};

/// Validates the (D, J) data: odd ambient dimension >= 3, codimension 1,
/// J real with J^2 = -id.
CRStructure make_cr(const LieAlgebra& g, Subspace D, Mat<GaussRational> J);

CRSubalgebra pair_to_k(const CRStructure& cr);
/// Rejects k with k intersecting conj(k).
CRStructure k_to_pair(const LieAlgebra& g, const Subspace& k);

bool is_cr_integrable(const CRStructure& cr);

/// Regularity: k cap conj(k) = 0 and k + conj(k) not bracket-closed.
bool is_regular(const LieAlgebra& g, const Subspace& k);

struct LeviReport {
  Mat<GaussRational> matrix;  // Hermitian, m x m
  Signature signature;
  KForm<GaussRational> normalizing_form;
};

/// Levi form h_ab = -i phi([v_a, conj v_b]) on a basis of k; requires
/// ker(phi) to contain k + conj(k) with the right dimension.
LeviReport levi(const LieAlgebra& g, const Subspace& k, const KForm<GaussRational>& phi);

bool is_nondegenerate(const LeviReport& rep);
bool is_strictly_pseudoconvex(const LeviReport& rep);

/// Canonical real annihilator 1-form of a codimension-1 subspace.
KForm<GaussRational> annihilator_form(const LieAlgebra& g, const Subspace& D);

/// Levi data of a CR structure through its k presentation, with the
/// distribution's annihilator as normalizing form.
LeviReport levi_of(const CRStructure& cr);

struct ReebResult {
  bool contact = false;                  // phi ^ (d phi)^m != 0
  std::optional<Vec<GaussRational>> eta; // solves i(eta)phi = 1, i(eta)dphi = 0
  int multiplicity = 0;                  // solution-space dimension of the linear system
};

ReebResult reeb(const LieAlgebra& g, const KForm<GaussRational>& phi, int m);

/// Normality (Sasaki condition): ad_eta preserves k.
bool is_normal(const LieAlgebra& g, const Subspace& k, const Vec<GaussRational>& eta);

/// Whether an invertible linear map carries one CR structure to another:
/// Phi(D1) = D2 and Phi J1 = J2 Phi on D1. Phi need not respect brackets.
bool cr_equivalent_via(const LinearMap& map, const CRStructure& cr1, const CRStructure& cr2);

struct NijenhuisReport {
  bool zero = true;
  std::optional<std::pair<int, int>> witness;
  Vec<GaussRational> defect;  // N_J on the witness pair
};

/// Nijenhuis tensor check for a full almost-complex structure on an
/// even-dimensional algebra; rejects J with J^2 != -id.
NijenhuisReport nijenhuis_full(const LieAlgebra& g, const Mat<GaussRational>& J);

struct ContactSearch {
  bool possible = false;
  std::optional<KForm<GaussRational>> witness;  // rational phi with nonzero volume
  MultiPoly volume;                             // generic phi ^ (d phi)^m coefficient
};

/// Symbolic contact-existence certificate: expands phi ^ (d phi)^m for a
/// generic 1-form and decides polynomial vanishing exactly.
ContactSearch contact_possible(const LieAlgebra& g, int m);

}  // namespace crlie
