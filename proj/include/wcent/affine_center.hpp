#pragma once

// Segal-Sugawara vectors of the critical-level vacuum module, the center
// test, the Harish-Chandra projection and the correspondence with W(a).

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "wcent/generators.hpp"
#include "wcent/opring.hpp"
#include "wcent/vacuum.hpp"

namespace wcent {

using ZPoly = UPoly<VacuumVector>;
using TOp = DiffOp<VacuumVector>;
using TMatrix = OpMatrix<VacuumVector>;

using SSTable = std::map<GenIndex, VacuumVector>;

/// E_ij(z) with every coefficient a mode at t^-1.
ZPoly e_of_z(const std::shared_ptr<const Centralizer>& alg, int i, int j);

/// Full matrix: x + lambda_i T + E_ii(z) on the diagonal, E_ij(z) elsewhere.
TMatrix ss_matrix(const std::shared_ptr<const Centralizer>& alg);

/// phi_k^(r) for (k, r) in the admissible window.
SSTable ss_vectors(const Partition& p, CdetStrategy s = CdetStrategy::AppliedToOne);
SSTable ss_vectors(const std::shared_ptr<const Centralizer>& alg,
                   CdetStrategy s = CdetStrategy::AppliedToOne);

struct CenterWitness {
  BasisElt x;
  int m = 0;
  VacuumVector value;  // X[m] v, nonzero
};

struct CenterResult {
  bool central = true;
  std::optional<CenterWitness> witness;
};

/// a[t] v == 0, scanning modes m = 0..depth(v) (ascending) and, for each m,
/// basis elements in canonical order. Modes beyond the depth annihilate v
/// by t-degree counting.
CenterResult center_check(const VacuumVector& v);

/// X[depth(v)+1] v == 0 for every basis X.
bool annihilated_beyond_depth(const VacuumVector& v);

/// Projection of the zero-weight part onto U(t^-1 h[t^-1]). With n_+ modes
/// rightmost in PBW order a zero-weight monomial containing an n_- factor
/// also ends in an n_+ factor, so the projection keeps exactly the all-Cartan
/// monomials. Throws std::domain_error on nonzero weight.
VacuumVector hc_project(const VacuumVector& v);

/// V(h) -> U(t^-1 h[t^-1]), E[s] -> s! E[-s-1], multiplicative.
VacuumVector theta(const std::shared_ptr<const Centralizer>& alg, const DiffPoly& p);

struct CorrespondenceEntry {
  GenIndex index;
  bool projection_matches = false;  // f(phi) == theta(miura(w))
  bool intertwines = false;         // theta(d wbar) == T theta(wbar)
  VacuumVector projected;           // f(phi_k^(r))
  VacuumVector image;               // theta(miura(w_k^(r)))
  bool pass() const { return projection_matches && intertwines; }
};

std::vector<CorrespondenceEntry> w_correspondence(const Partition& p);

}  // namespace wcent
