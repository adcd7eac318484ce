#include "wcent/affine_center.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcent {

ZPoly e_of_z(const std::shared_ptr<const Centralizer>& alg, int i, int j) {
  const Partition& p = alg->partition();
  const int lo = i >= j ? 0 : p.lambda(j) - p.lambda(i);
  ZPoly out;
  for (int r = lo; r < p.lambda(j); ++r) out.add_at(r, VacuumVector::mode(alg, LoopMode{{i, j, r}, -1}));
  return out;
}

TMatrix ss_matrix(const std::shared_ptr<const Centralizer>& alg) {
  const Partition& p = alg->partition();
  const int n = p.n();
  TMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m.at(i, j) = TOp(e_of_z(alg, i, j));
      if (i == j) m.at(i, i) += TOp::x_power(1) + Rational(p.lambda(i)) * TOp::d_power(1);
    }
  }
  return m;
}

SSTable ss_vectors(const std::shared_ptr<const Centralizer>& alg, CdetStrategy s) {
  const Partition& p = alg->partition();
  const TMatrix m = ss_matrix(alg);
  std::map<int, ZPoly> xpoly =
      s == CdetStrategy::FullOperator ? constant_part(column_determinant(m)) : column_determinant_on_one(m, VacuumVector(1));
  SSTable out;
  const int n = p.n();
  for (const auto& idx : window_indices(p)) {
    VacuumVector v = VacuumVector::zero(alg);
    auto it = xpoly.find(n - idx.k);
    if (it != xpoly.end()) v += it->second.coeff(idx.r);
    out.emplace(idx, std::move(v));
  }
  return out;
}

SSTable ss_vectors(const Partition& p, CdetStrategy s) {
  return ss_vectors(std::make_shared<const Centralizer>(p), s);
}

CenterResult center_check(const VacuumVector& v) {
  if (v.is_zero() || !v.algebra()) return {};
  const Centralizer& alg = *v.algebra();
  const int depth = v.depth();
  for (int m = 0; m <= depth; ++m) {
    for (const auto& x : alg.basis()) {
      VacuumVector value = act_mode(x, m, v);
      if (!value.is_zero()) return {false, CenterWitness{x, m, std::move(value)}};
    }
  }
  return {};
}

bool annihilated_beyond_depth(const VacuumVector& v) {
  if (v.is_zero() || !v.algebra()) return true;
  const int m = v.depth() + 1;
  for (const auto& x : v.algebra()->basis()) {
    if (!act_mode(x, m, v).is_zero()) return false;
  }
  return true;
}

VacuumVector hc_project(const VacuumVector& v) {
  const int n = v.algebra() ? v.algebra()->n() : 0;
  if (n > 0 && !has_zero_weight(v, n)) {
    throw std::domain_error("Harish-Chandra projection needs a zero-weight vector");
  }
  VacuumVector::Terms kept;
  for (const auto& [mono, c] : v.terms()) {
    const auto& f = mono.factors();
    if (std::all_of(f.begin(), f.end(), [](const LoopMode& x) { return part_of(x.base) == TriangularPart::Cartan; })) {
      kept.emplace(mono, c);
    }
  }
  return VacuumVector::from_terms(v.algebra(), std::move(kept));
}

VacuumVector theta(const std::shared_ptr<const Centralizer>& alg, const DiffPoly& p) {
  if (p.support_domain() != Domain::Cartan) {
    throw std::domain_error("theta is defined on V(h) only");
  }
  VacuumVector::Terms out;
  for (const auto& t : p.terms()) {
    std::vector<LoopMode> word;
    Rational c = t.coeff;
    for (const auto& [key, e] : t.mono.factors()) {
      DiffVar v = DiffVar::from_key(key);
      for (unsigned k = 0; k < e; ++k) {
        word.push_back(LoopMode{v.base, -v.s - 1});
        c *= factorial(v.s);
      }
    }
    // Cartan modes commute, so sorting is the normal form.
    std::sort(word.begin(), word.end());
    auto [it, inserted] = out.try_emplace(PBWMonomial(std::move(word)), c);
    if (!inserted) it->second += c;
  }
  return VacuumVector::from_terms(alg, std::move(out));
}

std::vector<CorrespondenceEntry> w_correspondence(const Partition& p) {
  auto alg = std::make_shared<const Centralizer>(p);
  const SSTable phi = ss_vectors(alg);
  const GeneratorTable w = w_generators(p);
  std::vector<CorrespondenceEntry> out;
  for (const auto& idx : window_indices(p)) {
    CorrespondenceEntry e;
    e.index = idx;
    const DiffPoly wbar = miura_image(w.at(idx));
    e.projected = hc_project(phi.at(idx));
    e.image = theta(alg, wbar);
    e.projection_matches = e.projected == e.image;
    e.intertwines = theta(alg, derive(wbar, 1)) == apply_T(e.image);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace wcent
