#pragma once

// Shorthands shared by the test suites.

#include <memory>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/diffpoly.hpp"
#include "wcent/vacuum.hpp"

namespace wcent::test {

inline DiffPoly E(int i, int j, int r, int s = 0) { return DiffPoly::variable(var(i, j, r, s)); }

inline LieElement L(int i, int j, int r, Rational c = 1) { return LieElement::basis({i, j, r}, std::move(c)); }

inline std::shared_ptr<const Centralizer> algebra(std::vector<int> parts) {
  return std::make_shared<const Centralizer>(Partition(std::move(parts)));
}

/// E_ij^(r)[m] applied to the vacuum.
inline VacuumVector M(const std::shared_ptr<const Centralizer>& alg, int i, int j, int r, int m) {
  return VacuumVector::mode(alg, LoopMode{{i, j, r}, m});
}

inline std::vector<Partition> partitions_up_to_N(int N) { return partitions_up_to(N); }

}  // namespace wcent::test
