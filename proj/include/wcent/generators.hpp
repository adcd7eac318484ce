#pragma once

// Generators w_k^(r) of the classical W-algebra read off from the column
// determinant D_n, their Miura images, and the Jacobian certificate of
// algebraic independence.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/diffpoly.hpp"
#include "wcent/opring.hpp"

namespace wcent {

inline DiffPoly derivation(const DiffPoly& p) { return derive(p, 1); }

using DPoly = UPoly<DiffPoly>;
using DOp = DiffOp<DiffPoly>;
using DMatrix = OpMatrix<DiffPoly>;

/// (k, r) index of a generator.
struct GenIndex {
  int k = 0;
  int r = 0;
  friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

using GeneratorTable = std::map<GenIndex, DiffPoly>;

/// lambda_{n-k+2} + ... + lambda_n < r + k <= lambda_{n-k+1} + ... + lambda_n
bool in_window(const Partition& p, int k, int r);
/// All admissible (k, r), ascending. Exactly N of them.
std::vector<GenIndex> window_indices(const Partition& p);

/// E_ij(u); lower and diagonal entries use degrees 0..lambda_j-1, upper
/// entries lambda_j-lambda_i..lambda_j-1.
DPoly e_of_u(const Centralizer& alg, int i, int j);

/// Diagonal x + lambda_i d + E_ii(u), superdiagonal u^{lambda_{i+1}-1},
/// E_ij(u) below the diagonal, zero elsewhere.
DMatrix w_generator_matrix(const Partition& p);

enum class CdetStrategy {
  FullOperator,  // column_determinant then constant_part
  AppliedToOne   // factors act on 1 from the right
};

/// Every u-coefficient of w_k(u), k = 1..n, including indices outside the
/// admissible window (these are not W-algebra elements in general).
GeneratorTable w_coefficients(const Partition& p, CdetStrategy s = CdetStrategy::AppliedToOne);

/// w_k^(r) for (k, r) in the admissible window; N entries over V(p).
GeneratorTable w_generators(const Partition& p, CdetStrategy s = CdetStrategy::AppliedToOne);

/// Differential homomorphism V(p) -> V(h) killing n_-.
DiffPoly miura_image(const DiffPoly& p);

/// Coefficients of (x + lambda_1 d + E_11(u)) ... (x + lambda_n d + E_nn(u))
/// applied to 1, restricted to the admissible window.
GeneratorTable miura_generators(const Partition& p);

/// Variables E_ii^(r) listed by decreasing r, and within each r block by
/// decreasing i; negative superscripts skipped.
std::vector<DiffVar> jacobian_variables(const Partition& p);
/// v_k^(r) listed block by block (r stepping down from the top of each
/// window), k ascending within a block; indices outside the window skipped.
std::vector<GenIndex> jacobian_polynomials(const Partition& p);

/// Deterministic evaluation point. Seed 0 assigns distinct primes 2, 3, 5,
/// ... in variable order; other seeds draw small rationals from mt19937_64.
Point jacobian_point(const Partition& p, std::uint64_t seed);

enum class JacobianStatus { Independent, Retry };

struct JacobianResult {
  JacobianStatus status = JacobianStatus::Retry;
  Rational det;
  std::vector<DiffVar> variables;
  std::vector<GenIndex> polynomials;
  /// s = 0 minimal-degree parts of the Miura images, in `polynomials` order.
  std::vector<DiffPoly> v;
  /// Filled when N <= symbolic_limit.
  std::optional<DiffPoly> symbolic_det;
};

/// Jacobian of the v_k^(r) (DerivationDegree minimal parts of the Miura
/// images) with respect to the listed variables, evaluated at the point.
/// A zero determinant is reported as Retry: pick another point.
JacobianResult jacobian_independence(const Partition& p, const Point& point, int symbolic_limit = 4);
JacobianResult jacobian_independence(const Partition& p, std::uint64_t seed, int symbolic_limit = 4);

/// Exact determinant by fraction-tracking Gaussian elimination.
Rational rational_determinant(std::vector<std::vector<Rational>> m);
/// Determinant of a polynomial matrix by cofactor expansion.
DiffPoly polynomial_determinant(const std::vector<std::vector<DiffPoly>>& m);

}  // namespace wcent
