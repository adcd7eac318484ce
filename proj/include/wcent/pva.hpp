#pragma once

// The affine Poisson vertex algebra V(a): lambda-brackets, the projection
// rho onto V(p), and the W-algebra membership test.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/diffpoly.hpp"

namespace wcent {

/// Polynomial in the formal symbol lambda with DiffPoly coefficients.
/// Only nonzero coefficients are stored.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(DiffPoly c);  // NOLINT: lambda^0 coefficient
  static LambdaPoly monomial(int power, DiffPoly c);

  const std::map<int, DiffPoly>& coeffs() const& { return coeffs_; }
  std::map<int, DiffPoly> coeffs() && { return std::move(coeffs_); }
  /// Coefficient of lambda^k (zero when absent).
  DiffPoly coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly operator-() const;
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  /// Coefficientwise product with a lambda-free polynomial.
  friend LambdaPoly operator*(const DiffPoly& p, const LambdaPoly& f);
  friend LambdaPoly operator*(const LambdaPoly& f, const DiffPoly& p) { return p * f; }

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Applies a map to every coefficient, dropping zeros.
  template <class F>
  LambdaPoly map_coeffs(F&& f) const {
    LambdaPoly out;
    for (const auto& [k, c] : coeffs_) out.add_at(k, f(c));
    return out;
  }

  void add_at(int k, const DiffPoly& c);

 private:
  std::map<int, DiffPoly> coeffs_;
};

std::string to_string(const LambdaPoly& f);

/// lambda * f
LambdaPoly times_lambda(const LambdaPoly& f, int power = 1);
/// (lambda + d)^k f, the derivation acting on coefficients.
LambdaPoly lambda_plus_d(const LambdaPoly& f, int k = 1);
/// (-lambda - d)^k f
LambdaPoly minus_lambda_minus_d(const LambdaPoly& f, int k = 1);
/// The derivation applied to every coefficient.
LambdaPoly derive(const LambdaPoly& f, int k = 1);
/// sum_k (-lambda - d)^k f_k: the substitution lambda -> -lambda - d with d
/// acting on the coefficients, as it appears in skewsymmetry.
LambdaPoly substitute_skew(const LambdaPoly& f);

/// {X_lambda P} for a single generator X, via the Leibniz rule in the right
/// slot and sesquilinearity:
///   sum_{v[s]} dP/dv[s] * (lambda + d)^s ([X, v] + (X|v) lambda).
LambdaPoly lambda_bracket_gen(const Centralizer& alg, const BasisElt& x, const DiffPoly& p);

/// {a_lambda b} for arbitrary differential polynomials (master formula).
LambdaPoly lambda_bracket(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b);

/// Constants A_i^(r) defining rho on the superdiagonal of n_+.
class RhoConfig {
 public:
  /// A_i(u) = u^{lambda_{i+1} - 1}.
  static RhoConfig standard(const Partition& p);
  /// coeffs[i-1][r - (lambda_{i+1} - lambda_i)] = A_i^(r). Throws
  /// std::invalid_argument on shape mismatch or a zero leading coefficient.
  RhoConfig(const Partition& p, std::vector<std::vector<Rational>> coeffs);

  /// A_i^(r); zero outside the admissible range.
  Rational value(int i, int r) const;

 private:
  RhoConfig() = default;
  std::vector<int> offset_;
  std::vector<std::vector<Rational>> coeffs_;
};

/// Differential algebra homomorphism V(a) -> V(p): identity on p, the
/// superdiagonal generators E_{i,i+1}^(r)[0] go to A_i^(r), the rest of n_+
/// (and all derivatives of n_+ variables) to zero.
DiffPoly rho_project(const DiffPoly& p, const RhoConfig& cfg);
LambdaPoly rho_project(const LambdaPoly& f, const RhoConfig& cfg);

enum class MembershipMode {
  Generators,  // only E_{i,i+1}^(t)
  FullBasis    // every basis element of n_+
};

struct MembershipWitness {
  BasisElt x;
  LambdaPoly value;  // rho{X_lambda P}, nonzero
};

struct MembershipResult {
  bool member = true;
  std::optional<MembershipWitness> witness;
};

/// The elements X scanned by w_membership, in scan order.
std::vector<BasisElt> membership_probes(const Centralizer& alg, MembershipMode mode);

/// rho{X_lambda P} == 0 for every probe X. The first failing probe (in
/// canonical basis order) is returned as the witness. Throws
/// std::domain_error unless P lies in V(p).
MembershipResult w_membership(const Centralizer& alg, const DiffPoly& p,
                              MembershipMode mode = MembershipMode::FullBasis,
                              const std::optional<RhoConfig>& cfg = std::nullopt);

/// rho{a_lambda b}, the bracket induced on W(a).
LambdaPoly w_bracket(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b,
                     const std::optional<RhoConfig>& cfg = std::nullopt);

}  // namespace wcent
