#pragma once

// Elements of U(t^-1 a[t^-1]), identified with the vacuum module at the
// critical level, in PBW normal form.
//
// PBW order on loop modes X[m]: n_- modes first, then h, then n_+ (so n_+
// factors sit rightmost), ties broken by (m, i, j, r) so deeper modes come
// first: E[-2] E[-1], never E[-1] E[-2].

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/rational.hpp"

namespace wcent {

/// X t^m for a basis element X.
struct LoopMode {
  BasisElt base;
  int m = -1;

  auto order_key() const {
    return std::make_tuple(static_cast<int>(part_of(base)), m, base.i, base.j, base.r);
  }
  friend bool operator==(const LoopMode& a, const LoopMode& b) {
    return a.base == b.base && a.m == b.m;
  }
  friend auto operator<=>(const LoopMode& a, const LoopMode& b) {
    return a.order_key() <=> b.order_key();
  }
};

std::string to_string(const LoopMode& x);

/// Sorted product of negative loop modes (repetitions allowed).
class PBWMonomial {
 public:
  PBWMonomial() = default;
  /// Throws std::invalid_argument unless `factors` is PBW-sorted.
  explicit PBWMonomial(std::vector<LoopMode> factors);

  const std::vector<LoopMode>& factors() const& { return factors_; }
  std::vector<LoopMode> factors() && { return std::move(factors_); }
  bool is_vacuum() const { return factors_.empty(); }
  /// Equal factors grouped as (mode, power).
  std::vector<std::pair<LoopMode, int>> powers() const;
  /// Sum of -m over the factors.
  int depth() const;

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
  friend auto operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

 private:
  friend class VacuumVector;
  std::vector<LoopMode> factors_;
};

/// Linear combination of PBW monomials applied to the vacuum. Carries the
/// algebra it lives in once it holds any mode; pure scalars need none.
class VacuumVector {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  VacuumVector() = default;
  VacuumVector(const Rational& c);  // NOLINT: scalar multiple of the vacuum
  VacuumVector(int c) : VacuumVector(Rational(c)) {}  // NOLINT

  /// The zero vector attached to an algebra.
  static VacuumVector zero(std::shared_ptr<const Centralizer> alg);
  /// Single mode X[m] with m <= -1.
  static VacuumVector mode(std::shared_ptr<const Centralizer> alg, const LoopMode& x);
  /// Normal form of a formal product of negative modes (left to right).
  /// Throws std::invalid_argument on a non-negative mode.
  static VacuumVector normal_order(std::shared_ptr<const Centralizer> alg,
                                   const std::vector<LoopMode>& word);
  /// Builds from already-canonical terms.
  static VacuumVector from_terms(std::shared_ptr<const Centralizer> alg, Terms terms);

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  const std::shared_ptr<const Centralizer>& algebra() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  Rational vacuum_coeff() const;
  /// max over monomials of sum(-m); 0 for scalars.
  int depth() const;

  VacuumVector& operator+=(const VacuumVector& o);
  VacuumVector& operator-=(const VacuumVector& o);
  VacuumVector operator-() const;
  friend VacuumVector operator+(VacuumVector a, const VacuumVector& b) { return a += b; }
  friend VacuumVector operator-(VacuumVector a, const VacuumVector& b) { return a -= b; }
  friend VacuumVector operator*(const Rational& c, const VacuumVector& v);
  friend VacuumVector operator*(int c, const VacuumVector& v) { return Rational(c) * v; }
  /// Product in U(t^-1 a[t^-1]) brought back to normal form.
  friend VacuumVector operator*(const VacuumVector& a, const VacuumVector& b);

  friend bool operator==(const VacuumVector& a, const VacuumVector& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const PBWMonomial& m, const Rational& c);
  void adopt(const std::shared_ptr<const Centralizer>& alg);

  std::shared_ptr<const Centralizer> alg_;
  Terms terms_;
};

std::string to_string(const VacuumVector& v);

/// Translation operator: the derivation X[m] -> -m X[m-1].
VacuumVector apply_T(const VacuumVector& v);
inline VacuumVector derivation(const VacuumVector& v) { return apply_T(v); }

/// X[m] v for m >= 0 in the vacuum module at the critical level:
/// [X[m], Y[s]] = [X,Y][m+s] + m delta_{m,-s} <X,Y>, and a[t] kills the vacuum.
VacuumVector act_mode(const BasisElt& x, int m, const VacuumVector& v);

/// Weight of a monomial under ad E_ii^(0)[0], i = 1..n.
std::vector<int> weight(const PBWMonomial& m, int n);
bool has_zero_weight(const VacuumVector& v, int n);

}  // namespace wcent
