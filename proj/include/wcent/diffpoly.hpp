#pragma once

// Sparse differential polynomials in the variables E_ij^(r)[s] with exact
// rational coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/rational.hpp"

namespace wcent {

/// E_ij^(r)[s]: a basis element with s derivations applied.
struct DiffVar {
  BasisElt base;
  int s = 0;

  /// Total order: lexicographic on (s, i, j, r).
  std::uint32_t key() const {
    return (static_cast<std::uint32_t>(s) << 24) | (static_cast<std::uint32_t>(base.i) << 16) |
           (static_cast<std::uint32_t>(base.j) << 8) | static_cast<std::uint32_t>(base.r);
  }
  static DiffVar from_key(std::uint32_t k) {
    return DiffVar{{static_cast<int>((k >> 16) & 0xff), static_cast<int>((k >> 8) & 0xff),
                    static_cast<int>(k & 0xff)},
                   static_cast<int>(k >> 24)};
  }

  friend bool operator==(const DiffVar& a, const DiffVar& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const DiffVar& a, const DiffVar& b) {
    return a.key() <=> b.key();
  }
};

inline DiffVar var(int i, int j, int r, int s = 0) { return DiffVar{{i, j, r}, s}; }

std::string to_string(const DiffVar& v);

/// Nested differential subalgebras V(h) in V(p) in V(a).
enum class Domain { Cartan = 0, Parabolic = 1, Full = 2 };

std::string_view to_string(Domain d);
constexpr Domain join(Domain a, Domain b) { return a < b ? b : a; }
constexpr Domain domain_of(const BasisElt& e) {
  if (e.i == e.j) return Domain::Cartan;
  if (e.i > e.j) return Domain::Parabolic;
  return Domain::Full;
}

enum class Grading {
  ShiftedDegree,    // deg X[s] = s + 1
  DerivationDegree  // deg X[s] = s
};

/// Product of variables, sorted by DiffVar key, exponents >= 1.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (var key, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(const DiffVar& v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const& { return factors_; }
  std::vector<Factor> factors() && { return std::move(factors_); }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent_of(const DiffVar& v) const;
  unsigned total_degree() const;
  long degree(Grading g) const;
  Domain domain() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Element of V(a), V(p) or V(h). Terms are sorted by monomial, have nonzero
/// coefficients and distinct keys, so equal polynomials compare equal
/// term-by-term.
class DiffPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT: constants convert implicitly
  DiffPoly(int c) : DiffPoly(Rational(c)) {}  // NOLINT

  static DiffPoly variable(const DiffVar& v);
  static DiffPoly variable(const BasisElt& e, int s = 0) { return variable(DiffVar{e, s}); }
  static DiffPoly monomial(Monomial m, Rational c = 1);
  /// Sorts and merges arbitrary terms.
  static DiffPoly from_terms(std::vector<Term> terms, Domain d = Domain::Cartan);

  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;

  Domain domain() const { return domain_; }
  /// Smallest domain containing every variable that occurs.
  Domain support_domain() const;
  /// Re-declares the domain; throws std::domain_error when a variable falls
  /// outside it.
  DiffPoly with_domain(Domain d) const;

  /// Distinct variables, ascending.
  std::vector<DiffVar> variables() const;
  unsigned total_degree() const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);
  DiffPoly operator-() const;
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend DiffPoly operator*(DiffPoly a, int c) { return a *= Rational(c); }
  friend DiffPoly operator*(int c, DiffPoly a) { return a *= Rational(c); }

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
  Domain domain_ = Domain::Cartan;
};

/// The derivation applied k times: E[s] -> E[s+1], extended by Leibniz.
DiffPoly derive(const DiffPoly& p, int k = 1);

/// Formal partial derivative with distinct DiffVars independent.
DiffPoly partial(const DiffPoly& p, const DiffVar& v);

/// Sum of the terms of minimal degree. Throws std::domain_error on zero.
DiffPoly min_component(const DiffPoly& p, Grading g);

/// Thrown by eval_at when the point misses a variable.
class MissingAssignment : public std::out_of_range {
 public:
  explicit MissingAssignment(const DiffVar& v);
  const DiffVar& variable() const { return var_; }

 private:
  DiffVar var_;
};

using Point = std::map<DiffVar, Rational>;

Rational eval_at(const DiffPoly& p, const Point& point);

/// Human-readable form, e.g. "E[1,1,0]*E[2,2,1] + E[2,2,1][1]".
std::string to_string(const DiffPoly& p);

}  // namespace wcent
