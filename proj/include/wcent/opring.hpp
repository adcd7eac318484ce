#pragma once

// Operators sum_{a,b} c_{a,b}(u) x^a D^b with x, u central and D a
// derivation of the coefficient ring, D c = c D + D(c). The coefficient ring
// may be noncommutative; normal order keeps coefficients on the left.
//
// The same engine serves V(p)[u] with D = d and U(t^-1 a[t^-1])[z] with
// D = T, so the column determinant is written once.

#include <algorithm>
#include <concepts>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wcent/rational.hpp"

namespace wcent {

/// Requirements on an operator coefficient: a ring over the rationals with a
/// derivation reachable as `derivation(c)`.
template <class C>
concept OperatorCoefficient = requires(C a, const C& b, const Rational& q) {
  { a += b } -> std::same_as<C&>;
  { a -= b } -> std::same_as<C&>;
  { b * b } -> std::convertible_to<C>;
  { q * b } -> std::convertible_to<C>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { derivation(b) } -> std::convertible_to<C>;
};

/// Polynomial in a central variable with coefficients in C.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(C c) { add_at(0, std::move(c)); }
  static UPoly monomial(int power, C c) {
    UPoly p;
    p.add_at(power, std::move(c));
    return p;
  }

  const std::map<int, C>& coeffs() const& { return coeffs_; }
  std::map<int, C> coeffs() && { return std::move(coeffs_); }
  bool is_zero() const { return coeffs_.empty(); }
  C coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? C{} : it->second;
  }

  void add_at(int k, const C& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  UPoly& operator+=(const UPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_at(k, c);
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_at(k, Rational(-1) * c);
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out;
    for (const auto& [i, x] : a.coeffs_) {
      for (const auto& [j, y] : b.coeffs_) out.add_at(i + j, x * y);
    }
    return out;
  }
  friend UPoly operator*(const Rational& q, const UPoly& a) {
    UPoly out;
    if (q == 0) return out;
    for (const auto& [k, c] : a.coeffs_) out.add_at(k, q * c);
    return out;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Derivation applied coefficientwise (u is a constant).
  friend UPoly derivation(const UPoly& a) {
    UPoly out;
    for (const auto& [k, c] : a.coeffs_) out.add_at(k, derivation(c));
    return out;
  }

 private:
  std::map<int, C> coeffs_;
};

/// Normal-ordered operator: key (x-exponent, D-exponent) -> UPoly coefficient.
template <class C>
class DiffOp {
 public:
  using Key = std::pair<int, int>;

  DiffOp() = default;
  /// Multiplication operator by a coefficient.
  explicit DiffOp(UPoly<C> c) { add_at(0, 0, std::move(c)); }
  static DiffOp x_power(int a) { return term(a, 0, UPoly<C>(one())); }
  static DiffOp d_power(int b) { return term(0, b, UPoly<C>(one())); }
  static DiffOp term(int a, int b, UPoly<C> c) {
    DiffOp op;
    op.add_at(a, b, std::move(c));
    return op;
  }

  const std::map<Key, UPoly<C>>& terms() const& { return terms_; }
  std::map<Key, UPoly<C>> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  UPoly<C> coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? UPoly<C>{} : it->second;
  }

  void add_at(int a, int b, const UPoly<C>& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({a, b});
    if (it == terms_.end()) {
      terms_.emplace(Key{a, b}, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  DiffOp& operator+=(const DiffOp& o) {
    for (const auto& [k, c] : o.terms_) add_at(k.first, k.second, c);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    for (const auto& [k, c] : o.terms_) add_at(k.first, k.second, Rational(-1) * c);
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const Rational& q, const DiffOp& a) {
    DiffOp out;
    for (const auto& [k, c] : a.terms_) out.add_at(k.first, k.second, q * c);
    return out;
  }

  /// (f x^a D^b)(g x^c D^d) = f sum_t C(b,t) D^t(g) x^{a+c} D^{b-t+d}
  friend DiffOp operator*(const DiffOp& lhs, const DiffOp& rhs) {
    DiffOp out;
    for (const auto& [kr, g] : rhs.terms_) {
      // D^t(g) for t up to the largest D-power on the left.
      int max_b = 0;
      for (const auto& [kl, f] : lhs.terms_) max_b = std::max(max_b, kl.second);
      std::vector<UPoly<C>> dg{g};
      for (int t = 1; t <= max_b; ++t) {
        dg.push_back(derivation(dg.back()));
        if (dg.back().is_zero()) break;
      }
      for (const auto& [kl, f] : lhs.terms_) {
        const int b = kl.second;
        for (int t = 0; t <= b && t < static_cast<int>(dg.size()); ++t) {
          if (dg[static_cast<std::size_t>(t)].is_zero()) break;
          UPoly<C> prod = f * dg[static_cast<std::size_t>(t)];
          out.add_at(kl.first + kr.first, b - t + kr.second, binomial(b, t) * prod);
        }
      }
    }
    return out;
  }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

 private:
  static C one() { return C(Rational(1)); }
  std::map<Key, UPoly<C>> terms_;
};

/// x-coefficients of the operator evaluated on the constant 1: every term
/// carrying a positive power of D is discarded.
template <class C>
std::map<int, UPoly<C>> constant_part(const DiffOp<C>& op) {
  std::map<int, UPoly<C>> out;
  for (const auto& [k, c] : op.terms()) {
    if (k.second == 0) out[k.first] += c;
  }
  return out;
}

/// A function on which operators act: polynomial in x with UPoly coefficients.
template <class C>
using XPoly = std::map<int, UPoly<C>>;

/// op applied to f: sum f_{a,b} x^a D^b(f).
template <class C>
XPoly<C> apply_operator(const DiffOp<C>& op, const XPoly<C>& f) {
  XPoly<C> out;
  int max_b = 0;
  for (const auto& [k, c] : op.terms()) max_b = std::max(max_b, k.second);
  std::vector<XPoly<C>> df{f};
  for (int t = 1; t <= max_b; ++t) {
    XPoly<C> next;
    for (const auto& [a, c] : df.back()) {
      UPoly<C> d = derivation(c);
      if (!d.is_zero()) next.emplace(a, std::move(d));
    }
    df.push_back(std::move(next));
  }
  for (const auto& [k, c] : op.terms()) {
    for (const auto& [a, g] : df[static_cast<std::size_t>(k.second)]) {
      UPoly<C>& slot = out[a + k.first];
      slot += c * g;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Square matrix of operators; zero entries are skipped by the determinant.
template <class C>
class OpMatrix {
 public:
  explicit OpMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}

  int size() const { return n_; }
  /// 1-based access.
  DiffOp<C>& at(int row, int col) { return entries_[index(row, col)]; }
  const DiffOp<C>& at(int row, int col) const { return entries_[index(row, col)]; }

 private:
  std::size_t index(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) throw std::out_of_range("OpMatrix index");
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
  }
  int n_;
  std::vector<DiffOp<C>> entries_;
};

namespace detail {

inline int permutation_sign(const std::vector<int>& sigma) {
  int inversions = 0;
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    for (std::size_t b = a + 1; b < sigma.size(); ++b) inversions += sigma[a] > sigma[b];
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace detail

/// cdet M = sum_sigma sgn(sigma) a_{sigma(1)1} a_{sigma(2)2} ... a_{sigma(n)n},
/// factors multiplied left to right in column order. Prefix products are
/// shared across permutations and zero entries prune the search.
template <class C>
DiffOp<C> column_determinant(const OpMatrix<C>& m) {
  const int n = m.size();
  DiffOp<C> total;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  std::function<void(int, const DiffOp<C>&)> rec = [&](int col, const DiffOp<C>& prefix) {
    if (col > n) {
      if (detail::permutation_sign(sigma) > 0) total += prefix;
      else total -= prefix;
      return;
    }
    for (int row = 1; row <= n; ++row) {
      if (used[static_cast<std::size_t>(row)] || m.at(row, col).is_zero()) continue;
      used[static_cast<std::size_t>(row)] = true;
      sigma[static_cast<std::size_t>(col - 1)] = row;
      DiffOp<C> next = col == 1 ? m.at(row, col) : prefix * m.at(row, col);
      if (!next.is_zero()) rec(col + 1, next);
      used[static_cast<std::size_t>(row)] = false;
    }
  };
  rec(1, DiffOp<C>{});
  return total;
}

/// constant_part(column_determinant(m)), computed by letting the factors act
/// on 1 from the right so no D-powers are ever materialized.
template <class C>
XPoly<C> column_determinant_on_one(const OpMatrix<C>& m, const C& one) {
  const int n = m.size();
  XPoly<C> total;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  std::function<void(int, const XPoly<C>&)> rec = [&](int col, const XPoly<C>& suffix) {
    if (col < 1) {
      const Rational sign = detail::permutation_sign(sigma);
      for (const auto& [a, c] : suffix) total[a] += sign * c;
      return;
    }
    for (int row = 1; row <= n; ++row) {
      if (used[static_cast<std::size_t>(row)] || m.at(row, col).is_zero()) continue;
      used[static_cast<std::size_t>(row)] = true;
      sigma[static_cast<std::size_t>(col - 1)] = row;
      XPoly<C> next = apply_operator(m.at(row, col), suffix);
      if (!next.empty()) rec(col - 1, next);
      used[static_cast<std::size_t>(row)] = false;
    }
  };
  XPoly<C> start;
  start.emplace(0, UPoly<C>(one));
  rec(n, start);
  std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
  return total;
}

}  // namespace wcent
