#pragma once

// The centralizer of a nilpotent in gl_N: partitions, the basis E_ij^(r),
// structure constants, the two invariant forms and the triangular parts.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcent/rational.hpp"

namespace wcent {

/// Jordan type of the nilpotent, parts stored nondecreasing.
class Partition {
 public:
  /// Throws std::invalid_argument unless parts is nonempty, positive and
  /// nondecreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "1,2,2". Whitespace around entries is tolerated.
  static Partition parse(std::string_view text);

  int n() const { return static_cast<int>(parts_.size()); }
  int N() const { return total_; }
  /// 1-based part lambda_i.
  int lambda(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  /// lambda_a + ... + lambda_b (1-based, inclusive); zero when a > b.
  int lambda_sum(int a, int b) const;
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Every partition of N in nondecreasing form, in lexicographic order.
std::vector<Partition> partitions_of(int N);

/// Every partition with 1 <= N <= max_total and at most max_parts parts.
std::vector<Partition> partitions_up_to(int max_total, int max_parts = 1 << 20);

/// Basis vector E_ij^(r) (indices 1-based).
struct BasisElt {
  int i = 0;
  int j = 0;
  int r = 0;

  friend auto operator<=>(const BasisElt&, const BasisElt&) = default;
};

/// "E[i,j,r]"
std::string to_string(const BasisElt& e);
/// Inverse of to_string; throws std::invalid_argument.
BasisElt parse_basis_elt(std::string_view text);

enum class TriangularPart { Lower, Cartan, Upper };

constexpr TriangularPart part_of(const BasisElt& e) {
  if (e.i > e.j) return TriangularPart::Lower;
  if (e.i == e.j) return TriangularPart::Cartan;
  return TriangularPart::Upper;
}

std::string_view to_string(TriangularPart p);

/// Linear combination of basis vectors; terms sorted by (i, j, r), nonzero.
class LieElement {
 public:
  using Term = std::pair<BasisElt, Rational>;

  LieElement() = default;
  static LieElement basis(const BasisElt& e, Rational c = 1);

  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  LieElement& operator+=(const LieElement& other);
  LieElement operator-() const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a += -b; }
  friend LieElement operator*(const Rational& c, const LieElement& a);

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const LieElement& x);

/// The Lie algebra gl_N^e for a fixed partition.
class Centralizer {
 public:
  explicit Centralizer(Partition p);

  const Partition& partition() const { return partition_; }
  int n() const { return partition_.n(); }

  /// lambda_j - min(lambda_i, lambda_j) <= r < lambda_j.
  bool is_valid(const BasisElt& e) const;
  /// Throws std::invalid_argument for an element outside the basis.
  void require_valid(const BasisElt& e) const;

  /// Canonical (i, j, r) order.
  const std::vector<BasisElt>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// Position in basis(); -1 when invalid.
  int index_of(const BasisElt& e) const;

  /// Basis elements lying in a given triangular part, canonical order.
  std::vector<BasisElt> basis_of(TriangularPart part) const;

  /// [E_ij^(r), E_kl^(s)] = d_kj E_il^(r+s) - d_il E_kj^(r+s), with E^(t) = 0
  /// once t reaches lambda of the column index.
  LieElement bracket(const BasisElt& a, const BasisElt& b) const;
  LieElement bracket(const LieElement& a, const LieElement& b) const;

  /// (E_ij^(0) | E_ji^(0)) = lambda_i, zero elsewhere.
  Rational form_tr(const BasisElt& a, const BasisElt& b) const;
  /// The critical-level form.
  Rational form_crit(const BasisElt& a, const BasisElt& b) const;

  Rational form_tr(const LieElement& a, const LieElement& b) const;
  Rational form_crit(const LieElement& a, const LieElement& b) const;

 private:
  /// lambda_1 + ... + lambda_{i-1} + (n - i + 1) lambda_i
  Rational crit_shift(int i) const;

  Partition partition_;
  std::vector<BasisElt> basis_;
  // index_[((i-1)*n + (j-1)) * max_lambda + r]
  std::vector<int> index_;
  int max_lambda_ = 0;
};

/// The basis list for a partition (free-function form of Centralizer::basis).
std::vector<BasisElt> build_centralizer(const Partition& p);

}  // namespace wcent
