#include "wcent/centralizer.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wcent {

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must be nonempty");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] < parts_[k - 1]) {
      throw std::invalid_argument("partition parts must be nondecreasing");
    }
    total_ += parts_[k];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  for (auto piece : split(text, ',')) parts.push_back(parse_int(piece));
  return Partition(std::move(parts));
}

int Partition::lambda_sum(int a, int b) const {
  int s = 0;
  for (int k = std::max(a, 1); k <= std::min(b, n()); ++k) s += lambda(k);
  return s;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::vector<Partition> partitions_of(int N) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (N > 0) rec(N, 1);
  return out;
}

std::vector<Partition> partitions_up_to(int max_total, int max_parts) {
  std::vector<Partition> out;
  for (int N = 1; N <= max_total; ++N) {
    for (auto& p : partitions_of(N)) {
      if (p.n() <= max_parts) out.push_back(std::move(p));
    }
  }
  return out;
}

std::string to_string(const BasisElt& e) {
  return "E[" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.r) + "]";
}

BasisElt parse_basis_elt(std::string_view text) {
  if (text.size() < 4 || text.substr(0, 2) != "E[" || text.back() != ']') {
    throw std::invalid_argument("malformed basis element: " + std::string(text));
  }
  auto fields = split(text.substr(2, text.size() - 3), ',');
  if (fields.size() != 3) throw std::invalid_argument("malformed basis element: " + std::string(text));
  return BasisElt{parse_int(fields[0]), parse_int(fields[1]), parse_int(fields[2])};
}

std::string_view to_string(TriangularPart p) {
  switch (p) {
    case TriangularPart::Lower: return "Lower";
    case TriangularPart::Cartan: return "Cartan";
    case TriangularPart::Upper: return "Upper";
  }
  return "?";
}

// ---------------------------------------------------------------- LieElement

LieElement LieElement::basis(const BasisElt& e, Rational c) {
  LieElement x;
  if (c != 0) x.terms_.emplace_back(e, std::move(c));
  return x;
}

LieElement& LieElement::operator+=(const LieElement& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement x = *this;
  for (auto& t : x.terms_) t.second = -t.second;
  return x;
}

LieElement operator*(const Rational& c, const LieElement& a) {
  if (c == 0) return {};
  LieElement x = a;
  for (auto& t : x.terms_) t.second *= c;
  return x;
}

std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << to_string(e);
  }
  return os.str();
}

// ---------------------------------------------------------------- Centralizer

Centralizer::Centralizer(Partition p) : partition_(std::move(p)) {
  const int n = partition_.n();
  max_lambda_ = partition_.lambda(n);
  index_.assign(static_cast<std::size_t>(n * n * max_lambda_), -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int lo = partition_.lambda(j) - std::min(partition_.lambda(i), partition_.lambda(j));
      for (int r = lo; r < partition_.lambda(j); ++r) {
        index_[static_cast<std::size_t>(((i - 1) * n + (j - 1)) * max_lambda_ + r)] =
            static_cast<int>(basis_.size());
        basis_.push_back({i, j, r});
      }
    }
  }
}

bool Centralizer::is_valid(const BasisElt& e) const {
  const int n = partition_.n();
  if (e.i < 1 || e.i > n || e.j < 1 || e.j > n) return false;
  const int lj = partition_.lambda(e.j);
  return e.r < lj && e.r >= lj - std::min(partition_.lambda(e.i), lj);
}

void Centralizer::require_valid(const BasisElt& e) const {
  if (!is_valid(e)) {
    throw std::invalid_argument(to_string(e) + " is not a basis element for partition " +
                                partition_.to_string());
  }
}

int Centralizer::index_of(const BasisElt& e) const {
  if (!is_valid(e)) return -1;
  return index_[static_cast<std::size_t>(((e.i - 1) * n() + (e.j - 1)) * max_lambda_ + e.r)];
}

std::vector<BasisElt> Centralizer::basis_of(TriangularPart part) const {
  std::vector<BasisElt> out;
  for (const auto& e : basis_) {
    if (part_of(e) == part) out.push_back(e);
  }
  return out;
}

LieElement Centralizer::bracket(const BasisElt& a, const BasisElt& b) const {
  require_valid(a);
  require_valid(b);
  LieElement out;
  const int t = a.r + b.r;
  if (b.i == a.j && t < partition_.lambda(b.j)) {
    BasisElt e{a.i, b.j, t};
    require_valid(e);
    out += LieElement::basis(e, 1);
  }
  if (a.i == b.j && t < partition_.lambda(a.j)) {
    BasisElt e{b.i, a.j, t};
    require_valid(e);
    out += LieElement::basis(e, -1);
  }
  return out;
}

LieElement Centralizer::bracket(const LieElement& a, const LieElement& b) const {
  LieElement out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out += (cx * cy) * bracket(x, y);
  }
  return out;
}

Rational Centralizer::form_tr(const BasisElt& a, const BasisElt& b) const {
  if (a.r != 0 || b.r != 0 || a.i != b.j || a.j != b.i) return 0;
  if (partition_.lambda(a.i) != partition_.lambda(a.j)) return 0;
  return partition_.lambda(a.i);
}

Rational Centralizer::crit_shift(int i) const {
  return partition_.lambda_sum(1, i - 1) + (n() - i + 1) * partition_.lambda(i);
}

Rational Centralizer::form_crit(const BasisElt& a, const BasisElt& b) const {
  if (a.r != 0 || b.r != 0) return 0;
  if (a.i == a.j && b.i == b.j) {
    // <E_ii, E_jj> is nonzero for every pair of diagonal elements.
    Rational v = std::min(partition_.lambda(a.i), partition_.lambda(b.i));
    if (a.i == b.i) v -= crit_shift(a.i);
    return v;
  }
  if (a.i != b.j || a.j != b.i || a.i == a.j) return 0;
  if (partition_.lambda(a.i) != partition_.lambda(a.j)) return 0;
  return -crit_shift(a.i);
}

Rational Centralizer::form_tr(const LieElement& a, const LieElement& b) const {
  Rational s = 0;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) s += cx * cy * form_tr(x, y);
  }
  return s;
}

Rational Centralizer::form_crit(const LieElement& a, const LieElement& b) const {
  Rational s = 0;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) s += cx * cy * form_crit(x, y);
  }
  return s;
}

std::vector<BasisElt> build_centralizer(const Partition& p) { return Centralizer(p).basis(); }

}  // namespace wcent
