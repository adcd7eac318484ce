#include "wcent/diffpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wcent {

std::string to_string(const DiffVar& v) {
  std::string out = to_string(v.base);
  if (v.s != 0) out += "[" + std::to_string(v.s) + "]";
  return out;
}

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::Cartan: return "Cartan";
    case Domain::Parabolic: return "Parabolic";
    case Domain::Full: return "Full";
  }
  return "?";
}

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
}

Monomial Monomial::of(const DiffVar& v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v.key(), exponent);
  return m;
}

unsigned Monomial::exponent_of(const DiffVar& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v.key(), 0});
  return (it != factors_.end() && it->first == v.key()) ? it->second : 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

long Monomial::degree(Grading g) const {
  long d = 0;
  for (const auto& [key, e] : factors_) {
    long s = static_cast<long>(key >> 24);
    d += static_cast<long>(e) * (g == Grading::ShiftedDegree ? s + 1 : s);
  }
  return d;
}

Domain Monomial::domain() const {
  Domain d = Domain::Cartan;
  for (const auto& f : factors_) d = join(d, domain_of(DiffVar::from_key(f.first).base));
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  while (x != a.factors_.end() || y != b.factors_.end()) {
    if (y == b.factors_.end() || (x != a.factors_.end() && x->first < y->first)) {
      m.factors_.push_back(*x++);
    } else if (x == a.factors_.end() || y->first < x->first) {
      m.factors_.push_back(*y++);
    } else {
      m.factors_.emplace_back(x->first, x->second + y->second);
      ++x;
      ++y;
    }
  }
  return m;
}

// ------------------------------------------------------------------ DiffPoly

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

DiffPoly DiffPoly::variable(const DiffVar& v) {
  DiffPoly p;
  p.terms_.push_back({Monomial::of(v), Rational(1)});
  p.domain_ = domain_of(v.base);
  return p;
}

DiffPoly DiffPoly::monomial(Monomial m, Rational c) {
  DiffPoly p;
  if (c != 0) {
    p.domain_ = m.domain();
    p.terms_.push_back({std::move(m), std::move(c)});
  }
  return p;
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms, Domain d) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  DiffPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  p.domain_ = join(d, p.support_domain());
  return p;
}

Rational DiffPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

Domain DiffPoly::support_domain() const {
  Domain d = Domain::Cartan;
  for (const auto& t : terms_) d = join(d, t.mono.domain());
  return d;
}

DiffPoly DiffPoly::with_domain(Domain d) const {
  if (support_domain() > d) {
    throw std::domain_error("polynomial has variables outside the " + std::string(to_string(d)) +
                            " domain");
  }
  DiffPoly p = *this;
  p.domain_ = d;
  return p;
}

std::vector<DiffVar> DiffPoly::variables() const {
  std::vector<std::uint32_t> keys;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) keys.push_back(f.first);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<DiffVar> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(DiffVar::from_key(k));
  return out;
}

unsigned DiffPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  if (o.terms_.empty()) {
    domain_ = join(domain_, o.domain_);
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({std::move(a->mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  domain_ = join(domain_, o.domain_);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) { return *this += -o; }

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    DiffPoly z;
    z.domain_ = join(a.domain_, b.domain_);
    return z;
  }
  std::vector<DiffPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return DiffPoly::from_terms(std::move(prod), join(a.domain_, b.domain_));
}

namespace {

// Single application of the derivation to one monomial.
void derive_monomial(const Monomial& m, const Rational& c, std::vector<DiffPoly::Term>& out) {
  const auto& f = m.factors();
  for (std::size_t k = 0; k < f.size(); ++k) {
    DiffVar v = DiffVar::from_key(f[k].first);
    if (v.s >= 255) throw std::overflow_error("derivation order exceeds 255");
    std::vector<Monomial::Factor> nf = f;
    nf[k].second -= 1;
    nf.emplace_back(DiffVar{v.base, v.s + 1}.key(), 1);
    out.push_back({Monomial(std::move(nf)), c * f[k].second});
  }
}

}  // namespace

DiffPoly derive(const DiffPoly& p, int k) {
  DiffPoly cur = p;
  for (int step = 0; step < k; ++step) {
    std::vector<DiffPoly::Term> out;
    for (const auto& t : cur.terms()) derive_monomial(t.mono, t.coeff, out);
    cur = DiffPoly::from_terms(std::move(out), cur.domain());
    if (cur.is_zero()) break;
  }
  return cur.with_domain(p.domain());
}

DiffPoly partial(const DiffPoly& p, const DiffVar& v) {
  const auto key = v.key();
  std::vector<DiffPoly::Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent_of(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> nf = t.mono.factors();
    for (auto& f : nf) {
      if (f.first == key) f.second -= 1;
    }
    out.push_back({Monomial(std::move(nf)), t.coeff * e});
  }
  return DiffPoly::from_terms(std::move(out), p.domain());
}

DiffPoly min_component(const DiffPoly& p, Grading g) {
  if (p.is_zero()) throw std::domain_error("min_component of the zero polynomial");
  long best = std::numeric_limits<long>::max();
  for (const auto& t : p.terms()) best = std::min(best, t.mono.degree(g));
  std::vector<DiffPoly::Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.degree(g) == best) out.push_back(t);
  }
  return DiffPoly::from_terms(std::move(out), p.domain());
}

MissingAssignment::MissingAssignment(const DiffVar& v)
    : std::out_of_range("no value assigned to " + to_string(v)), var_(v) {}

Rational eval_at(const DiffPoly& p, const Point& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term = t.coeff;
    for (const auto& [key, e] : t.mono.factors()) {
      DiffVar v = DiffVar::from_key(key);
      auto it = point.find(v);
      if (it == point.end()) throw MissingAssignment(v);
      Rational power = 1;
      for (unsigned k = 0; k < e; ++k) power *= it->second;
      term *= power;
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const Rational& c = t.coeff;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (t.mono.is_one()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    bool firstf = true;
    for (const auto& [key, e] : t.mono.factors()) {
      if (!firstf) os << "*";
      firstf = false;
      os << to_string(DiffVar::from_key(key));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace wcent
