#include "wcent/vacuum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wcent {

std::string to_string(const LoopMode& x) {
  return to_string(x.base) + "[" + std::to_string(x.m) + "]";
}

PBWMonomial::PBWMonomial(std::vector<LoopMode> factors) : factors_(std::move(factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].m >= 0) throw std::invalid_argument("PBW monomials use negative modes only");
    if (k > 0 && factors_[k] < factors_[k - 1]) {
      throw std::invalid_argument("PBW monomial factors out of order");
    }
  }
}

std::vector<std::pair<LoopMode, int>> PBWMonomial::powers() const {
  std::vector<std::pair<LoopMode, int>> out;
  for (const auto& f : factors_) {
    if (!out.empty() && out.back().first == f) ++out.back().second;
    else out.emplace_back(f, 1);
  }
  return out;
}

int PBWMonomial::depth() const {
  int d = 0;
  for (const auto& f : factors_) d -= f.m;
  return d;
}

namespace {

using Word = std::vector<LoopMode>;
using Terms = VacuumVector::Terms;

void accumulate(Terms& out, Word w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(PBWMonomial(std::move(w)), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// prefix (sorted) times one negative mode y, in normal form.
void insert_right(const Centralizer& alg, const Word& prefix, const LoopMode& y, const Rational& c,
                  Terms& out) {
  if (prefix.empty() || !(y < prefix.back())) {
    Word w = prefix;
    w.push_back(y);
    accumulate(out, std::move(w), c);
    return;
  }
  const LoopMode last = prefix.back();
  const Word rest(prefix.begin(), prefix.end() - 1);
  // rest * y * last
  Terms tmp;
  insert_right(alg, rest, y, c, tmp);
  for (const auto& [mono, d] : tmp) insert_right(alg, mono.factors(), last, d, out);
  // rest * [last, y]; both modes negative so no central term arises.
  const int q = last.m + y.m;
  const LieElement br = alg.bracket(last.base, y.base);
  for (const auto& [z, cz] : br.terms()) {
    insert_right(alg, rest, LoopMode{z, q}, c * cz, out);
  }
}

// prefix (sorted) times an arbitrary word.
void multiply_word(const Centralizer& alg, const Word& prefix, const Word& suffix, std::size_t from,
                   const Rational& c, Terms& out) {
  if (from == suffix.size()) {
    accumulate(out, prefix, c);
    return;
  }
  Terms tmp;
  insert_right(alg, prefix, suffix[from], c, tmp);
  for (const auto& [mono, d] : tmp) multiply_word(alg, mono.factors(), suffix, from + 1, d, out);
}

// Z[m] y_1 ... y_k |0> for m >= 0.
void act_word(const Centralizer& alg, const BasisElt& z, int m, const Word& word, const Rational& c,
              Terms& out) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    const LoopMode& y = word[i];
    const Word prefix(word.begin(), word.begin() + static_cast<long>(i));
    const Word suffix(word.begin() + static_cast<long>(i) + 1, word.end());
    if (m == -y.m) {
      Rational kappa = Rational(m) * alg.form_crit(z, y.base);
      if (kappa != 0) {
        Word w = prefix;
        w.insert(w.end(), suffix.begin(), suffix.end());
        accumulate(out, std::move(w), c * kappa);
      }
    }
    const int q = m + y.m;
    const LieElement br = alg.bracket(z, y.base);
    for (const auto& [w, cw] : br.terms()) {
      if (q >= 0) {
        Terms tmp;
        act_word(alg, w, q, suffix, c * cw, tmp);
        for (const auto& [mono, d] : tmp) multiply_word(alg, prefix, mono.factors(), 0, d, out);
      } else {
        Word rest;
        rest.reserve(suffix.size() + 1);
        rest.push_back(LoopMode{w, q});
        rest.insert(rest.end(), suffix.begin(), suffix.end());
        multiply_word(alg, prefix, rest, 0, c * cw, out);
      }
    }
  }
}

const Centralizer& require_algebra(const std::shared_ptr<const Centralizer>& alg) {
  if (!alg) throw std::logic_error("vacuum vector has modes but no algebra");
  return *alg;
}

}  // namespace

// ---------------------------------------------------------------- VacuumVector

VacuumVector::VacuumVector(const Rational& c) {
  if (c != 0) terms_.emplace(PBWMonomial{}, c);
}

VacuumVector VacuumVector::zero(std::shared_ptr<const Centralizer> alg) {
  VacuumVector v;
  v.alg_ = std::move(alg);
  return v;
}

VacuumVector VacuumVector::mode(std::shared_ptr<const Centralizer> alg, const LoopMode& x) {
  require_algebra(alg).require_valid(x.base);
  if (x.m >= 0) throw std::invalid_argument("vacuum vectors use negative modes: " + to_string(x));
  VacuumVector v;
  v.alg_ = std::move(alg);
  v.terms_.emplace(PBWMonomial({x}), Rational(1));
  return v;
}

VacuumVector VacuumVector::normal_order(std::shared_ptr<const Centralizer> alg, const std::vector<LoopMode>& word) {
  for (const auto& x : word) {
    if (x.m >= 0) throw std::invalid_argument("normal_order takes negative modes only: " + to_string(x));
    require_algebra(alg).require_valid(x.base);
  }
  VacuumVector v;
  v.alg_ = std::move(alg);
  multiply_word(*v.alg_, {}, word, 0, Rational(1), v.terms_);
  return v;
}

VacuumVector VacuumVector::from_terms(std::shared_ptr<const Centralizer> alg, Terms terms) {
  VacuumVector v;
  v.alg_ = std::move(alg);
  for (auto& [m, c] : terms) {
    if (c != 0) v.terms_.emplace(m, std::move(c));
  }
  return v;
}

Rational VacuumVector::vacuum_coeff() const {
  auto it = terms_.find(PBWMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int VacuumVector::depth() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.depth());
  return d;
}

void VacuumVector::adopt(const std::shared_ptr<const Centralizer>& alg) {
  if (!alg_) alg_ = alg;
}

void VacuumVector::add_term(const PBWMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VacuumVector& VacuumVector::operator+=(const VacuumVector& o) {
  adopt(o.alg_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VacuumVector& VacuumVector::operator-=(const VacuumVector& o) {
  adopt(o.alg_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VacuumVector VacuumVector::operator-() const {
  VacuumVector v = *this;
  for (auto& [m, c] : v.terms_) c = -c;
  return v;
}

VacuumVector operator*(const Rational& c, const VacuumVector& v) {
  VacuumVector out;
  out.alg_ = v.alg_;
  if (c == 0) return out;
  for (const auto& [m, d] : v.terms_) out.terms_.emplace(m, c * d);
  return out;
}

VacuumVector operator*(const VacuumVector& a, const VacuumVector& b) {
  VacuumVector out;
  out.alg_ = a.alg_ ? a.alg_ : b.alg_;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (mb.is_vacuum()) {
        out.add_term(ma, ca * cb);
      } else if (ma.is_vacuum()) {
        out.add_term(mb, ca * cb);
      } else {
        multiply_word(require_algebra(out.alg_), ma.factors(), mb.factors(), 0, ca * cb, out.terms_);
      }
    }
  }
  return out;
}

std::string to_string(const VacuumVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (m.is_vacuum()) {
      os << mag.get_str() << "*|0>";
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    bool firstf = true;
    for (const auto& [x, e] : m.powers()) {
      if (!firstf) os << "*";
      firstf = false;
      os << to_string(x);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

VacuumVector apply_T(const VacuumVector& v) {
  VacuumVector out = VacuumVector::zero(v.algebra());
  for (const auto& [mono, c] : v.terms()) {
    const auto& w = mono.factors();
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word prefix(w.begin(), w.begin() + static_cast<long>(i));
      Word rest;
      rest.push_back(LoopMode{w[i].base, w[i].m - 1});
      rest.insert(rest.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      VacuumVector::Terms tmp;
      multiply_word(require_algebra(v.algebra()), prefix, rest, 0, c * Rational(-w[i].m), tmp);
      out += VacuumVector::from_terms(v.algebra(), std::move(tmp));
    }
  }
  return out;
}

VacuumVector act_mode(const BasisElt& x, int m, const VacuumVector& v) {
  if (m < 0) throw std::invalid_argument("act_mode takes a non-negative mode");
  VacuumVector::Terms out;
  for (const auto& [mono, c] : v.terms()) {
    if (mono.is_vacuum()) continue;
    act_word(require_algebra(v.algebra()), x, m, mono.factors(), c, out);
  }
  return VacuumVector::from_terms(v.algebra(), std::move(out));
}

std::vector<int> weight(const PBWMonomial& m, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& f : m.factors()) {
    w[static_cast<std::size_t>(f.base.i - 1)] += 1;
    w[static_cast<std::size_t>(f.base.j - 1)] -= 1;
  }
  return w;
}

bool has_zero_weight(const VacuumVector& v, int n) {
  for (const auto& [m, c] : v.terms()) {
    auto w = weight(m, n);
    if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) return false;
  }
  return true;
}

}  // namespace wcent
