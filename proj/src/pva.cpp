#include "wcent/pva.hpp"

#include <sstream>
#include <stdexcept>

namespace wcent {

// ---------------------------------------------------------------- LambdaPoly

LambdaPoly::LambdaPoly(DiffPoly c) {
  if (!c.is_zero()) coeffs_.emplace(0, std::move(c));
}

LambdaPoly LambdaPoly::monomial(int power, DiffPoly c) {
  LambdaPoly f;
  f.add_at(power, c);
  return f;
}

DiffPoly LambdaPoly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? DiffPoly{} : it->second;
}

void LambdaPoly::add_at(int k, const DiffPoly& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add_at(k, c);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  for (const auto& [k, c] : o.coeffs_) add_at(k, -c);
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly f = *this;
  for (auto& [k, c] : f.coeffs_) c = -c;
  return f;
}

LambdaPoly operator*(const DiffPoly& p, const LambdaPoly& f) {
  LambdaPoly out;
  if (p.is_zero()) return out;
  for (const auto& [k, c] : f.coeffs_) out.add_at(k, p * c);
  return out;
}

std::string to_string(const LambdaPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.coeffs()) {
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << "(" << to_string(c) << ")";
    } else {
      os << "(" << to_string(c) << ")*lambda";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

LambdaPoly times_lambda(const LambdaPoly& f, int power) {
  LambdaPoly out;
  for (const auto& [k, c] : f.coeffs()) out.add_at(k + power, c);
  return out;
}

LambdaPoly derive(const LambdaPoly& f, int k) {
  return f.map_coeffs([k](const DiffPoly& c) { return derive(c, k); });
}

LambdaPoly lambda_plus_d(const LambdaPoly& f, int k) {
  // (lambda + d)^k = sum_t C(k,t) lambda^{k-t} d^t
  LambdaPoly out;
  for (const auto& [e, c] : f.coeffs()) {
    DiffPoly dc = c;
    for (int t = 0; t <= k; ++t) {
      if (dc.is_zero()) break;
      out.add_at(e + k - t, binomial(k, t) * dc);
      dc = derive(dc, 1);
    }
  }
  return out;
}

LambdaPoly minus_lambda_minus_d(const LambdaPoly& f, int k) {
  LambdaPoly out = lambda_plus_d(f, k);
  return (k % 2) ? -out : out;
}

LambdaPoly substitute_skew(const LambdaPoly& f) {
  LambdaPoly out;
  for (const auto& [k, c] : f.coeffs()) out += minus_lambda_minus_d(LambdaPoly(c), k);
  return out;
}

// ---------------------------------------------------------------- brackets

namespace {

DiffPoly lie_to_poly(const LieElement& x) {
  DiffPoly p;
  for (const auto& [e, c] : x.terms()) p += c * DiffPoly::variable(e);
  return p;
}

/// {u_lambda v} for two basis elements: [u, v] + (u|v) lambda.
LambdaPoly generator_bracket(const Centralizer& alg, const BasisElt& u, const BasisElt& v) {
  LambdaPoly out(lie_to_poly(alg.bracket(u, v)));
  Rational f = alg.form_tr(u, v);
  if (f != 0) out.add_at(1, DiffPoly(f));
  return out;
}

}  // namespace

LambdaPoly lambda_bracket_gen(const Centralizer& alg, const BasisElt& x, const DiffPoly& p) {
  alg.require_valid(x);
  LambdaPoly out;
  for (const DiffVar& v : p.variables()) {
    DiffPoly dp = partial(p, v);
    out += dp * lambda_plus_d(generator_bracket(alg, x, v.base), v.s);
  }
  return out;
}

LambdaPoly lambda_bracket(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b) {
  //   sum  db/dv_j[n] (lambda + d)^n {v_i _{lambda+d} v_j}_-> (-lambda - d)^m da/dv_i[m]
  const auto vars_a = a.variables();
  const auto vars_b = b.variables();
  std::vector<LambdaPoly> left;
  left.reserve(vars_a.size());
  for (const auto& va : vars_a) left.push_back(minus_lambda_minus_d(LambdaPoly(partial(a, va)), va.s));

  LambdaPoly out;
  for (const auto& vb : vars_b) {
    LambdaPoly inner;
    for (std::size_t ia = 0; ia < vars_a.size(); ++ia) {
      const auto& va = vars_a[ia];
      DiffPoly c0 = lie_to_poly(alg.bracket(va.base, vb.base));
      Rational c1 = alg.form_tr(va.base, vb.base);
      if (!c0.is_zero()) inner += c0 * left[ia];
      if (c1 != 0) inner += DiffPoly(c1) * lambda_plus_d(left[ia], 1);
    }
    if (inner.is_zero()) continue;
    out += partial(b, vb) * lambda_plus_d(inner, vb.s);
  }
  return out;
}

// ---------------------------------------------------------------- rho

RhoConfig RhoConfig::standard(const Partition& p) {
  std::vector<std::vector<Rational>> coeffs;
  for (int i = 1; i < p.n(); ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(p.lambda(i)), Rational(0));
    row.back() = 1;
    coeffs.push_back(std::move(row));
  }
  return RhoConfig(p, std::move(coeffs));
}

RhoConfig::RhoConfig(const Partition& p, std::vector<std::vector<Rational>> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != p.n() - 1) {
    throw std::invalid_argument("rho config needs one coefficient list per superdiagonal");
  }
  for (int i = 1; i < p.n(); ++i) {
    const auto& row = coeffs_[static_cast<std::size_t>(i - 1)];
    // r ranges over lambda_{i+1} - lambda_i .. lambda_{i+1} - 1: lambda_i values.
    if (static_cast<int>(row.size()) != p.lambda(i)) {
      throw std::invalid_argument("rho config row " + std::to_string(i) + " must have " +
                                  std::to_string(p.lambda(i)) + " entries");
    }
    if (row.back() == 0) {
      throw std::invalid_argument("rho config row " + std::to_string(i) +
                                  " has a zero leading coefficient");
    }
    offset_.push_back(p.lambda(i + 1) - p.lambda(i));
  }
}

Rational RhoConfig::value(int i, int r) const {
  if (i < 1 || i > static_cast<int>(coeffs_.size())) return 0;
  const auto& row = coeffs_[static_cast<std::size_t>(i - 1)];
  int k = r - offset_[static_cast<std::size_t>(i - 1)];
  if (k < 0 || k >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(k)];
}

DiffPoly rho_project(const DiffPoly& p, const RhoConfig& cfg) {
  std::vector<DiffPoly::Term> out;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    std::vector<Monomial::Factor> kept;
    for (const auto& [key, e] : t.mono.factors()) {
      DiffVar v = DiffVar::from_key(key);
      if (part_of(v.base) != TriangularPart::Upper) {
        kept.emplace_back(key, e);
        continue;
      }
      Rational value = (v.s == 0 && v.base.j == v.base.i + 1) ? cfg.value(v.base.i, v.base.r) : Rational(0);
      for (unsigned k = 0; k < e; ++k) c *= value;
      if (c == 0) break;
    }
    if (c != 0) out.push_back({Monomial(std::move(kept)), std::move(c)});
  }
  return DiffPoly::from_terms(std::move(out), Domain::Parabolic);
}

LambdaPoly rho_project(const LambdaPoly& f, const RhoConfig& cfg) {
  return f.map_coeffs([&cfg](const DiffPoly& c) { return rho_project(c, cfg); });
}

// ---------------------------------------------------------------- membership

std::vector<BasisElt> membership_probes(const Centralizer& alg, MembershipMode mode) {
  if (mode == MembershipMode::FullBasis) return alg.basis_of(TriangularPart::Upper);
  std::vector<BasisElt> out;
  for (const auto& e : alg.basis_of(TriangularPart::Upper)) {
    if (e.j == e.i + 1) out.push_back(e);
  }
  return out;
}

MembershipResult w_membership(const Centralizer& alg, const DiffPoly& p, MembershipMode mode,
                              const std::optional<RhoConfig>& cfg) {
  if (p.domain() > Domain::Parabolic) {
    throw std::domain_error("membership test requires a polynomial over the parabolic domain");
  }
  const RhoConfig rho = cfg ? *cfg : RhoConfig::standard(alg.partition());
  for (const auto& x : membership_probes(alg, mode)) {
    LambdaPoly value = rho_project(lambda_bracket_gen(alg, x, p), rho);
    if (!value.is_zero()) return {false, MembershipWitness{x, std::move(value)}};
  }
  return {};
}

LambdaPoly w_bracket(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b,
                     const std::optional<RhoConfig>& cfg) {
  const RhoConfig rho = cfg ? *cfg : RhoConfig::standard(alg.partition());
#ifndef NDEBUG
  if (!w_membership(alg, a, MembershipMode::FullBasis, rho).member ||
      !w_membership(alg, b, MembershipMode::FullBasis, rho).member) {
    throw std::invalid_argument("w_bracket arguments must lie in the W-algebra");
  }
#endif
  return rho_project(lambda_bracket(alg, a, b), rho);
}

}  // namespace wcent
