#include "wcent/pva_axioms.hpp"

#include <algorithm>
#include <functional>

namespace wcent {

DiffPoly random_diffpoly(const Centralizer& alg, std::mt19937_64& rng, const RandomPolySpec& spec) {
  std::vector<BasisElt> pool;
  for (const auto& e : alg.basis()) {
    if (domain_of(e) <= spec.domain) pool.push_back(e);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> pick_s(0, spec.max_derivation);
  std::uniform_int_distribution<int> pick_nvars(1, spec.max_vars);
  std::uniform_int_distribution<int> pick_terms(1, spec.max_terms);
  std::uniform_int_distribution<int> pick_coeff(1, spec.max_coeff);
  std::uniform_int_distribution<int> pick_sign(0, 1);

  for (;;) {
    std::vector<DiffVar> vars;
    const int nvars = pick_nvars(rng);
    for (int k = 0; k < nvars; ++k) vars.push_back(DiffVar{pool[pick(rng)], pick_s(rng)});
    std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
    std::uniform_int_distribution<int> pick_deg(0, spec.max_degree);

    DiffPoly p;
    const int terms = pick_terms(rng);
    for (int t = 0; t < terms; ++t) {
      DiffPoly mono(pick_sign(rng) ? pick_coeff(rng) : -pick_coeff(rng));
      const int deg = pick_deg(rng);
      for (int d = 0; d < deg; ++d) mono = mono * DiffPoly::variable(vars[pick_var(rng)]);
      p += mono;
    }
    if (!p.is_zero() && !p.is_constant()) return p;
  }
}

namespace {

void add_two(TwoSymbolPoly& out, int e, int m, const DiffPoly& c) {
  if (c.is_zero()) return;
  auto& slot = out[{e, m}];
  slot += c;
  if (slot.is_zero()) out.erase({e, m});
}

}  // namespace

TwoSymbolPoly jacobi_defect(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) {
  TwoSymbolPoly out;
  // {a_lambda {b_mu c}}
  const LambdaPoly bc = lambda_bracket(alg, b, c);
  for (const auto& [m, g] : bc.coeffs()) {
    const LambdaPoly inner = lambda_bracket(alg, a, g);
    for (const auto& [e, h] : inner.coeffs()) add_two(out, e, m, h);
  }
  // - {b_mu {a_lambda c}}
  const LambdaPoly ac = lambda_bracket(alg, a, c);
  for (const auto& [e, g] : ac.coeffs()) {
    const LambdaPoly inner = lambda_bracket(alg, b, g);
    for (const auto& [m, h] : inner.coeffs()) add_two(out, e, m, -h);
  }
  // - {{a_lambda b}_{lambda+mu} c}
  const LambdaPoly ab = lambda_bracket(alg, a, b);
  for (const auto& [e, h] : ab.coeffs()) {
    const LambdaPoly outer = lambda_bracket(alg, h, c);
    for (const auto& [j, q] : outer.coeffs()) {
      for (int t = 0; t <= j; ++t) add_two(out, e + t, j - t, -(binomial(j, t) * q));
    }
  }
  return out;
}

bool sesquilinear_left(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b) {
  return lambda_bracket(alg, derive(a, 1), b) == -times_lambda(lambda_bracket(alg, a, b));
}

bool sesquilinear_right(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b) {
  return lambda_bracket(alg, a, derive(b, 1)) == lambda_plus_d(lambda_bracket(alg, a, b), 1);
}

bool skewsymmetric(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b) {
  return lambda_bracket(alg, a, b) == -substitute_skew(lambda_bracket(alg, b, a));
}

bool leibniz_right(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) {
  return lambda_bracket(alg, a, b * c) == lambda_bracket(alg, a, b) * c + lambda_bracket(alg, a, c) * b;
}

bool leibniz_left(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) {
  // {ab_lambda c} = {a_{lambda+d} c}_-> b + {b_{lambda+d} c}_-> a
  auto arrow = [&](const DiffPoly& x, const DiffPoly& y) {
    LambdaPoly out;
    const LambdaPoly xc = lambda_bracket(alg, x, c);
    for (const auto& [k, h] : xc.coeffs()) out += h * lambda_plus_d(LambdaPoly(y), k);
    return out;
  };
  return lambda_bracket(alg, a * b, c) == arrow(a, b) + arrow(b, a);
}

bool jacobi(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) {
  return jacobi_defect(alg, a, b, c).empty();
}

std::vector<AxiomTally> check_pva_axioms(const Partition& p, int trials, std::uint64_t seed) {
  const Centralizer alg(p);
  std::mt19937_64 rng(seed);
  std::vector<AxiomTally> tallies;
  for (const char* name : {"sesquilinearity-left", "sesquilinearity-right", "skewsymmetry", "leibniz-right",
                           "leibniz-left", "jacobi"}) {
    tallies.push_back(AxiomTally{name, 0, 0, {}});
  }
  auto record = [](AxiomTally& t, bool ok, std::initializer_list<const DiffPoly*> args) {
    ++t.trials;
    if (ok) return;
    if (t.failures++ == 0) {
      for (const auto* a : args) t.first_failure.push_back(to_string(*a));
    }
  };
  for (int k = 0; k < trials; ++k) {
    DiffPoly a = random_diffpoly(alg, rng);
    DiffPoly b = random_diffpoly(alg, rng);
    DiffPoly c = random_diffpoly(alg, rng);
    record(tallies[0], sesquilinear_left(alg, a, b), {&a, &b});
    record(tallies[1], sesquilinear_right(alg, a, b), {&a, &b});
    record(tallies[2], skewsymmetric(alg, a, b), {&a, &b});
    record(tallies[3], leibniz_right(alg, a, b, c), {&a, &b, &c});
    record(tallies[4], leibniz_left(alg, a, b, c), {&a, &b, &c});
    record(tallies[5], jacobi(alg, a, b, c), {&a, &b, &c});
  }
  return tallies;
}

}  // namespace wcent
