#include "wcent/generators.hpp"

#include <random>
#include <stdexcept>

namespace wcent {

bool in_window(const Partition& p, int k, int r) {
  const int n = p.n();
  if (k < 1 || k > n || r < 0) return false;
  return p.lambda_sum(n - k + 2, n) < r + k && r + k <= p.lambda_sum(n - k + 1, n);
}

std::vector<GenIndex> window_indices(const Partition& p) {
  std::vector<GenIndex> out;
  for (int k = 1; k <= p.n(); ++k) {
    for (int r = 0; r + k <= p.lambda_sum(p.n() - k + 1, p.n()); ++r) {
      if (in_window(p, k, r)) out.push_back({k, r});
    }
  }
  return out;
}

DPoly e_of_u(const Centralizer& alg, int i, int j) {
  const Partition& p = alg.partition();
  const int lo = i >= j ? 0 : p.lambda(j) - p.lambda(i);
  DPoly out;
  for (int r = lo; r < p.lambda(j); ++r) out.add_at(r, DiffPoly::variable(BasisElt{i, j, r}));
  return out;
}

DMatrix w_generator_matrix(const Partition& p) {
  const Centralizer alg(p);
  const int n = p.n();
  DMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.at(i, i) = DOp::x_power(1) + Rational(p.lambda(i)) * DOp::d_power(1) + DOp(e_of_u(alg, i, i));
    if (i < n) m.at(i, i + 1) = DOp(DPoly::monomial(p.lambda(i + 1) - 1, DiffPoly(1)));
    for (int j = 1; j < i; ++j) m.at(i, j) = DOp(e_of_u(alg, i, j));
  }
  return m;
}

namespace {

GeneratorTable read_coefficients(const Partition& p, const std::map<int, DPoly>& xpoly) {
  GeneratorTable out;
  const int n = p.n();
  for (int k = 1; k <= n; ++k) {
    auto it = xpoly.find(n - k);
    if (it == xpoly.end()) continue;
    for (const auto& [r, c] : it->second.coeffs()) out.emplace(GenIndex{k, r}, c.with_domain(Domain::Parabolic));
  }
  return out;
}

GeneratorTable restrict_to_window(const Partition& p, const GeneratorTable& all, Domain d) {
  GeneratorTable out;
  for (const auto& idx : window_indices(p)) {
    auto it = all.find(idx);
    out.emplace(idx, it == all.end() ? DiffPoly{}.with_domain(d) : it->second.with_domain(d));
  }
  return out;
}

}  // namespace

GeneratorTable w_coefficients(const Partition& p, CdetStrategy s) {
  const DMatrix m = w_generator_matrix(p);
  if (s == CdetStrategy::FullOperator) return read_coefficients(p, constant_part(column_determinant(m)));
  return read_coefficients(p, column_determinant_on_one(m, DiffPoly(1)));
}

GeneratorTable w_generators(const Partition& p, CdetStrategy s) {
  return restrict_to_window(p, w_coefficients(p, s), Domain::Parabolic);
}

DiffPoly miura_image(const DiffPoly& p) {
  std::vector<DiffPoly::Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.domain() == Domain::Cartan) out.push_back(t);
  }
  return DiffPoly::from_terms(std::move(out), Domain::Cartan);
}

GeneratorTable miura_generators(const Partition& p) {
  const Centralizer alg(p);
  DOp prod;
  for (int i = 1; i <= p.n(); ++i) {
    DOp factor = DOp::x_power(1) + Rational(p.lambda(i)) * DOp::d_power(1) + DOp(e_of_u(alg, i, i));
    prod = i == 1 ? factor : prod * factor;
  }
  GeneratorTable all;
  const int n = p.n();
  for (const auto& [a, c] : constant_part(prod)) {
    for (const auto& [r, w] : c.coeffs()) all.emplace(GenIndex{n - a, r}, w);
  }
  return restrict_to_window(p, all, Domain::Cartan);
}

// ---------------------------------------------------------------- Jacobian

std::vector<DiffVar> jacobian_variables(const Partition& p) {
  std::vector<DiffVar> out;
  const int n = p.n();
  for (int c = 1; c <= p.lambda(n); ++c) {
    for (int i = n; i >= 1; --i) {
      int r = p.lambda(i) - c;
      if (r >= 0) out.push_back(var(i, i, r));
    }
  }
  return out;
}

std::vector<GenIndex> jacobian_polynomials(const Partition& p) {
  std::vector<GenIndex> out;
  const int n = p.n();
  for (int c = 1; c <= p.lambda(n); ++c) {
    for (int k = 1; k <= n; ++k) {
      int r = p.lambda_sum(n - k + 1, n) - k - (c - 1);
      if (in_window(p, k, r)) out.push_back({k, r});
    }
  }
  return out;
}

Point jacobian_point(const Partition& p, std::uint64_t seed) {
  Point point;
  const auto vars = jacobian_variables(p);
  if (seed == 0) {
    int candidate = 2;
    for (const auto& v : vars) {
      auto is_prime = [](int q) {
        for (int d = 2; d * d <= q; ++d) {
          if (q % d == 0) return false;
        }
        return true;
      };
      while (!is_prime(candidate)) ++candidate;
      point[v] = candidate++;
    }
    return point;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(1, 13);
  for (const auto& v : vars) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    point[v] = q;
  }
  return point;
}

Rational rational_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

DiffPoly polynomial_determinant(const std::vector<std::vector<DiffPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return DiffPoly(1);
  if (n == 1) return m[0][0];
  DiffPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<DiffPoly>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<DiffPoly> line;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != col) line.push_back(m[row][k]);
      }
      minor.push_back(std::move(line));
    }
    DiffPoly term = m[0][col] * polynomial_determinant(minor);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

JacobianResult jacobian_independence(const Partition& p, const Point& point, int symbolic_limit) {
  JacobianResult res;
  res.variables = jacobian_variables(p);
  res.polynomials = jacobian_polynomials(p);
  if (res.variables.size() != res.polynomials.size()) {
    throw std::logic_error("Jacobian is not square for partition " + p.to_string());
  }
  const GeneratorTable wbar = miura_generators(p);
  for (const auto& idx : res.polynomials) res.v.push_back(min_component(wbar.at(idx), Grading::DerivationDegree));

  const std::size_t n = res.variables.size();
  std::vector<std::vector<DiffPoly>> jac(n, std::vector<DiffPoly>(n));
  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      jac[a][b] = partial(res.v[a], res.variables[b]);
      num[a][b] = eval_at(jac[a][b], point);
    }
  }
  res.det = rational_determinant(num);
  res.status = res.det != 0 ? JacobianStatus::Independent : JacobianStatus::Retry;
  if (static_cast<int>(n) <= symbolic_limit) res.symbolic_det = polynomial_determinant(jac);
  return res;
}

JacobianResult jacobian_independence(const Partition& p, std::uint64_t seed, int symbolic_limit) {
  return jacobian_independence(p, jacobian_point(p, seed), symbolic_limit);
}

}  // namespace wcent
