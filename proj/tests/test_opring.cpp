#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "wcent/generators.hpp"
#include "wcent/opring.hpp"
#include "wcent/pva_axioms.hpp"

using namespace wcent;
using wcent::test::E;

namespace {

DOp mult(const DiffPoly& p) { return DOp(DPoly(p)); }
const DOp D = DOp::d_power(1);
const DOp X = DOp::x_power(1);

// Leibniz-formula determinant of a commutative matrix.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  T total{};
  do {
    T prod(1);
    for (std::size_t c = 0; c < n; ++c) prod = prod * m[static_cast<std::size_t>(sigma[c])][c];
    if (detail::permutation_sign(sigma) > 0) total = total + prod;
    else total = total - prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace

TEST_CASE("operator products") {
  CHECK(D * mult(E(2, 2, 0)) == mult(E(2, 2, 0)) * D + mult(E(2, 2, 0, 1)));
  CHECK(X * D == D * X);
  CHECK(D * (mult(E(1, 1, 0)) * D) == mult(E(1, 1, 0, 1)) * D + mult(E(1, 1, 0)) * DOp::d_power(2));
  // D^2 f = f D^2 + 2 f' D + f''
  const DiffPoly f = E(1, 1, 0) * E(2, 1, 0);
  CHECK(DOp::d_power(2) * mult(f) ==
        mult(f) * DOp::d_power(2) + Rational(2) * (mult(derive(f)) * D) + mult(derive(f, 2)));
}

TEST_CASE("operator ring associativity on random operators") {
  Centralizer alg(Partition({1, 2}));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(0, 2);
  auto random_op = [&] {
    DOp op;
    for (int t = 0; t < 3; ++t) {
      op += DOp::term(small(rng), small(rng), DPoly::monomial(small(rng), random_diffpoly(alg, rng)));
    }
    return op;
  };
  for (int t = 0; t < 30; ++t) {
    DOp a = random_op(), b = random_op(), c = random_op();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("column determinant order and small cases") {
  const DOp a = mult(E(1, 1, 0)) + D, b = mult(E(2, 1, 0)), c = D, d = mult(E(2, 2, 0));
  DMatrix m(2);
  m.at(1, 1) = a;
  m.at(1, 2) = b;
  m.at(2, 1) = c;
  m.at(2, 2) = d;
  CHECK(column_determinant(m) == a * d - c * b);
  CHECK(column_determinant(m) != a * d - b * c);

  DMatrix one(1);
  one.at(1, 1) = a;
  CHECK(column_determinant(one) == a);
}

TEST_CASE("column determinant of commuting entries is the determinant") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(-5, 5);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      std::vector<std::vector<Rational>> q(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      DMatrix m(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = pick(rng);
          m.at(i, j) = mult(DiffPoly(q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]));
        }
      const Rational det = leibniz_det(q);
      CHECK(column_determinant(m) == (det == 0 ? DOp() : mult(DiffPoly(det))));
      CHECK(rational_determinant(q) == det);
    }
  }

  // Polynomial entries commute as well.
  Centralizer alg(Partition({1, 1, 2}));
  std::vector<std::vector<DiffPoly>> pm(3, std::vector<DiffPoly>(3));
  DMatrix m(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      pm[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = E(i, j, 0) + i * j;
      m.at(i, j) = mult(pm[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    }
  const DiffPoly det = leibniz_det(pm);
  CHECK(column_determinant(m) == mult(det));
  CHECK(polynomial_determinant(pm) == det);
}

TEST_CASE("constant part") {
  CHECK(constant_part(D).empty());
  const DiffPoly f = E(1, 1, 0);
  auto cp = constant_part(mult(f));
  REQUIRE(cp.size() == 1);
  CHECK(cp.at(0) == DPoly(f));

  // (x + d + E11(u))(x + 2d + E22(u)) for lambda = (1,2).
  Centralizer alg(Partition({1, 2}));
  const DOp f1 = X + D + DOp(e_of_u(alg, 1, 1));
  const DOp f2 = X + Rational(2) * D + DOp(e_of_u(alg, 2, 2));
  auto prod = constant_part(f1 * f2);
  CHECK(prod.at(0) == e_of_u(alg, 1, 1) * e_of_u(alg, 2, 2) + derivation(e_of_u(alg, 2, 2)));
}

TEST_CASE("acting on one agrees with the full operator expansion") {
  for (const auto& p : partitions_up_to(5)) {
    const DMatrix m = w_generator_matrix(p);
    auto full = constant_part(column_determinant(m));
    auto applied = column_determinant_on_one(m, DiffPoly(1));
    CHECK(full == applied);
    CHECK(w_coefficients(p, CdetStrategy::FullOperator) == w_coefficients(p, CdetStrategy::AppliedToOne));
  }
}
