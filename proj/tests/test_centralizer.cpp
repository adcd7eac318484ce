#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "support.hpp"
#include "wcent/centralizer.hpp"

using namespace wcent;
using wcent::test::L;

namespace {

// Faithful matrix realization on C^N: E_ij^(r) sends v_{j,a} to v_{i,a-r}
// (zero when a-r < 1), where v_{j,1..lambda_j} spans the j-th Jordan block.
using Matrix = std::vector<std::vector<Rational>>;

Matrix realize(const Partition& p, const BasisElt& e) {
  std::vector<int> offset(static_cast<std::size_t>(p.n()) + 1, 0);
  for (int i = 1; i <= p.n(); ++i) offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] + p.lambda(i);
  const int N = p.N();
  Matrix m(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), 0));
  for (int a = 1; a <= p.lambda(e.j); ++a) {
    const int b = a - e.r;
    if (b < 1) continue;
    REQUIRE(b <= p.lambda(e.i));
    m[static_cast<std::size_t>(offset[static_cast<std::size_t>(e.i - 1)] + b - 1)]
     [static_cast<std::size_t>(offset[static_cast<std::size_t>(e.j - 1)] + a - 1)] = 1;
  }
  return m;
}

Matrix realize(const Partition& p, const LieElement& x) {
  Matrix out(static_cast<std::size_t>(p.N()), std::vector<Rational>(static_cast<std::size_t>(p.N()), 0));
  for (const auto& [e, c] : x.terms()) {
    Matrix m = realize(p, e);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = 0; b < out.size(); ++b) out[a][b] += c * m[a][b];
  }
  return out;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), std::vector<Rational>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix ab = mul(a, b), ba = mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

TEST_CASE("partition validation and parsing") {
  CHECK_THROWS_AS(Partition({}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);

  Partition p = Partition::parse(" 1, 2,2 ");
  CHECK(p.n() == 3);
  CHECK(p.N() == 5);
  CHECK(p.lambda(2) == 2);
  CHECK(p.lambda_sum(2, 3) == 4);
  CHECK(p.lambda_sum(3, 2) == 0);
  CHECK(p.to_string() == "1,2,2");
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(4).size() == 5);
  int total = 0;
  for (int N = 1; N <= 6; ++N) total += static_cast<int>(partitions_of(N).size());
  CHECK(partitions_up_to(6).size() == static_cast<std::size_t>(total));
  for (const auto& p : partitions_up_to(5, 2)) CHECK(p.n() <= 2);
}

TEST_CASE("basis of small centralizers") {
  CHECK(build_centralizer(Partition({1})) == std::vector<BasisElt>{{1, 1, 0}});

  auto b12 = build_centralizer(Partition({1, 2}));
  CHECK(b12.size() == 5);
  for (BasisElt e : {BasisElt{1, 1, 0}, {2, 2, 0}, {2, 2, 1}, {1, 2, 1}, {2, 1, 0}}) {
    CHECK(std::find(b12.begin(), b12.end(), e) != b12.end());
  }

  auto b22 = build_centralizer(Partition({2, 2}));
  CHECK(b22.size() == 8);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int r = 0; r < 2; ++r) CHECK(std::find(b22.begin(), b22.end(), BasisElt{i, j, r}) != b22.end());
}

TEST_CASE("dimension is the sum of min(lambda_i, lambda_j)") {
  for (const auto& p : partitions_up_to(7)) {
    int expected = 0;
    for (int i = 1; i <= p.n(); ++i)
      for (int j = 1; j <= p.n(); ++j) expected += std::min(p.lambda(i), p.lambda(j));
    Centralizer alg(p);
    CHECK(alg.dim() == static_cast<std::size_t>(expected));
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      CHECK(alg.index_of(alg.basis()[k]) == static_cast<int>(k));
      CHECK(alg.is_valid(alg.basis()[k]));
    }
  }
}

TEST_CASE("basis element text form") {
  CHECK(to_string(BasisElt{2, 1, 0}) == "E[2,1,0]");
  CHECK(parse_basis_elt("E[1,2,1]") == BasisElt{1, 2, 1});
  CHECK_THROWS_AS(parse_basis_elt("E[1,2]"), std::invalid_argument);
}

TEST_CASE("bracket examples") {
  Centralizer a22(Partition({2, 2}));
  CHECK(a22.bracket({1, 2, 0}, {2, 1, 0}) == L(1, 1, 0) - L(2, 2, 0));

  Centralizer a12(Partition({1, 2}));
  CHECK(a12.bracket({1, 2, 1}, {2, 1, 0}) == -L(2, 2, 1));
  for (const auto& e : a12.basis()) CHECK(a12.bracket(e, e) == LieElement{});

  CHECK_THROWS_AS(a12.bracket({1, 1, 1}, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("trace form examples") {
  Centralizer a12(Partition({1, 2}));
  Centralizer a22(Partition({2, 2}));
  CHECK(a12.form_tr({1, 1, 0}, {1, 1, 0}) == 1);
  CHECK(a22.form_tr({1, 2, 0}, {2, 1, 0}) == 2);
  CHECK(a12.form_tr({1, 2, 1}, {2, 1, 0}) == 0);
}

TEST_CASE("critical form examples") {
  Centralizer a12(Partition({1, 2}));
  Centralizer a22(Partition({2, 2}));
  Centralizer a11(Partition({1, 1}));
  CHECK(a12.form_crit({1, 1, 0}, {2, 2, 0}) == 1);
  CHECK(a12.form_crit({2, 2, 0}, {2, 2, 0}) == -1);
  CHECK(a22.form_crit({1, 2, 0}, {2, 1, 0}) == -4);
  CHECK(a11.form_crit({1, 2, 0}, {2, 1, 0}) == -2);
  CHECK(a12.form_crit({2, 2, 1}, {2, 2, 0}) == 0);
}

TEST_CASE("triangular parts") {
  CHECK(part_of({2, 1, 0}) == TriangularPart::Lower);
  CHECK(part_of({1, 1, 0}) == TriangularPart::Cartan);
  CHECK(part_of({1, 2, 1}) == TriangularPart::Upper);
  Centralizer alg(Partition({1, 2, 2}));
  CHECK(alg.basis_of(TriangularPart::Lower).size() + alg.basis_of(TriangularPart::Cartan).size() +
            alg.basis_of(TriangularPart::Upper).size() ==
        alg.dim());
}

TEST_CASE("bracket and trace form agree with the matrix realization") {
  for (const auto& p : partitions_up_to(5)) {
    Centralizer alg(p);
    std::map<BasisElt, Matrix> mats;
    for (const auto& e : alg.basis()) {
      Matrix m = realize(p, e);
      Matrix eN(m.size(), std::vector<Rational>(m.size(), 0));
      // Commutes with the nilpotent e.
      int row = 0;
      for (int i = 1; i <= p.n(); ++i, row += p.lambda(i - 1))
        for (int a = 2; a <= p.lambda(i); ++a) eN[static_cast<std::size_t>(row + a - 2)][static_cast<std::size_t>(row + a - 1)] = 1;
      CHECK(mul(m, eN) == mul(eN, m));
      mats.emplace(e, std::move(m));
    }
    for (const auto& a : alg.basis()) {
      for (const auto& b : alg.basis()) {
        CHECK(realize(p, alg.bracket(a, b)) == commutator(mats.at(a), mats.at(b)));
        CHECK(alg.form_tr(a, b) == trace(mul(mats.at(a), mats.at(b))));
      }
    }
  }
}

TEST_CASE("LieElement arithmetic") {
  LieElement x = L(1, 1, 0, 2) + L(2, 1, 0);
  CHECK((x - x) == LieElement{});
  CHECK(Rational(3) * x == L(1, 1, 0, 6) + L(2, 1, 0, 3));
  CHECK(Rational(0) * x == LieElement{});
  CHECK(to_string(LieElement{}) == "0");
}

TEST_CASE("Lie axioms and form invariance for N <= 4") {
  for (const auto& p : partitions_up_to(4)) {
    Centralizer alg(p);
    const auto& B = alg.basis();
    for (const auto& a : B) {
      for (const auto& b : B) {
        CHECK(alg.bracket(a, b) == -alg.bracket(b, a));
        CHECK(alg.form_tr(a, b) == alg.form_tr(b, a));
        CHECK(alg.form_crit(a, b) == alg.form_crit(b, a));
        const LieElement ab = alg.bracket(a, b);
        for (const auto& c : B) {
          const LieElement bc = alg.bracket(b, c);
          CHECK(alg.form_tr(ab, LieElement::basis(c)) == alg.form_tr(LieElement::basis(a), bc));
          CHECK(alg.form_crit(ab, LieElement::basis(c)) == alg.form_crit(LieElement::basis(a), bc));
          const LieElement A = LieElement::basis(a), Bx = LieElement::basis(b), C = LieElement::basis(c);
          LieElement jac = alg.bracket(A, alg.bracket(Bx, C)) + alg.bracket(Bx, alg.bracket(C, A)) +
                           alg.bracket(C, alg.bracket(A, Bx));
          CHECK(jac == LieElement{});
        }
      }
    }
  }
}
