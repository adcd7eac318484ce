#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wcent/affine_center.hpp"
#include "wcent/generators.hpp"
#include "wcent/pva_axioms.hpp"
#include "wcent/serialize.hpp"

using namespace wcent;
using wcent::test::algebra;
using wcent::test::E;
using wcent::test::M;

TEST_CASE("rationals travel as decimal strings") {
  const Rational q(-7, 3);
  const Json j = to_json(q);
  CHECK(j.dump() == R"({"num":"-7","den":"3"})");
  CHECK(rational_from_json(j) == q);
  const Rational big = rational_from_strings("123456789012345678901234567890", "7");
  CHECK(rational_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK(rational_from_json(Json{{"num", "4"}, {"den", "6"}}) == Rational(2, 3));
  CHECK_THROWS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}));
  CHECK_THROWS(rational_from_json(Json{{"num", "x"}, {"den", "1"}}));
}

TEST_CASE("polynomial round trip") {
  Centralizer alg(Partition({1, 2, 2}));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const DiffPoly p = random_diffpoly(alg, rng);
    CHECK(diffpoly_from_json(Json::parse(to_json(p).dump())) == p);
    const LambdaPoly f = lambda_bracket(alg, p, random_diffpoly(alg, rng));
    CHECK(lambdapoly_from_json(Json::parse(to_json(f).dump())) == f);
  }
  CHECK(diffpoly_from_json(to_json(DiffPoly())) == DiffPoly());
  CHECK(to_json(E(2, 1, 0, 1)).dump() == R"([{"coeff":{"num":"1","den":"1"},"vars":[[2,1,0,1,1]]}])");
  CHECK_THROWS_AS(diffpoly_from_json(Json::parse(R"([{"coeff":{"num":"1","den":"1"},"vars":[[2,1,0]]}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(diffpoly_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("vacuum vector round trip") {
  for (const auto& p : partitions_up_to(4)) {
    auto alg = std::make_shared<const Centralizer>(p);
    for (const auto& [idx, v] : ss_vectors(alg)) {
      CHECK(vacuum_from_json(alg, Json::parse(to_json(v).dump())) == v);
      CHECK(vacuum_from_json(alg, to_json(hc_project(v))) == hc_project(v));
    }
  }
  auto alg = algebra({1, 1});
  CHECK(vacuum_from_json(alg, to_json(VacuumVector(3))) == VacuumVector(3));
}

TEST_CASE("generator tables are keyed by index") {
  const Json j = to_json(w_generators(Partition({1, 2})));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"w[1][0]", "w[1][1]", "w[2][1]"});
  CHECK(diffpoly_from_json(j.at("w[2][1]")) == E(1, 1, 0) * E(2, 2, 1) - E(2, 1, 0) + E(2, 2, 1, 1));
}

TEST_CASE("LaTeX rendering") {
  CHECK(latex(Rational(-1, 2)) == "-\\frac{1}{2}");
  CHECK(latex(var(2, 1, 0, 1)) == "E_{21}^{(0)}[1]");
  CHECK(latex(E(1, 1, 0) - 2 * E(2, 2, 1, 1)) == "E_{11}^{(0)} - 2\\,E_{22}^{(1)}[1]");
  CHECK(latex(DiffPoly()) == "0");
  auto alg = algebra({1, 1});
  CHECK(latex(M(alg, 1, 1, 0, -1) * M(alg, 1, 1, 0, -1)) == "E_{11}^{(0)}[-1]^{2}");
  CHECK(latex_dn_matrix(Partition({1, 2})).find("u") != std::string::npos);
}
