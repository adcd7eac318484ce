#pragma once

// Seeded property checks of the lambda-bracket axioms on random small
// differential polynomials.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/diffpoly.hpp"
#include "wcent/pva.hpp"

namespace wcent {

struct RandomPolySpec {
  int max_vars = 3;          // distinct variables per polynomial
  int max_degree = 3;        // total degree
  int max_terms = 3;
  int max_derivation = 2;    // largest s in E[s]
  int max_coeff = 3;
  Domain domain = Domain::Full;
};

/// Random nonzero polynomial over the basis of `alg`, restricted to `spec`.
DiffPoly random_diffpoly(const Centralizer& alg, std::mt19937_64& rng, const RandomPolySpec& spec = {});

/// sum_{e,m} c_{e,m} lambda^e mu^m; used only by the Jacobi check.
using TwoSymbolPoly = std::map<std::pair<int, int>, DiffPoly>;

/// {a_lambda {b_mu c}} - {b_mu {a_lambda c}} - {{a_lambda b}_{lambda+mu} c}
TwoSymbolPoly jacobi_defect(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c);

bool sesquilinear_left(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b);
bool sesquilinear_right(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b);
bool skewsymmetric(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b);
bool leibniz_right(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c);
bool leibniz_left(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c);
bool jacobi(const Centralizer& alg, const DiffPoly& a, const DiffPoly& b, const DiffPoly& c);

struct AxiomTally {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> first_failure;  // printable inputs of the first failure
};

/// Runs every axiom on `trials` seeded random pairs/triples.
std::vector<AxiomTally> check_pva_axioms(const Partition& p, int trials, std::uint64_t seed);

}  // namespace wcent
