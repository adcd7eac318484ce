#pragma once

// JSON and LaTeX forms of the library objects. Rationals travel as decimal
// strings {"num": "...", "den": "..."}.

#include <memory>
#include <string>

#include "json.hpp"
#include "wcent/affine_center.hpp"
#include "wcent/diffpoly.hpp"
#include "wcent/generators.hpp"
#include "wcent/pva.hpp"
#include "wcent/vacuum.hpp"

namespace wcent {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// [{"coeff": {...}, "vars": [[i, j, r, s, exponent], ...]}, ...]
Json to_json(const DiffPoly& p);
/// Domain is the smallest one containing the variables that occur.
DiffPoly diffpoly_from_json(const Json& j);

/// {"lambda_powers": {"0": <poly>, "1": <poly>, ...}}
Json to_json(const LambdaPoly& f);
LambdaPoly lambdapoly_from_json(const Json& j);

/// [{"coeff": {...}, "modes": [[i, j, r, m], ...]}, ...]
Json to_json(const VacuumVector& v);
VacuumVector vacuum_from_json(const std::shared_ptr<const Centralizer>& alg, const Json& j);

/// "w[k][r]" and "phi[k][r]" keys.
std::string generator_key(const std::string& stem, const GenIndex& idx);
Json to_json(const GeneratorTable& t, const std::string& stem = "w");
Json to_json(const SSTable& t, const std::string& stem = "phi");

std::string latex(const Rational& q);
std::string latex(const DiffVar& v);
std::string latex(const DiffPoly& p);
std::string latex(const LambdaPoly& f);
std::string latex(const LoopMode& x);
std::string latex(const VacuumVector& v);
/// The matrix whose column determinant is D_n, in bmatrix form.
std::string latex_dn_matrix(const Partition& p);

}  // namespace wcent
