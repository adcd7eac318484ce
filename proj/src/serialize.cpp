#include "wcent/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace wcent {

Json to_json(const Rational& q) {
  return Json{{"num", numerator_string(q)}, {"den", denominator_string(q)}};
}

Rational rational_from_json(const Json& j) {
  return rational_from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

Json to_json(const DiffPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json vars = Json::array();
    for (const auto& [key, e] : t.mono.factors()) {
      DiffVar v = DiffVar::from_key(key);
      vars.push_back({v.base.i, v.base.j, v.base.r, v.s, e});
    }
    out.push_back(Json{{"coeff", to_json(t.coeff)}, {"vars", std::move(vars)}});
  }
  return out;
}

DiffPoly diffpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<DiffPoly::Term> terms;
  for (const auto& term : j) {
    std::vector<Monomial::Factor> factors;
    for (const auto& v : term.at("vars")) {
      if (!v.is_array() || v.size() != 5) throw std::invalid_argument("variable entry must be [i,j,r,s,exp]");
      DiffVar dv{{v[0].get<int>(), v[1].get<int>(), v[2].get<int>()}, v[3].get<int>()};
      if (dv.base.i < 1 || dv.base.j < 1 || dv.base.r < 0 || dv.s < 0 || dv.base.i > 255 || dv.base.j > 255 ||
          dv.base.r > 255 || dv.s > 255) {
        throw std::invalid_argument("variable index out of range");
      }
      int e = v[4].get<int>();
      if (e < 1) throw std::invalid_argument("exponents must be positive");
      factors.emplace_back(dv.key(), static_cast<std::uint32_t>(e));
    }
    terms.push_back({Monomial(std::move(factors)), rational_from_json(term.at("coeff"))});
  }
  return DiffPoly::from_terms(std::move(terms));
}

Json to_json(const LambdaPoly& f) {
  Json powers = Json::object();
  for (const auto& [k, c] : f.coeffs()) powers[std::to_string(k)] = to_json(c);
  return Json{{"lambda_powers", std::move(powers)}};
}

LambdaPoly lambdapoly_from_json(const Json& j) {
  LambdaPoly f;
  for (const auto& [key, value] : j.at("lambda_powers").items()) {
    std::size_t used = 0;
    int k = std::stoi(key, &used);
    if (used != key.size() || k < 0) throw std::invalid_argument("bad lambda power: " + key);
    f.add_at(k, diffpoly_from_json(value));
  }
  return f;
}

Json to_json(const VacuumVector& v) {
  Json out = Json::array();
  for (const auto& [mono, c] : v.terms()) {
    Json modes = Json::array();
    for (const auto& x : mono.factors()) modes.push_back({x.base.i, x.base.j, x.base.r, x.m});
    out.push_back(Json{{"coeff", to_json(c)}, {"modes", std::move(modes)}});
  }
  return out;
}

VacuumVector vacuum_from_json(const std::shared_ptr<const Centralizer>& alg, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vacuum vector JSON must be an array");
  VacuumVector out = VacuumVector::zero(alg);
  for (const auto& term : j) {
    std::vector<LoopMode> word;
    for (const auto& x : term.at("modes")) {
      if (!x.is_array() || x.size() != 4) throw std::invalid_argument("mode entry must be [i,j,r,m]");
      word.push_back(LoopMode{{x[0].get<int>(), x[1].get<int>(), x[2].get<int>()}, x[3].get<int>()});
    }
    out += rational_from_json(term.at("coeff")) * VacuumVector::normal_order(alg, word);
  }
  return out;
}

std::string generator_key(const std::string& stem, const GenIndex& idx) {
  return stem + "[" + std::to_string(idx.k) + "][" + std::to_string(idx.r) + "]";
}

Json to_json(const GeneratorTable& t, const std::string& stem) {
  Json out = Json::object();
  for (const auto& [idx, p] : t) out[generator_key(stem, idx)] = to_json(p);
  return out;
}

Json to_json(const SSTable& t, const std::string& stem) {
  Json out = Json::object();
  for (const auto& [idx, v] : t) out[generator_key(stem, idx)] = to_json(v);
  return out;
}

// ---------------------------------------------------------------- LaTeX

std::string latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex(const DiffVar& v) {
  std::string out = "E_{" + std::to_string(v.base.i) + std::to_string(v.base.j) + "}^{(" + std::to_string(v.base.r) + ")}";
  if (v.s != 0) out += "[" + std::to_string(v.s) + "]";
  return out;
}

namespace {

template <class Factors, class Emit>
std::string latex_sum(const Factors& terms, Emit&& emit_monomial) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    std::string body = emit_monomial(mono);
    if (body.empty()) {
      os << latex(mag);
    } else {
      if (mag != 1) os << latex(mag) << "\\,";
      os << body;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string latex(const DiffPoly& p) {
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& t : p.terms()) terms.emplace_back(t.mono, t.coeff);
  return latex_sum(terms, [](const Monomial& m) {
    std::string out;
    for (const auto& [key, e] : m.factors()) {
      std::string v = latex(DiffVar::from_key(key));
      out += e > 1 ? "\\big(" + v + "\\big)^{" + std::to_string(e) + "}" : v;
    }
    return out;
  });
}

std::string latex(const LambdaPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : f.coeffs()) {
    if (!out.empty()) out += " + ";
    std::string power = k == 0 ? "" : (k == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(k) + "}");
    out += power.empty() ? "\\big(" + latex(c) + "\\big)" : "\\big(" + latex(c) + "\\big)" + power;
  }
  return out;
}

std::string latex(const LoopMode& x) {
  return "E_{" + std::to_string(x.base.i) + std::to_string(x.base.j) + "}^{(" + std::to_string(x.base.r) + ")}[" +
         std::to_string(x.m) + "]";
}

std::string latex(const VacuumVector& v) {
  return latex_sum(v.terms(), [](const PBWMonomial& m) {
    std::string out;
    for (const auto& [x, e] : m.powers()) {
      out += e > 1 ? latex(x) + "^{" + std::to_string(e) + "}" : latex(x);
    }
    return out;
  });
}

std::string latex_dn_matrix(const Partition& p) {
  const int n = p.n();
  std::ostringstream os;
  os << "D_{" << n << "} = \\mathrm{cdet}\\begin{bmatrix}\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::string entry;
      if (i == j) {
        entry = "x + " + (p.lambda(i) == 1 ? std::string() : std::to_string(p.lambda(i))) + "\\partial + E_{" +
                std::to_string(i) + std::to_string(i) + "}(u)";
      } else if (j == i + 1) {
        int e = p.lambda(i + 1) - 1;
        entry = e == 0 ? "1" : (e == 1 ? "u" : "u^{" + std::to_string(e) + "}");
      } else if (j < i) {
        entry = "E_{" + std::to_string(i) + std::to_string(j) + "}(u)";
      } else {
        entry = "0";
      }
      os << entry << (j < n ? " & " : (i < n ? " \\\\\n" : "\n"));
    }
  }
  os << "\\end{bmatrix}";
  return os.str();
}

}  // namespace wcent
