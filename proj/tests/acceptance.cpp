// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "wcent/affine_center.hpp"
#include "wcent/generators.hpp"
#include "wcent/pva_axioms.hpp"
#include "wcent/report.hpp"
#include "wcent/serialize.hpp"

using namespace wcent;

namespace {

// Everything the criteria compute, replayed through JSON by criterion 11.
struct Emitted {
  std::vector<DiffPoly> polys;
  std::vector<LambdaPoly> lambdas;
  std::vector<VacuumVector> vectors;
};
Emitted emitted;

void emit(const GeneratorTable& t) {
  for (const auto& [idx, p] : t) emitted.polys.push_back(p);
}
void emit(const SSTable& t) {
  for (const auto& [idx, v] : t) emitted.vectors.push_back(v);
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

DiffPoly E(int i, int j, int r, int s = 0) { return DiffPoly::variable(var(i, j, r, s)); }

DiffPoly E_if_valid(const Centralizer& alg, int i, int j, int r, int s = 0) {
  return alg.is_valid({i, j, r}) ? E(i, j, r, s) : DiffPoly();
}

std::vector<Partition> upto(int N) { return partitions_up_to(N); }

std::vector<Partition> center_partitions() {
  std::vector<Partition> ps = upto(4);
  ps.emplace_back(std::vector<int>{2, 3});
  return ps;  // (1,1,2) is already among N <= 4
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Closed formulas for two parts.
Outcome two_part_oracle() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& parts : {std::vector<int>{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    const Partition p(parts);
    const Centralizer alg(p);
    const int l1 = p.lambda(1), l2 = p.lambda(2);
    GeneratorTable expected;
    for (int r = 0; r <= l2 - 1; ++r) expected[{1, r}] = E_if_valid(alg, 1, 1, r) + E_if_valid(alg, 2, 2, r);
    for (int r = l2 - 1; r <= l1 + l2 - 2; ++r) {
      DiffPoly w;
      for (int a = 0; a <= r; ++a) w += E_if_valid(alg, 1, 1, a) * E_if_valid(alg, 2, 2, r - a);
      w -= E_if_valid(alg, 2, 1, r - l2 + 1);
      w += Rational(l1) * E_if_valid(alg, 2, 2, r, 1);
      expected[{2, r}] = w;
    }
    const GeneratorTable got = w_generators(p);
    emit(got);
    if (got != expected) out.fail("mismatch for " + p.to_string());
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) out.fail("took " + std::to_string(t) + " s");
  return out;
}

// 2. Every generator is annihilated by rho{X_lambda .} for all X in n_+.
Outcome membership() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const auto& p : upto(6)) {
    const Centralizer alg(p);
    const GeneratorTable w = w_generators(p);
    emit(w);
    for (const auto& [idx, poly] : w) {
      ++checked;
      MembershipResult r = w_membership(alg, poly, MembershipMode::FullBasis);
      if (!r.member) {
        out.fail(p.to_string() + " " + generator_key("w", idx) + " witness " + to_string(r.witness->x));
        emitted.lambdas.push_back(r.witness->value);
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 120.0) out.fail("took " + std::to_string(t) + " s");
  if (out.pass) out.detail = std::to_string(checked) + " generators";
  return out;
}

// 3. Index sets against a brute-force scan of the window inequality.
Outcome census() {
  Outcome out;
  for (const auto& p : upto(6)) {
    const int n = p.n();
    std::vector<GenIndex> expected;
    for (int k = 1; k <= n; ++k) {
      int lo = 0, hi = 0;
      for (int m = n - k + 2; m <= n; ++m) lo += p.lambda(m);
      hi = lo + p.lambda(n - k + 1);
      for (int r = 0; r + k <= hi; ++r)
        if (lo < r + k) expected.push_back({k, r});
    }
    std::vector<GenIndex> got;
    for (const auto& [idx, poly] : w_generators(p)) got.push_back(idx);
    if (got != expected) out.fail("index set differs for " + p.to_string());
    if (got.size() != static_cast<std::size_t>(p.N())) out.fail("cardinality differs for " + p.to_string());
  }
  return out;
}

// 4. The out-of-window coefficient w_2^(0) for (1,2) is not in W.
Outcome negative_control() {
  Outcome out;
  const Partition p({1, 2});
  const Centralizer alg(p);
  const GeneratorTable all = w_coefficients(p);
  const DiffPoly w20 = all.at({2, 0});
  emitted.polys.push_back(w20);
  if (in_window(p, 2, 0)) out.fail("w[2][0] reported inside the window");
  const MembershipResult r = w_membership(alg, w20, MembershipMode::FullBasis);
  const LambdaPoly expected = LambdaPoly(E(1, 1, 0) - E(2, 2, 0)) + LambdaPoly::monomial(1, DiffPoly(1));
  if (r.member || !r.witness) {
    out.fail("accepted as a member");
  } else {
    emitted.lambdas.push_back(r.witness->value);
    if (!(r.witness->x == BasisElt{1, 2, 1})) out.fail("witness element " + to_string(r.witness->x));
    if (!(r.witness->value == expected)) out.fail("witness value " + to_string(r.witness->value));
  }
  return out;
}

// 5. Lambda-bracket axioms on seeded random inputs.
Outcome pva_axioms() {
  Outcome out;
  const int trials = 100;
  for (const auto& parts : {std::vector<int>{1, 2}, {2, 2}, {1, 1, 2}}) {
    const Partition p(parts);
    for (const auto& t : check_pva_axioms(p, trials, kDefaultSeed)) {
      if (t.trials < trials || t.failures) out.fail(t.name + " failed for " + p.to_string());
    }
    // Sample of the random inputs and their brackets for the round-trip check.
    const Centralizer alg(p);
    std::mt19937_64 rng(kDefaultSeed);
    for (int k = 0; k < 10; ++k) {
      DiffPoly a = random_diffpoly(alg, rng), b = random_diffpoly(alg, rng);
      emitted.polys.push_back(a);
      emitted.lambdas.push_back(lambda_bracket(alg, a, b));
    }
  }
  if (out.pass) out.detail = std::to_string(trials) + " trials x 6 axioms x 3 partitions";
  return out;
}

// 6. Lie algebra axioms and both invariant forms, exhaustively.
Outcome lie_structure() {
  Outcome out;
  for (const auto& p : upto(5)) {
    const Centralizer alg(p);
    const auto& B = alg.basis();
    std::vector<LieElement> basis;
    for (const auto& e : B) basis.push_back(LieElement::basis(e));
    for (std::size_t a = 0; a < B.size(); ++a) {
      for (std::size_t b = 0; b < B.size(); ++b) {
        const LieElement ab = alg.bracket(B[a], B[b]);
        if (!(ab == -alg.bracket(B[b], B[a]))) out.fail("antisymmetry " + p.to_string());
        if (alg.form_tr(B[a], B[b]) != alg.form_tr(B[b], B[a])) out.fail("trace form symmetry " + p.to_string());
        if (alg.form_crit(B[a], B[b]) != alg.form_crit(B[b], B[a])) out.fail("critical form symmetry " + p.to_string());
        for (std::size_t c = 0; c < B.size(); ++c) {
          const LieElement bc = alg.bracket(B[b], B[c]);
          if (alg.form_tr(ab, basis[c]) != alg.form_tr(basis[a], bc)) out.fail("trace form invariance " + p.to_string());
          if (alg.form_crit(ab, basis[c]) != alg.form_crit(basis[a], bc))
            out.fail("critical form invariance " + p.to_string());
          const LieElement jac = alg.bracket(basis[a], bc) + alg.bracket(basis[b], alg.bracket(basis[c], basis[a])) +
                                 alg.bracket(basis[c], ab);
          if (!(jac == LieElement{})) out.fail("Jacobi " + p.to_string());
        }
      }
    }
  }
  return out;
}

// 7. Miura images and Jacobian independence.
Outcome miura() {
  Outcome out;
  for (const auto& p : upto(6)) {
    const GeneratorTable w = w_generators(p), wbar = miura_generators(p);
    emit(wbar);
    for (const auto& [idx, poly] : w) {
      if (!(miura_image(poly) == wbar.at(idx))) out.fail("Miura image " + p.to_string() + " " + generator_key("w", idx));
    }
    const JacobianResult j = jacobian_independence(p, kDefaultSeed);
    for (const auto& v : j.v) emitted.polys.push_back(v);
    if (j.det == 0) out.fail("zero Jacobian at seeded point for " + p.to_string());
    if (p.N() <= 4) {
      if (!j.symbolic_det) out.fail("no symbolic determinant for " + p.to_string());
      else {
        emitted.polys.push_back(*j.symbolic_det);
        if (j.symbolic_det->is_zero()) out.fail("symbolic Jacobian vanishes for " + p.to_string());
      }
    }
  }
  return out;
}

// 8. Segal-Sugawara vectors are annihilated by a[t].
Outcome centrality() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& p : center_partitions()) {
    const SSTable phi = ss_vectors(p);
    emit(phi);
    for (const auto& [idx, v] : phi) {
      const CenterResult r = center_check(v);
      if (!r.central) {
        out.fail(p.to_string() + " " + generator_key("phi", idx) + " witness " + to_string(r.witness->x) + "[" +
                 std::to_string(r.witness->m) + "]");
        emitted.vectors.push_back(r.witness->value);
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 120.0) out.fail("took " + std::to_string(t) + " s");
  return out;
}

// 9. Harish-Chandra images match the Miura images; Theta intertwines d and T.
Outcome correspondence() {
  Outcome out;
  for (const auto& p : center_partitions()) {
    for (const auto& e : w_correspondence(p)) {
      emitted.vectors.push_back(e.projected);
      emitted.vectors.push_back(e.image);
      if (!e.projection_matches) out.fail("projection " + p.to_string() + " " + generator_key("phi", e.index));
      if (!e.intertwines) out.fail("translation " + p.to_string() + " " + generator_key("phi", e.index));
    }
  }
  return out;
}

// 10. The Segal-Sugawara vectors commute pairwise.
Outcome commutativity() {
  Outcome out;
  for (const auto& p : upto(3)) {
    const SSTable phi = ss_vectors(p);
    for (const auto& [i, a] : phi) {
      for (const auto& [j, b] : phi) {
        if (!(i < j)) continue;
        const VacuumVector ab = a * b;
        emitted.vectors.push_back(ab);
        if (!(ab == b * a)) out.fail(p.to_string() + " " + generator_key("phi", i) + " " + generator_key("phi", j));
      }
    }
  }
  return out;
}

// 11. JSON round trips and byte-identical repeated runs.
Outcome serialization() {
  Outcome out;
  for (const auto& p : emitted.polys) {
    if (!(diffpoly_from_json(Json::parse(to_json(p).dump())) == p)) out.fail("polynomial " + to_string(p));
  }
  for (const auto& f : emitted.lambdas) {
    if (!(lambdapoly_from_json(Json::parse(to_json(f).dump())) == f)) out.fail("lambda polynomial " + to_string(f));
  }
  for (const auto& v : emitted.vectors) {
    if (!(vacuum_from_json(v.algebra(), Json::parse(to_json(v).dump())) == v)) out.fail("vector " + to_string(v));
  }
  for (auto c : {Command::Basis, Command::Generators, Command::CheckMembership, Command::Miura, Command::Jacobian,
                 Command::SsVectors, Command::VerifyCenter, Command::VerifyIso, Command::PvaAxioms}) {
    RunConfig cfg;
    cfg.command = c;
    cfg.partitions = {Partition({1, 2}), Partition({1, 1, 2})};
    cfg.trials = 10;
    if (dispatch(cfg).render(Format::Json) != dispatch(cfg).render(Format::Json)) {
      out.fail(std::string(command_name(c)) + " report differs between runs");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(emitted.polys.size()) + " polynomials, " + std::to_string(emitted.lambdas.size()) +
                 " lambda polynomials, " + std::to_string(emitted.vectors.size()) + " vectors";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"two-part closed formulas", two_part_oracle},
      {"generator membership, N <= 6, full basis", membership},
      {"generator census equals the window", census},
      {"negative control w[2][0] for (1,2)", negative_control},
      {"lambda-bracket axioms on random inputs", pva_axioms},
      {"Lie structure and invariant forms, N <= 5", lie_structure},
      {"Miura consistency and Jacobian independence", miura},
      {"centrality of Segal-Sugawara vectors", centrality},
      {"Harish-Chandra correspondence", correspondence},
      {"commutativity of the center, N <= 3", commutativity},
      {"serialization round trip and determinism", serialization},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char line[64];
    std::snprintf(line, sizeof line, "criterion %2zu %s  ", k + 1, o.pass ? "PASS" : "FAIL");
    std::cout << line << criteria[k].first;
    std::snprintf(line, sizeof line, " (%.2f s)", seconds_since(t0));
    std::cout << line;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << '\n';
    failures += !o.pass;
  }
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << criteria.size() - failures << "/"
            << criteria.size() << ")\n";
  return failures ? 1 : 0;
}
