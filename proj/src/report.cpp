#include "wcent/report.hpp"

#include <chrono>
#include <memory>
#include <sstream>
#include <utility>

#include "wcent/affine_center.hpp"
#include "wcent/generators.hpp"
#include "wcent/pva_axioms.hpp"

namespace wcent {

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Basis, "basis"},
    {Command::Generators, "generators"},
    {Command::CheckMembership, "check-membership"},
    {Command::Miura, "miura"},
    {Command::Jacobian, "jacobian"},
    {Command::SsVectors, "ss-vectors"},
    {Command::VerifyCenter, "verify-center"},
    {Command::VerifyIso, "verify-iso"},
    {Command::PvaAxioms, "pva-axioms"},
};

using Status = Report::Status;

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Retry: return "retry";
  }
  return "?";
}

Status worst(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Retry || b == Status::Retry) return Status::Retry;
  return Status::Pass;
}

/// Per-partition output being assembled.
struct Section {
  Status status = Status::Pass;
  Json body = Json::object();
  std::vector<std::string> text;
  std::vector<std::string> latex;
};

std::string mode_name(MembershipMode m) {
  return m == MembershipMode::FullBasis ? "full" : "generators";
}

void run_basis(const Partition& p, Section& s) {
  const Centralizer alg(p);
  Json basis = Json::array();
  for (const auto& e : alg.basis()) {
    basis.push_back(Json{{"elt", to_string(e)}, {"part", std::string(to_string(part_of(e)))}});
    s.text.push_back("  " + to_string(e) + "  " + std::string(to_string(part_of(e))));
  }
  s.body["dim"] = alg.dim();
  s.body["basis"] = std::move(basis);
  s.text.insert(s.text.begin(), "dim = " + std::to_string(alg.dim()));
  std::string row;
  for (const auto& e : alg.basis()) {
    if (!row.empty()) row += ",\\ ";
    row += "E_{" + std::to_string(e.i) + std::to_string(e.j) + "}^{(" + std::to_string(e.r) + ")}";
  }
  s.latex.push_back("\\{" + row + "\\}");
}

void run_generators(const Partition& p, Section& s) {
  const GeneratorTable w = w_generators(p);
  s.body["count"] = w.size();
  s.body["generators"] = to_json(w, "w");
  s.latex.push_back(latex_dn_matrix(p));
  for (const auto& [idx, poly] : w) {
    s.text.push_back(generator_key("w", idx) + " = " + to_string(poly));
    s.latex.push_back("w_{" + std::to_string(idx.k) + "}^{(" + std::to_string(idx.r) + ")} = " + latex(poly));
  }
}

Json witness_json(const MembershipWitness& w) {
  return Json{{"x", to_string(w.x)}, {"value", to_json(w.value)}};
}

void run_membership(const Partition& p, const RunConfig& cfg, Section& s) {
  const Centralizer alg(p);
  auto check_one = [&](const std::string& key, const DiffPoly& poly, bool counts) {
    MembershipResult res = w_membership(alg, poly, cfg.mode);
    Json entry{{"status", res.member ? "pass" : "fail"}};
    std::string line = key + ": " + (res.member ? "member" : "NOT a member");
    if (res.witness) {
      entry["witness"] = witness_json(*res.witness);
      line += "  witness X = " + to_string(res.witness->x) + ", rho{X_lambda P} = " + to_string(res.witness->value);
    }
    if (counts && !res.member) s.status = Status::Fail;
    s.text.push_back(line);
    return entry;
  };

  Json checks = Json::object();
  if (cfg.input) {
    DiffPoly poly = diffpoly_from_json(*cfg.input);
    checks["input"] = check_one("input", poly, true);
  } else {
    const GeneratorTable all = w_coefficients(p);
    Json controls = Json::object();
    for (const auto& [idx, poly] : all) {
      const std::string key = generator_key("w", idx);
      if (in_window(p, idx.k, idx.r)) {
        checks[key] = check_one(key, poly, true);
      } else {
        // Coefficients outside the window: informative only.
        controls[key] = check_one(key + " (outside window)", poly, false);
      }
    }
    s.body["controls"] = std::move(controls);
  }
  s.body["mode"] = mode_name(cfg.mode);
  s.body["checks"] = std::move(checks);
}

void run_miura(const Partition& p, Section& s) {
  const GeneratorTable w = w_generators(p);
  const GeneratorTable wbar = miura_generators(p);
  Json checks = Json::object();
  for (const auto& [idx, poly] : w) {
    const DiffPoly image = miura_image(poly);
    const bool ok = image == wbar.at(idx);
    Json entry{{"status", ok ? "pass" : "fail"}, {"miura_image", to_json(image)}};
    if (!ok) {
      entry["witness"] = Json{{"expected", to_json(wbar.at(idx))}, {"difference", to_json(image - wbar.at(idx))}};
      s.status = Status::Fail;
    }
    checks[generator_key("w", idx)] = std::move(entry);
    s.text.push_back(generator_key("wbar", idx) + " = " + to_string(image) + (ok ? "" : "  MISMATCH"));
    s.latex.push_back("\\overline{w}_{" + std::to_string(idx.k) + "}^{(" + std::to_string(idx.r) + ")} = " + latex(image));
  }
  s.body["checks"] = std::move(checks);
}

void run_jacobian(const Partition& p, const RunConfig& cfg, Section& s) {
  const JacobianResult res = jacobian_independence(p, cfg.seed);
  Json vars = Json::array();
  for (const auto& v : res.variables) vars.push_back(to_string(v));
  Json polys = Json::array();
  for (std::size_t k = 0; k < res.polynomials.size(); ++k) {
    polys.push_back(Json{{"index", generator_key("v", res.polynomials[k])}, {"poly", to_json(res.v[k])}});
  }
  s.body["variables"] = std::move(vars);
  s.body["polynomials"] = std::move(polys);
  s.body["det"] = to_json(res.det);
  s.body["seed"] = cfg.seed;
  if (res.status == JacobianStatus::Retry) {
    s.status = Status::Retry;
    s.body["witness"] = Json{{"reason", "determinant vanishes at this point; rerun with another seed"}};
  }
  s.text.push_back("N = " + std::to_string(res.variables.size()) + ", det at seeded point = " + to_string(res.det) +
                   (res.status == JacobianStatus::Retry ? "  (degenerate point: retry with another seed)" : ""));
  if (res.symbolic_det) {
    s.body["symbolic_det"] = to_json(*res.symbolic_det);
    s.text.push_back("symbolic det = " + to_string(*res.symbolic_det));
    s.latex.push_back("\\det J = " + latex(*res.symbolic_det));
    if (res.symbolic_det->is_zero()) {
      s.status = Status::Fail;
      s.body["witness"] = Json{{"reason", "symbolic Jacobian determinant is identically zero"}};
    }
  }
}

void run_ss_vectors(const Partition& p, Section& s) {
  const SSTable phi = ss_vectors(p);
  s.body["count"] = phi.size();
  s.body["vectors"] = to_json(phi, "phi");
  for (const auto& [idx, v] : phi) {
    s.text.push_back(generator_key("phi", idx) + " = " + to_string(v));
    s.latex.push_back("\\phi_{" + std::to_string(idx.k) + "}^{(" + std::to_string(idx.r) + ")} = " + latex(v));
  }
}

void run_center(const Partition& p, Section& s) {
  const SSTable phi = ss_vectors(p);
  Json checks = Json::object();
  for (const auto& [idx, v] : phi) {
    const CenterResult res = center_check(v);
    Json entry{{"status", res.central ? "pass" : "fail"}, {"depth", v.depth()}};
    std::string line = generator_key("phi", idx) + ": " + (res.central ? "pass" : "FAIL");
    if (res.witness) {
      entry["witness"] = Json{{"x", to_string(res.witness->x)}, {"m", res.witness->m}, {"value", to_json(res.witness->value)}};
      line += "  witness " + to_string(res.witness->x) + "[" + std::to_string(res.witness->m) + "] phi = " +
              to_string(res.witness->value);
      s.status = Status::Fail;
    }
    checks[generator_key("phi", idx)] = std::move(entry);
    s.text.push_back(line);
  }
  s.body["checks"] = std::move(checks);
}

void run_iso(const Partition& p, Section& s) {
  Json checks = Json::object();
  for (const auto& e : w_correspondence(p)) {
    Json entry{{"status", e.pass() ? "pass" : "fail"},
               {"projection_matches", e.projection_matches},
               {"intertwines_T", e.intertwines},
               {"projected", to_json(e.projected)}};
    if (!e.pass()) {
      entry["witness"] = Json{{"theta_image", to_json(e.image)}, {"projected", to_json(e.projected)}};
      s.status = Status::Fail;
    }
    checks[generator_key("phi", e.index)] = std::move(entry);
    s.text.push_back(generator_key("phi", e.index) + ": " + (e.pass() ? "pass" : "FAIL") + "  f(phi) = " +
                     to_string(e.projected));
  }
  s.body["checks"] = std::move(checks);
}

void run_axioms(const Partition& p, const RunConfig& cfg, Section& s) {
  Json checks = Json::object();
  for (const auto& t : check_pva_axioms(p, cfg.trials, cfg.seed)) {
    Json entry{{"status", t.failures == 0 ? "pass" : "fail"}, {"trials", t.trials}, {"failures", t.failures}};
    if (t.failures) {
      entry["witness"] = t.first_failure;
      s.status = Status::Fail;
    }
    checks[t.name] = std::move(entry);
    s.text.push_back(t.name + ": " + std::to_string(t.trials - t.failures) + "/" + std::to_string(t.trials) +
                     (t.failures ? "  FAIL" : "  pass"));
  }
  s.body["seed"] = cfg.seed;
  s.body["checks"] = std::move(checks);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [cmd, n] : kCommands) {
    if (cmd == c) return n;
  }
  return "?";
}

std::string Report::render(Format f) const {
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      os << body.dump(2) << '\n';
      break;
    case Format::Text:
      for (const auto& line : text) os << line << '\n';
      break;
    case Format::Latex:
      for (const auto& line : latex) os << line << '\n';
      break;
  }
  return os.str();
}

Report dispatch(const RunConfig& cfg) {
  Report report;
  report.body = Json::object();
  report.body["command"] = std::string(command_name(cfg.command));
  Json results = Json::array();
  for (const auto& p : cfg.partitions) {
    Section s;
    const auto start = std::chrono::steady_clock::now();
    switch (cfg.command) {
      case Command::Basis: run_basis(p, s); break;
      case Command::Generators: run_generators(p, s); break;
      case Command::CheckMembership: run_membership(p, cfg, s); break;
      case Command::Miura: run_miura(p, s); break;
      case Command::Jacobian: run_jacobian(p, cfg, s); break;
      case Command::SsVectors: run_ss_vectors(p, s); break;
      case Command::VerifyCenter: run_center(p, s); break;
      case Command::VerifyIso: run_iso(p, s); break;
      case Command::PvaAxioms: run_axioms(p, cfg, s); break;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    Json entry = Json::object();
    entry["partition"] = p.to_string();
    entry["status"] = std::string(status_name(s.status));
    for (auto& [k, v] : s.body.items()) entry[k] = std::move(v);
    if (cfg.timings) entry["timing_ms"] = elapsed.count();
    results.push_back(std::move(entry));

    report.status = worst(report.status, s.status);
    report.text.push_back("# partition " + p.to_string() + ": " + std::string(status_name(s.status)));
    for (auto& line : s.text) report.text.push_back(std::move(line));
    if (cfg.timings) report.text.push_back("  (" + std::to_string(elapsed.count()) + " ms)");
    report.latex.push_back("% partition " + p.to_string());
    for (auto& line : s.latex) report.latex.push_back(std::move(line));
  }
  report.body["status"] = std::string(status_name(report.status));
  report.body["results"] = std::move(results);
  return report;
}

}  // namespace wcent
