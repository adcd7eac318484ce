#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "wcent/affine_center.hpp"
#include "wcent/generators.hpp"
#include "wcent/pva_axioms.hpp"
#include "wcent/report.hpp"
#include "wcent/serialize.hpp"

namespace py = pybind11;
using namespace wcent;

// Exact values cross the boundary as JSON text; the Python package turns
// {"num", "den"} pairs into fractions.Fraction.

namespace {

using Triple = std::tuple<int, int, int>;

BasisElt elt(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }

MembershipMode parse_mode(const std::string& mode) {
  if (mode == "full") return MembershipMode::FullBasis;
  if (mode == "generators") return MembershipMode::Generators;
  throw std::invalid_argument("mode must be 'full' or 'generators'");
}

std::string lie_json(const LieElement& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms()) out.push_back(Json{{"elt", {e.i, e.j, e.r}}, {"coeff", to_json(c)}});
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_wcent, m) {
  m.doc() = "Exact computations for W-algebras of centralizers in gl_N";

  py::register_exception<MissingAssignment>(m, "MissingAssignment", PyExc_KeyError);

  m.def("basis", [](const std::vector<int>& parts) {
    const Centralizer alg{Partition(parts)};
    std::vector<Triple> out;
    for (const auto& e : alg.basis()) out.emplace_back(e.i, e.j, e.r);
    return out;
  }, py::arg("partition"));

  m.def("bracket", [](const std::vector<int>& parts, const Triple& a, const Triple& b) {
    return lie_json(Centralizer(Partition(parts)).bracket(elt(a), elt(b)));
  }, py::arg("partition"), py::arg("a"), py::arg("b"));

  m.def("form_tr", [](const std::vector<int>& parts, const Triple& a, const Triple& b) {
    return to_json(Centralizer(Partition(parts)).form_tr(elt(a), elt(b))).dump();
  }, py::arg("partition"), py::arg("a"), py::arg("b"));

  m.def("form_crit", [](const std::vector<int>& parts, const Triple& a, const Triple& b) {
    return to_json(Centralizer(Partition(parts)).form_crit(elt(a), elt(b))).dump();
  }, py::arg("partition"), py::arg("a"), py::arg("b"));

  m.def("w_generators", [](const std::vector<int>& parts) {
    return to_json(w_generators(Partition(parts))).dump();
  }, py::arg("partition"));

  m.def("miura_generators", [](const std::vector<int>& parts) {
    return to_json(miura_generators(Partition(parts)), "wbar").dump();
  }, py::arg("partition"));

  m.def("lambda_bracket", [](const std::vector<int>& parts, const std::string& a, const std::string& b) {
    const Centralizer alg{Partition(parts)};
    return to_json(lambda_bracket(alg, diffpoly_from_json(Json::parse(a)), diffpoly_from_json(Json::parse(b)))).dump();
  }, py::arg("partition"), py::arg("a"), py::arg("b"));

  m.def("membership", [](const std::vector<int>& parts, const std::string& poly, const std::string& mode) {
    const Centralizer alg{Partition(parts)};
    const MembershipResult r = w_membership(alg, diffpoly_from_json(Json::parse(poly)), parse_mode(mode));
    Json out{{"member", r.member}};
    if (r.witness) out["witness"] = Json{{"x", to_string(r.witness->x)}, {"value", to_json(r.witness->value)}};
    return out.dump();
  }, py::arg("partition"), py::arg("poly"), py::arg("mode") = "full");

  m.def("ss_vectors", [](const std::vector<int>& parts) {
    return to_json(ss_vectors(Partition(parts))).dump();
  }, py::arg("partition"));

  m.def("center_check", [](const std::vector<int>& parts, const std::string& vec) {
    auto alg = std::make_shared<const Centralizer>(Partition(parts));
    const CenterResult r = center_check(vacuum_from_json(alg, Json::parse(vec)));
    Json out{{"central", r.central}};
    if (r.witness) {
      out["witness"] = Json{{"x", to_string(r.witness->x)}, {"m", r.witness->m}, {"value", to_json(r.witness->value)}};
    }
    return out.dump();
  }, py::arg("partition"), py::arg("vector"));

  m.def("jacobian", [](const std::vector<int>& parts, std::uint64_t seed) {
    const JacobianResult r = jacobian_independence(Partition(parts), seed);
    Json out{{"independent", r.status == JacobianStatus::Independent}, {"det", to_json(r.det)}};
    if (r.symbolic_det) out["symbolic_det"] = to_json(*r.symbolic_det);
    return out.dump();
  }, py::arg("partition"), py::arg("seed") = kDefaultSeed);

  m.def("run", [](const std::string& command, const std::vector<std::vector<int>>& partitions,
                  const std::string& mode, std::uint64_t seed, int trials) {
    RunConfig cfg;
    auto c = parse_command(command);
    if (!c) throw std::invalid_argument("unknown command: " + command);
    cfg.command = *c;
    for (const auto& p : partitions) cfg.partitions.emplace_back(p);
    cfg.mode = parse_mode(mode);
    cfg.seed = seed;
    cfg.trials = trials;
    const Report r = dispatch(cfg);
    return std::make_pair(r.exit_code(), r.body.dump());
  }, py::arg("command"), py::arg("partitions"), py::arg("mode") = "full", py::arg("seed") = kDefaultSeed,
     py::arg("trials") = 100);
}
