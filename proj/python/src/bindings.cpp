// Python bindings. Structured values cross the boundary as JSON text in the
// same formats the CLI reads and writes; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relcyl/axioms.hpp"
#include "relcyl/duality.hpp"
#include "relcyl/error.hpp"
#include "relcyl/io.hpp"
#include "relcyl/represent.hpp"
#include "relcyl/setalg.hpp"
#include "relcyl/terms.hpp"

namespace py = pybind11;
using namespace relcyl;
using io::Json;

namespace {

Json parse(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string out(const Json& j) { return j.dump(); }

std::string validate(const std::string& alg) {
  return out(validate_bao(io::algebra_from_json(parse(alg))));
}

std::string check(const std::string& alg, const std::string& system) {
  return out(io::to_json(check_class(io::algebra_from_json(parse(alg)), parse_axiom_system(system))));
}

std::string abstract_unit(const std::string& unit, const std::string& signature) {
  return out(io::to_json(abstract(io::unit_from_json(parse(unit)), io::signature_from_json(signature))));
}

std::string classify(const std::string& unit) {
  const UnitFlags f = classify_unit(io::unit_from_json(parse(unit)));
  Json j;
  j["is_D"] = f.is_D;
  j["is_Dp"] = f.is_Dp;
  j["is_Dpe"] = f.is_Dpe;
  j["is_Ds"] = f.is_Ds;
  j["closed_under_finite_transformations"] = f.closed_under_finite_transformations;
  return out(j);
}

std::string represent(const std::string& alg, const std::string& mode, const std::string& strategy, bool reuse,
                      int max_rounds, int max_nodes) {
  const FiniteBAO a = io::algebra_from_json(parse(alg));
  GameConfig cfg;
  cfg.mode = parse_network_mode(mode);
  cfg.strategy = parse_strategy(strategy);
  cfg.reuse = reuse;
  cfg.max_rounds = max_rounds;
  cfg.max_nodes = max_nodes;
  const Play p = play(a, cfg);
  const Representation rep = extract(p);
  Json j;
  j["play"] = io::to_json(p);
  j["representation"] = io::to_json(rep);
  j["verify"] = io::to_json(verify(a, rep, cfg.mode));
  j["complete"] = check_complete(rep);
  return out(j);
}

std::string verify_rep(const std::string& alg, const std::string& rep, const std::string& mode) {
  return out(io::to_json(verify(io::algebra_from_json(parse(alg)), io::representation_from_json(parse(rep)),
                                parse_network_mode(mode))));
}

std::string reduct_to(const std::string& alg, const std::string& signature) {
  return out(io::to_json(reduct(io::algebra_from_json(parse(alg)), io::signature_from_json(signature))));
}

std::string diagonals(const std::string& alg) {
  return out(io::to_json(define_diagonals(io::algebra_from_json(parse(alg)))));
}

std::string word_hat(const std::string& word, int n) {
  return out(hat(io::word_from_json(parse(word)), n).map());
}

std::string word_decompose(const std::vector<int>& map) { return out(io::to_json(decompose(Transformation(map)))); }

std::string eval_text(const std::string& alg, const std::string& term, const std::string& vars) {
  const FiniteBAO a = io::algebra_from_json(parse(alg));
  const Json given = parse(vars);
  Assignment env;
  for (const auto& [k, v] : given.items()) {
    env[std::stoi(k)] = io::element_from_json(v, a.num_atoms, "vars." + k);
  }
  return out(io::to_json(eval_term(a, *parse_term(term, a.dim), env)));
}

std::string complex_of_frame(const std::string& frame) {
  const ComplexAlgebra ca = complex_algebra(io::frame_from_json(parse(frame)));
  Json j;
  j["algebra"] = io::to_json(ca.algebra);
  j["report"] = ca.report;
  return out(j);
}

std::string frame_of_unit(const std::string& unit) {
  return out(io::to_json(tuple_frame(io::unit_from_json(parse(unit)))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "relcyl native core; JSON text in, JSON text out";

  auto base = py::register_exception<Error>(m, "RelcylError", PyExc_RuntimeError);
  py::register_exception<IndexError>(m, "IndexError", base.ptr());
  py::register_exception<SignatureError>(m, "SignatureError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.def("validate", &validate, py::arg("algebra"));
  m.def("check", &check, py::arg("algebra"), py::arg("system"));
  m.def("abstract", &abstract_unit, py::arg("unit"), py::arg("signature"));
  m.def("classify", &classify, py::arg("unit"));
  m.def("represent", &represent, py::arg("algebra"), py::arg("mode"), py::arg("strategy") = "atomic-fast",
        py::arg("reuse") = true, py::arg("max_rounds") = 10000, py::arg("max_nodes") = 512);
  m.def("verify", &verify_rep, py::arg("algebra"), py::arg("representation"), py::arg("mode"));
  m.def("reduct", &reduct_to, py::arg("algebra"), py::arg("signature"));
  m.def("define_diagonals", &diagonals, py::arg("algebra"));
  m.def("hat", &word_hat, py::arg("word"), py::arg("n"));
  m.def("decompose", &word_decompose, py::arg("map"));
  m.def("eval", &eval_text, py::arg("algebra"), py::arg("term"), py::arg("vars"));
  m.def("complex_algebra", &complex_of_frame, py::arg("frame"));
  m.def("tuple_frame", &frame_of_unit, py::arg("unit"));
}
