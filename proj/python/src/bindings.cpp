#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rrloc/errors.hpp"
#include "rrloc/io.hpp"

namespace py = pybind11;
using namespace rrloc;

namespace {

ProblemInstance instance(const std::string& text, std::optional<int> k) {
  ProblemInstance p = parse_instance(text);
  return k ? tensor_power(p, *k) : p;
}

}  // namespace

PYBIND11_MODULE(_rrloc, m) {
  m.doc() = "Exact localization engine: Lefschetz side, reduced side with orbifold corrections, character oracle.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ComputationError>(m, "ComputationError", base.ptr());

  m.def(
      "catalog_entries",
      [] {
        std::vector<std::tuple<std::string, std::string, int>> out;
        for (const auto& e : catalog_entries()) out.emplace_back(e.name, e.description, e.default_k);
        return out;
      },
      "(name, description, default k) for every built-in instance");

  m.def(
      "catalog_json", [](const std::string& name, std::optional<int> k) { return instance_to_json(catalog(name, k)); },
      py::arg("name"), py::arg("k") = py::none(), "built-in instance as an instance document");

  m.def(
      "normalize_json", [](const std::string& text) { return instance_to_json(parse_instance(text)); },
      py::arg("instance"), "parse and re-serialize an instance document");

  m.def(
      "verify_json",
      [](const std::string& text, std::optional<int> k, std::optional<int> degree_bound, const std::string& source) {
        py::gil_scoped_release release;
        return report_to_json(verify_quantization(instance(text, k), {source, degree_bound, true}));
      },
      py::arg("instance"), py::arg("k") = py::none(), py::arg("degree_bound") = py::none(), py::arg("source") = "",
      "full report as JSON");

  m.def(
      "character",
      [](const std::string& text, std::optional<int> k, std::optional<int> degree_bound) {
        return character_polynomial(instance(text, k), degree_bound).coefficients;
      },
      py::arg("instance"), py::arg("k") = py::none(), py::arg("degree_bound") = py::none(),
      "character as {weight: multiplicity}");

  m.def(
      "rr_invariant", [](const std::string& text, std::optional<int> k) { return rr_invariant(instance(text, k)).to_string(); },
      py::arg("instance"), py::arg("k") = py::none(), "Lefschetz side as a \"p/q\" string");

  m.def(
      "rr_reduced",
      [](const std::string& text, std::optional<int> k) {
        const ReducedRR r = rr_reduced(instance(text, k));
        std::vector<std::pair<int, std::string>> corrections;
        for (const auto& c : r.corrections) corrections.emplace_back(c.order, c.value.to_string());
        return std::make_tuple(r.main_term.to_string(), corrections, r.total.to_string());
      },
      py::arg("instance"), py::arg("k") = py::none(), "(main term, [(root order, correction)], total)");

  m.def(
      "residues_json", [](const std::string& text, std::optional<int> k) { return residues_to_json(residue_table(instance(text, k))); },
      py::arg("instance"), py::arg("k") = py::none(), "per-component residue table as JSON");
}
