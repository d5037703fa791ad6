#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "json.hpp"

#include "molscert/datasets.hpp"
#include "molscert/report.hpp"

namespace py = pybind11;
using namespace molscert;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

RunOptions make_options(bool build, int threads) { return RunOptions{build, false, threads}; }

py::object py_verify_pa(const std::string& source, bool build, int threads) {
  return json_to_py(to_json(run_verify_pa(load_pa(source), make_options(build, threads))));
}

py::object py_verify_dm(const std::string& source, bool build, int threads) {
  return json_to_py(to_json(run_verify_dm(load_dm(source), make_options(build, threads))));
}

MOLSSet build_mols_set(const std::string& source, int threads) {
  RunOptions opt = make_options(true, threads);
  if (dataset_kind(source) == "pa") {
    PAReport report = run_verify_pa(load_pa(source), opt);
    if (!report.pass || !report.mols)
      throw std::invalid_argument("dataset " + source + " failed verification");
    return *report.mols;
  }
  DMReport report = run_verify_dm(load_dm(source), opt);
  if (!report.pass || !report.mols)
    throw std::invalid_argument("dataset " + source + " failed verification");
  return *report.mols;
}

py::object py_build_mols(const std::string& source, int threads) {
  return json_to_py(mols_to_json(build_mols_set(source, threads)));
}

std::string py_build_mols_text(const std::string& source, int threads) {
  return write_mols_text(build_mols_set(source, threads));
}

py::object py_verify_mols_text(const std::string& text, int threads) {
  MOLSSet mols = parse_mols_text(text);
  return json_to_py(to_json(run_verify_mols("<text>", mols, make_options(false, threads))));
}

py::object py_list_datasets() {
  py::list out;
  for (const DatasetSummary& d : list_embedded()) {
    py::dict entry;
    entry["name"] = d.name;
    entry["kind"] = d.kind;
    entry["summary"] = d.summary;
    out.append(entry);
  }
  return out;
}

std::vector<int> one_based_images(const Permutation& p) {
  std::vector<int> out(p.images());
  for (int& v : out) ++v;
  return out;
}

Permutation perm_from_images(const std::vector<int>& images_1based) {
  std::vector<int> images(images_1based);
  for (int& v : images) --v;
  return Permutation(std::move(images));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core operations: permutation codes, difference matrices, MOLS verification";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](int degree) { return Permutation(degree); }), py::arg("degree"),
           "Identity permutation of the given degree")
      .def_static("from_images", &perm_from_images, py::arg("images"),
                  "From a 1-based image list")
      .def_static(
          "from_cycles",
          [](const std::string& text, int degree) { return parse_cycles(text, degree); },
          py::arg("text"), py::arg("degree"), "Parse cycle notation like \"(1,2)(3,4)\"")
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &one_based_images, "1-based image list")
      .def("cycles", &format_cycles, "Canonical cycle notation")
      .def("inverse", [](const Permutation& p) { return inverse(p); })
      .def("__mul__", [](const Permutation& p, const Permutation& q) { return compose(p, q); })
      .def("distance",
           [](const Permutation& p, const Permutation& q) { return hamming_distance(p, q); },
           py::arg("other"), "Hamming distance")
      .def("__eq__", [](const Permutation& p, const Permutation& q) { return p == q; })
      .def("__repr__",
           [](const Permutation& p) { return "Permutation(\"" + format_cycles(p) + "\")"; });

  m.def("list_datasets", &py_list_datasets, "Embedded dataset summaries");
  m.def("dataset_text", [](const std::string& name) { return embedded_text(name); },
        py::arg("name"), "Raw text of an embedded dataset");
  m.def("verify_pa", &py_verify_pa, py::arg("source"), py::arg("build") = false,
        py::arg("threads") = 0, "Verify a permutation-array dataset; returns the report");
  m.def("verify_dm", &py_verify_dm, py::arg("source"), py::arg("build") = false,
        py::arg("threads") = 0, "Verify a difference-matrix dataset; returns the report");
  m.def("build_mols", &py_build_mols, py::arg("source"), py::arg("threads") = 0,
        "Verify a dataset and return its MOLS as {n, count, squares}");
  m.def("build_mols_text", &py_build_mols_text, py::arg("source"), py::arg("threads") = 0,
        "Verify a dataset and return its MOLS in the text file format");
  m.def("verify_mols_text", &py_verify_mols_text, py::arg("text"), py::arg("threads") = 0,
        "Verify MOLS file text; returns the report");
}
