#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "substrata/report.hpp"
#include "substrata/strata.hpp"

namespace py = pybind11;
using namespace substrata;

namespace {

GroupSetting setting(const std::string& type, const std::optional<std::string>& flavor) {
  const Flavor f = flavor ? parse_flavor(*flavor) : (type.front() == 'C' ? Flavor::Sp : Flavor::GL);
  return build_setting(type, f);
}

py::tuple run_verb(const std::string& verb, const std::string& type, const std::optional<std::string>& flavor,
                   const std::string& regime, const std::string& data_dir, const std::string& format) {
  RunConfig cfg;
  cfg.verb = verb;
  cfg.type = type;
  if (flavor) cfg.flavor = parse_flavor(*flavor);
  cfg.regime = parse_regime(regime);
  cfg.data_dir = data_dir;
  cfg.format = parse_format(format);
  std::ostringstream out, err;
  int status;
  {
    py::gil_scoped_release release;
    status = run(cfg, out, err);
  }
  return py::make_tuple(status, out.str(), err.str());
}

py::list fake_degrees(const std::string& type, const std::optional<std::string>& flavor) {
  py::list rows;
  for (const auto& e : fake_degree_table(setting(type, flavor))->sorted_by_b()) {
    py::dict d;
    d["label"] = e.label.to_string();
    d["display"] = e.display;
    d["dim"] = e.dim;
    d["n_e"] = e.n_e;
    d["coefficients"] = e.coefficients;
    rows.append(d);
  }
  return rows;
}

py::dict char_table(const std::string& type, const std::optional<std::string>& flavor) {
  const auto table = character_table(setting(type, flavor));
  py::list classes, irr;
  for (const auto& c : table->group().classes()) classes.append(py::make_tuple(class_label_string(c.label), c.size));
  for (std::size_t i = 0; i < table->size(); ++i)
    irr.append(py::make_tuple(table->labels()[i].to_string(), table->row(i).values));
  py::dict d;
  d["classes"] = classes;
  d["irreducibles"] = irr;
  return d;
}

std::string j_induce_label(const std::string& type, const std::vector<int>& sp_blocks, const std::vector<int>& gl_blocks,
                           const std::string& label) {
  const auto s = setting(type, std::nullopt);
  CentralizerShape shape{sp_blocks, gl_blocks};
  std::sort(shape.sp_blocks.rbegin(), shape.sp_blocks.rend());
  std::sort(shape.gl_blocks.rbegin(), shape.gl_blocks.rend());
  const auto sub = realize_subgroup(s, shape);
  return j_induce(sub, IrrLabel::parse(label)).to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strata and substrata of GL_n and Sp_2n from Weyl group data";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<DataError>(m, "DataError");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");
  py::register_exception<Error>(m, "Error");

  m.def("run", &run_verb, py::arg("verb"), py::arg("type") = "", py::arg("flavor") = py::none(),
        py::arg("regime") = "p0odd", py::arg("data_dir") = "", py::arg("format") = "json",
        "Runs a CLI verb; returns (exit status, stdout, stderr).");
  m.def("verbs", &known_verbs);
  m.def(
      "invariant_degrees",
      [](const std::string& type, const std::optional<std::string>& flavor) {
        return invariant_degrees(*setting(type, flavor).weyl_group());
      },
      py::arg("type"), py::arg("flavor") = py::none());
  m.def("fake_degrees", &fake_degrees, py::arg("type"), py::arg("flavor") = py::none());
  m.def("character_table", &char_table, py::arg("type"), py::arg("flavor") = py::none());
  m.def("j_induce", &j_induce_label, py::arg("type"), py::arg("sp_blocks"), py::arg("gl_blocks"), py::arg("label"),
        "Truncated induction from the block subgroup to W(type).");
  m.def("default_data_directory", &default_data_directory);
}
