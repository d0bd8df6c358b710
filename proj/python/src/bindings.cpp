// Copyright 2026 The qgdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Bit strings and Pauli strings cross the boundary as str.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgdec/analysis.hpp"
#include "qgdec/code.hpp"
#include "qgdec/decoder.hpp"
#include "qgdec/errors.hpp"
#include "qgdec/graph.hpp"
#include "qgdec/sim.hpp"
#include "qgdec/syndrome.hpp"

namespace py = pybind11;
using namespace qgdec;

namespace {

std::vector<std::string> strings(const std::vector<PauliOperator>& ops) {
  std::vector<std::string> out;
  for (const auto& op : ops) out.push_back(op.str());
  return out;
}

std::vector<std::string> matrix_rows(const BitMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < m.cols(); ++c) row += m.get(r, c) ? '1' : '0';
    out.push_back(row);
  }
  return out;
}

DecodeConfig make_config(std::optional<std::size_t> t, bool prune, bool structured, bool mld, bool css) {
  DecodeConfig cfg;
  cfg.T = t;
  cfg.prune = prune;
  cfg.structured = structured;
  cfg.exhaustive_mld = mld;
  cfg.css_fastpath = css;
  return cfg;
}

py::dict result_dict(const RunResult& r) {
  py::dict d;
  d["shots"] = r.shots;
  d["failures"] = r.failures;
  d["p_L"] = r.p_L;
  d["std_error"] = r.std_error;
  d["wall_seconds"] = r.wall_seconds;
  d["cap_reached"] = r.cap_reached;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph-based decoding of stabilizer codes";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CommutationError>(m, "CommutationError", validation.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ExtractionInvalid>(m, "ExtractionInvalid", base.ptr());
  py::register_exception<SyndromeMismatch>(m, "SyndromeMismatch", base.ptr());
  py::register_exception<NotCss>(m, "NotCss", base.ptr());
  py::register_exception<InsufficientData>(m, "InsufficientData", base.ptr());

  py::class_<StabilizerCode>(m, "StabilizerCode")
      .def_readonly("name", &StabilizerCode::name)
      .def_readonly("n", &StabilizerCode::n)
      .def_readonly("k", &StabilizerCode::k)
      .def_readonly("d", &StabilizerCode::d)
      .def_property_readonly("t", &StabilizerCode::t)
      .def_property_readonly("css", &StabilizerCode::css)
      .def_property_readonly("stabilizers", [](const StabilizerCode& c) { return strings(c.stabilizers); })
      .def_property_readonly("logical_z", [](const StabilizerCode& c) { return strings(c.logical_z); })
      .def_property_readonly("logical_x", [](const StabilizerCode& c) { return strings(c.logical_x); })
      .def("__str__", &format_code)
      .def("__repr__", [](const StabilizerCode& c) {
        return "<StabilizerCode " + c.name + " [[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," +
               std::to_string(c.d) + "]]>";
      });

  m.def("builtin_names", &builtin_names);
  m.def("code", [](const std::string& name) { return resolve_code(name); }, py::arg("name_or_path"),
        "Built-in code by name, or a code file path.");
  m.def("load_code", [](const std::string& text, const std::string& name) { return load_code(text, name); },
        py::arg("text"), py::arg("name") = "custom");
  m.def("validate", &validate);
  m.def("verify_distance", [](const StabilizerCode& c, std::size_t w_max) {
    const auto r = verify_distance(c, w_max);
    py::dict d;
    d["weight"] = r.weight;
    d["exact"] = r.exact;
    d["witness"] = r.exact ? py::object(py::str(r.witness.str())) : py::object(py::none());
    return d;
  }, py::arg("code"), py::arg("w_max"));

  py::class_<GraphExtraction>(m, "GraphExtraction")
      .def_readonly("n", &GraphExtraction::n)
      .def_readonly("left_nodes", &GraphExtraction::left_nodes)
      .def_readonly("right_nodes", &GraphExtraction::right_nodes)
      .def_property_readonly("phase_nodes", &GraphExtraction::phase_nodes)
      .def_property_readonly("bipartite", &GraphExtraction::bipartite)
      .def_property_readonly("edge_count", &GraphExtraction::edge_count)
      .def_property_readonly("gamma", [](const GraphExtraction& e) { return matrix_rows(e.gamma); })
      .def_property_readonly("j", [](const GraphExtraction& e) { return matrix_rows(e.j); })
      .def("json", [](const GraphExtraction& e) { return graph_json(e); })
      .def("dot", [](const GraphExtraction& e, const std::string& name) { return graph_dot(e, name); },
           py::arg("name") = "G");

  m.def("extract", [](const StabilizerCode& c, std::optional<std::vector<std::size_t>> left) {
    auto ext = left ? extract(c, *left) : extract(c);
    verify_extraction(c, ext);
    return ext;
  }, py::arg("code"), py::arg("left") = py::none(), "Graph extraction; `left` holds 0-based qubits.");

  m.def("measure_beta", [](const StabilizerCode& c, const std::string& error) {
    return measure_beta(c, PauliOperator::parse(error)).str();
  });

  m.def(
      "decode",
      [](const StabilizerCode& c, const std::string& syndrome, std::optional<std::size_t> t, bool prune,
         bool structured, bool mld, bool css) {
        const auto cfg = make_config(t, prune, structured, mld, css);
        const auto ext = extract(c);
        const auto beta = parse_syndrome(syndrome, c.n - c.k);
        const auto r = css ? decode_css(c, ext, beta, cfg) : decode(c, ext, beta, cfg);
        py::dict d;
        d["correction"] = r.correction.str();
        d["weight"] = r.weight;
        d["branch"] = r.branch;
        d["branch_weights"] = r.branch_weights;
        d["explored"] = r.explored;
        d["bounded"] = r.bounded;
        return d;
      },
      py::arg("code"), py::arg("syndrome"), py::arg("t") = py::none(), py::arg("prune") = true,
      py::arg("structured") = true, py::arg("mld") = false, py::arg("css") = false);

  m.def("is_logical_error", [](const StabilizerCode& c, const std::string& error, const std::string& correction) {
    return is_logical_error(c, PauliOperator::parse(error), PauliOperator::parse(correction));
  });

  m.def("exact_p_L", [](const StabilizerCode& c, const std::string& noise) {
    return exact_p_L(c, extract(c), parse_noise(noise));
  }, py::arg("code"), py::arg("noise"));

  m.def(
      "simulate",
      [](const StabilizerCode& c, const std::string& noise, std::uint64_t failures, std::uint64_t seed,
         unsigned workers, std::uint64_t max_shots) {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.target_failures = failures;
        cfg.workers = workers;
        cfg.max_shots = max_shots;
        const auto model = parse_noise(noise);
        const auto ext = extract(c);
        py::gil_scoped_release release;
        const auto r = run_until_failures(c, ext, model, cfg);
        py::gil_scoped_acquire acquire;
        return result_dict(r);
      },
      py::arg("code"), py::arg("noise"), py::arg("failures") = 100, py::arg("seed") = 1, py::arg("workers") = 1,
      py::arg("max_shots") = 100'000'000ULL);

  m.def(
      "collapse_fit",
      [](const std::vector<std::tuple<double, std::size_t, double, double>>& rows, std::pair<double, double> window,
         unsigned degree) {
        std::vector<CollapsePoint> pts;
        for (const auto& [p, d, pl, se] : rows) pts.push_back({p, d, pl, se});
        CollapseConfig cfg;
        cfg.window_lo = window.first;
        cfg.window_hi = window.second;
        cfg.degree = degree;
        const auto f = collapse_fit(pts, cfg);
        py::dict out;
        out["p_c"] = f.p_c;
        out["nu"] = f.nu;
        out["residual"] = f.residual;
        out["degree"] = f.degree;
        out["window"] = f.window;
        out["points_used"] = f.points_used;
        out["converged"] = f.converged;
        return out;
      },
      py::arg("points"), py::arg("window"), py::arg("degree") = 3,
      "Points are (p, d, p_L, std_error) tuples.");
}
