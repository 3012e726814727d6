#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpinc/commands.hpp"
#include "fpinc/constructions.hpp"
#include "fpinc/errors.hpp"
#include "fpinc/io.hpp"

namespace py = pybind11;
using namespace fpinc;

namespace {

Instance parse_text(const std::string& text) {
  std::istringstream is(text);
  return parse_instance(is, "<string>");
}

CountMethod parse_method(const std::string& m) {
  if (m == "bucketed") return CountMethod::Bucketed;
  if (m == "bruteforce") return CountMethod::BruteForce;
  throw InvalidArgument("unknown method '" + m + "' (expected bucketed or bruteforce)");
}

PipelineConfig parse_config(const std::string& config_json) {
  if (config_json.empty()) return PipelineConfig{};
  json j;
  try {
    j = json::parse(config_json);
  } catch (const json::parse_error& e) {
    throw ParseError("<config>", 0, std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j, "<config>");
}

}  // namespace

PYBIND11_MODULE(_fpinc, m) {
  py::register_exception<Error>(m, "FpincError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.attr("__version__") = kToolVersion;

  m.def("generate", [](const std::string& kind, std::uint64_t n, u64 p, std::uint64_t seed, bool affine_only) {
    return write_instance(generate({parse_gen_kind(kind), n, p, seed, affine_only}));
  }, py::arg("kind"), py::arg("n") = 2, py::arg("p") = 101, py::arg("seed") = 1, py::arg("affine_only") = true);

  m.def("count", [](const std::string& text, const std::string& method) {
    const Instance inst = parse_text(text);
    const DegreeTables d = count_incidences(inst, parse_method(method));
    py::dict out;
    out["p"] = inst.p();
    out["num_points"] = inst.num_points();
    out["num_lines"] = inst.num_lines();
    out["incidences"] = d.incidences;
    out["point_degree"] = d.point_degree;
    out["line_degree"] = d.line_degree;
    return out;
  }, py::arg("text"), py::arg("method") = "bucketed");

  m.def("pipeline", [](const std::string& text, const std::string& config_json) {
    const Instance inst = parse_text(text);
    const PipelineConfig cfg = parse_config(config_json);
    WitnessReport w;
    {
      py::gil_scoped_release release;
      w = run_pipeline(inst, cfg);
    }
    return report_to_json(w).dump();
  }, py::arg("text"), py::arg("config_json") = "");

  m.def("verify", [](const std::string& report_json) {
    json j;
    try {
      j = json::parse(report_json);
    } catch (const json::parse_error& e) {
      throw ParseError("<report>", 0, std::string("invalid JSON: ") + e.what());
    }
    const json& body = j.contains("witness_report") ? j["witness_report"] : j;
    const VerifyResult v = verify_witness(report_from_json(body, "<report>"));
    py::list diffs;
    for (const auto& d : v.diffs) diffs.append(py::make_tuple(d.field, d.reported, d.recomputed));
    return py::make_tuple(v.ok, diffs);
  }, py::arg("report_json"));

  m.def("rudnev", [](const std::vector<std::int64_t>& values, u64 p) {
    return cmd_rudnev(values, p)["result"].dump();
  }, py::arg("values"), py::arg("p"));

  m.def("permissive_config", [] { return config_to_json(PipelineConfig::permissive()).dump(); });
  m.def("default_config", [] { return config_to_json(PipelineConfig{}).dump(); });
}
