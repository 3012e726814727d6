#include "fpinc/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <sstream>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json header(const std::string& command) {
  return {{"tool", "fpinc"}, {"version", kToolVersion}, {"command", command}};
}

json input_block(const std::string& bytes) {
  return {{"digest", "fnv1a64:" + fnv1a64_hex(bytes)}, {"bytes", bytes.size()}};
}

void stamp(json& report, const RunOptions& opts, const json& timings) {
  if (!opts.timestamp) return;
  report["timestamp"] = utc_now();
  report["timings_ms"] = timings;
}

json histogram(const std::vector<std::size_t>& degrees) {
  std::map<std::size_t, std::size_t> h;
  for (auto d : degrees) ++h[d];
  json out = json::array();
  for (const auto& [d, c] : h) out.push_back(json::array({d, c}));
  return out;
}

std::string method_name(CountMethod m) { return m == CountMethod::BruteForce ? "bruteforce" : "bucketed"; }

Instance parse_text(const std::string& bytes, const std::string& source) {
  std::istringstream is(bytes);
  return parse_instance(is, source);
}

}  // namespace

json cmd_count(const std::string& instance_path, CountMethod method, const RunOptions& opts) {
  const auto t0 = Clock::now();
  const std::string bytes = read_file(instance_path);
  const Instance inst = parse_text(bytes, instance_path);
  const double t_parse = ms_since(t0);
  const auto t1 = Clock::now();
  const DegreeTables d = count_incidences(inst, method);
  const double t_count = ms_since(t1);
  const TrivialBounds tb = trivial_bounds(inst.num_points(), inst.num_lines(), d.incidences);
  const double n = static_cast<double>(inst.size_bound());

  json report = header("count");
  report["input"] = input_block(bytes);
  report["method"] = method_name(method);
  report["result"] = {
      {"p", inst.p()},
      {"num_points", inst.num_points()},
      {"num_lines", inst.num_lines()},
      {"n_bound", inst.size_bound()},
      {"warn_n_ge_p", inst.warn_n_ge_p()},
      {"incidences", d.incidences},
      {"incidences_over_n_three_halves", n > 0 ? static_cast<double>(d.incidences) / std::pow(n, 1.5) : 0.0},
      {"point_degree_histogram", histogram(d.point_degree)},
      {"line_degree_histogram", histogram(d.line_degree)},
      {"cauchy_schwarz",
       {{"lines_side_holds", tb.lines_side},
        {"points_side_holds", tb.points_side},
        {"lines_side_slack", tb.lines_side_slack},
        {"points_side_slack", tb.points_side_slack}}}};
  stamp(report, opts, {{"parse", t_parse}, {"count", t_count}});
  return report;
}

json cmd_pipeline(const std::string& instance_path, const std::optional<std::string>& config_path,
                  const RunOptions& opts) {
  const auto t0 = Clock::now();
  PipelineConfig cfg = config_path ? load_config(*config_path) : PipelineConfig{};
  if (opts.seed) cfg.seed = *opts.seed;
  const std::string bytes = read_file(instance_path);
  const Instance inst = parse_text(bytes, instance_path);
  const double t_parse = ms_since(t0);
  const auto t1 = Clock::now();
  const WitnessReport w = run_pipeline(inst, cfg);
  const double t_run = ms_since(t1);

  json report = header("pipeline");
  report["input"] = input_block(bytes);
  report["config"] = config_to_json(cfg);
  report["seed"] = cfg.seed;
  report["outcome"] = w.witness ? "witness" : "no_witness";
  if (w.witness) {
    const VerifyResult v = verify_witness(w);
    if (!v.ok) throw InvariantViolation("pipeline produced a witness that fails verification: " + v.diffs[0].field);
    report["verified"] = true;
  } else {
    report["verified"] = false;
  }
  report["witness_report"] = report_to_json(w);
  stamp(report, opts, {{"parse", t_parse}, {"pipeline", t_run}});
  return report;
}

json cmd_verify(const std::string& report_path) {
  const std::string text = read_file(report_path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(report_path, 0, std::string("invalid JSON: ") + e.what());
  }
  const json& body = j.contains("witness_report") ? j["witness_report"] : j;
  const WitnessReport w = report_from_json(body, report_path);
  const VerifyResult v = verify_witness(w);
  json diffs = json::array();
  for (const auto& d : v.diffs) {
    diffs.push_back({{"field", d.field}, {"reported", d.reported}, {"recomputed", d.recomputed}});
  }
  json report = header("verify");
  report["input"] = input_block(text);
  report["ok"] = v.ok;
  report["diffs"] = diffs;
  return report;
}

json cmd_rudnev(const std::vector<std::int64_t>& values, u64 p) {
  const PrimeContext ctx(p);
  const ElementSet a = make_set(ctx, values);
  const DifferenceRatio d = rudnev_ratio(a);
  json report = header("rudnev");
  report["result"] = {{"p", p},
                      {"a", [&] {
                         json out = json::array();
                         for (const auto& x : a) out.push_back(x.value());
                         return out;
                       }()},
                      {"size", d.size},
                      {"dminus", d.dminus},
                      {"dratio", d.dratio},
                      {"ratio", d.ratio},
                      {"warn_large", d.warn_large}};
  return report;
}

std::vector<GenSpec> SweepGrid::cells() const {
  std::vector<GenSpec> out;
  for (auto nv : n)
    for (auto pv : p)
      for (auto sv : seed) out.push_back({kind, nv, pv, sv, affine_only});
  return out;
}

SweepGrid load_grid(const std::string& path) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(path, 0, "grid must be a JSON object");
  SweepGrid g;
  g.n = {2};
  g.p = {101};
  g.seed = {1};
  auto list = [&](const json& v, const std::string& key) {
    if (!v.is_array()) throw ParseError(path, 0, key + ": expected an array of non-negative integers");
    std::vector<std::uint64_t> out;
    for (const auto& x : v) {
      if (!x.is_number_unsigned()) throw ParseError(path, 0, key + ": expected non-negative integers");
      out.push_back(x.get<std::uint64_t>());
    }
    return out;
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "kind") {
      if (!v.is_string()) throw ParseError(path, 0, "kind: expected a string");
      try {
        g.kind = parse_gen_kind(v.get<std::string>());
      } catch (const InvalidArgument& e) {
        throw ParseError(path, 0, e.what());
      }
    } else if (key == "n") {
      g.n = list(v, key);
    } else if (key == "p") {
      g.p = list(v, key);
    } else if (key == "seed") {
      g.seed = list(v, key);
    } else if (key == "affine_only" || key == "pipeline") {
      if (!v.is_boolean()) throw ParseError(path, 0, key + ": expected true or false");
      (key == "pipeline" ? g.run_pipeline : g.affine_only) = v.get<bool>();
    } else {
      throw ParseError(path, 0, "unknown field '" + key + "'");
    }
  }
  return g;
}

const std::vector<std::string> kSweepColumns = {
    "kind",     "n",         "p",          "seed",          "num_points",    "num_lines",
    "n_bound",  "incidences", "incidences_over_n_three_halves", "outcome",  "stage",
    "k",        "a_size",    "refined_size", "rudnev_dminus", "rudnev_dratio", "rudnev_ratio",
    "error"};

SweepTable cmd_sweep(const SweepGrid& grid, const PipelineConfig& cfg, CountMethod method) {
  SweepTable t;
  t.columns = kSweepColumns;
  for (const GenSpec& spec : grid.cells()) {
    std::map<std::string, json> row = {{"kind", to_string(spec.kind)}, {"n", spec.n}, {"p", spec.p},
                                       {"seed", spec.seed}};
    try {
      const Instance inst = generate(spec);
      const DegreeTables d = count_incidences(inst, method);
      const double n = static_cast<double>(inst.size_bound());
      row["num_points"] = inst.num_points();
      row["num_lines"] = inst.num_lines();
      row["n_bound"] = inst.size_bound();
      row["incidences"] = d.incidences;
      row["incidences_over_n_three_halves"] = n > 0 ? static_cast<double>(d.incidences) / std::pow(n, 1.5) : 0.0;
      if (grid.run_pipeline) {
        if (inst.num_points() == 0 || inst.num_lines() == 0) {
          row["outcome"] = "skipped";
        } else {
          const WitnessReport w = run_pipeline(inst, cfg);
          row["outcome"] = w.witness ? "witness" : "no_witness";
          if (w.no_witness) row["stage"] = w.no_witness->stage;
          row["k"] = w.trace.k;
          if (w.normalized) row["a_size"] = w.a.size();
          if (w.extraction.found) row["refined_size"] = w.extraction.refined.size();
          if (w.rudnev) {
            row["rudnev_dminus"] = w.rudnev->dminus;
            row["rudnev_dratio"] = w.rudnev->dratio;
            row["rudnev_ratio"] = w.rudnev->ratio;
          }
        }
      }
    } catch (const Error& e) {
      row["error"] = e.what();
    } catch (const InvariantViolation& e) {
      row["error"] = std::string("invariant violation: ") + e.what();
    }
    std::vector<json> cells;
    for (const auto& c : t.columns) {
      auto it = row.find(c);
      cells.push_back(it == row.end() ? json(nullptr) : it->second);
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::string sweep_cell_text(const json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

std::string sweep_csv(const SweepTable& t) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + quote(sweep_cell_text(row[i]));
    out += "\n";
  }
  return out;
}

json sweep_json(const SweepTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
    rows.push_back(r);
  }
  return {{"columns", t.columns}, {"rows", rows}};
}

}  // namespace fpinc
