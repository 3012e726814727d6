#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpinc/commands.hpp"
#include "fpinc/errors.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kInternalError = 3 };

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw fpinc::InvalidArgument("cannot write '" + out_path + "'");
  out << text;
}

std::string pretty(const fpinc::json& j) { return j.dump(2) + "\n"; }

fpinc::CountMethod parse_method(const std::string& s) {
  return s == "bruteforce" ? fpinc::CountMethod::BruteForce : fpinc::CountMethod::Bucketed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-line incidences over F_p: counting, the refinement pipeline and witness checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fpinc::kToolVersion);

  std::string out_path;
  std::string method = "bucketed";
  std::string format = "json";
  bool no_timestamp = false;
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  const auto methods = CLI::IsMember({"bucketed", "bruteforce"});

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  fpinc::GenSpec spec;
  std::string kind = "elekes";
  bool projective = false;
  gen->add_option("--kind", kind, "elekes, random, full_plane or cartesian_product")->capture_default_str();
  gen->add_option("--n", spec.n, "Grid side, or N for random")->capture_default_str();
  gen->add_option("--p", spec.p, "Prime modulus")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Seed for random")->capture_default_str();
  gen->add_flag("--projective", projective, "full_plane: all of PG(2,p)");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  auto* count = app.add_subcommand("count", "Count incidences of an instance file");
  std::string instance_path;
  count->add_option("instance", instance_path, "Instance file")->required();
  count->add_option("--method", method)->check(methods)->capture_default_str();
  count->add_option("--format", format)->check(CLI::IsMember({"json"}));
  count->add_flag("--no-timestamp", no_timestamp, "Omit timestamp and timings");
  count->add_option("--out", out_path);

  auto* pipeline = app.add_subcommand("pipeline", "Run the refinement pipeline on an instance file");
  pipeline->add_option("instance", instance_path, "Instance file")->required();
  pipeline->add_option("--config", config_path, "Pipeline configuration (JSON)");
  pipeline->add_option("--seed", seed, "Overrides the configured seed");
  pipeline->add_option("--format", format)->check(CLI::IsMember({"json"}));
  pipeline->add_flag("--no-timestamp", no_timestamp, "Omit timestamp and timings");
  pipeline->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Re-derive every quantity of a pipeline report");
  std::string report_path;
  verify->add_option("report", report_path, "Report written by 'pipeline'")->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"json"}));
  verify->add_option("--out", out_path);

  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid of generated instances");
  std::optional<std::string> grid_path;
  fpinc::SweepGrid grid;
  grid.n = {2};
  grid.p = {101};
  grid.seed = {1};
  bool no_pipeline = false;
  sweep->add_option("--grid", grid_path, "Grid description (JSON); overrides the list flags");
  sweep->add_option("--kind", kind)->capture_default_str();
  sweep->add_option("--n", grid.n, "Values of n")->delimiter(',');
  sweep->add_option("--p", grid.p, "Values of p")->delimiter(',');
  sweep->add_option("--seed", grid.seed, "Values of the seed")->delimiter(',');
  sweep->add_flag("--no-pipeline", no_pipeline, "Only count incidences");
  sweep->add_option("--config", config_path, "Pipeline configuration (JSON)");
  sweep->add_option("--method", method)->check(methods)->capture_default_str();
  sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep->add_flag("--no-timestamp", no_timestamp, "Accepted for symmetry; sweeps carry no timestamp");
  sweep->add_option("--out", out_path);

  auto* rudnev = app.add_subcommand("rudnev", "Measure |A-A|, |A/A| and the 12/11 ratio");
  std::vector<std::int64_t> values;
  fpinc::u64 rp = 101;
  rudnev->add_option("--p", rp, "Prime modulus")->capture_default_str();
  rudnev->add_option("values", values, "Elements of A, space or comma separated")->required()->delimiter(',');
  rudnev->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  fpinc::RunOptions opts;
  opts.timestamp = !no_timestamp;
  opts.seed = seed;

  try {
    if (gen->parsed()) {
      spec.kind = fpinc::parse_gen_kind(kind);
      spec.affine_only = !projective;
      emit(fpinc::write_instance(fpinc::generate(spec)), out_path);
    } else if (count->parsed()) {
      emit(pretty(fpinc::cmd_count(instance_path, parse_method(method), opts)), out_path);
    } else if (pipeline->parsed()) {
      emit(pretty(fpinc::cmd_pipeline(instance_path, config_path, opts)), out_path);
    } else if (verify->parsed()) {
      const fpinc::json r = fpinc::cmd_verify(report_path);
      emit(pretty(r), out_path);
      return r["ok"].get<bool>() ? kOk : kMismatch;
    } else if (sweep->parsed()) {
      if (grid_path) {
        grid = fpinc::load_grid(*grid_path);
      } else {
        grid.kind = fpinc::parse_gen_kind(kind);
      }
      if (no_pipeline) grid.run_pipeline = false;
      const fpinc::PipelineConfig cfg = config_path ? fpinc::load_config(*config_path) : fpinc::PipelineConfig{};
      const fpinc::SweepTable t = fpinc::cmd_sweep(grid, cfg, parse_method(method));
      emit(format == "csv" ? fpinc::sweep_csv(t) : pretty(fpinc::sweep_json(t)), out_path);
    } else if (rudnev->parsed()) {
      emit(pretty(fpinc::cmd_rudnev(values, rp)), out_path);
    }
  } catch (const fpinc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fpinc::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}
