#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpinc/constructions.hpp"
#include "fpinc/io.hpp"

namespace fpinc {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  bool timestamp = true;
  std::optional<std::uint64_t> seed;  // overrides the config's seed
};

// Each command returns the full report document. Timestamp and timing
// fields appear only when options.timestamp is set.
json cmd_count(const std::string& instance_path, CountMethod method, const RunOptions& opts);
json cmd_pipeline(const std::string& instance_path, const std::optional<std::string>& config_path,
                  const RunOptions& opts);
// Re-derives every quantity of a pipeline report (or a bare WitnessReport).
json cmd_verify(const std::string& report_path);
json cmd_rudnev(const std::vector<std::int64_t>& values, u64 p);

struct SweepGrid {
  GenKind kind = GenKind::Elekes;
  std::vector<std::uint64_t> n;
  std::vector<u64> p;
  std::vector<std::uint64_t> seed;
  bool affine_only = true;
  bool run_pipeline = true;

  // Cells in order: n outermost, then p, then seed.
  std::vector<GenSpec> cells() const;
};

// JSON grid description: {"kind": ..., "n": [...], "p": [...], "seed": [...],
// "affine_only": bool, "pipeline": bool}. Missing lists default to one value
// (n = 2, p = 101, seed = 1); an explicit empty list gives an empty grid.
SweepGrid load_grid(const std::string& path);

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

extern const std::vector<std::string> kSweepColumns;

// A cell that throws is recorded in its row's "error" column.
SweepTable cmd_sweep(const SweepGrid& grid, const PipelineConfig& cfg, CountMethod method);
// Every cell is rendered with the same text in both formats.
std::string sweep_csv(const SweepTable& t);
json sweep_json(const SweepTable& t);
std::string sweep_cell_text(const json& cell);

}  // namespace fpinc
