#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include <json.hpp>

#include "fpinc/incidence.hpp"
#include "fpinc/pipeline.hpp"

namespace fpinc {

using json = nlohmann::ordered_json;

// Instance text:
//   p <prime>
//   point <x> <y>            affine point (x, y, 1)
//   point-h <x> <y> <z>      any projective point
//   line <a> <b> <c>         a x + b y + c = 0
//   line-mc <m> <c>          y = m x + c
// '#' starts a comment. Errors carry `source` and the 1-based line number.
Instance parse_instance(std::istream& in, const std::string& source);
Instance read_instance_file(const std::string& path);
std::string write_instance(const Instance& inst);

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);
std::string read_file(const std::string& path);

json ratio_to_json(const Ratio& r);
// Accepts a JSON number (read back as the decimal it was written as) or a
// string "a/b".
Ratio ratio_from_json(const json& j, const std::string& where);

json config_to_json(const PipelineConfig& cfg);
// Missing fields keep their defaults; unknown fields and ill-typed values
// are ParseErrors naming `source`.
PipelineConfig config_from_json(const json& j, const std::string& source);
PipelineConfig load_config(const std::string& path);

json report_to_json(const WitnessReport& r);
WitnessReport report_from_json(const json& j, const std::string& source);

}  // namespace fpinc
