#pragma once

#include <string>

#include "gcwe/pipeline.hpp"

namespace gcwe {

/// Parses the flat key-value config format ("key = value", '#' comments).
/// Keys: operator_order, a1, a2, a3, b_list, c_same, c_diff, d1, d2, d3,
/// merge_policy, level2_policy, level4_merges, level5_pairs, level5_distinct,
/// weakness, weakness_min.
/// Throws std::runtime_error with a line-tagged message on malformed input
/// or unknown keys.
PipelineConfig parse_config(const std::string& text);

/// Loads and parses a config file.
PipelineConfig load_config(const std::string& path);

/// The config rendered back in file format (defaults included).
std::string config_to_string(const PipelineConfig& config);

}  // namespace gcwe
