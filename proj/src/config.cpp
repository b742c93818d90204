#include "gcwe/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gcwe {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& v, bool& out) {
  if (v == "on" || v == "true" || v == "1") {
    out = true;
    return true;
  }
  if (v == "off" || v == "false" || v == "0") {
    out = false;
    return true;
  }
  return false;
}

bool parse_int(const std::string& v, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(v, &used);
    return used == v.size();
  } catch (...) {
    return false;
  }
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

PipelineConfig parse_config(const std::string& text) {
  PipelineConfig config;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto fail = [&](const std::string& what) -> std::runtime_error {
      return std::runtime_error("config line " + std::to_string(lineno) + ": " + what);
    };

    if (key == "operator_order") {
      const auto order = couple_order_from(value);
      if (!order) throw fail("operator_order must be state_first or operator_first");
      config.order = *order;
    } else if (key == "a1" || key == "a2" || key == "a3" || key == "c_same" ||
               key == "c_diff" || key == "d1" || key == "d2" || key == "d3" ||
               key == "weakness_min") {
      int n = 0;
      if (!parse_int(value, n) || n < 0) throw fail(key + " must be a non-negative integer");
      if (key == "a1") config.ranks.a1 = n;
      else if (key == "a2") config.ranks.a2 = n;
      else if (key == "a3") config.ranks.a3 = n;
      else if (key == "c_same") config.ranks.c_same = n;
      else if (key == "c_diff") config.ranks.c_diff = n;
      else if (key == "d1") config.ranks.d1 = n;
      else if (key == "d2") config.ranks.d2 = n;
      else if (key == "d3") config.ranks.d3 = n;
      else config.weakness_min = n;
    } else if (key == "b_list") {
      auto list = split_list(value);
      for (const auto& d : list) {
        if (d.size() != 2 || !base_from_char(d[0]) || !base_from_char(d[1])) {
          throw fail("b_list entries must be dinucleotides, got '" + d + "'");
        }
      }
      config.ranks.b2_dinucleotides = std::move(list);
    } else if (key == "merge_policy") {
      if (value == "protect_weakest")
        config.merge_policy = PipelineConfig::MergePolicy::protect_weakest;
      else if (value == "accept_all")
        config.merge_policy = PipelineConfig::MergePolicy::accept_all;
      else
        throw fail("merge_policy must be protect_weakest or accept_all");
    } else if (key == "level2_policy") {
      if (value == "c_codon_both")
        config.level2_policy = PipelineConfig::Level2Policy::c_codon_both;
      else if (value == "any_of")
        config.level2_policy = PipelineConfig::Level2Policy::any_of;
      else if (value == "all_of_three")
        config.level2_policy = PipelineConfig::Level2Policy::all_of_three;
      else
        throw fail("level2_policy must be c_codon_both, any_of or all_of_three");
    } else if (key == "level4_merges") {
      if (!parse_bool(value, config.level4_merges)) throw fail("level4_merges must be on/off");
    } else if (key == "level5_pairs") {
      if (value == "transversions")
        config.level5_pairs = PipelineConfig::Level5Pairs::transversions;
      else if (value == "transitions")
        config.level5_pairs = PipelineConfig::Level5Pairs::transitions;
      else if (value == "same_kind")
        config.level5_pairs = PipelineConfig::Level5Pairs::same_kind;
      else if (value == "all")
        config.level5_pairs = PipelineConfig::Level5Pairs::all;
      else
        throw fail("level5_pairs must be transversions, transitions, same_kind or all");
    } else if (key == "level5_distinct") {
      if (!parse_bool(value, config.level5_distinct_letters))
        throw fail("level5_distinct must be on/off");
    } else if (key == "weakness") {
      if (value == "ca_count")
        config.weakness = PipelineConfig::WeaknessScore::ca_count;
      else if (value == "c_count")
        config.weakness = PipelineConfig::WeaknessScore::c_count;
      else
        throw fail("weakness must be ca_count or c_count");
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  return config;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_string(const PipelineConfig& config) {
  std::ostringstream out;
  out << "operator_order = " << to_string(config.order) << "\n";
  out << "a1 = " << config.ranks.a1 << "\n";
  out << "a2 = " << config.ranks.a2 << "\n";
  out << "a3 = " << config.ranks.a3 << "\n";
  out << "b_list = ";
  for (std::size_t i = 0; i < config.ranks.b2_dinucleotides.size(); ++i) {
    if (i) out << ",";
    out << config.ranks.b2_dinucleotides[i];
  }
  out << "\n";
  out << "c_same = " << config.ranks.c_same << "\n";
  out << "c_diff = " << config.ranks.c_diff << "\n";
  out << "d1 = " << config.ranks.d1 << "\n";
  out << "d2 = " << config.ranks.d2 << "\n";
  out << "d3 = " << config.ranks.d3 << "\n";
  out << "merge_policy = "
      << (config.merge_policy == PipelineConfig::MergePolicy::protect_weakest
              ? "protect_weakest"
              : "accept_all")
      << "\n";
  const char* l2 = "c_codon_both";
  if (config.level2_policy == PipelineConfig::Level2Policy::any_of) l2 = "any_of";
  if (config.level2_policy == PipelineConfig::Level2Policy::all_of_three) l2 = "all_of_three";
  out << "level2_policy = " << l2 << "\n";
  out << "level4_merges = " << (config.level4_merges ? "on" : "off") << "\n";
  const char* l5 = "transversions";
  if (config.level5_pairs == PipelineConfig::Level5Pairs::transitions) l5 = "transitions";
  if (config.level5_pairs == PipelineConfig::Level5Pairs::same_kind) l5 = "same_kind";
  if (config.level5_pairs == PipelineConfig::Level5Pairs::all) l5 = "all";
  out << "level5_pairs = " << l5 << "\n";
  out << "level5_distinct = " << (config.level5_distinct_letters ? "on" : "off") << "\n";
  out << "weakness = "
      << (config.weakness == PipelineConfig::WeaknessScore::ca_count ? "ca_count"
                                                                     : "c_count")
      << "\n";
  out << "weakness_min = " << config.weakness_min << "\n";
  return out.str();
}

}  // namespace gcwe
