// gcwe: crystal-basis genetic code toolkit.
//
// Subcommands: table, pipeline, check, couple, qcheck, freq, sensitivity.
// Exit codes: 0 success/match, 1 semantic mismatch, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcwe/config.hpp"
#include "gcwe/genetic_code.hpp"
#include "gcwe/misread.hpp"
#include "gcwe/pipeline.hpp"
#include "gcwe/qlimit.hpp"

namespace {

using json = nlohmann::json;
using namespace gcwe;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

const std::map<int, int> kReferenceCensus{{6, 3}, {4, 5}, {2, 13}};

std::string census_line(const std::map<int, int>& counts) {
  static const std::map<int, std::string> names{
      {6, "sextets"}, {4, "quartets"}, {3, "triplets"}, {2, "doublets"}, {1, "singlets"}};
  std::ostringstream out;
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (!first) out << " ";
    first = false;
    const auto name = names.find(it->first);
    if (name != names.end()) {
      out << name->second << "=" << it->second;
    } else {
      out << "size" << it->first << "=" << it->second;
    }
  }
  return out.str();
}

json census_json(const std::map<int, int>& counts) {
  json out = json::object();
  for (const auto& [size, n] : counts) out[std::to_string(size)] = n;
  return out;
}

std::string multiplet_str(const std::vector<Codon>& codons) {
  std::string out = "{";
  for (std::size_t i = 0; i < codons.size(); ++i) {
    if (i) out += ",";
    out += codons[i].str();
  }
  return out + "}";
}

PipelineConfig config_from_options(const std::string& config_path) {
  if (!config_path.empty()) return load_config(config_path);
  if (const char* env = std::getenv("GCWE_CONFIG"); env && *env) {
    return load_config(env);
  }
  return PipelineConfig{};
}

// ---------------------------------------------------------------- table ---

int cmd_table(const std::string& format, bool check) {
  const auto& table = codon_table();

  if (check) {
    const auto diff = table.diff_against_reference();
    for (const auto& line : diff.label_mismatches) {
      std::cout << "MISMATCH " << line << "\n";
    }
    if (!diff.partitions_match) {
      std::cout << "MISMATCH irrep-copy partition differs from reference\n";
    }
    if (diff.clean()) {
      std::cout << "table check: OK (64 rows, labels and copy partition match)\n";
      return kExitOk;
    }
    return kExitMismatch;
  }

  if (format == "csv") {
    std::cout << "codon,aa_vmc,aa_suc,JH,JV,mH,mV,copyH,copyV\n";
    for (const auto& row : table.rows()) {
      std::cout << row.codon.str() << "," << amino_acid(row.codon, Code::VMC) << ","
                << amino_acid(row.codon, Code::SUC) << "," << row.label.JH.str() << ","
                << row.label.JV.str() << "," << row.label.mH.str() << ","
                << row.label.mV.str() << "," << row.copy_h_ordinal << ","
                << row.copy_v_ordinal << "\n";
    }
  } else if (format == "json") {
    json rows = json::array();
    for (const auto& row : table.rows()) {
      rows.push_back({{"codon", row.codon.str()},
                      {"aa_vmc", std::string(amino_acid(row.codon, Code::VMC))},
                      {"aa_suc", std::string(amino_acid(row.codon, Code::SUC))},
                      {"JH", row.label.JH.str()},
                      {"JV", row.label.JV.str()},
                      {"mH", row.label.mH.str()},
                      {"mV", row.label.mV.str()},
                      {"copyH", row.copy_h_ordinal},
                      {"copyV", row.copy_v_ordinal}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "codon  aa(mit) aa(std)  JH    JV    mH    mV    copy\n";
    for (const auto& row : table.rows()) {
      std::ostringstream copy;
      copy << "(" << row.label.JH.str() << "," << row.label.JV.str() << ")#"
           << row.copy_h_ordinal << "." << row.copy_v_ordinal;
      std::printf("%-6s %-7s %-7s %-5s %-5s %-5s %-5s %s\n", row.codon.str().c_str(),
                  std::string(amino_acid(row.codon, Code::VMC)).c_str(),
                  std::string(amino_acid(row.codon, Code::SUC)).c_str(),
                  row.label.JH.str().c_str(), row.label.JV.str().c_str(),
                  row.label.mH.str().c_str(), row.label.mV.str().c_str(),
                  copy.str().c_str());
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------- pipeline ---

json event_json(const MergeEvent& ev) {
  json specs = json::array();
  for (const auto& s : ev.specs) {
    specs.push_back({{"position", s.position()},
                     {"from", std::string(1, to_char(s.from()))},
                     {"to", std::string(1, to_char(s.to()))}});
  }
  json ops = json::array();
  for (const auto& op : ev.ops) ops.push_back(op.str());
  return {{"level", ev.level},     {"stage", ev.stage},
          {"source", ev.source.str()}, {"target", ev.target.str()},
          {"specs", specs},        {"operators", ops},
          {"allowed", ev.allowed}, {"accepted", ev.accepted},
          {"reason", ev.reason}};
}

const char* status_name(MultipletVsCode::Status s) {
  switch (s) {
    case MultipletVsCode::Status::exact: return "exact";
    case MultipletVsCode::Status::refinement: return "refinement";
    case MultipletVsCode::Status::union_of_classes: return "union";
    case MultipletVsCode::Status::crosses: return "crosses";
  }
  return "?";
}

void print_comparison_text(const CodeComparison& cmp) {
  const char* code_name = cmp.code == Code::VMC ? "mitochondrial" : "standard";
  std::cout << "vs " << code_name << " code:\n";
  std::cout << "  code census (Ter as a class): " << census_line(cmp.code_census_with_ter)
            << "\n";
  std::cout << "  code census (sense codons):   " << census_line(cmp.code_census_sense_only)
            << "\n";
  for (const auto& row : cmp.rows) {
    if (row.status == MultipletVsCode::Status::exact) continue;
    std::cout << "  " << multiplet_str(row.multiplet) << " " << status_name(row.status)
              << " [";
    for (std::size_t i = 0; i < row.classes_touched.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << row.classes_touched[i];
    }
    std::cout << "]\n";
  }
  if (!cmp.split_by_code.empty()) {
    std::cout << "  multiplets this code splits:";
    for (const auto& m : cmp.split_by_code) std::cout << " " << multiplet_str(m);
    std::cout << "\n";
  }
}

json comparison_json(const CodeComparison& cmp) {
  json rows = json::array();
  for (const auto& row : cmp.rows) {
    json m = json::array();
    for (const auto& c : row.multiplet) m.push_back(c.str());
    rows.push_back({{"multiplet", m},
                    {"status", status_name(row.status)},
                    {"classes", row.classes_touched}});
  }
  json split = json::array();
  for (const auto& m : cmp.split_by_code) {
    json codons = json::array();
    for (const auto& c : m) codons.push_back(c.str());
    split.push_back(codons);
  }
  return {{"code", cmp.code == Code::VMC ? "VMC" : "SUC"},
          {"rows", rows},
          {"split_by_code", split},
          {"code_census_with_ter", census_json(cmp.code_census_with_ter)},
          {"code_census_sense_only", census_json(cmp.code_census_sense_only)},
          {"identical", cmp.identical}};
}

int cmd_pipeline(const std::string& config_path, bool trace, const std::string& format) {
  const PipelineConfig config = config_from_options(config_path);
  const PipelineResult result = run_pipeline(config);
  const bool matches = result.census == kReferenceCensus;

  if (format == "json") {
    json events = json::array();
    for (const auto& ev : result.events) {
      if (trace || ev.accepted) events.push_back(event_json(ev));
    }
    json multiplets = json::array();
    for (const auto& m : result.partition.multiplets()) {
      json codons = json::array();
      for (const auto& c : m.codons) codons.push_back(c.str());
      multiplets.push_back({{"codons", codons}, {"formed_at_level", m.formed_at_level}});
    }
    json out = {{"census", census_json(result.census)},
                {"census_matches_reference", matches},
                {"multiplets", multiplets},
                {"events", events},
                {"comparisons",
                 {comparison_json(compare_to_code(result.partition, Code::VMC)),
                  comparison_json(compare_to_code(result.partition, Code::SUC))}}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& ev : result.events) {
      if (!trace && !ev.accepted) continue;
      std::cout << "L" << ev.level << " " << (ev.accepted ? "ACCEPT" : "reject") << " "
                << ev.stage << " " << ev.source.str() << "->" << ev.target.str();
      for (const auto& op : ev.ops) std::cout << "  " << op.str();
      if (!ev.reason.empty()) std::cout << "  (" << ev.reason << ")";
      std::cout << "\n";
    }
    std::cout << "final multiplets:\n";
    for (const auto& m : result.partition.multiplets()) {
      std::cout << "  L" << m.formed_at_level << " " << multiplet_str(m.codons) << "\n";
    }
    std::cout << "census: " << census_line(result.census) << "\n";
    print_comparison_text(compare_to_code(result.partition, Code::VMC));
    print_comparison_text(compare_to_code(result.partition, Code::SUC));
  }
  return matches ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- check ---

int cmd_check(const std::string& codon_text, int pos, const std::string& to,
              int second_pos, const std::string& second_to,
              const std::string& config_path) {
  const auto codon = Codon::parse(codon_text);
  if (!codon) {
    std::cerr << "check: bad codon '" << codon_text << "'\n";
    return kExitUsage;
  }
  const PipelineConfig config = config_from_options(config_path);

  auto parse_sub = [&](int p, const std::string& t) -> std::optional<MisreadSpec> {
    const auto base = t.size() == 1 ? base_from_char(t[0]) : std::nullopt;
    if (!base || p < 1 || p > 3) return std::nullopt;
    try {
      return MisreadSpec(p, codon->at(p), *base);
    } catch (const std::exception& e) {
      std::cerr << "check: " << e.what() << "\n";
      return std::nullopt;
    }
  };

  const auto first = parse_sub(pos, to);
  if (!first) return kExitUsage;

  if (second_pos == 0) {
    const AllowedResult res = allowed(*codon, *first, config.ranks, config.order);
    std::cout << "operator: " << res.op.str() << "\n";
    std::cout << "predicted: " << res.predicted.str() << "\n";
    std::cout << "target " << substitute(*codon, *first).str() << ": "
              << WEResult{res.target.JH, res.target.JV, res.target.mH, res.target.mV}.str()
              << "\n";
    std::cout << "copies match: " << (res.copies_match ? "yes" : "no") << "\n";
    std::cout << (res.allowed ? "allowed" : "not allowed") << "\n";
    return kExitOk;
  }

  const auto second = parse_sub(second_pos, second_to);
  if (!second) return kExitUsage;
  try {
    const DoubleResult res =
        allowed_double(*codon, *first, *second, config.ranks, config.order);
    std::cout << "operator I:  " << res.op_first.str() << "\n";
    std::cout << "virtual " << res.virtual_codon.str() << ": " << res.virtual_labels.str()
              << "\n";
    std::cout << "operator II: " << res.op_second.str() << "\n";
    std::cout << "predicted: " << res.predicted.str() << "\n";
    std::cout << "target " << res.target_codon.str() << ": "
              << WEResult{res.target.JH, res.target.JV, res.target.mH, res.target.mV}.str()
              << "\n";
    std::cout << (res.allowed ? "allowed" : "not allowed") << "\n";
  } catch (const std::exception& e) {
    std::cerr << "check: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// --------------------------------------------------------------- couple ---

int cmd_couple(const std::vector<std::string>& labels, const std::string& order_name) {
  const auto order = couple_order_from(order_name);
  if (!order) {
    std::cerr << "couple: bad --order '" << order_name << "'\n";
    return kExitUsage;
  }
  std::vector<HalfInt> values;
  for (const auto& text : labels) {
    const auto h = HalfInt::parse(text);
    if (!h) {
      std::cerr << "couple: bad half-integer '" << text << "'\n";
      return kExitUsage;
    }
    values.push_back(*h);
  }
  try {
    const Coupled c = couple(values[0], values[1], values[2], values[3], *order);
    std::cout << "J=" << c.J.str() << " m=" << c.m.str() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "couple: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// --------------------------------------------------------------- qcheck ---

int cmd_qcheck(double q, int max_x, const std::string& max_j_text,
               const std::string& format) {
  const auto max_j = HalfInt::parse(max_j_text);
  if (!max_j) {
    std::cerr << "qcheck: bad --max-j '" << max_j_text << "'\n";
    return kExitUsage;
  }
  try {
    const auto report = qlimit::limit_checks(qlimit::QValue(q), max_x, *max_j);
    if (format == "json") {
      json entries = json::array();
      for (const auto& e : report.entries) {
        entries.push_back(
            {{"quantity", e.quantity}, {"ratio", e.ratio}, {"deviation", e.deviation}});
      }
      std::cout << json{{"q", report.q},
                        {"entries", entries},
                        {"max_deviation", report.max_deviation()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "q = " << report.q << "\n";
      for (const auto& e : report.entries) {
        std::printf("  %-28s ratio %.12f  deviation %.3e\n", e.quantity.c_str(), e.ratio,
                    e.deviation);
      }
      std::printf("max deviation: %.3e\n", report.max_deviation());
    }
  } catch (const std::exception& e) {
    std::cerr << "qcheck: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- freq ---

int cmd_freq(const std::string& format, const std::string& config_path) {
  const PipelineConfig config = config_from_options(config_path);
  const PipelineResult result = run_pipeline(config);

  // Sizes of the model multiplets containing each amino acid's codons
  // (under the mitochondrial assignment).
  std::map<std::string, std::set<std::size_t>> model_sizes;
  for (const auto& m : result.partition.multiplets()) {
    for (const auto& c : m.codons) {
      model_sizes[std::string(amino_acid(c, Code::VMC))].insert(m.codons.size());
    }
  }
  auto sizes_str = [&](const std::string& aa) {
    std::string out;
    const auto it = model_sizes.find(aa);
    if (it == model_sizes.end()) return std::string("-");
    for (auto s : it->second) {
      if (!out.empty()) out += ",";
      out += std::to_string(s);
    }
    return out;
  };

  if (format == "json") {
    json rows = json::array();
    for (const auto& e : frequency_table()) {
      json sizes = json::array();
      for (auto s : model_sizes[e.amino_acid]) sizes.push_back(s);
      rows.push_back({{"aa", e.amino_acid},
                      {"rel_freq", e.rel_freq},
                      {"codons", e.codon_count},
                      {"model_multiplet_sizes", sizes}});
    }
    std::cout << rows.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "aa,rel_freq,codons,model_multiplet_sizes\n";
    for (const auto& e : frequency_table()) {
      std::cout << e.amino_acid << "," << e.rel_freq << "," << e.codon_count << ","
                << sizes_str(e.amino_acid) << "\n";
    }
  } else {
    std::cout << "aa    R.f.  N  model\n";
    for (const auto& e : frequency_table()) {
      std::printf("%-5s %3d %3d  %s\n", e.amino_acid, e.rel_freq, e.codon_count,
                  sizes_str(e.amino_acid).c_str());
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------- sensitivity ---

struct Sweep {
  std::string name;
  std::vector<int> values;
};

std::optional<Sweep> parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) return std::nullopt;
  Sweep sweep;
  sweep.name = text.substr(0, eq);
  const std::string range = text.substr(eq + 1);
  const auto dots = range.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(range.substr(0, dots));
      const int hi = std::stoi(range.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) sweep.values.push_back(v);
    } else {
      std::stringstream ss(range);
      std::string item;
      while (std::getline(ss, item, ',')) sweep.values.push_back(std::stoi(item));
    }
  } catch (...) {
    return std::nullopt;
  }
  if (sweep.values.empty()) return std::nullopt;
  return sweep;
}

bool apply_rank(PipelineConfig& config, const std::string& name, int value) {
  if (name == "a1") config.ranks.a1 = value;
  else if (name == "a2") config.ranks.a2 = value;
  else if (name == "a3") config.ranks.a3 = value;
  else if (name == "c_same") config.ranks.c_same = value;
  else if (name == "c_diff") config.ranks.c_diff = value;
  else if (name == "d1") config.ranks.d1 = value;
  else if (name == "d2") config.ranks.d2 = value;
  else if (name == "d3") config.ranks.d3 = value;
  else if (name == "weakness_min") config.weakness_min = value;
  else return false;
  return value >= 0;
}

int cmd_sensitivity(const std::vector<std::string>& vary, const std::string& format,
                    const std::string& config_path) {
  std::vector<Sweep> sweeps;
  for (const auto& text : vary) {
    auto sweep = parse_sweep(text);
    if (!sweep) {
      std::cerr << "sensitivity: bad --vary '" << text << "' (expected name=lo..hi or name=v1,v2)\n";
      return kExitUsage;
    }
    sweeps.push_back(std::move(*sweep));
  }
  const PipelineConfig base = config_from_options(config_path);

  std::vector<std::size_t> idx(sweeps.size(), 0);
  json rows = json::array();
  int matching = 0, total = 0;
  bool more = true;
  while (more) {
    PipelineConfig config = base;
    std::string assignment;
    bool valid = true;
    for (std::size_t i = 0; i < sweeps.size(); ++i) {
      if (!assignment.empty()) assignment += " ";
      assignment += sweeps[i].name + "=" + std::to_string(sweeps[i].values[idx[i]]);
      valid = valid && apply_rank(config, sweeps[i].name, sweeps[i].values[idx[i]]);
    }
    if (!valid) {
      std::cerr << "sensitivity: unknown or negative rank in '" << assignment << "'\n";
      return kExitUsage;
    }
    const PipelineResult result = run_pipeline(config);
    const bool match = result.census == kReferenceCensus;
    ++total;
    matching += match;
    if (format == "json") {
      rows.push_back({{"assignment", assignment},
                      {"census", census_json(result.census)},
                      {"matches_reference", match}});
    } else {
      std::cout << (assignment.empty() ? "(defaults)" : assignment) << "  ->  "
                << census_line(result.census) << (match ? "  [reference]" : "") << "\n";
    }
    // next assignment
    more = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] < sweeps[i].values.size()) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
    if (sweeps.empty()) break;
  }
  if (format == "json") {
    std::cout << json{{"runs", rows}, {"matching", matching}, {"total", total}}.dump(2)
              << "\n";
  } else {
    std::cout << matching << "/" << total << " assignments reproduce the reference census\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crystal-basis genetic code toolkit"};
  app.require_subcommand(1);

  // table
  std::string table_format = "text";
  bool table_check = false;
  auto* table = app.add_subcommand("table", "print the 64-codon label table");
  table->add_option("--format", table_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_flag("--check", table_check, "verify against the embedded reference");

  // pipeline
  std::string pipe_config, pipe_format = "text";
  bool pipe_trace = false;
  auto* pipeline = app.add_subcommand("pipeline", "run the five-level merging pipeline");
  pipeline->add_option("--config", pipe_config, "config file path");
  pipeline->add_flag("--trace", pipe_trace, "log rejected proposals too");
  pipeline->add_option("--format", pipe_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // check
  std::string check_codon, check_to, check_second_to, check_config;
  int check_pos = 0, check_second_pos = 0;
  auto* check = app.add_subcommand("check", "evaluate one misreading");
  check->add_option("codon", check_codon, "source codon")->required();
  check->add_option("--pos", check_pos, "misread position 1..3")->required();
  check->add_option("--to", check_to, "replacement nucleotide")->required();
  check->add_option("--second-pos", check_second_pos, "second misread position");
  check->add_option("--second-to", check_second_to, "second replacement");
  check->add_option("--config", check_config, "config file path");

  // couple
  std::vector<std::string> couple_labels;
  std::string couple_order = "state_first";
  auto* couple_cmd = app.add_subcommand("couple", "two-factor crystal coupling");
  couple_cmd->add_option("labels", couple_labels, "j1 m1 j2 m2 (fractions)")
      ->expected(4)
      ->required();
  couple_cmd->add_option("--order", couple_order, "state-first|operator-first");

  // qcheck
  double qcheck_q = 1e-4;
  int qcheck_max_x = 4;
  std::string qcheck_max_j = "2", qcheck_format = "text";
  auto* qcheck = app.add_subcommand("qcheck", "small-q asymptotics report");
  qcheck->add_option("--q", qcheck_q, "deformation parameter in (0,1)")->required();
  qcheck->add_option("--max-x", qcheck_max_x, "largest integer bracket argument");
  qcheck->add_option("--max-j", qcheck_max_j, "largest spin (fraction)");
  qcheck->add_option("--format", qcheck_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // freq
  std::string freq_format = "text", freq_config;
  auto* freq = app.add_subcommand("freq", "amino-acid frequencies vs model multiplets");
  freq->add_option("--format", freq_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  freq->add_option("--config", freq_config, "config file path");

  // sensitivity
  std::vector<std::string> sens_vary;
  std::string sens_format = "text", sens_config;
  auto* sens = app.add_subcommand("sensitivity", "census across rank assignments");
  sens->add_option("--vary", sens_vary, "rank sweep, e.g. a1=0..2 or d2=1,2")
      ->required();
  sens->add_option("--format", sens_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  sens->add_option("--config", sens_config, "config file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(table_format, table_check);
    if (pipeline->parsed()) return cmd_pipeline(pipe_config, pipe_trace, pipe_format);
    if (check->parsed()) {
      return cmd_check(check_codon, check_pos, check_to, check_second_pos,
                       check_second_to, check_config);
    }
    if (couple_cmd->parsed()) return cmd_couple(couple_labels, couple_order);
    if (qcheck->parsed()) {
      return cmd_qcheck(qcheck_q, qcheck_max_x, qcheck_max_j, qcheck_format);
    }
    if (freq->parsed()) return cmd_freq(freq_format, freq_config);
    if (sens->parsed()) return cmd_sensitivity(sens_vary, sens_format, sens_config);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
