#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcwe/misread.hpp"

namespace gcwe {

struct Multiplet {
  std::vector<Codon> codons;  // sorted, nonempty
  int formed_at_level = 0;
};

/// Disjoint cover of the 64 codons. Multiplets only ever merge whole;
/// levels must run in order 1..5.
class MultipletPartition {
 public:
  static MultipletPartition initial();

  const Multiplet& multiplet_of(const Codon& codon) const;
  /// Active multiplets, sorted by first codon (reference order is not used;
  /// lexicographic keeps output stable).
  std::vector<Multiplet> multiplets() const;

  bool same_multiplet(const Codon& a, const Codon& b) const;
  void merge(const Codon& a, const Codon& b, int level);

  int levels_run() const { return levels_run_; }
  void mark_level_run(int level);

  std::map<int, int> census() const;

 private:
  std::vector<Multiplet> storage_;
  std::vector<bool> active_;
  std::map<Codon, std::size_t> owner_;
  int levels_run_ = 0;
};

struct MergeEvent {
  int level = 0;
  std::string stage;
  Codon source{Base::C, Base::C, Base::C};
  Codon target{Base::C, Base::C, Base::C};
  std::vector<MisreadSpec> specs;
  std::vector<CrystalTensorOp> ops;
  bool allowed = false;
  bool accepted = false;     // accepted implies allowed
  std::string reason;
};

struct PipelineConfig {
  RankRules ranks;
  CoupleOrder order = CoupleOrder::state_first;

  /// Quartet formation at level 2, from the three transversion events of a
  /// doublet pair ({XZC,XZU} vs {XZG,XZA}).
  enum class Level2Policy {
    c_codon_both,   // the C-codon's two events (C->G and C->A) both allowed
    any_of,         // any of the three
    all_of_three,   // all of the three
  };
  Level2Policy level2_policy = Level2Policy::c_codon_both;

  /// Conflict policy for levels 3..5, where allowance is always partial.
  enum class MergePolicy {
    protect_weakest,  // see docs: sextet-only sizes, weakness gate, per-source winner
    accept_all,       // accept every allowed proposal (diagnostic)
  };
  MergePolicy merge_policy = MergePolicy::protect_weakest;

  bool level4_merges = false;  // 2nd-position standalone merges suppressed

  /// Which substitution pairs compose at level 5 (first then second position).
  enum class Level5Pairs { transversions, transitions, same_kind, all };
  Level5Pairs level5_pairs = Level5Pairs::transversions;
  /// Require the two misread letters to differ.
  bool level5_distinct_letters = true;

  enum class WeaknessScore { ca_count, c_count };
  WeaknessScore weakness = WeaknessScore::ca_count;
  int weakness_min = 2;
};

int weakness_score(const Codon& codon, PipelineConfig::WeaknessScore kind);

struct LevelOutcome {
  MultipletPartition partition;
  std::vector<MergeEvent> events;
};

/// Runs one hierarchy level:
///   1  3rd-position transitions          (doublet formation)
///   2  3rd-position transversions        (quartet formation)
///   3  1st-position transitions, then transversions
///   4  2nd-position transitions, then transversions (suppressed by default)
///   5  two-position compositions (first then second)
/// Throws std::logic_error when levels are invoked out of order.
LevelOutcome run_level(MultipletPartition partition, int level,
                       const PipelineConfig& config = {});

struct PipelineResult {
  MultipletPartition partition;
  std::vector<MergeEvent> events;
  std::map<int, int> census;
};

PipelineResult run_pipeline(const PipelineConfig& config = {});

std::map<int, int> census(const MultipletPartition& partition);

/// How one model multiplet sits against a code's synonymous classes.
struct MultipletVsCode {
  std::vector<Codon> multiplet;
  enum class Status {
    exact,             // equals one class
    refinement,        // proper subset of one class
    union_of_classes,  // union of two or more whole classes
    crosses,           // overlaps a class it neither contains nor fills
  } status;
  std::vector<std::string> classes_touched;  // amino-acid names
};

struct CodeComparison {
  Code code;
  std::vector<MultipletVsCode> rows;
  /// Multiplets the code splits (status == crosses); for the standard code
  /// these are the two doublets broken into singlets.
  std::vector<std::vector<Codon>> split_by_code;
  std::map<int, int> code_census_with_ter;    // Ter counted as a class
  std::map<int, int> code_census_sense_only;  // Ter ignored
  bool identical = false;
};

CodeComparison compare_to_code(const MultipletPartition& partition, Code code);

}  // namespace gcwe
