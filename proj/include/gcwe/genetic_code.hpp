#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcwe/tensor.hpp"

namespace gcwe {

enum class Base : std::uint8_t { C, U, G, A };

inline constexpr std::array<Base, 4> kBases{Base::C, Base::U, Base::G, Base::A};

char to_char(Base b);
std::optional<Base> base_from_char(char c);

/// Weight pair of the 4-dim fundamental: C=(+1/2,+1/2), U=(-1/2,+1/2),
/// G=(+1/2,-1/2), A=(-1/2,-1/2).
HalfInt weight_h(Base b);
HalfInt weight_v(Base b);

bool is_pyrimidine(Base b);  // C or U
bool is_purine(Base b);      // G or A

class Codon {
 public:
  Codon(Base first, Base second, Base third) : bases_{first, second, third} {}

  static std::optional<Codon> parse(std::string_view text);

  /// 1-based position access, matching the reading-frame convention.
  Base at(int position) const;
  Codon with_base(int position, Base b) const;

  std::string str() const;

  friend constexpr auto operator<=>(const Codon&, const Codon&) = default;

 private:
  std::array<Base, 3> bases_;
};

/// All 64 codons in reference-table order (the order labels are printed in).
std::span<const Codon> all_codons();

struct CodonPaths {
  SignPath h;
  SignPath v;
};

/// Per-position H/V weights in reading order.
CodonPaths codon_paths(const Codon& codon);

struct CodonLabel {
  HalfInt JH, JV, mH, mV;
  Component copy_h;
  Component copy_v;
};

/// Labels via component_of on each factor path.
CodonLabel codon_labels(const Codon& codon);

enum class Code { VMC, SUC };

/// Amino acid (or "Ter") assigned to `codon` under the chosen code.
std::string_view amino_acid(const Codon& codon, Code code);

/// Fixed reference labels: one row per codon as published, with the
/// irrep-copy grouping the superscripts induce (group is an opaque id;
/// only the partition it generates is meaningful).
struct ReferenceRow {
  const char* codon;
  const char* aa_vmc;
  const char* aa_suc;
  std::int8_t jh2, jv2, mh2, mv2;  // twice-values
  std::int8_t irrep_group;         // 0..8
};

std::span<const ReferenceRow> reference_rows();

/// Relative frequency of amino-acid usage (units of 1e-3) and the codon
/// count reported alongside it.
struct FrequencyEntry {
  const char* amino_acid;
  int rel_freq;
  int codon_count;
};

std::span<const FrequencyEntry> frequency_table();

/// Computed table over all 64 codons, with display ordinals for the irrep
/// copies (numbered by first appearance in reference order, per factor).
struct TableRow {
  Codon codon;
  CodonLabel label;
  int copy_h_ordinal;
  int copy_v_ordinal;
};

class CodonTable {
 public:
  CodonTable();

  const std::vector<TableRow>& rows() const { return rows_; }
  const TableRow& row(const Codon& codon) const;

  struct Diff {
    std::vector<std::string> label_mismatches;  // one line per bad row
    bool partitions_match = false;

    bool clean() const { return label_mismatches.empty() && partitions_match; }
  };

  /// Compares computed labels against reference_rows(): (J_H,J_V,m_H,m_V)
  /// row by row, and the irrep-copy grouping as a set partition.
  Diff diff_against_reference() const;

 private:
  std::vector<TableRow> rows_;
  std::map<Codon, std::size_t> index_;
};

const CodonTable& codon_table();

/// Synonymous-codon classes of a code (amino acids plus the Ter class),
/// each class sorted, classes sorted by first codon.
std::vector<std::vector<Codon>> code_classes(Code code);

}  // namespace gcwe
