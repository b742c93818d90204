#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcwe/genetic_code.hpp"

namespace gcwe {

/// Rank/component pair per factor: tau^jH_(H,mH) (x) tau^jV_(V,mV).
/// Rank 0 forces component 0 (identity factor).
struct CrystalTensorOp {
  HalfInt jH, mH, jV, mV;

  CrystalTensorOp(HalfInt jH_, HalfInt mH_, HalfInt jV_, HalfInt mV_);

  std::string str() const;
  friend constexpr bool operator==(const CrystalTensorOp&, const CrystalTensorOp&) = default;
};

enum class SubstitutionKind {
  transition,        // C->U, G->A
  transversion_cg_ua,  // C->G, U->A (m_H unchanged)
  transversion_ca,   // C->A (m_H decreased)
};

/// One representative substitution at one codon position. Only the five
/// representatives are constructible: C->U, G->A, C->G, U->A, C->A.
/// Transversions that would raise m_H are rejected at construction.
class MisreadSpec {
 public:
  MisreadSpec(int position, Base from, Base to);

  int position() const { return position_; }
  Base from() const { return from_; }
  Base to() const { return to_; }
  SubstitutionKind kind() const { return kind_; }
  bool is_transition() const { return kind_ == SubstitutionKind::transition; }

  std::string str() const;

 private:
  int position_;
  Base from_;
  Base to_;
  SubstitutionKind kind_;
};

/// Rank assignments for the misreading operators. Defaults follow the
/// published choices; every entry is overridable through the config file.
struct RankRules {
  // V-rank of transitions by position (a3 pairs with 3rd-position reads).
  int a1 = 1, a2 = 2, a3 = 0;
  // Dinucleotides with H-rank b = 2 for 3rd-position C->G / U->A / C->A;
  // all others have b = 1.
  std::vector<std::string> b2_dinucleotides{"CA", "GA", "CG", "UG", "UA",
                                            "UU", "AU", "AA", "GG", "AG"};
  // H-rank of C->A at 1st/2nd position, by whether the codon and its
  // transition partner (UXZ resp. XUZ) sit in the same irrep copy.
  int c_same = 1, c_diff = 2;
  // V-rank of transversions by position.
  int d1 = 1, d2 = 2, d3 = 1;

  int a(int position) const;
  int d(int position) const;
  int b(const Codon& codon) const;  // by the codon's dinucleotide
};

struct WEResult {
  HalfInt JH, JV, mH, mV;

  friend constexpr bool operator==(const WEResult&, const WEResult&) = default;
  std::string str() const;
};

/// Per-factor application of couple(J, m, j_op, m_op, order); rank-0 factors
/// leave their side untouched. The surviving reduced matrix element in the
/// crystal limit has unit magnitude, so only labels are tracked.
WEResult we_apply(const CodonLabel& labels, const CrystalTensorOp& op,
                  CoupleOrder order = CoupleOrder::state_first);

/// The operator modelling `spec` on `codon`:
///   transitions            (1,-1)_H (x) (a,0)_V
///   C->G / U->A            (b',0)_H (x) (d,-1)_V   (b' from the dinucleotide
///                          table at 3rd position, explicit 1 resp. 2 at
///                          1st/2nd)
///   C->A                   (c,-1)_H (x) (d,-1)_V   (c from the same-copy rule
///                          at 1st/2nd, from the dinucleotide table at 3rd)
/// Throws std::invalid_argument when `spec` does not apply to `codon`.
CrystalTensorOp operator_for(const MisreadSpec& spec, const Codon& codon,
                             const RankRules& rules = {});

/// The codon with the single position replaced.
Codon substitute(const Codon& codon, const MisreadSpec& spec);

struct AllowedResult {
  bool allowed;         // predicted labels equal the target codon's labels
  WEResult predicted;
  CodonLabel target;
  bool copies_match;    // reported only, never part of `allowed`
  CrystalTensorOp op;
};

/// Misreading predicate: the operator's image of the codon's state carries
/// exactly the labels of the substituted codon.
AllowedResult allowed(const Codon& codon, const MisreadSpec& spec,
                      const RankRules& rules = {},
                      CoupleOrder order = CoupleOrder::state_first);

struct DoubleResult {
  bool allowed;
  WEResult virtual_labels;  // after the first operator
  Codon virtual_codon;
  WEResult predicted;       // after the second operator
  Codon target_codon;
  CodonLabel target;
  CrystalTensorOp op_first, op_second;
};

/// Two-step misreading on the first two positions: the first operator
/// produces a virtual state whose labels feed the second operator; the
/// second operator's ranks are chosen against the virtually substituted
/// codon. Throws std::invalid_argument on overlapping positions.
DoubleResult allowed_double(const Codon& codon, const MisreadSpec& first,
                            const MisreadSpec& second, const RankRules& rules = {},
                            CoupleOrder order = CoupleOrder::state_first);

}  // namespace gcwe
