#include "gcwe/misread.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcwe {

CrystalTensorOp::CrystalTensorOp(HalfInt jH_, HalfInt mH_, HalfInt jV_, HalfInt mV_)
    : jH(jH_), mH(mH_), jV(jV_), mV(mV_) {
  if (jH < HalfInt(0) || jV < HalfInt(0)) {
    throw std::invalid_argument("CrystalTensorOp: negative rank");
  }
  if (mH.abs() > jH || mV.abs() > jV) {
    throw std::invalid_argument("CrystalTensorOp: component exceeds rank");
  }
  if (!jH.same_parity(mH) || !jV.same_parity(mV)) {
    throw std::invalid_argument("CrystalTensorOp: component/rank parity mismatch");
  }
}

std::string CrystalTensorOp::str() const {
  return "tau^" + jH.str() + "_(H," + mH.str() + ") x tau^" + jV.str() + "_(V," +
         mV.str() + ")";
}

namespace {

SubstitutionKind classify(Base from, Base to) {
  if ((from == Base::C && to == Base::U) || (from == Base::G && to == Base::A)) {
    return SubstitutionKind::transition;
  }
  if ((from == Base::C && to == Base::G) || (from == Base::U && to == Base::A)) {
    return SubstitutionKind::transversion_cg_ua;
  }
  if (from == Base::C && to == Base::A) {
    return SubstitutionKind::transversion_ca;
  }
  throw std::invalid_argument(std::string("MisreadSpec: unsupported substitution ") +
                              to_char(from) + "->" + to_char(to));
}

}  // namespace

MisreadSpec::MisreadSpec(int position, Base from, Base to)
    : position_(position), from_(from), to_(to), kind_(classify(from, to)) {
  if (position < 1 || position > 3) {
    throw std::invalid_argument("MisreadSpec: position must be 1..3");
  }
}

std::string MisreadSpec::str() const {
  return std::string("pos") + std::to_string(position_) + " " + to_char(from_) + "->" +
         to_char(to_);
}

int RankRules::a(int position) const {
  switch (position) {
    case 1: return a1;
    case 2: return a2;
    case 3: return a3;
  }
  throw std::invalid_argument("RankRules::a: bad position");
}

int RankRules::d(int position) const {
  switch (position) {
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
  }
  throw std::invalid_argument("RankRules::d: bad position");
}

int RankRules::b(const Codon& codon) const {
  const std::string dinuc{to_char(codon.at(1)), to_char(codon.at(2))};
  const bool two = std::find(b2_dinucleotides.begin(), b2_dinucleotides.end(), dinuc) !=
                   b2_dinucleotides.end();
  return two ? 2 : 1;
}

std::string WEResult::str() const {
  return "(" + JH.str() + "," + JV.str() + "," + mH.str() + "," + mV.str() + ")";
}

WEResult we_apply(const CodonLabel& labels, const CrystalTensorOp& op, CoupleOrder order) {
  WEResult out{labels.JH, labels.JV, labels.mH, labels.mV};
  if (op.jH != HalfInt(0)) {
    const auto c = couple(labels.JH, labels.mH, op.jH, op.mH, order);
    out.JH = c.J;
    out.mH = c.m;
  }
  if (op.jV != HalfInt(0)) {
    const auto c = couple(labels.JV, labels.mV, op.jV, op.mV, order);
    out.JV = c.J;
    out.mV = c.m;
  }
  return out;
}

namespace {

bool same_copy(const CodonLabel& a, const CodonLabel& b) {
  return a.copy_h == b.copy_h && a.copy_v == b.copy_v;
}

// The same-copy comparison pair of the c-rule: the codon with its misread
// position replaced by U (the transition partner on that position).
int c_rank(const MisreadSpec& spec, const Codon& codon, const RankRules& rules) {
  const Codon partner = codon.with_base(spec.position(), Base::U);
  return same_copy(codon_labels(codon), codon_labels(partner)) ? rules.c_same
                                                               : rules.c_diff;
}

}  // namespace

CrystalTensorOp operator_for(const MisreadSpec& spec, const Codon& codon,
                             const RankRules& rules) {
  if (codon.at(spec.position()) != spec.from()) {
    throw std::invalid_argument("operator_for: codon " + codon.str() + " has no " +
                                std::string(1, to_char(spec.from())) + " at position " +
                                std::to_string(spec.position()));
  }
  const int pos = spec.position();
  switch (spec.kind()) {
    case SubstitutionKind::transition:
      return CrystalTensorOp(HalfInt(1), HalfInt(-1), HalfInt(rules.a(pos)), HalfInt(0));
    case SubstitutionKind::transversion_cg_ua: {
      int h_rank;
      if (pos == 3) {
        h_rank = spec.from() == Base::C ? rules.b(codon) : rules.b(codon) - 1;
      } else {
        h_rank = spec.from() == Base::C ? 1 : 2;
      }
      return CrystalTensorOp(HalfInt(h_rank), HalfInt(0), HalfInt(rules.d(pos)),
                             HalfInt(-1));
    }
    case SubstitutionKind::transversion_ca: {
      const int h_rank = pos == 3 ? rules.b(codon) : c_rank(spec, codon, rules);
      return CrystalTensorOp(HalfInt(h_rank), HalfInt(-1), HalfInt(rules.d(pos)),
                             HalfInt(-1));
    }
  }
  throw std::logic_error("operator_for: unreachable");
}

Codon substitute(const Codon& codon, const MisreadSpec& spec) {
  if (codon.at(spec.position()) != spec.from()) {
    throw std::invalid_argument("substitute: spec " + spec.str() +
                                " does not apply to " + codon.str());
  }
  return codon.with_base(spec.position(), spec.to());
}

AllowedResult allowed(const Codon& codon, const MisreadSpec& spec,
                      const RankRules& rules, CoupleOrder order) {
  const CrystalTensorOp op = operator_for(spec, codon, rules);
  const CodonLabel source = codon_labels(codon);
  const WEResult predicted = we_apply(source, op, order);
  CodonLabel target = codon_labels(substitute(codon, spec));
  const bool ok = predicted == WEResult{target.JH, target.JV, target.mH, target.mV};
  const bool copies = same_copy(source, target);
  return AllowedResult{ok, predicted, std::move(target), copies, op};
}

DoubleResult allowed_double(const Codon& codon, const MisreadSpec& first,
                            const MisreadSpec& second, const RankRules& rules,
                            CoupleOrder order) {
  if (first.position() == second.position()) {
    throw std::invalid_argument("allowed_double: overlapping positions");
  }
  if (first.position() > 2 || second.position() > 2) {
    throw std::invalid_argument("allowed_double: only the first two positions compose");
  }
  const CrystalTensorOp op1 = operator_for(first, codon, rules);
  const WEResult vir = we_apply(codon_labels(codon), op1, order);
  const Codon vcodon = substitute(codon, first);

  const CrystalTensorOp op2 = operator_for(second, vcodon, rules);
  const CodonLabel virtual_as_label{vir.JH, vir.JV, vir.mH, vir.mV,
                                    codon_labels(vcodon).copy_h,
                                    codon_labels(vcodon).copy_v};
  const WEResult predicted = we_apply(virtual_as_label, op2, order);

  const Codon target_codon = substitute(vcodon, second);
  CodonLabel target = codon_labels(target_codon);
  const bool ok = predicted == WEResult{target.JH, target.JV, target.mH, target.mV};
  return DoubleResult{ok,     vir,          vcodon, predicted, target_codon,
                      std::move(target), op1, op2};
}

}  // namespace gcwe
