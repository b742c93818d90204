#include "gcwe/genetic_code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcwe {

char to_char(Base b) {
  switch (b) {
    case Base::C: return 'C';
    case Base::U: return 'U';
    case Base::G: return 'G';
    case Base::A: return 'A';
  }
  return '?';
}

std::optional<Base> base_from_char(char c) {
  switch (c) {
    case 'C': case 'c': return Base::C;
    case 'U': case 'u': case 'T': case 't': return Base::U;
    case 'G': case 'g': return Base::G;
    case 'A': case 'a': return Base::A;
    default: return std::nullopt;
  }
}

HalfInt weight_h(Base b) {
  return HalfInt::from_twice(b == Base::C || b == Base::G ? 1 : -1);
}

HalfInt weight_v(Base b) {
  return HalfInt::from_twice(b == Base::C || b == Base::U ? 1 : -1);
}

bool is_pyrimidine(Base b) { return b == Base::C || b == Base::U; }
bool is_purine(Base b) { return b == Base::G || b == Base::A; }

std::optional<Codon> Codon::parse(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  std::array<Base, 3> bases;
  for (int i = 0; i < 3; ++i) {
    const auto b = base_from_char(text[i]);
    if (!b) return std::nullopt;
    bases[i] = *b;
  }
  return Codon(bases[0], bases[1], bases[2]);
}

Base Codon::at(int position) const {
  if (position < 1 || position > 3) {
    throw std::out_of_range("Codon::at: position must be 1..3");
  }
  return bases_[position - 1];
}

Codon Codon::with_base(int position, Base b) const {
  Codon out = *this;
  out.bases_.at(position - 1) = b;
  return out;
}

std::string Codon::str() const {
  return {to_char(bases_[0]), to_char(bases_[1]), to_char(bases_[2])};
}

std::span<const Codon> all_codons() {
  static const std::vector<Codon> codons = [] {
    std::vector<Codon> out;
    out.reserve(64);
    for (const auto& row : reference_rows()) {
      out.push_back(*Codon::parse(row.codon));
    }
    return out;
  }();
  return codons;
}

CodonPaths codon_paths(const Codon& codon) {
  std::vector<int> h, v;
  for (int pos = 1; pos <= 3; ++pos) {
    h.push_back(weight_h(codon.at(pos)).twice());
    v.push_back(weight_v(codon.at(pos)).twice());
  }
  return CodonPaths{SignPath::spin_half(h), SignPath::spin_half(v)};
}

CodonLabel codon_labels(const Codon& codon) {
  const auto paths = codon_paths(codon);
  auto h = component_of(paths.h);
  auto v = component_of(paths.v);
  return CodonLabel{h.component.J, v.component.J, h.m, v.m,
                    std::move(h.component), std::move(v.component)};
}

std::string_view amino_acid(const Codon& codon, Code code) {
  const auto& table = codon_table();
  const auto idx = &table.row(codon) - table.rows().data();
  const auto& row = reference_rows()[static_cast<std::size_t>(idx)];
  return code == Code::VMC ? row.aa_vmc : row.aa_suc;
}

CodonTable::CodonTable() {
  std::map<Component, int> h_ordinals, v_ordinals;
  std::map<HalfInt, int> h_next, v_next;
  rows_.reserve(64);
  for (const Codon& codon : all_codons()) {
    CodonLabel label = codon_labels(codon);
    auto assign = [](std::map<Component, int>& seen, std::map<HalfInt, int>& next,
                     const Component& c) {
      auto it = seen.find(c);
      if (it != seen.end()) return it->second;
      const int ord = ++next[c.J];
      seen.emplace(c, ord);
      return ord;
    };
    const int ho = assign(h_ordinals, h_next, label.copy_h);
    const int vo = assign(v_ordinals, v_next, label.copy_v);
    index_.emplace(codon, rows_.size());
    rows_.push_back(TableRow{codon, std::move(label), ho, vo});
  }
}

const TableRow& CodonTable::row(const Codon& codon) const {
  return rows_[index_.at(codon)];
}

CodonTable::Diff CodonTable::diff_against_reference() const {
  Diff diff;
  const auto ref = reference_rows();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    const auto& want = ref[i];
    const bool ok = row.label.JH.twice() == want.jh2 && row.label.JV.twice() == want.jv2 &&
                    row.label.mH.twice() == want.mh2 && row.label.mV.twice() == want.mv2;
    if (!ok) {
      diff.label_mismatches.push_back(
          row.codon.str() + ": computed (" + row.label.JH.str() + "," + row.label.JV.str() +
          "," + row.label.mH.str() + "," + row.label.mV.str() + ") expected (" +
          HalfInt::from_twice(want.jh2).str() + "," + HalfInt::from_twice(want.jv2).str() +
          "," + HalfInt::from_twice(want.mh2).str() + "," +
          HalfInt::from_twice(want.mv2).str() + ")");
    }
  }

  std::map<std::pair<Component, Component>, std::set<std::string>> mine;
  std::map<int, std::set<std::string>> reference;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    mine[{rows_[i].label.copy_h, rows_[i].label.copy_v}].insert(rows_[i].codon.str());
    reference[ref[i].irrep_group].insert(ref[i].codon);
  }
  std::set<std::set<std::string>> a, b;
  for (auto& [k, v] : mine) a.insert(v);
  for (auto& [k, v] : reference) b.insert(v);
  diff.partitions_match = (a == b);
  return diff;
}

const CodonTable& codon_table() {
  static const CodonTable table;
  return table;
}

std::vector<std::vector<Codon>> code_classes(Code code) {
  std::map<std::string_view, std::vector<Codon>> classes;
  for (const Codon& codon : all_codons()) {
    classes[amino_acid(codon, code)].push_back(codon);
  }
  std::vector<std::vector<Codon>> out;
  out.reserve(classes.size());
  for (auto& [aa, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gcwe
