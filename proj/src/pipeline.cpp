#include "gcwe/pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcwe {

MultipletPartition MultipletPartition::initial() {
  MultipletPartition p;
  for (const Codon& c : all_codons()) {
    p.owner_[c] = p.storage_.size();
    p.storage_.push_back(Multiplet{{c}, 0});
    p.active_.push_back(true);
  }
  return p;
}

const Multiplet& MultipletPartition::multiplet_of(const Codon& codon) const {
  return storage_[owner_.at(codon)];
}

std::vector<Multiplet> MultipletPartition::multiplets() const {
  std::vector<Multiplet> out;
  for (std::size_t i = 0; i < storage_.size(); ++i) {
    if (active_[i]) out.push_back(storage_[i]);
  }
  std::sort(out.begin(), out.end(), [](const Multiplet& a, const Multiplet& b) {
    return a.codons.front() < b.codons.front();
  });
  return out;
}

bool MultipletPartition::same_multiplet(const Codon& a, const Codon& b) const {
  return owner_.at(a) == owner_.at(b);
}

void MultipletPartition::merge(const Codon& a, const Codon& b, int level) {
  const std::size_t ia = owner_.at(a);
  const std::size_t ib = owner_.at(b);
  if (ia == ib) throw std::logic_error("MultipletPartition::merge: same multiplet");
  Multiplet merged;
  merged.codons = storage_[ia].codons;
  merged.codons.insert(merged.codons.end(), storage_[ib].codons.begin(),
                       storage_[ib].codons.end());
  std::sort(merged.codons.begin(), merged.codons.end());
  merged.formed_at_level = level;
  active_[ia] = false;
  active_[ib] = false;
  const std::size_t idx = storage_.size();
  for (const Codon& c : merged.codons) owner_[c] = idx;
  storage_.push_back(std::move(merged));
  active_.push_back(true);
}

void MultipletPartition::mark_level_run(int level) {
  if (level != levels_run_ + 1) {
    throw std::logic_error("run_level: level " + std::to_string(level) +
                           " invoked after level " + std::to_string(levels_run_));
  }
  levels_run_ = level;
}

std::map<int, int> MultipletPartition::census() const {
  std::map<int, int> out;
  for (const auto& m : multiplets()) out[static_cast<int>(m.codons.size())]++;
  return out;
}

int weakness_score(const Codon& codon, PipelineConfig::WeaknessScore kind) {
  int score = 0;
  for (int pos = 1; pos <= 3; ++pos) {
    const Base b = codon.at(pos);
    if (b == Base::C || (b == Base::A && kind == PipelineConfig::WeaknessScore::ca_count)) {
      ++score;
    }
  }
  return score;
}

namespace {

int third_letter_rank(const Codon& c) {
  switch (c.at(3)) {
    case Base::A: return 3;
    case Base::C: return 2;
    case Base::U: return 1;
    case Base::G: return 0;
  }
  return 0;
}

std::vector<MisreadSpec> substitutions_at(const Codon& codon, int pos, bool transitions,
                                          bool transversions) {
  std::vector<MisreadSpec> out;
  const Base from = codon.at(pos);
  if (transitions) {
    if (from == Base::C) out.emplace_back(pos, Base::C, Base::U);
    if (from == Base::G) out.emplace_back(pos, Base::G, Base::A);
  }
  if (transversions) {
    if (from == Base::C) out.emplace_back(pos, Base::C, Base::G);
    if (from == Base::U) out.emplace_back(pos, Base::U, Base::A);
    if (from == Base::C) out.emplace_back(pos, Base::C, Base::A);
  }
  return out;
}

struct Proposal {
  MergeEvent event;
  int weakness = 0;
};

/// Shared acceptance pass for levels 3..5: allowed events between distinct
/// multiplets arrive as proposals, the policy picks the accepted ones.
void resolve_stage(MultipletPartition& partition, std::vector<Proposal> proposals,
                   std::vector<MergeEvent>& log, int level,
                   const PipelineConfig& config, bool merging_enabled,
                   const char* suppress_reason) {
  // Deterministic processing order.
  std::sort(proposals.begin(), proposals.end(), [](const Proposal& x, const Proposal& y) {
    if (x.event.source != y.event.source) return x.event.source < y.event.source;
    return x.event.target < y.event.target;
  });

  if (!merging_enabled) {
    for (auto& p : proposals) {
      p.event.reason = suppress_reason;
      log.push_back(std::move(p.event));
    }
    return;
  }

  if (config.merge_policy == PipelineConfig::MergePolicy::accept_all) {
    for (auto& p : proposals) {
      if (partition.same_multiplet(p.event.source, p.event.target)) {
        p.event.reason = "already merged";
      } else {
        partition.merge(p.event.source, p.event.target, level);
        p.event.accepted = true;
        p.event.reason = "accept_all";
      }
      log.push_back(std::move(p.event));
    }
    return;
  }

  // protect_weakest: only a doublet extending a quartet to a sextet may
  // merge; the source codon must be weak enough; one winner per source
  // multiplet; one merge per multiplet per stage.
  std::vector<Proposal> eligible;
  for (auto& p : proposals) {
    const std::size_t s = partition.multiplet_of(p.event.source).codons.size();
    const std::size_t t = partition.multiplet_of(p.event.target).codons.size();
    if (std::min(s, t) != 2 || std::max(s, t) != 4) {
      p.event.reason = "sizes " + std::to_string(s) + "+" + std::to_string(t) +
                       " (needs 4+2)";
      log.push_back(std::move(p.event));
      continue;
    }
    p.weakness = weakness_score(p.event.source, config.weakness);
    if (p.weakness < config.weakness_min) {
      p.event.reason = "source weakness " + std::to_string(p.weakness) + " < " +
                       std::to_string(config.weakness_min);
      log.push_back(std::move(p.event));
      continue;
    }
    eligible.push_back(std::move(p));
  }

  // Group by source multiplet (keyed by its first codon).
  std::map<Codon, std::vector<Proposal>> by_source;
  for (auto& p : eligible) {
    by_source[partition.multiplet_of(p.event.source).codons.front()].push_back(
        std::move(p));
  }

  std::set<Codon> merged_this_stage;  // keyed by multiplet first codon
  for (auto& [key, group] : by_source) {
    std::sort(group.begin(), group.end(), [](const Proposal& x, const Proposal& y) {
      if (x.weakness != y.weakness) return x.weakness > y.weakness;
      const int rx = third_letter_rank(x.event.source);
      const int ry = third_letter_rank(y.event.source);
      if (rx != ry) return rx > ry;
      if (x.event.source != y.event.source) return x.event.source < y.event.source;
      return x.event.target < y.event.target;
    });
    for (std::size_t i = 0; i < group.size(); ++i) {
      Proposal& p = group[i];
      if (i > 0) {
        p.event.reason = "lost conflict to " + group.front().event.source.str() + "->" +
                         group.front().event.target.str();
        log.push_back(std::move(p.event));
        continue;
      }
      const Codon skey = partition.multiplet_of(p.event.source).codons.front();
      const Codon tkey = partition.multiplet_of(p.event.target).codons.front();
      if (merged_this_stage.count(skey) || merged_this_stage.count(tkey)) {
        p.event.reason = "endpoint already merged this stage";
        log.push_back(std::move(p.event));
        continue;
      }
      partition.merge(p.event.source, p.event.target, level);
      merged_this_stage.insert(skey);
      merged_this_stage.insert(tkey);
      p.event.accepted = true;
      p.event.reason = "protect_weakest: source weakness " + std::to_string(p.weakness);
      log.push_back(std::move(p.event));
    }
  }
}

/// Evaluates single-position events and splits them into proposals (allowed,
/// between distinct multiplets) and directly logged non-proposals.
std::vector<Proposal> collect_single(MultipletPartition& partition,
                                     std::vector<MergeEvent>& log, int level,
                                     const char* stage, int pos, bool transitions,
                                     bool transversions, const PipelineConfig& config) {
  std::vector<Proposal> proposals;
  for (const Codon& codon : all_codons()) {
    for (const MisreadSpec& spec : substitutions_at(codon, pos, transitions, transversions)) {
      const AllowedResult res = allowed(codon, spec, config.ranks, config.order);
      MergeEvent ev;
      ev.level = level;
      ev.stage = stage;
      ev.source = codon;
      ev.target = substitute(codon, spec);
      ev.specs = {spec};
      ev.ops = {res.op};
      ev.allowed = res.allowed;
      if (!res.allowed) {
        ev.reason = "not allowed: predicted " + res.predicted.str();
        log.push_back(std::move(ev));
      } else if (partition.same_multiplet(ev.source, ev.target)) {
        ev.reason = "same multiplet";
        log.push_back(std::move(ev));
      } else {
        proposals.push_back(Proposal{std::move(ev), 0});
      }
    }
  }
  return proposals;
}

void run_level1(MultipletPartition& partition, std::vector<MergeEvent>& log,
                const PipelineConfig& config) {
  for (const Codon& codon : all_codons()) {
    const Base third = codon.at(3);
    if (third != Base::C && third != Base::G) continue;
    const MisreadSpec spec(3, third, third == Base::C ? Base::U : Base::A);
    const AllowedResult res = allowed(codon, spec, config.ranks, config.order);
    MergeEvent ev;
    ev.level = 1;
    ev.stage = "transition@3";
    ev.source = codon;
    ev.target = substitute(codon, spec);
    ev.specs = {spec};
    ev.ops = {res.op};
    ev.allowed = res.allowed;
    if (res.allowed && !partition.same_multiplet(ev.source, ev.target)) {
      partition.merge(ev.source, ev.target, 1);
      ev.accepted = true;
      ev.reason = "doublet";
    } else {
      ev.reason = res.allowed ? "same multiplet" : "not allowed";
    }
    log.push_back(std::move(ev));
  }
}

void run_level2(MultipletPartition& partition, std::vector<MergeEvent>& log,
                const PipelineConfig& config) {
  for (const Base x : kBases) {
    for (const Base z : kBases) {
      const Codon cC(x, z, Base::C);
      const Codon cU(x, z, Base::U);
      const MisreadSpec tva(3, Base::C, Base::G);
      const MisreadSpec tvb(3, Base::U, Base::A);
      const MisreadSpec tvc(3, Base::C, Base::A);
      const AllowedResult ra = allowed(cC, tva, config.ranks, config.order);
      const AllowedResult rb = allowed(cU, tvb, config.ranks, config.order);
      const AllowedResult rc = allowed(cC, tvc, config.ranks, config.order);

      bool form = false;
      const char* policy_name = "";
      switch (config.level2_policy) {
        case PipelineConfig::Level2Policy::c_codon_both:
          form = ra.allowed && rc.allowed;
          policy_name = "c_codon_both";
          break;
        case PipelineConfig::Level2Policy::any_of:
          form = ra.allowed || rb.allowed || rc.allowed;
          policy_name = "any_of";
          break;
        case PipelineConfig::Level2Policy::all_of_three:
          form = ra.allowed && rb.allowed && rc.allowed;
          policy_name = "all_of_three";
          break;
      }
      const bool distinct = !partition.same_multiplet(cC, cC.with_base(3, Base::A));
      const bool merging = form && distinct;

      auto push = [&](const Codon& src, const MisreadSpec& spec, const AllowedResult& r) {
        MergeEvent ev;
        ev.level = 2;
        ev.stage = "transversion@3";
        ev.source = src;
        ev.target = substitute(src, spec);
        ev.specs = {spec};
        ev.ops = {r.op};
        ev.allowed = r.allowed;
        ev.accepted = merging && r.allowed;
        ev.reason = std::string(policy_name) + (form ? ": quartet" : ": no quartet");
        log.push_back(std::move(ev));
      };
      push(cC, tva, ra);
      push(cU, tvb, rb);
      push(cC, tvc, rc);

      if (merging) {
        partition.merge(cC, cC.with_base(3, Base::A), 2);
      }
    }
  }
}

bool level5_pair_admitted(const MisreadSpec& first, const MisreadSpec& second,
                          const PipelineConfig& config) {
  if (config.level5_distinct_letters && first.from() == second.from()) return false;
  switch (config.level5_pairs) {
    case PipelineConfig::Level5Pairs::transversions:
      return !first.is_transition() && !second.is_transition();
    case PipelineConfig::Level5Pairs::transitions:
      return first.is_transition() && second.is_transition();
    case PipelineConfig::Level5Pairs::same_kind:
      return first.is_transition() == second.is_transition();
    case PipelineConfig::Level5Pairs::all:
      return true;
  }
  return false;
}

std::vector<Proposal> collect_double(MultipletPartition& partition,
                                     std::vector<MergeEvent>& log,
                                     const PipelineConfig& config) {
  std::vector<Proposal> proposals;
  for (const Codon& codon : all_codons()) {
    for (const MisreadSpec& s1 : substitutions_at(codon, 1, true, true)) {
      for (const MisreadSpec& s2 : substitutions_at(codon, 2, true, true)) {
        if (!level5_pair_admitted(s1, s2, config)) continue;
        const DoubleResult res =
            allowed_double(codon, s1, s2, config.ranks, config.order);
        MergeEvent ev;
        ev.level = 5;
        ev.stage = "double@12";
        ev.source = codon;
        ev.target = res.target_codon;
        ev.specs = {s1, s2};
        ev.ops = {res.op_first, res.op_second};
        ev.allowed = res.allowed;
        if (!res.allowed) {
          ev.reason = "not allowed: predicted " + res.predicted.str();
          log.push_back(std::move(ev));
        } else if (partition.same_multiplet(ev.source, ev.target)) {
          ev.reason = "same multiplet";
          log.push_back(std::move(ev));
        } else {
          proposals.push_back(Proposal{std::move(ev), 0});
        }
      }
    }
  }
  return proposals;
}

}  // namespace

LevelOutcome run_level(MultipletPartition partition, int level,
                       const PipelineConfig& config) {
  partition.mark_level_run(level);
  std::vector<MergeEvent> events;
  switch (level) {
    case 1:
      run_level1(partition, events, config);
      break;
    case 2:
      run_level2(partition, events, config);
      break;
    case 3: {
      auto props = collect_single(partition, events, 3, "transition@1", 1, true, false,
                                  config);
      resolve_stage(partition, std::move(props), events, 3, config, true, "");
      props = collect_single(partition, events, 3, "transversion@1", 1, false, true,
                             config);
      resolve_stage(partition, std::move(props), events, 3, config, true, "");
      break;
    }
    case 4: {
      auto props = collect_single(partition, events, 4, "transition@2", 2, true, false,
                                  config);
      resolve_stage(partition, std::move(props), events, 4, config, config.level4_merges,
                    "level4 merges suppressed");
      props = collect_single(partition, events, 4, "transversion@2", 2, false, true,
                             config);
      resolve_stage(partition, std::move(props), events, 4, config, config.level4_merges,
                    "level4 merges suppressed");
      break;
    }
    case 5: {
      auto props = collect_double(partition, events, config);
      resolve_stage(partition, std::move(props), events, 5, config, true, "");
      break;
    }
    default:
      throw std::logic_error("run_level: level must be 1..5");
  }
  return LevelOutcome{std::move(partition), std::move(events)};
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  MultipletPartition partition = MultipletPartition::initial();
  std::vector<MergeEvent> all_events;
  for (int level = 1; level <= 5; ++level) {
    auto outcome = run_level(std::move(partition), level, config);
    partition = std::move(outcome.partition);
    all_events.insert(all_events.end(),
                      std::make_move_iterator(outcome.events.begin()),
                      std::make_move_iterator(outcome.events.end()));
  }
  auto counts = partition.census();
  return PipelineResult{std::move(partition), std::move(all_events), std::move(counts)};
}

std::map<int, int> census(const MultipletPartition& partition) {
  return partition.census();
}

CodeComparison compare_to_code(const MultipletPartition& partition, Code code) {
  CodeComparison cmp;
  cmp.code = code;

  std::map<std::string, std::set<Codon>> classes;
  for (const Codon& c : all_codons()) {
    classes[std::string(amino_acid(c, code))].insert(c);
  }
  for (const auto& [aa, members] : classes) {
    const int size = static_cast<int>(members.size());
    cmp.code_census_with_ter[size]++;
    if (aa != "Ter") cmp.code_census_sense_only[size]++;
  }

  bool all_exact = true;
  for (const Multiplet& m : partition.multiplets()) {
    const std::set<Codon> mine(m.codons.begin(), m.codons.end());
    MultipletVsCode row;
    row.multiplet = m.codons;

    std::size_t covered = 0;
    bool union_of_whole = true;
    for (const auto& [aa, members] : classes) {
      std::size_t inside = 0;
      for (const Codon& c : members) inside += mine.count(c);
      if (inside == 0) continue;
      row.classes_touched.push_back(aa);
      covered += inside;
      if (inside != members.size()) union_of_whole = false;
    }
    if (row.classes_touched.size() == 1) {
      const auto& members = classes.at(row.classes_touched.front());
      row.status = mine.size() == members.size() ? MultipletVsCode::Status::exact
                                                 : MultipletVsCode::Status::refinement;
    } else if (union_of_whole) {
      row.status = MultipletVsCode::Status::union_of_classes;
    } else {
      row.status = MultipletVsCode::Status::crosses;
      cmp.split_by_code.push_back(m.codons);
    }
    if (row.status != MultipletVsCode::Status::exact) all_exact = false;
    cmp.rows.push_back(std::move(row));
  }
  cmp.identical = all_exact && cmp.rows.size() == classes.size();
  return cmp;
}

}  // namespace gcwe
