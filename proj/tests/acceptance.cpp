// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gcwe/config.hpp"
#include "gcwe/genetic_code.hpp"
#include "gcwe/misread.hpp"
#include "gcwe/pipeline.hpp"
#include "gcwe/qlimit.hpp"
#include "signature_oracle.hpp"

using namespace gcwe;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::set<std::set<std::string>> as_sets(const MultipletPartition& partition) {
  std::set<std::set<std::string>> out;
  for (const auto& m : partition.multiplets()) {
    std::set<std::string> codons;
    for (const auto& c : m.codons) codons.insert(c.str());
    out.insert(std::move(codons));
  }
  return out;
}

std::set<std::string> family(const std::string& xz, const std::string& thirds) {
  std::set<std::string> out;
  for (char n : thirds) out.insert(xz + n);
  return out;
}

// 1. Table reproduction, zero mismatches, under a second.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const auto diff = codon_table().diff_against_reference();
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  report(1, "all 64 codon labels match the reference table",
         diff.label_mismatches.empty() && elapsed < 1.0,
         std::to_string(diff.label_mismatches.size()) + " mismatches, " +
             std::to_string(elapsed) + "s");
}

// 2. Connected components = reference irrep partition, sizes 16,8,8,8,8,4,4,4,4.
void criterion_2() {
  const auto diff = codon_table().diff_against_reference();
  std::map<std::pair<Component, Component>, int> sizes;
  for (const auto& row : codon_table().rows()) {
    sizes[{row.label.copy_h, row.label.copy_v}]++;
  }
  std::multiset<int> counts;
  for (const auto& [copy, n] : sizes) counts.insert(n);
  const bool size_ok = counts == std::multiset<int>{4, 4, 4, 4, 8, 8, 8, 8, 16};
  report(2, "irrep-copy partition matches (sizes 16,8x4,4x4)",
         diff.partitions_match && size_ok);
}

// 3. Level 1: exactly 32 doublets {XZY}/{XZR}.
void criterion_3() {
  auto outcome = run_level(MultipletPartition::initial(), 1);
  bool shape_ok = outcome.partition.census() == std::map<int, int>{{2, 32}};
  for (const auto& m : outcome.partition.multiplets()) {
    if (m.codons.size() != 2) {
      shape_ok = false;
      break;
    }
    const std::string a = m.codons[0].str(), b = m.codons[1].str();
    const std::string thirds{a[2], b[2]};
    shape_ok = shape_ok && a.substr(0, 2) == b.substr(0, 2) &&
               (thirds == "CU" || thirds == "UC" || thirds == "GA" || thirds == "AG");
  }
  report(3, "level 1 yields the 32 third-position doublets", shape_ok);
}

// 4. Level 2: quartets exactly for CC,CU,CG,UC,GG,GC,GU,AC; 16 doublets left.
void criterion_4() {
  MultipletPartition partition = MultipletPartition::initial();
  partition = run_level(std::move(partition), 1).partition;
  partition = run_level(std::move(partition), 2).partition;
  std::set<std::string> quartets;
  for (const auto& m : partition.multiplets()) {
    if (m.codons.size() == 4) quartets.insert(m.codons.front().str().substr(0, 2));
  }
  const bool ok = partition.census() == std::map<int, int>{{4, 8}, {2, 16}} &&
                  quartets == std::set<std::string>{"CC", "CU", "CG", "UC",
                                                    "GG", "GC", "GU", "AC"};
  report(4, "level 2 quartets are exactly {CC,CU,CG,UC,GG,GC,GU,AC}", ok);
}

// 5. Level 3: exactly the Leu and Arg sextets.
void criterion_5() {
  MultipletPartition partition = MultipletPartition::initial();
  for (int level = 1; level <= 2; ++level) {
    partition = run_level(std::move(partition), level).partition;
  }
  auto outcome = run_level(std::move(partition), 3);
  int accepted = 0;
  for (const auto& ev : outcome.events) accepted += ev.accepted;
  const auto sets = as_sets(outcome.partition);
  std::set<std::string> leu = family("CU", "CUGA");
  leu.merge(family("UU", "GA"));
  std::set<std::string> arg = family("CG", "CUGA");
  arg.merge(family("AG", "GA"));
  report(5, "level 3 forms CUN+UUR (Leu) and CGN+AGR (Arg) only",
         accepted == 2 && sets.count(leu) == 1 && sets.count(arg) == 1);
}

// 6. Level 4: zero accepted merges under defaults.
void criterion_6() {
  MultipletPartition partition = MultipletPartition::initial();
  for (int level = 1; level <= 3; ++level) {
    partition = run_level(std::move(partition), level).partition;
  }
  auto outcome = run_level(std::move(partition), 4);
  int accepted = 0, proposals = 0;
  for (const auto& ev : outcome.events) {
    accepted += ev.accepted;
    proposals += ev.reason == "level4 merges suppressed";
  }
  report(6, "level 4 accepts zero merges", accepted == 0 && proposals > 0,
         std::to_string(proposals) + " proposals suppressed");
}

// 7. Level 5: the Ser sextet is UCN+AGY; final census 3/5/13.
void criterion_7() {
  const auto result = run_pipeline();
  std::set<std::string> ser = family("UC", "CUGA");
  ser.merge(family("AG", "CU"));
  const auto sets = as_sets(result.partition);
  const bool census_ok = result.census == std::map<int, int>{{6, 3}, {4, 5}, {2, 13}};
  const bool ser_ok = sets.count(ser) == 1;
  // The doublet the Ser quartet absorbs is AGY; the printed narrative says
  // AGR, but AGR is consumed by the Arg sextet one level earlier and the
  // 3/5/13 census forces AGY.
  std::set<std::string> agr = family("AG", "GA");
  const bool agr_separate = sets.count(agr) == 0;  // inside the Arg sextet
  report(7, "level 5 forms UCN+AGY (Ser); census 6x3 4x5 2x13 (AGY, not AGR)",
         census_ok && ser_ok && agr_separate,
         "census " + [&] {
           std::string s;
           for (const auto& [k, v] : result.census) {
             s += std::to_string(k) + ":" + std::to_string(v) + " ";
           }
           return s;
         }());
}

// 8. Crystal algebra property suite, exhaustive for j <= 4.
void criterion_8() {
  bool ok = true;
  for (int j2 = 0; j2 <= 8 && ok; ++j2) {
    const HalfInt j = HalfInt::from_twice(j2);
    CrystalState cur(j, -j);
    const Rational cas = casimir_eigenvalue(cur);
    int visited = 1;
    while (auto next = raised(cur)) {
      ok = ok && lowered(*next) == cur;
      cur = *next;
      ++visited;
      ok = ok && casimir_eigenvalue(cur) == cas;
      if (auto down = lowered(cur)) ok = ok && raised(*down) == cur;
    }
    ok = ok && visited == j2 + 1 && cur.m == cur.j;
  }
  report(8, "crystal raise/lower/orbit/Casimir laws, all j <= 4", ok);
}

// 9. Tensor property suite: decompositions, couple vs graph oracle,
//    signature oracle vs iterated branch rule.
void criterion_9() {
  bool ok = true;
  for (int tj1 = 0; tj1 <= 6 && ok; ++tj1) {
    for (int tj2 = 0; tj2 <= 6 && ok; ++tj2) {
      std::map<SignPath, std::pair<HalfInt, std::multiset<int>>> components;
      for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
          const SignPath p(
              {CrystalState(HalfInt::from_twice(tj1), HalfInt::from_twice(tm1)),
               CrystalState(HalfInt::from_twice(tj2), HalfInt::from_twice(tm2))});
          const auto res = component_of(p);
          auto& entry = components[res.component.highest_weight_path];
          entry.first = res.component.J;
          entry.second.insert(res.m.twice());
          const auto mine = couple(HalfInt::from_twice(tj1), HalfInt::from_twice(tm1),
                                   HalfInt::from_twice(tj2), HalfInt::from_twice(tm2));
          const auto ref = oracle::graph_couple(
              HalfInt::from_twice(tj1), HalfInt::from_twice(tm1),
              HalfInt::from_twice(tj2), HalfInt::from_twice(tm2),
              CoupleOrder::state_first);
          ok = ok && mine == ref;
        }
      }
      std::multiset<int> js, expected;
      for (const auto& [hw, entry] : components) {
        js.insert(entry.first.twice());
        std::multiset<int> want;
        for (int t = -entry.first.twice(); t <= entry.first.twice(); t += 2) {
          want.insert(t);
        }
        ok = ok && entry.second == want && !tensor_raise(hw).has_value();
      }
      for (int t = std::abs(tj1 - tj2); t <= tj1 + tj2; t += 2) expected.insert(t);
      ok = ok && js == expected;
    }
  }
  for (int n = 1; n <= 4 && ok; ++n) {
    for (int bits = 0; bits < (1 << n); ++bits) {
      std::vector<int> ms;
      for (int i = 0; i < n; ++i) ms.push_back((bits >> i) & 1 ? 1 : -1);
      const SignPath p = SignPath::spin_half(ms);
      ok = ok && tensor_raise(p) == oracle::signature_raise(p) &&
           tensor_lower(p) == oracle::signature_lower(p);
    }
  }
  report(9, "tensor decompositions + couple oracle + signature oracle", ok);
}

// 10. Numeric limits at q = 1e-4 within 1e-6 relative.
void criterion_10() {
  const double q = 1e-4;
  const qlimit::QValue qv(q);
  bool ok = true;
  std::string detail;

  for (int x = 1; x <= 4; ++x) {
    const double ratio = qlimit::q_number(x, qv) / std::pow(q, -x + 1);
    ok = ok && std::abs(ratio - 1.0) < 1e-6;
  }
  for (int tj = 1; tj <= 4; ++tj) {  // all half-steps up to j = 2
    const HalfInt j = HalfInt::from_twice(tj);
    const double scale = std::pow(q, -j.value() + 0.5);
    for (int tm = -tj; tm < tj; tm += 2) {
      const double ratio =
          qlimit::f_coefficient(j, HalfInt::from_twice(tm), qlimit::Direction::raising,
                                qv) /
          scale;
      ok = ok && std::abs(ratio - 1.0) < 1e-6;
    }
    const double cas = qlimit::q_number(j.value(), qv) * qlimit::q_number(j.value() + 1, qv);
    const double ratio = cas / std::pow(q, -2.0 * j.value() + 1.0);
    if (tj == 1) {
      // At j = 1/2 the Casimir ratio is exactly (1+q+q^2)/(1+q)^2: the
      // correction is first order in q, so the 1e-6 band cannot apply at
      // q = 1e-4. Pin the exact algebraic value instead.
      const double exact = (1.0 + q + q * q) / ((1.0 + q) * (1.0 + q));
      ok = ok && std::abs(ratio - exact) < 1e-12;
      detail = "j=1/2 Casimir ratio pinned to (1+q+q^2)/(1+q)^2 (O(q) point)";
    } else {
      ok = ok && std::abs(ratio - 1.0) < 1e-6;
    }
  }
  report(10, "small-q ratios within 1e-6 at q=1e-4 (x<=4, j<=2)", ok, detail);
}

// 11. Misreading predicate: 32 transitions, exhaustive m-additivity, and the
//     two-step CCN => UUN computation.
void criterion_11() {
  bool ok = true;
  int transitions = 0;
  for (const Codon& c : all_codons()) {
    const Base third = c.at(3);
    if (third == Base::C || third == Base::G) {
      const MisreadSpec spec(3, third, third == Base::C ? Base::U : Base::A);
      ok = ok && allowed(c, spec).allowed;
      ++transitions;
    }
  }
  ok = ok && transitions == 32;

  const std::vector<std::pair<Base, Base>> subs{{Base::C, Base::U},
                                                {Base::G, Base::A},
                                                {Base::C, Base::G},
                                                {Base::U, Base::A},
                                                {Base::C, Base::A}};
  for (const Codon& c : all_codons()) {
    const auto src = codon_labels(c);
    for (int pos = 1; pos <= 3; ++pos) {
      for (const auto& [from, to] : subs) {
        if (c.at(pos) != from) continue;
        const auto res = allowed(c, MisreadSpec(pos, from, to));
        ok = ok && res.predicted.mH - src.mH == res.op.mH &&
             res.predicted.mV - src.mV == res.op.mV;
      }
    }
    for (const auto& [f1, t1] : subs) {
      if (c.at(1) != f1) continue;
      for (const auto& [f2, t2] : subs) {
        if (c.at(2) != f2) continue;
        const auto res =
            allowed_double(c, MisreadSpec(1, f1, t1), MisreadSpec(2, f2, t2));
        ok = ok && res.virtual_labels.mH - src.mH == res.op_first.mH &&
             res.predicted.mH - res.virtual_labels.mH == res.op_second.mH &&
             res.virtual_labels.mV - src.mV == res.op_first.mV &&
             res.predicted.mV - res.virtual_labels.mV == res.op_second.mV;
      }
    }
  }

  // The two-step chain CCN => UUN: operators, virtual codon and target
  // reproduce the displayed computation for every N; exact label agreement
  // holds for N = U only (frozen verdicts).
  const std::map<std::string, bool> verdicts{
      {"CCC", false}, {"CCU", true}, {"CCG", false}, {"CCA", false}};
  for (const auto& [text, expected] : verdicts) {
    const Codon c = *Codon::parse(text);
    const auto res = allowed_double(c, MisreadSpec(1, Base::C, Base::U),
                                    MisreadSpec(2, Base::C, Base::U));
    ok = ok && res.op_first == CrystalTensorOp(HalfInt(1), HalfInt(-1), HalfInt(1), HalfInt(0));
    ok = ok && res.op_second == CrystalTensorOp(HalfInt(1), HalfInt(-1), HalfInt(2), HalfInt(0));
    ok = ok && res.virtual_codon.str() == "U" + text.substr(1);
    ok = ok && res.target_codon.str() == "UU" + text.substr(2);
    ok = ok && res.allowed == expected;
  }
  report(11, "misreading predicate: 32 transitions, m-additivity, CCN=>UUN chain", ok);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/11 criteria passed in %.2fs\n", 11 - failures, elapsed);
  return failures == 0 ? 0 : 1;
}
