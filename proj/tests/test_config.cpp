#include <doctest.h>

#include <stdexcept>

#include "gcwe/config.hpp"

using namespace gcwe;

TEST_CASE("defaults survive a round trip") {
  const PipelineConfig defaults;
  const PipelineConfig reparsed = parse_config(config_to_string(defaults));
  CHECK(config_to_string(reparsed) == config_to_string(defaults));
  CHECK(reparsed.ranks.a1 == 1);
  CHECK(reparsed.ranks.a2 == 2);
  CHECK(reparsed.ranks.a3 == 0);
  CHECK(reparsed.ranks.d2 == 2);
  CHECK(reparsed.weakness_min == 2);
  CHECK(reparsed.order == CoupleOrder::state_first);
}

TEST_CASE("keys parse") {
  const auto config = parse_config(
      "# comment\n"
      "operator_order = operator_first\n"
      "a3 = 1\n"
      "b_list = CC, AG\n"
      "merge_policy = accept_all\n"
      "level2_policy = any_of\n"
      "level4_merges = on\n"
      "level5_pairs = all\n"
      "level5_distinct = off\n"
      "weakness = c_count\n"
      "weakness_min = 0\n");
  CHECK(config.order == CoupleOrder::operator_first);
  CHECK(config.ranks.a3 == 1);
  CHECK(config.ranks.b2_dinucleotides == std::vector<std::string>{"CC", "AG"});
  CHECK(config.merge_policy == PipelineConfig::MergePolicy::accept_all);
  CHECK(config.level2_policy == PipelineConfig::Level2Policy::any_of);
  CHECK(config.level4_merges);
  CHECK(config.level5_pairs == PipelineConfig::Level5Pairs::all);
  CHECK_FALSE(config.level5_distinct_letters);
  CHECK(config.weakness == PipelineConfig::WeaknessScore::c_count);
  CHECK(config.weakness_min == 0);
}

TEST_CASE("malformed input is rejected with line numbers") {
  CHECK_THROWS_AS(parse_config("nonsense\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_config("unknown_key = 3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_config("a1 = -1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_config("a1 = x\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_config("b_list = CX\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_config("level4_merges = maybe\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_config("operator_order = middle\n"), std::runtime_error);
  try {
    parse_config("a1 = 1\nbogus = 2\n");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_config("/nonexistent/gcwe.conf"), std::runtime_error);
}
