#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

namespace sasaki {
namespace {

namespace fs = std::filesystem;

SearchBounds bounds(int r_max, long max_degree) {
  SearchBounds b;
  b.r_max = r_max;
  b.max_degree = max_degree;
  return b;
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("sasaki_hodge_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(PairSearch, EnumerationCountsAndOrder) {
  EXPECT_EQ(enumerate_multidegrees(bounds(2, 10)).size(), 54u);
  const auto small = enumerate_multidegrees(bounds(2, 3));
  EXPECT_EQ(small, (std::vector<DegreeTuple>{{2}, {3}, {2, 2}, {3, 2}, {3, 3}}));
}

TEST(PairSearch, TotalDegreeBoundPrunes) {
  auto b = bounds(3, 12);
  b.d_max = Integer(50);
  for (const auto& t : enumerate_multidegrees(b)) {
    long d = 1;
    for (long v : t) d *= v;
    EXPECT_LE(d, 50);
  }
  EXPECT_LT(enumerate_multidegrees(b).size(), enumerate_multidegrees(bounds(3, 12)).size());
}

TEST(PairSearch, ShardsPartitionTheEnumeration) {
  const auto b = bounds(3, 9);
  std::vector<DegreeTuple> sharded;
  for (long lead = 2; lead <= 9; ++lead) {
    enumerate_shard(b, lead, [&](const DegreeTuple& t) {
      EXPECT_EQ(t.front(), lead);
      sharded.push_back(t);
    });
  }
  auto all = enumerate_multidegrees(b);
  std::sort(all.begin(), all.end());
  std::sort(sharded.begin(), sharded.end());
  EXPECT_EQ(all, sharded);
}

TEST(PairSearch, KnownCandidatesGiveThreeGroups) {
  std::vector<DegreeTuple> candidates;
  for (const auto& row : reference_table2().rows) candidates.push_back(row.degrees);
  const auto r = search_collisions(candidates);
  ASSERT_EQ(r.groups.size(), 3u);
  for (const auto& g : r.groups) {
    ASSERT_EQ(g.members.size(), 2u);
    EXPECT_EQ(g.members[0].wall.k - g.members[1].wall.k, 2);
  }
  EXPECT_EQ(testing::as_sets(r), testing::single_phase_groups(candidates));
  EXPECT_TRUE(verify_known_pairs().ok);
}

TEST(PairSearch, TwoPhaseEqualsSinglePhaseOracle) {
  const auto b = bounds(3, 12);
  const auto r = search_collisions(b);
  EXPECT_EQ(r.stats.enumerated, 363u);
  EXPECT_EQ(testing::as_sets(r), testing::single_phase_groups(enumerate_multidegrees(b)));
  EXPECT_TRUE(r.groups.empty());
}

TEST(PairSearch, ExtendedRegressionFixture) {
  const auto r = search_collisions(bounds(3, 30));
  EXPECT_EQ(r.stats.enumerated, 4959u);
  EXPECT_EQ(r.stats.phase2_evaluations, 18u);
  EXPECT_TRUE(r.groups.empty());
}

TEST(PairSearch, OracleAgreesOnPlantedCollisions) {
  std::vector<DegreeTuple> mixed = enumerate_multidegrees(bounds(2, 8));
  for (const auto& row : reference_table2().rows) mixed.push_back(row.degrees);
  const auto r = search_collisions(mixed);
  EXPECT_EQ(r.groups.size(), 3u);
  EXPECT_EQ(testing::as_sets(r), testing::single_phase_groups(mixed));
}

TEST(PairSearch, ThreadedSearchMatchesSerial) {
  auto b = bounds(4, 14);
  const auto serial = search_collisions(b);
  b.jobs = 4;
  const auto threaded = search_collisions(b);
  EXPECT_EQ(serial.groups, threaded.groups);
  EXPECT_EQ(serial.stats.enumerated, threaded.stats.enumerated);
  EXPECT_EQ(serial.stats.phase2_evaluations, threaded.stats.phase2_evaluations);
}

TEST(PairSearch, SpillPathMatchesInMemory) {
  const auto in_memory = search_collisions(bounds(4, 14));
  auto b = bounds(4, 14);
  b.memory_budget = 97;
  b.spill_dir = fresh_dir("spill");
  b.jobs = 3;
  const auto spilled = search_collisions(b);
  EXPECT_EQ(spilled.groups, in_memory.groups);
  EXPECT_EQ(spilled.stats.phase2_evaluations, in_memory.stats.phase2_evaluations);
  EXPECT_GT(spilled.stats.runs_written, 13u);
  EXPECT_TRUE(fs::exists(*b.spill_dir / "manifest.txt"));
  fs::remove_all(*b.spill_dir);
}

TEST(PairSearch, MergedRunsGroupLikeInMemoryCandidates) {
  std::vector<DegreeTuple> candidates;
  for (const auto& row : reference_table2().rows) candidates.push_back(row.degrees);
  std::vector<Phase1Record> records;
  for (const auto& t : candidates) records.push_back(Phase1Record::of(t));
  const auto dir = fresh_dir("merge");
  fs::create_directories(dir);
  std::vector<fs::path> runs;
  for (std::size_t i = 0; i < records.size(); ++i) {
    runs.push_back(dir / ("run_" + std::to_string(i) + ".txt"));
    std::ofstream(runs.back()) << records[i].to_line() << '\n';
  }
  detail::MergeSource source(runs);
  const auto merged = detail::group_sorted(source, SearchStats{});
  EXPECT_EQ(merged.groups, search_collisions(candidates).groups);
  fs::remove_all(dir);
}

TEST(PairSearch, ResumeSkipsCompletedShards) {
  auto b = bounds(3, 16);
  b.spill_dir = fresh_dir("resume");
  b.memory_budget = 50;
  const auto first = search_collisions(b);
  EXPECT_EQ(first.stats.shards_resumed, 0u);
  b.resume = true;
  const auto second = search_collisions(b);
  EXPECT_EQ(second.stats.shards_resumed, 15u);
  EXPECT_EQ(second.stats.enumerated, 0u);
  EXPECT_EQ(second.groups, first.groups);
  EXPECT_EQ(second.stats.phase2_evaluations, first.stats.phase2_evaluations);
  fs::remove_all(*b.spill_dir);
}

TEST(PairSearch, ResumeRejectsDifferentBounds) {
  auto b = bounds(2, 8);
  b.spill_dir = fresh_dir("mismatch");
  search_collisions(b);
  auto other = bounds(3, 8);
  other.spill_dir = b.spill_dir;
  other.resume = true;
  EXPECT_ANY_THROW(search_collisions(other));
  fs::remove_all(*b.spill_dir);
}

TEST(PairSearch, RecordLineRoundTrip) {
  const auto r = Phase1Record::of({84, 29, 25, 25, 18, 7});
  const auto back = Phase1Record::from_line(r.to_line());
  EXPECT_EQ(back.d, r.d);
  EXPECT_EQ(back.m, r.m);
  EXPECT_EQ(back.k_parity, r.k_parity);
  EXPECT_EQ(back.degrees, r.degrees);
  EXPECT_THROW(Phase1Record::from_line("garbage"), IntegrityError);
}

TEST(PairSearch, BoundsValidation) {
  EXPECT_ANY_THROW(search_collisions(bounds(0, 10)));
  EXPECT_ANY_THROW(search_collisions(bounds(2, 1)));
  const std::vector<DegreeTuple> bad = {{1, 3}};
  EXPECT_THROW(search_collisions(bad), DomainError);
}

}  // namespace
}  // namespace sasaki
