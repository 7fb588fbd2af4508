#include "liftprop/enumeration.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <set>

#include "oracles.hpp"

namespace liftprop {
namespace {

std::vector<std::uint64_t> rows_of(const FinSpace& x) {
  std::vector<std::uint64_t> rows;
  for (PointId p = 0; p < x.size(); ++p) rows.push_back(x.up(p).bits());
  return rows;
}

TEST(AllSpacesTest, LabeledCounts) {
  const std::size_t expected[] = {1, 1, 4, 29, 355, 6942};
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(all_spaces(n).size(), expected[n]) << n;
  EXPECT_EQ(all_spaces(0).front().size(), 0u);
}

TEST(AllSpacesTest, DedupedCounts) {
  const std::size_t expected[] = {1, 1, 3, 9, 33, 139};
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(all_spaces(n, true).size(), expected[n]) << n;
}

TEST(AllSpacesTest, RangeAndNames) {
  EXPECT_THROW(all_spaces(kMaxEnumerationPoints + 1), DomainError);
  EXPECT_EQ(corpus_point_names(3), (std::vector<std::string>{"p0", "p1", "p2"}));
  EXPECT_EQ(all_spaces(3), all_spaces(3));
}

TEST(AxiomTest, Names) {
  EXPECT_EQ(parse_axiom(to_string(Axiom::kNormal)), Axiom::kNormal);
  EXPECT_EQ(parse_axiom("hereditarilyNormal"), Axiom::kHereditarilyNormal);
  EXPECT_THROW(parse_axiom("regular"), DomainError);
}

TEST(CrossValidateTest, FourPoints) {
  const CorpusReport r = cross_validate(4, {Axiom::kNormal, Axiom::kHereditarilyNormal}, {false, 4});
  EXPECT_EQ(r.total_labeled, 355u);
  EXPECT_TRUE(r.mismatches.empty());
  std::size_t normal = 0;
  for (const FinSpace& x : all_spaces(4)) normal += oracle::normal_by_open_pairs(x);
  for (const auto& [method, count] : r.per_axiom.at("normal")) EXPECT_EQ(count, normal) << method;
  EXPECT_EQ(r.per_axiom.at("normal").size(), 4u);
  EXPECT_EQ(r.per_axiom.at("hereditarilyNormal").size(), 3u);
}

TEST(CrossValidateTest, EmptySpaceAndDedupe) {
  const CorpusReport r = cross_validate(0, {Axiom::kNormal, Axiom::kHereditarilyNormal});
  EXPECT_EQ(r.total_labeled, 1u);
  for (const auto& [axiom, counts] : r.per_axiom) {
    for (const auto& [method, count] : counts) EXPECT_EQ(count, 1u) << axiom << method;
  }
  const CorpusReport d = cross_validate(3, {Axiom::kNormal}, {true, 2});
  EXPECT_TRUE(d.deduped);
  EXPECT_EQ(d.total_unlabeled, 9u);
  EXPECT_THROW(cross_validate(6, {Axiom::kNormal}), DomainError);
}

TEST(ParallelForTest, VisitsEachIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, 3, [](std::size_t) { FAIL(); });
}

// Properties.

TEST(EnumerationProperties, MatchesNaiveFiltering) {
  for (std::size_t n = 0; n <= 4; ++n) {
    std::set<std::vector<std::uint64_t>> generated;
    for (const FinSpace& x : all_spaces(n)) {
      const auto rows = rows_of(x);
      // Reflexive and transitively closed.
      for (PointId p = 0; p < n; ++p) {
        ASSERT_TRUE((rows[p] >> p) & 1U);
        for (PointId q : PointSet(rows[p]).members()) ASSERT_EQ(rows[q] & ~rows[p], 0u);
      }
      ASSERT_TRUE(generated.insert(rows).second) << "duplicate space";
    }
    const auto naive = oracle::naive_preorders(n);
    EXPECT_EQ(generated, std::set<std::vector<std::uint64_t>>(naive.begin(), naive.end()));
  }
}

TEST(EnumerationProperties, DedupeMatchesOrbitCount) {
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_EQ(all_spaces(n, true).size(), oracle::burnside_classes(n)) << n;
  }
}

TEST(EnumerationProperties, DedupeIsSoundAndComplete) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<CanonicalForm> reps;
    for (const FinSpace& x : all_spaces(n, true)) {
      ASSERT_TRUE(reps.insert(canonical_form(x)).second);
    }
    for (const FinSpace& x : all_spaces(n)) ASSERT_TRUE(reps.count(canonical_form(x)));
  }
}

}  // namespace
}  // namespace liftprop
