#include "liftprop/finspace.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "liftprop/enumeration.hpp"
#include "liftprop/separation.hpp"
#include "oracles.hpp"

namespace liftprop {
namespace {

FinSpace tau() { return *catalog().tau; }
FinSpace sierpinski() { return FinSpace::from_named({"o", "c"}, {{"o", "c"}}); }
FinSpace discrete(std::size_t n) { return FinSpace(corpus_point_names(n), {}); }

std::vector<FinSpace> corpus_up_to(std::size_t max_n) {
  std::vector<FinSpace> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto spaces = all_spaces(n);
    out.insert(out.end(), spaces.begin(), spaces.end());
  }
  return out;
}

TEST(FinSpaceTest, StoresTransitiveReflexiveClosure) {
  FinSpace x = FinSpace::from_named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(x.specializes(0, 0));
  EXPECT_TRUE(x.specializes(0, 2));
  EXPECT_FALSE(x.specializes(2, 0));
  EXPECT_EQ(x.up(0), x.set_of({"a", "b", "c"}));
  EXPECT_EQ(x.down(2), x.set_of({"a", "b", "c"}));
}

TEST(FinSpaceTest, RejectsDuplicateIdentifiers) {
  EXPECT_THROW(FinSpace({"a", "a"}, {}), DomainError);
}

TEST(FinSpaceTest, EmptySpaceIsValid) {
  FinSpace e;
  EXPECT_EQ(e.size(), 0u);
  EXPECT_TRUE(closure(e, PointSet{}).empty());
  EXPECT_TRUE(components(e).empty());
  EXPECT_EQ(open_sets(e).size(), 1u);
}

TEST(ClosureTest, Examples) {
  const FinSpace x = tau();
  // Frozen from the closed-set scan oracle.
  ASSERT_EQ(oracle::closure(x, x.set_of({"L"}).bits()), x.set_of({"L", "0"}).bits());
  EXPECT_EQ(closure(x, x.set_of({"L"})), x.set_of({"L", "0"}));
  EXPECT_TRUE(closure(x, PointSet{}).empty());
  const FinSpace d = discrete(2);
  EXPECT_EQ(closure(d, d.set_of({"p0"})), d.set_of({"p0"}));
}

TEST(ClosureTest, RejectsForeignMembers) {
  EXPECT_THROW(closure(discrete(2), PointSet::single(5)), DomainError);
  EXPECT_THROW(min_open(discrete(2), PointSet::single(2)), DomainError);
}

TEST(MinOpenTest, Examples) {
  const FinSpace x = tau();
  ASSERT_EQ(oracle::min_open(x, x.set_of({"0"}).bits()), x.set_of({"L", "M", "0"}).bits());
  EXPECT_EQ(min_open(x, x.set_of({"0"})), x.set_of({"L", "M", "0"}));
  EXPECT_TRUE(min_open(x, PointSet{}).empty());
  const FinSpace d = discrete(3);
  EXPECT_EQ(min_open(d, d.set_of({"p1"})), d.set_of({"p1"}));
}

TEST(ClassifyTest, Examples) {
  const FinSpace x = tau();
  EXPECT_EQ(classify(x, x.set_of({"0"})), (Openness{false, true}));
  EXPECT_EQ(classify(x, x.all()), (Openness{true, true}));
  const FinSpace s = sierpinski();
  EXPECT_EQ(classify(s, s.set_of({"o"})), (Openness{true, false}));
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(components(tau()).size(), 1u);
  EXPECT_EQ(components(discrete(4)).size(), 4u);
  const FinSpace x = FinSpace::from_named({"o", "c", "z"}, {{"o", "c"}});
  const auto blocks = components(x);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], x.set_of({"o", "c"}));
  EXPECT_EQ(blocks[1], x.set_of({"z"}));
}

TEST(SubspaceTest, Examples) {
  const FinSpace x = tau();
  const FinSpace sub = subspace(x, x.set_of({"L", "0"}));
  EXPECT_EQ(sub, FinSpace::from_named({"L", "0"}, {{"L", "0"}}));
  EXPECT_EQ(subspace(x, x.all()), x);
  EXPECT_EQ(subspace(x, PointSet{}).size(), 0u);
}

TEST(ContinuityTest, DualMapAndCounterexample) {
  const auto& cat = catalog();
  EXPECT_TRUE(is_monotone(*cat.tau, *cat.tau_dag, cat.tau_map.assignment()));
  EXPECT_TRUE(is_continuous_by_preimage(*cat.tau, *cat.tau_dag, cat.tau_map.assignment()));
  // Same-named points: L -> 0 would need L' -> 0', which the dual order lacks.
  const std::vector<PointId> same_names = {0, 1, 2, 3, 4};
  ASSERT_FALSE(oracle::monotone(*cat.tau, *cat.tau_dag, same_names));
  EXPECT_FALSE(is_monotone(*cat.tau, *cat.tau_dag, same_names));
  EXPECT_FALSE(is_continuous_by_preimage(*cat.tau, *cat.tau_dag, same_names));
  EXPECT_THROW(CMap(cat.tau, cat.tau_dag, same_names), DiscontinuousMap);
  EXPECT_NO_THROW(identity_map(cat.tau));
}

TEST(ContinuityTest, MalformedAssignments) {
  const FinSpace d = discrete(2);
  EXPECT_THROW(is_monotone(d, d, {0}), DomainError);
  EXPECT_THROW(is_monotone(d, d, {0, 2}), DomainError);
  EXPECT_THROW(is_continuous_by_preimage(d, d, {0}), DomainError);
}

TEST(CanonicalFormTest, Examples) {
  const FinSpace ab = FinSpace::from_named({"a", "b"}, {{"a", "b"}});
  const FinSpace yx = FinSpace::from_named({"x", "y"}, {{"y", "x"}});
  EXPECT_EQ(canonical_form(ab), canonical_form(yx));
  EXPECT_NE(canonical_form(ab), canonical_form(discrete(2)));
  EXPECT_EQ(canonical_form(FinSpace{}), (CanonicalForm{0, 0}));
  EXPECT_THROW(canonical_form(discrete(9)), DomainError);
}

TEST(LinearExtensionTest, GenerizationsComeFirst) {
  const FinSpace x = tau();
  const auto order = linear_extension(x);
  std::vector<std::size_t> pos(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (PointId a = 0; a < x.size(); ++a) {
    for (PointId b = 0; b < x.size(); ++b) {
      if (a != b && x.specializes(a, b) && !x.specializes(b, a)) EXPECT_LT(pos[a], pos[b]);
    }
  }
}

// Properties over every space with at most four points.

TEST(FinSpaceProperties, OpenFamilyMatchesUnionsOfMinimalOpens) {
  for (const FinSpace& x : corpus_up_to(4)) {
    const auto opens = open_sets(x);
    std::vector<std::uint64_t> bits;
    for (PointSet u : opens) bits.push_back(u.bits());
    ASSERT_EQ(bits, oracle::topology_by_unions(x)) << x.size();
    for (PointSet u : opens) {
      for (PointSet v : opens) EXPECT_TRUE(is_open(x, u & v));
    }
  }
}

TEST(FinSpaceProperties, ClosureAndMinOpenAreHullOperators) {
  for (const FinSpace& x : corpus_up_to(3)) {
    const std::uint64_t limit = std::uint64_t{1} << x.size();
    for (std::uint64_t a = 0; a < limit; ++a) {
      const PointSet s(a);
      ASSERT_EQ(closure(x, s).bits(), oracle::closure(x, a));
      ASSERT_EQ(min_open(x, s).bits(), oracle::min_open(x, a));
      EXPECT_EQ(closure(x, closure(x, s)), closure(x, s));
      EXPECT_EQ(min_open(x, min_open(x, s)), min_open(x, s));
      for (std::uint64_t b = 0; b < limit; ++b) {
        const PointSet t(b);
        EXPECT_EQ(closure(x, s | t), closure(x, s) | closure(x, t));
        EXPECT_EQ(min_open(x, s | t), min_open(x, s) | min_open(x, t));
        if (s.subset_of(t)) {
          EXPECT_TRUE(closure(x, s).subset_of(closure(x, t)));
          EXPECT_TRUE(min_open(x, s).subset_of(min_open(x, t)));
        }
      }
    }
  }
}

TEST(FinSpaceProperties, ClassifyAgreesWithOpenFamily) {
  for (const FinSpace& x : corpus_up_to(4)) {
    const std::uint64_t all = x.all().bits();
    for (std::uint64_t a = 0; a <= all; ++a) {
      const Openness o = classify(x, PointSet(a));
      EXPECT_EQ(o.open, oracle::is_open(x, a));
      EXPECT_EQ(o.closed, oracle::is_open(x, all & ~a));
    }
  }
}

TEST(FinSpaceProperties, ContinuityRoutesAgree) {
  const auto spaces = corpus_up_to(3);
  for (const FinSpace& a : spaces) {
    for (const FinSpace& b : spaces) {
      oracle::for_each_assignment(a.size(), b.size(), [&](const std::vector<PointId>& f) {
        ASSERT_EQ(is_monotone(a, b, f), is_continuous_by_preimage(a, b, f));
      });
    }
  }
}

TEST(FinSpaceProperties, ComponentsAreClopenPartition) {
  for (const FinSpace& x : corpus_up_to(4)) {
    PointSet seen;
    for (PointSet block : components(x)) {
      EXPECT_EQ(classify(x, block), (Openness{true, true}));
      EXPECT_FALSE(block.intersects(seen));
      seen |= block;
    }
    EXPECT_EQ(seen, x.all());
  }
}

TEST(FinSpaceProperties, SubspaceTopologyIsTraceOfOpens) {
  for (const FinSpace& x : corpus_up_to(4)) {
    const auto opens = oracle::topology_by_unions(x);
    for (std::uint64_t s = 0; s <= x.all().bits(); ++s) {
      const auto ids = PointSet(s).members();
      const FinSpace sub = subspace(x, PointSet(s));
      std::vector<std::uint64_t> traced;
      for (std::uint64_t u : opens) {
        std::uint64_t local = 0;
        for (std::size_t i = 0; i < ids.size(); ++i) {
          if ((u >> ids[i]) & 1U) local |= std::uint64_t{1} << i;
        }
        traced.push_back(local);
      }
      std::sort(traced.begin(), traced.end());
      traced.erase(std::unique(traced.begin(), traced.end()), traced.end());
      EXPECT_EQ(oracle::topology_by_unions(sub), traced);
    }
  }
}

TEST(FinSpaceProperties, CanonicalFormIsRelabelingInvariant) {
  std::mt19937 rng(7);
  for (const FinSpace& x : corpus_up_to(4)) {
    std::vector<PointId> perm(x.size());
    std::iota(perm.begin(), perm.end(), PointId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(x), canonical_form(oracle::permuted(x, perm)));
  }
}

}  // namespace
}  // namespace liftprop
