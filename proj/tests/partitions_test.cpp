#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "nilorb/errors.hpp"
#include "nilorb/partitions.hpp"

using namespace nilorb;

namespace {

// Direct definition: parts of the given parity occur with even multiplicity.
bool paired(const std::vector<int>& parts, int parity) {
  std::map<int, int> mult;
  for (int x : parts) ++mult[x];
  return std::all_of(mult.begin(), mult.end(), [&](auto kv) { return kv.first % 2 != parity || kv.second % 2 == 0; });
}

}  // namespace

TEST(Partition, ParsingAndNormalization) {
  EXPECT_EQ(parse_partition("3,3,2,2,1,1").parts(), (std::vector<int>{3, 3, 2, 2, 1, 1}));
  EXPECT_EQ(parse_partition(" 2, 1 ,0,0").parts(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(parse_partition("").empty());
  EXPECT_THROW(parse_partition("1,2"), InputError);
  EXPECT_THROW(parse_partition("3,-1"), InputError);
  EXPECT_THROW(parse_partition("3,x"), InputError);
}

TEST(Partition, Counts) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  EXPECT_EQ(partitions_of(20).size(), 627u);
}

TEST(Partition, TransposeIsAnInvolution) {
  EXPECT_EQ(transpose({4, 2, 1}), (Partition{3, 2, 1, 1}));
  for (const auto& p : partitions_of(12)) {
    EXPECT_EQ(transpose(transpose(p)), p);
    EXPECT_EQ(transpose(p).size(), p.size());
  }
}

TEST(Partition, ValidityMatchesDefinition) {
  for (int n = 0; n <= 14; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(is_valid_type(p, ClassicalType::B), n % 2 == 1 && paired(p.parts(), 0)) << p.to_string();
      EXPECT_EQ(is_valid_type(p, ClassicalType::C), n % 2 == 0 && paired(p.parts(), 1)) << p.to_string();
      EXPECT_EQ(is_valid_type(p, ClassicalType::D), n % 2 == 0 && paired(p.parts(), 0)) << p.to_string();
      EXPECT_TRUE(is_valid_type(p, ClassicalType::A));
    }
}

TEST(Partition, OrbitCountsInSmallRank) {
  auto count = [](int n, ClassicalType t) {
    auto ps = partitions_of(n);
    return std::count_if(ps.begin(), ps.end(), [&](const Partition& p) { return is_valid_type(p, t); });
  };
  EXPECT_EQ(count(7, ClassicalType::B), 7);  // so(7)
  EXPECT_EQ(count(6, ClassicalType::C), 8);  // sp(6)
  EXPECT_EQ(count(8, ClassicalType::D), 10);  // O(8)-orbits; 12 under SO(8)
}

TEST(Partition, InvalidOrbitThrows) {
  EXPECT_THROW(ClassicalOrbit({3, 1}, ClassicalType::C), InputError);
  EXPECT_NO_THROW(ClassicalOrbit({2, 2}, ClassicalType::C));
}

TEST(Partition, VeryEvenSplits) {
  EXPECT_TRUE(ClassicalOrbit({4, 4}, ClassicalType::D).splits_under_special_orthogonal());
  EXPECT_FALSE(ClassicalOrbit({3, 3, 1, 1}, ClassicalType::D).splits_under_special_orthogonal());
}

TEST(Special, MinimalOrbitsOfSmallGroups) {
  EXPECT_FALSE(is_special(ClassicalOrbit({2, 1, 1}, ClassicalType::C)));  // minimal in sp(4)
  EXPECT_FALSE(is_special(ClassicalOrbit({2, 2, 1}, ClassicalType::B)));  // minimal in so(5)
  EXPECT_TRUE(is_special(ClassicalOrbit({3, 1, 1}, ClassicalType::B)));
  EXPECT_TRUE(is_special(ClassicalOrbit({2, 2}, ClassicalType::C)));
  EXPECT_TRUE(is_special(ClassicalOrbit({3, 3, 2, 2, 1, 1}, ClassicalType::D)));
}

TEST(Special, ExtremeOrbitsAreSpecial) {
  for (auto t : {ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int n = 1; n <= 16; ++n) {
      if (!is_valid_type(Partition{n}, t)) continue;
      EXPECT_TRUE(is_special(ClassicalOrbit(Partition{n}, t))) << "regular " << n;
      EXPECT_TRUE(is_special(ClassicalOrbit(Partition(std::vector<int>(n, 1)), t))) << "zero " << n;
    }
}

TEST(Step, VariantTwoWhenVariantOneBreaksType) {
  auto s = elementary_step({1, 1}, ClassicalType::C, 1);
  EXPECT_EQ(s.result, (Partition{2, 2}));
  EXPECT_EQ(s.variant, StepVariant::II);
  auto t = elementary_step({1, 1}, ClassicalType::C, 2);
  EXPECT_EQ(t.result, (Partition{3, 3}));
  EXPECT_EQ(t.variant, StepVariant::I);
}

TEST(Step, BadArguments) {
  EXPECT_THROW(elementary_step({1, 1}, ClassicalType::C, 0), InputError);
  EXPECT_THROW(elementary_step({3, 1}, ClassicalType::C, 1), InputError);
  EXPECT_THROW(elementary_step({1, 1}, ClassicalType::A, 1), CapabilityError);
}

TEST(Step, InverseRoundTripsExhaustively) {
  for (auto t : {ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (int n = 0; n <= 12; ++n)
      for (const auto& p : partitions_of(n)) {
        if (!is_valid_type(p, t)) continue;
        for (int k = 1; k <= static_cast<int>(p.length()) + 2; ++k) {
          StepResult fwd;
          try {
            fwd = elementary_step(p, t, k);
          } catch (const StepInapplicableError&) {
            continue;
          }
          auto inv = inverse_steps(fwd.result, t);
          EXPECT_NE(std::find(inv.begin(), inv.end(), InverseStep{p, k, fwd.variant}), inv.end())
              << p.to_string() << " n=" << k;
          for (const auto& i : inv) EXPECT_EQ(elementary_step(i.source, t, i.n).result, fwd.result);
        }
      }
}

TEST(Step, ReplayDetectsVariantMismatch) {
  StepScript script{{1, StepVariant::I}};
  EXPECT_THROW(replay({1, 1}, ClassicalType::C, script), IntegrityError);
  StepScript ok{{1, StepVariant::II}};
  EXPECT_EQ(replay({1, 1}, ClassicalType::C, ok), (Partition{2, 2}));
}

TEST(Rigidity, GapCriterion) {
  EXPECT_FALSE(is_birationally_rigid(ClassicalOrbit({4, 2}, ClassicalType::C)));
  EXPECT_TRUE(is_birationally_rigid(ClassicalOrbit({3, 3, 2, 2, 1, 1}, ClassicalType::D)));
  EXPECT_FALSE(is_birationally_rigid(ClassicalOrbit({2, 2}, ClassicalType::C)));  // trailing gap 2
  EXPECT_TRUE(is_birationally_rigid(ClassicalOrbit({1, 1}, ClassicalType::C)));
}

TEST(Sources, SortedRigidAndReplayable) {
  ClassicalOrbit o({6, 6, 4, 2, 2, 2}, ClassicalType::C);
  auto sources = birational_sources(o);
  ASSERT_FALSE(sources.empty());
  EXPECT_TRUE(std::is_sorted(sources.begin(), sources.end(),
                             [](const auto& a, const auto& b) { return a.source.partition() < b.source.partition(); }));
  for (const auto& s : sources) {
    EXPECT_TRUE(is_birationally_rigid(s.source));
    EXPECT_EQ(replay(s.source.partition(), ClassicalType::C, s.script), o.partition());
  }
}

TEST(Sources, RigidOrbitIsItsOwnSource) {
  ClassicalOrbit o({3, 3, 2, 2, 1, 1}, ClassicalType::D);
  auto s = rigid_special_source(o);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->source, o);
  EXPECT_TRUE(s->script.empty());
}

TEST(Sources, NonSpecialInputIsRejected) {
  EXPECT_THROW(rigid_special_source(ClassicalOrbit({2, 1, 1}, ClassicalType::C)), PreconditionError);
}
