#include <algorithm>

#include <gtest/gtest.h>

#include "nilorb/errors.hpp"
#include "nilorb/root_system.hpp"
#include "test_util.hpp"

using namespace nilorb;

namespace {

Integer height(const RootSystem& rs, std::size_t i) {
  Integer h = 0;
  for (const auto& c : rs.simple_coefficients(i)) h += c;
  return h;
}

}  // namespace

class BothSystems : public ::testing::TestWithParam<RootSystemLabel> {};

TEST_P(BothSystems, RootsHaveNormTwo) {
  const auto& rs = root_system(GetParam());
  for (const auto& a : rs.positive_roots()) EXPECT_EQ(pair(a, a), 2) << a.to_string();
}

TEST_P(BothSystems, CartanIsSimplyLacedWithExpectedDeterminant) {
  const auto& rs = root_system(GetParam());
  const auto& c = rs.cartan();
  ASSERT_EQ(c.rows(), rs.rank());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (i == j) EXPECT_EQ(c(i, j), 2);
      else EXPECT_TRUE(c(i, j) == 0 || c(i, j) == -1);
      EXPECT_EQ(c(i, j), c(j, i));
    }
  // det(Cartan) is the order of the weight lattice modulo the root lattice.
  EXPECT_EQ(oracle::bareiss_determinant(c), GetParam() == RootSystemLabel::E7 ? 2 : 1);
}

TEST_P(BothSystems, SimpleCoefficientsReconstructRoots) {
  const auto& rs = root_system(GetParam());
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    auto sum = QuotientVector::zero(rs.realization());
    const auto& coeffs = rs.simple_coefficients(i);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      EXPECT_GE(coeffs[j], 0);
      sum += Rational(coeffs[j]) * rs.simple_roots()[j];
    }
    EXPECT_EQ(sum, rs.positive_roots()[i]);
  }
}

TEST_P(BothSystems, HighestRootHeightIsCoxeterNumberMinusOne) {
  const auto& rs = root_system(GetParam());
  Integer best = 0;
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) best = std::max(best, height(rs, i));
  EXPECT_EQ(best, GetParam() == RootSystemLabel::E7 ? 17 : 29);
}

TEST_P(BothSystems, CorootLatticeHasFullRank) {
  const auto& rs = root_system(GetParam());
  EXPECT_EQ(coroot_lattice(rs).rank(), rs.rank());
  for (const auto& a : rs.simple_roots()) EXPECT_TRUE(quotient_lattice_contains(coroot_lattice(rs), coroot(a)));
}

TEST_P(BothSystems, SimpleRootIndexIsChecked) {
  const auto& rs = root_system(GetParam());
  EXPECT_THROW(rs.simple_root(0), InputError);
  EXPECT_THROW(rs.simple_root(static_cast<int>(rs.rank()) + 1), InputError);
}

INSTANTIATE_TEST_SUITE_P(E, BothSystems, ::testing::Values(RootSystemLabel::E7, RootSystemLabel::E8),
                         [](const auto& info) { return to_string(info.param); });

TEST(RootSystem, Counts) {
  EXPECT_EQ(root_system(RootSystemLabel::E7).positive_roots().size(), 63u);
  EXPECT_EQ(root_system(RootSystemLabel::E8).positive_roots().size(), 120u);
}

TEST(RootSystem, LabelingOfSimpleRoots) {
  const auto& e7 = root_system(RootSystemLabel::E7);
  auto r7 = Realization::of(RootSystemLabel::E7);
  EXPECT_EQ(e7.simple_root(1), QuotientVector::from_ints(r7, {1, -1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(e7.simple_root(7), QuotientVector::from_ints(r7, {0, 0, 0, 0, 1, 1, 1, 1}));
  const auto& e8 = root_system(RootSystemLabel::E8);
  auto r8 = Realization::of(RootSystemLabel::E8);
  EXPECT_EQ(e8.simple_root(7), QuotientVector::from_ints(r8, {0, 0, 0, 0, 0, 0, 1, -1, 0}));
  EXPECT_EQ(e8.simple_root(8), QuotientVector::from_ints(r8, {0, 0, 0, 0, 0, 1, 1, 1, 0}));
}

TEST(QuotientVector, EqualityIsModuloAllOnes) {
  auto r = Realization::of(RootSystemLabel::E7);
  auto a = QuotientVector::from_ints(r, {1, 0, 0, 0, 0, 0, 0, 0});
  auto b = QuotientVector::from_ints(r, {2, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.canonical().coords().back(), 0);
  EXPECT_TRUE((a - b).is_zero());
  EXPECT_EQ(pair(a, b), pair(a, a));
}

TEST(QuotientVector, Rendering) {
  auto r = Realization::of(RootSystemLabel::E7);
  EXPECT_EQ(QuotientVector::from_ints(r, {2, 0, -2, 0, 0, 1, -1, 0}).to_string(), "2e1-2e3+e6-e7");
}

TEST(QuotientVector, CorootOfZeroThrows) {
  EXPECT_THROW(coroot(QuotientVector::zero(Realization::of(RootSystemLabel::E8))), InputError);
}

TEST(RootSystem, UnsupportedLabel) {
  EXPECT_THROW(parse_root_system_label("E6"), CapabilityError);
  EXPECT_EQ(parse_root_system_label("E8"), RootSystemLabel::E8);
}

TEST(Levi, A2PlusA1InE7) {
  const auto& rs = root_system(RootSystemLabel::E7);
  std::vector<int> idx{6, 1, 2};
  auto levi = levi_subsystem(rs, idx);
  EXPECT_EQ(levi.simple_indices, (std::vector<int>{1, 2, 6}));
  EXPECT_EQ(levi.positive_roots.size(), 4u);
  std::vector<int> bad{0};
  EXPECT_THROW(levi_subsystem(rs, bad), InputError);
}
