#include <gtest/gtest.h>

#include "nilorb/delta_check.hpp"
#include "nilorb/errors.hpp"

using namespace nilorb;

TEST(Delta, EvenIntegers) {
  EXPECT_TRUE(is_even_integer(0));
  EXPECT_TRUE(is_even_integer(-4));
  EXPECT_FALSE(is_even_integer(3));
  EXPECT_FALSE(is_even_integer(Rational(1, 2)));
  EXPECT_FALSE(is_even_integer(Rational(4, 3)));
}

TEST(Delta, E7PresetIsIntegral) {
  const auto& preset = find_preset("E7:A2+A1");
  const auto& rs = root_system(preset.system);
  auto report = delta_verdict(rs, preset.levi);
  EXPECT_EQ(report.verdict, DeltaVerdict::Integral);
  EXPECT_EQ(report.roots_pairing_one.size(), 12u);
  auto checks = check_references(rs, report, preset.references);
  ASSERT_EQ(checks.size(), 4u);
  EXPECT_EQ(checks[0].computed_pairing, -14);
  EXPECT_EQ(checks[1].computed_pairing, 18);
  EXPECT_EQ(checks[2].computed_pairing, 14);
  // The published value for 4e8 is 16; the exact pairing is 18.
  EXPECT_EQ(checks[3].expected_pairing, 16);
  EXPECT_EQ(checks[3].computed_pairing, 18);
  EXPECT_FALSE(checks[3].matches);
  for (const auto& c : checks) EXPECT_TRUE(c.in_torus_lattice) << c.name;
}

TEST(Delta, E8PresetIsNotIntegral) {
  const auto& preset = find_preset("E8:A4+2A1");
  const auto& rs = root_system(preset.system);
  auto report = delta_verdict(rs, preset.levi);
  EXPECT_EQ(report.verdict, DeltaVerdict::NonIntegral);
  auto checks = check_references(rs, report, preset.references);
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_EQ(checks[0].computed_pairing, 35);
  EXPECT_EQ(checks[1].computed_pairing, 23);
  EXPECT_TRUE(checks[0].matches && checks[1].matches);
}

TEST(Delta, PrincipalHPairsTwoWithLeviSimpleRoots) {
  for (auto label : {RootSystemLabel::E7, RootSystemLabel::E8}) {
    const auto& rs = root_system(label);
    std::vector<int> levi{1, 2, 4, 5};
    auto h = principal_h(rs, levi);
    for (int i : levi) EXPECT_EQ(pair(rs.simple_root(i), h), 2);
  }
}

TEST(Delta, TorusLatticeIsOrthogonalToLevi) {
  const auto& rs = root_system(RootSystemLabel::E8);
  std::vector<int> levi{1, 2, 3, 4, 7, 8};
  auto lattice = central_torus_lattice(rs, levi);
  EXPECT_EQ(lattice.rank(), rs.rank() - levi.size());
  auto r = rs.realization();
  for (const auto& v : lattice.vectors()) {
    QuotientVector x(r, std::span<const Integer>(v));
    for (int i : levi) EXPECT_EQ(pair(rs.simple_root(i), x), 0);
    EXPECT_TRUE(quotient_lattice_contains(coroot_lattice(rs), x));
  }
}

TEST(Delta, OrderOfLeviIndicesIsIrrelevant) {
  const auto& rs = root_system(RootSystemLabel::E7);
  std::vector<int> a{1, 2, 6}, b{6, 2, 1};
  auto ra = delta_verdict(rs, a), rb = delta_verdict(rs, b);
  EXPECT_EQ(ra.verdict, rb.verdict);
  EXPECT_EQ(ra.kappa, rb.kappa);
  EXPECT_EQ(ra.torus_lattice, rb.torus_lattice);
}

TEST(Delta, DegenerateLevis) {
  const auto& rs = root_system(RootSystemLabel::E7);
  auto empty = delta_verdict(rs, {});
  EXPECT_EQ(empty.verdict, DeltaVerdict::Integral);
  EXPECT_EQ(empty.torus_lattice.rank(), rs.rank());
  std::vector<int> all{1, 2, 3, 4, 5, 6, 7};
  auto full = delta_verdict(rs, all);
  EXPECT_EQ(full.torus_lattice.rank(), 0u);
  EXPECT_EQ(full.verdict, DeltaVerdict::Integral);
}

TEST(Delta, UnknownPresetListsAvailable) {
  try {
    find_preset("E6:A1");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("E7:A2+A1"), std::string::npos);
  }
}
