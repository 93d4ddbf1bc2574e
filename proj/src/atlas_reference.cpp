#include <algorithm>

#include "nilorb/atlas.hpp"
#include "nilorb/errors.hpp"

namespace nilorb::reference {

namespace {

using G = ExceptionalGroup;

constexpr OrbitName kE1[] = {
    {G::G2, "~A_1"}, {G::F4, "~A_2+A_1"}, {G::E7, "(A_3+A_1)'"},
    {G::E8, "A_3+A_1"}, {G::E8, "A_5+A_1"}, {G::E8, "D_5(a_1)+A_2"},
};

constexpr OrbitName kE2[] = {{G::E7, "A_4+A_1"}, {G::E8, "A_4+A_1"}, {G::E8, "E_6(a_1)+A_1"}};

constexpr OrbitName kE3[] = {{G::E8, "A_4+2A_1"}};

constexpr OrbitName kCodim4[] = {
    {G::G2, "A_1"},
    {G::F4, "A_1"}, {G::F4, "~A_1"}, {G::F4, "A_1+~A_1"}, {G::F4, "A_2+~A_1"},
    {G::E6, "A_1"}, {G::E6, "2A_1"}, {G::E6, "3A_1"}, {G::E6, "A_2+A_1"}, {G::E6, "A_2+2A_1"},
    {G::E6, "2A_2+A_1"},
    {G::E7, "A_1"}, {G::E7, "2A_1"}, {G::E7, "(3A_1)'"}, {G::E7, "4A_1"}, {G::E7, "A_2+A_1"},
    {G::E7, "A_2+2A_1"}, {G::E7, "2A_2+A_1"}, {G::E7, "A_4+A_1"},
    {G::E8, "A_1"}, {G::E8, "2A_1"}, {G::E8, "3A_1"}, {G::E8, "4A_1"}, {G::E8, "A_2"},
    {G::E8, "A_2+A_1"}, {G::E8, "A_2+2A_1"}, {G::E8, "A_2+3A_1"}, {G::E8, "2A_2+A_1"},
    {G::E8, "2A_2+2A_1"}, {G::E8, "A_3+2A_1"}, {G::E8, "D_4(a_1)+A_1"}, {G::E8, "A_3+A_2+A_1"},
    {G::E8, "A_4+A_1"}, {G::E8, "2A_3"}, {G::E8, "A_4+2A_1"}, {G::E8, "A_4+A_3"},
};

constexpr OrbitName kSmoothLocusFailures[] = {
    {G::G2, "~A_1"},
    {G::F4, "~A_2+A_1"}, {G::F4, "C_3(a_1)"},
    {G::E6, "A_3+A_1"},
    {G::E7, "(A_3+A_1)'"}, {G::E7, "D_6(a_2)"},
    {G::E8, "A_3+A_1"}, {G::E8, "A_5+A_1"}, {G::E8, "D_5(a_1)+A_2"}, {G::E8, "D_6(a_2)"},
    {G::E8, "E_6(a_3)+A_1"}, {G::E8, "E_7(a_2)"}, {G::E8, "E_7(a_5)"},
};

constexpr OrbitName kBirationallyRigidNotRigid[] = {
    {G::E7, "A_2+A_1"}, {G::E7, "A_4+A_1"}, {G::E8, "A_4+A_1"}, {G::E8, "A_4+2A_1"}};

constexpr OrbitName kSpecial[] = {
    {G::E7, "A_2+A_1"}, {G::E7, "A_3+A_2"}, {G::E7, "A_4+A_1"}, {G::E7, "D_5(a_1)"},
    {G::E8, "A_3+A_2"}, {G::E8, "A_4+A_1"}, {G::E8, "A_4+2A_1"}, {G::E8, "D_5(a_1)"},
    {G::E8, "E_6(a_1)+A_1"}, {G::E8, "E_7(a_3)"}, {G::E8, "E_7(a_4)"},
};

// Rigid orbits named explicitly; the orbits of (e1) are rigid as well since
// they are birationally rigid and not among kBirationallyRigidNotRigid.
constexpr OrbitName kRigid[] = {
    {G::F4, "A_1+~A_1"}, {G::E6, "A_1"}, {G::E7, "A_1"}, {G::E7, "2A_1"},
    {G::E7, "A_2+2A_1"}, {G::E8, "A_1"}, {G::E8, "2A_1"}, {G::E8, "A_2+2A_1"},
};

constexpr OrbitName kBirationallyInduced[] = {
    {G::E7, "A_3+A_2"}, {G::E7, "D_5(a_1)"}, {G::E8, "A_3+A_2"}, {G::E8, "D_5(a_1)"},
    {G::E8, "E_6(a_1)+A_1"}, {G::E8, "E_7(a_3)"}, {G::E8, "E_7(a_4)"},
};

bool contains(std::span<const OrbitName> list, ExceptionalGroup group, std::string_view label) {
  const std::string wanted = normalize_label(label);
  return std::any_of(list.begin(), list.end(),
                     [&](const OrbitName& o) { return o.group == group && o.label == wanted; });
}

}  // namespace

std::string OrbitName::id() const { return to_string(group) + ":" + std::string(label); }

std::span<const OrbitName> e1() { return kE1; }
std::span<const OrbitName> e2() { return kE2; }
std::span<const OrbitName> e3() { return kE3; }
std::span<const OrbitName> codim4_boundary() { return kCodim4; }
std::span<const OrbitName> smooth_locus_failures() { return kSmoothLocusFailures; }
std::span<const OrbitName> birationally_rigid_not_rigid() { return kBirationallyRigidNotRigid; }
std::span<const OrbitName> special() { return kSpecial; }
std::span<const OrbitName> rigid() { return kRigid; }
std::span<const OrbitName> birationally_induced() { return kBirationallyInduced; }

std::optional<std::vector<int>> expected_levi(ExceptionalGroup group, std::string_view label) {
  const std::string l = normalize_label(label);
  if (group == G::E7 && l == "A_2+A_1") return std::vector<int>{1, 2, 6};
  if (group == G::E8 && l == "A_4+2A_1") return std::vector<int>{1, 2, 3, 4, 7, 8};
  return std::nullopt;
}

std::optional<bool> expected_flag(ExceptionalGroup group, std::string_view label, std::string_view field) {
  auto in = [&](std::span<const OrbitName> list) { return contains(list, group, label); };
  if (field == "in_e1") return in(kE1);
  if (field == "in_e2") return in(kE2);
  if (field == "in_e3") return in(kE3);
  if (field == "codim4_boundary") return in(kCodim4);
  if (field == "fails_smooth_locus_codim4") return in(kSmoothLocusFailures);

  // Only (e1) survives among the smooth-locus failures once birational
  // rigidity is imposed.
  const bool non_birigid_failure = in(kSmoothLocusFailures) && !in(kE1);
  if (field == "is_birationally_rigid") {
    if (in(kE1) || in(kRigid) || in(kBirationallyRigidNotRigid)) return true;
    if (non_birigid_failure || in(kBirationallyInduced)) return false;
    return std::nullopt;
  }
  if (field == "is_rigid") {
    if (in(kE1) || in(kRigid)) return true;
    if (in(kBirationallyRigidNotRigid) || non_birigid_failure || in(kBirationallyInduced)) return false;
    return std::nullopt;
  }
  if (field == "is_special") {
    if (in(kSpecial)) return true;
    return std::nullopt;
  }
  throw InputError("no reference data for field '" + std::string(field) + "'");
}

}  // namespace nilorb::reference
