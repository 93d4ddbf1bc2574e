#pragma once

// Integrality test for the shift delta attached to a principal nilpotent in a
// standard Levi. delta agrees with kappa/2 up to an integral character, where
// kappa is the sum of the positive roots pairing to 1 with the neutral element
// h. delta is integral iff kappa pairs evenly with every element of the
// lattice  (center of the Levi) cap (coroot lattice).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilorb/exact_linalg.hpp"
#include "nilorb/root_system.hpp"

namespace nilorb {

enum class DeltaVerdict { Integral, NonIntegral };

std::string to_string(DeltaVerdict verdict);

/// Sum of the positive coroots of the Levi. Throws InputError for an empty Levi.
QuotientVector principal_h(const RootSystem& rs, std::span<const int> levi);

/// Positive roots alpha with <alpha, h> == value, in enumeration order.
std::vector<QuotientVector> roots_pairing_value(const RootSystem& rs, const QuotientVector& h,
                                                const Integer& value);

QuotientVector kappa(const RootSystem& rs, const QuotientVector& h);

/// {x in coroot lattice : <alpha, x> = 0 for every simple alpha of the Levi}.
LatticeBasis central_torus_lattice(const RootSystem& rs, std::span<const int> levi);

struct DeltaReport {
  RootSystemLabel system;
  std::vector<int> levi;
  QuotientVector h;
  std::vector<QuotientVector> roots_pairing_one;
  QuotientVector kappa;
  LatticeBasis torus_lattice;
  std::vector<Rational> pairings;  // kappa against each torus_lattice vector
  DeltaVerdict verdict;
};

/// Even integers only.
bool is_even_integer(const Rational& q);

DeltaReport delta_verdict(const RootSystem& rs, std::span<const int> levi);

/// Published reference value for one torus-lattice element.
struct ReferenceVector {
  std::string name;
  std::vector<long long> coords;
  long long expected_pairing;
};

struct ReferenceCheck {
  std::string name;
  QuotientVector vector;
  bool in_torus_lattice;
  Rational expected_pairing;
  Rational computed_pairing;
  bool matches;
};

struct LeviPreset {
  std::string name;  // e.g. "E7:A2+A1"
  RootSystemLabel system;
  std::vector<int> levi;
  std::vector<ReferenceVector> references;
};

const std::vector<LeviPreset>& levi_presets();
/// Throws InputError listing the available presets.
const LeviPreset& find_preset(std::string_view name);

std::vector<ReferenceCheck> check_references(const RootSystem& rs, const DeltaReport& report,
                                             std::span<const ReferenceVector> references);

}  // namespace nilorb
