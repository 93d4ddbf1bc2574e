#pragma once

// Executable acceptance suite. Each criterion recomputes its quantities from
// scratch and compares them against fixed expected values with zero tolerance.

#include <string>
#include <vector>

#include "nilorb/atlas.hpp"

namespace nilorb::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::vector<std::string> details;  // "what: expected X, got Y" lines
};

std::vector<CriterionResult> run_all(const Atlas& atlas);

CriterionResult e7_root_system();
CriterionResult e8_root_system();
CriterionResult e7_example_replay();
CriterionResult e8_example_replay();
CriterionResult classical_fixtures();
CriterionResult rigid_special_sources_exhaustive();
CriterionResult step_semantics();
CriterionResult atlas_consistency(const Atlas& atlas);
CriterionResult lattice_oracle();

/// True when some relabelling of a's indices turns it into b.
bool cartan_isomorphic(const IntMatrix& a, const IntMatrix& b);
IntMatrix standard_cartan_e7();
IntMatrix standard_cartan_e8();

}  // namespace nilorb::selftest
