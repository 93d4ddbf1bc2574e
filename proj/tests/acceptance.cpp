// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstring>
#include <iostream>

#include "nilorb/atlas.hpp"
#include "nilorb/selftest.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool all = true;
  for (const auto& c : nilorb::selftest::run_all(nilorb::default_atlas())) {
    all = all && c.passed;
    std::cout << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << '\n';
    if (verbose || !c.passed)
      for (const auto& d : c.details) std::cout << "        " << d << '\n';
  }
  std::cout << (all ? "all acceptance criteria passed" : "acceptance criteria FAILED") << '\n';
  return all ? 0 : 1;
}
