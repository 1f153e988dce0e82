#pragma once

// Shared desk-scale fixtures for the test suites.

#include <string>
#include <vector>

#include "nbhd/lattice.hpp"

namespace fixtures {

using nbhd::FiniteLattice;

// Chain 0 < 1.
inline FiniteLattice c2() {
  return FiniteLattice::build({"0", "1"}, {{"0", "1"}});
}

// Chain 0 < a < 1.
inline FiniteLattice c3() {
  return FiniteLattice::build({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}});
}

// Boolean lattice on two atoms a, b.
inline FiniteLattice b2() {
  return FiniteLattice::build(
      {"0", "a", "b", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// Boolean lattice on three atoms (powerset of a 3-point set by structure).
inline FiniteLattice b3() {
  std::vector<std::string> names;
  std::vector<nbhd::Mask> up;
  for (int s = 0; s < 8; ++s) {
    std::string n = "{";
    const char* pts[] = {"x", "y", "z"};
    bool first = true;
    for (int i = 0; i < 3; ++i)
      if (s & (1 << i)) {
        if (!first) n += ",";
        n += pts[i];
        first = false;
      }
    n += "}";
    names.push_back(n);
    nbhd::Mask u = 0;
    for (int t = 0; t < 8; ++t)
      if ((s & ~t) == 0) u |= nbhd::mask_bit(t);
    up.push_back(u);
  }
  return FiniteLattice::from_up_sets(names, up);
}

// Divisors of 12 ordered by divisibility: a 6-element non-Boolean
// distributive lattice (and hence a frame).
inline FiniteLattice d12() {
  return FiniteLattice::build({"1", "2", "3", "4", "6", "12"},
                              {{"1", "2"},
                               {"1", "3"},
                               {"2", "4"},
                               {"2", "6"},
                               {"3", "6"},
                               {"4", "12"},
                               {"6", "12"}});
}

}  // namespace fixtures
