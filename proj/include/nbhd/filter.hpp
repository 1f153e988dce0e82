#pragma once

#include <span>
#include <vector>

#include "nbhd/lattice.hpp"

namespace nbhd {

// A filter on a lattice: an up-closed, finite-meet-closed subset. The
// nullary meet is included, so every filter contains the top element.
// On a finite lattice every filter is principal (it contains the meet of
// all its members); we still keep the extensional representation.
struct Filter {
  FiniteLattice carrier;
  Mask members = 0;

  bool contains(int i) const { return mask_has(members, i); }
  bool operator==(const Filter& o) const {
    return carrier.same_carrier(o.carrier) && members == o.members;
  }
};

bool is_filter_mask(const FiniteLattice& L, Mask members);
Filter make_filter(const FiniteLattice& L, Mask members);  // validates

Filter principal_filter(const FiniteLattice& L, int x);  // ↑x

// The principal generator: the meet of all members.
int filter_min(const Filter& f);

// Meet is plain intersection; join is the up-closure of all finite meets
// across the union of the two member sets.
Filter filter_meet(const Filter& f, const Filter& g);
Filter filter_join(const Filter& f, const Filter& g);

Mask filter_join_masks(const FiniteLattice& L, std::span<const Mask> members);
Mask up_closure(const FiniteLattice& L, Mask generators);

// Fil(X): every filter on the carrier, enumerated in canonical order
// (ascending member-set masks), packaged as a lattice under inclusion.
struct FilterLattice {
  FiniteLattice carrier;
  std::vector<Mask> filters;
  FiniteLattice lattice;  // one element per filter, ordered by inclusion

  int index_of(Mask members) const;  // ForeignElement if absent
  Filter filter_at(int i) const { return Filter{carrier, filters[i]}; }
};

FilterLattice all_filters(const FiniteLattice& L);

// Compact elements per the finite-cover definition: F is compact when every
// cover of F by a join of filters admits a finite subcover. Scanned over
// all subsets of Fil(X); must coincide with the principal filters.
std::vector<Filter> compact_elements(const FilterLattice& FL);

}  // namespace nbhd
