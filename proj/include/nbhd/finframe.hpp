#pragma once

#include <span>
#include <vector>

#include "nbhd/morphism_data.hpp"
#include "nbhd/prenbhd.hpp"

namespace nbhd {

// A finite frame: a finite distributive lattice with its Heyting
// implication table a→b = join{ c : c ∧ a <= b }, validated by the
// residuation law x ∧ a <= b  iff  x <= a→b.
struct FiniteFrame {
  FiniteLattice lattice;
  std::vector<int> imp;  // row-major, imp[a*n+b]

  int imp_of(int a, int b) const { return imp[a * lattice.size() + b]; }
  bool operator==(const FiniteFrame& o) const {
    return lattice.same_carrier(o.lattice) && imp == o.imp;
  }
};

FiniteFrame make_frame(FiniteLattice L);
// Validates a supplied implication table against the residuation law.
FiniteFrame make_frame_with_imp(FiniteLattice L, std::vector<int> imp);

// Sublocale: a subset closed under all meets (hence containing the top)
// and under a→s for every frame element a.
struct Sublocale {
  FiniteFrame frame;
  Mask carrier = 0;
  bool operator==(const Sublocale& o) const {
    return frame == o.frame && carrier == o.carrier;
  }
};

bool is_sublocale_mask(const FiniteFrame& F, Mask carrier);
Sublocale make_sublocale(const FiniteFrame& F, Mask carrier);

// The open sublocale o(a) = { a→b : b in F }.
Sublocale open_sublocale(const FiniteFrame& F, int a);

Mask sublocale_meet_mask(const FiniteFrame& F, Mask s, Mask t);  // intersection
// Smallest sublocale containing the union: closure under meets and →.
Mask sublocale_join_mask(const FiniteFrame& F, Mask s, Mask t);
Mask smallest_sublocale_containing(const FiniteFrame& F, Mask subset);

// Sub(X, RegMon): every sublocale, as a lattice under inclusion. The
// coframe law is asserted at construction.
struct SublocaleLattice {
  FiniteFrame frame;
  std::vector<Mask> carriers;  // canonical order: ascending masks
  FiniteLattice lattice;

  int index_of(Mask carrier) const;  // ForeignElement if absent
};

SublocaleLattice all_sublocales(const FiniteFrame& F, int cap = 8);

// A localic map f: X -> Y, given by its frame homomorphism
// f* : Y -> X (left adjoint, preserving top, bottom, finite meets and
// joins). The localic direction is the right adjoint of f*.
struct LocalicMap {
  FiniteFrame dom;             // X
  FiniteFrame cod;             // Y
  std::vector<int> frame_hom;  // f*: cod -> dom
  std::vector<int> localic;    // f: dom -> cod, right adjoint of f*
};

LocalicMap make_localic(FiniteFrame X, FiniteFrame Y,
                        std::vector<int> frame_hom);
LocalicMap identity_localic(const FiniteFrame& F);
LocalicMap compose(const LocalicMap& g, const LocalicMap& f);

// Largest sublocale of X inside the set-preimage of S under the localic
// direction.
Sublocale localic_preimage(const LocalicMap& m, const SublocaleLattice& SX,
                           const Sublocale& S);
// Smallest sublocale of Y containing the set-image of S.
Sublocale localic_image(const LocalicMap& m, const Sublocale& S);

// The image/preimage pair between the two sublocale lattices.
MorphismData localic_morphism_data(const LocalicMap& m,
                                   const SublocaleLattice& SX,
                                   const SublocaleLattice& SY);

// The natural structure o_X on sublocales: T is a neighbourhood of S when
// some open sublocale sits between them.
PreNbhd natural_topology(const SublocaleLattice& SL);

struct RightInverseReport {
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// For each localic map, checks that it is a preneighbourhood morphism for
// the natural structures (so the structure assignment is functorial and a
// right inverse to forgetting it); composable consecutive pairs are also
// checked to compose at the subobject level.
RightInverseReport check_right_inverse(std::span<const LocalicMap> maps,
                                       int cap = 8);

}  // namespace nbhd
