#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nbhd/filter.hpp"
#include "nbhd/morphism_data.hpp"

namespace nbhd {

// Strongest class first when classifying; Topology ⇒ Nbhd ⇒ Weak ⇒ Pre.
enum class StructureClass { Pre, Weak, Nbhd, Topology };

const char* structure_class_name(StructureClass c);
inline bool class_at_least(StructureClass c, StructureClass floor) {
  return static_cast<int>(c) >= static_cast<int>(floor);
}

// A preneighbourhood structure on a lattice: an order-reversing assignment
// of a filter to each element, every member of assign(m) lying above m.
// On a finite lattice each assigned filter is the up-set of a single
// element, so structures correspond to monotone inflationary self-maps;
// the extensional filter form is kept as the working representation.
struct PreNbhd {
  FiniteLattice carrier;
  std::vector<Mask> assign;  // assign[m] = filter mask

  Mask at(int m) const { return assign[m]; }
  bool member(int m, int p) const { return mask_has(assign[m], p); }
  bool operator==(const PreNbhd& o) const {
    return carrier.same_carrier(o.carrier) && assign == o.assign;
  }
};

PreNbhd make_prenbhd(FiniteLattice L, std::vector<Mask> assign);  // validates
bool is_prenbhd_assignment(const FiniteLattice& L,
                           const std::vector<Mask>& assign);

// The two standard neighbourhoods: the indiscrete one (bottom gets the
// whole lattice, everything else only the top) and the up-set one.
PreNbhd nabla(const FiniteLattice& L);
PreNbhd atleast(const FiniteLattice& L);

// Pointwise order on structures.
bool prenbhd_leq(const PreNbhd& a, const PreNbhd& b);
// Same comparison with the bottom slot exempted. Neighbourhood structures
// are forced to assign the whole lattice at the bottom (empty-join law),
// so reflections into them compare away from the bottom slot.
bool prenbhd_leq_off_bottom(const PreNbhd& a, const PreNbhd& b);

// Interpolativity per the displayed equation:
// assign(m) = { p : exists q in assign(m) with p in assign(q) }.
bool is_interpolative(const PreNbhd& mu);
// The union-of-intersections form of the weak-neighbourhood condition;
// equivalent to interpolativity, kept as an independent computation.
bool weak_condition_by_intersections(const PreNbhd& mu);

// The meet law for neighbourhoods over every subset G (including the empty
// one, which forces assign(bottom) = whole lattice).
bool preserves_all_meets(const PreNbhd& mu);

StructureClass classify(const PreNbhd& mu);

// mu-open elements: { p : p in mu(p) }.
Mask opens(const PreNbhd& mu);
// Join of all mu-opens below m.
int interior(const PreNbhd& mu, int m);
std::vector<int> interior_table(const PreNbhd& mu);
// True iff the opens are join-closed, equivalently every interior is open
// (both computed and compared).
bool interiors_are_open(const PreNbhd& mu);

// A subset closed under finite meets and arbitrary joins, including the
// empty cases (so top and bottom are always members).
struct PseudoFrameSet {
  FiniteLattice carrier;
  Mask members = 0;
  bool operator==(const PseudoFrameSet& o) const {
    return carrier.same_carrier(o.carrier) && members == o.members;
  }
};

bool is_pfs_mask(const FiniteLattice& L, Mask members);
PseudoFrameSet make_pfs(const FiniteLattice& L, Mask members);  // validates
Mask pfs_closure(const FiniteLattice& L, Mask members);  // smallest pfs ⊇

// Deflationary, idempotent, finite-meet-preserving, top-fixing self-map.
struct KuratowskiInterior {
  FiniteLattice carrier;
  std::vector<int> i;
  bool operator==(const KuratowskiInterior& o) const {
    return carrier.same_carrier(o.carrier) && i == o.i;
  }
};

KuratowskiInterior make_kuratowski(FiniteLattice L, std::vector<int> i);

// Facet conversions. The pfs and Kuratowski facets determine a
// neighbourhood and vice versa; converting a structure below Nbhd class
// raises NotANeighbourhood.
PreNbhd nbhd_from_pfs(const PseudoFrameSet& O);
PreNbhd nbhd_from_kuratowski(const KuratowskiInterior& K);
PseudoFrameSet pfs_from(const PreNbhd& mu);
KuratowskiInterior kuratowski_from(const PreNbhd& mu);

// Pointwise join / intersection; sup of weak structures stays weak.
PreNbhd sup_pre(std::span<const PreNbhd> structures, const FiniteLattice& L);
PreNbhd inf_pre(std::span<const PreNbhd> structures, const FiniteLattice& L);
PreNbhd sup_pre(const PreNbhd& a, const PreNbhd& b);
PreNbhd inf_pre(const PreNbhd& a, const PreNbhd& b);

// Largest weak structure below mu: the interpolation-core operator
// T(mu)(m) = union of mu(p) over p in mu(m), iterated to its fixpoint.
PreNbhd reflect_weak(const PreNbhd& mu);
// Enumeration route for the same reflection (ground truth at desk scale).
PreNbhd reflect_weak_enumerated(const PreNbhd& mu);

// Neighbourhood reflection of a weak structure: rebuild from the pfs
// closure of the opens (plus the forced bottom). Equals the largest
// neighbourhood below mu away from the bottom slot whenever that maximum
// exists, and the canonical supremum otherwise. WrongClass below Weak.
PreNbhd reflect_nbhd(const PreNbhd& mu);
// Finitely every neighbourhood is a topology, so this coincides with
// reflect_nbhd; the frame check on the opens is still performed.
PreNbhd reflect_top(const PreNbhd& mu);

// All structures of (at least) the requested class, in canonical order:
// lexicographic in the vector of principal generators.
std::vector<PreNbhd> enumerate_structures(const FiniteLattice& L,
                                          StructureClass cls,
                                          int cap = 8);
std::vector<Mask> enumerate_pfs(const FiniteLattice& L);

// Present for every finite lattice here (the full pfs is a frame); the
// optional shape mirrors the largest-topology criterion.
std::optional<PreNbhd> largest_topology(const FiniteLattice& L);

// The structure induced on the subobject lattice of p (the down-set of p):
// gamma_p(m) = { u <= p : exists w in gamma(m) with p ∧ w <= u }.
// It is the smallest structure making the inclusion a preneighbourhood
// morphism.
struct InducedSubstructure {
  SubLattice sub;       // subobject lattice of p with inherited names
  PreNbhd structure;    // gamma_p on it
};
InducedSubstructure induced_substructure(const PreNbhd& gamma, int p);

}  // namespace nbhd
