#pragma once

#include <optional>
#include <span>

#include "nbhd/finset.hpp"
#include "nbhd/morphism_data.hpp"
#include "nbhd/prenbhd.hpp"

namespace nbhd {

// A morphism between structured spaces: the image/preimage pair plus a
// structure on each side. A concrete finite-set function is carried along
// when available; the regular-epi and heredity checks require it.
struct SpaceMorphism {
  MorphismData data;
  PreNbhd src;  // structure on data.dom
  PreNbhd dst;  // structure on data.cod
  std::optional<FinFunction> fn;
};

SpaceMorphism make_space_morphism(MorphismData data, PreNbhd src, PreNbhd dst);
SpaceMorphism space_morphism_from_fn(const FinFunction& f, PreNbhd src,
                                     PreNbhd dst);

// Definitional test plus the three adjoint reformulations; all four are
// evaluated and must agree.
bool is_prenbhd_morphism(const MorphismData& M, const PreNbhd& src,
                         const PreNbhd& dst);
bool is_prenbhd_morphism(const SpaceMorphism& sm);

// Least structure on the domain making the morphism structure-preserving
// into (cod, phi): m -> inverse_filter(phi(image(m))).
PreNbhd initial_structure(const MorphismData& M, const PreNbhd& phi);

// Greatest structure on the codomain making the morphism
// structure-preserving out of (dom, gamma):
// y -> { v : y <= v and preimage(v) in gamma(preimage(y)) }.
PreNbhd quotient_structure(const MorphismData& M, const PreNbhd& gamma);

// Factor through the weak reflection of the source structure. Requires a
// weak destination and an actual morphism.
SpaceMorphism weak_reflection_factor(const SpaceMorphism& sm);
// Factor through the neighbourhood reflection; needs ppj.
SpaceMorphism nbhd_reflection_factor(const SpaceMorphism& sm);

// Regular epi of structured spaces over the finite-set backend: the
// function is surjective and the destination equals the quotient
// structure. When the function is stably in E the simple membership
// description is asserted as well.
bool is_regular_epi_pnhd(const SpaceMorphism& sm);

// Hereditary version: every restriction to a codomain subset, with the
// induced structures on both sides, is again a regular epi of structured
// spaces. Computed definitionally and via the displayed implication
// formula; the two must agree.
bool is_hereditary_regular_epi(const SpaceMorphism& sm);

// u in gamma(preimage(y)) implies image(u) in phi(y).
bool is_pseudo_open(const SpaceMorphism& sm);

// Regular epi between neighbourhood spaces: additionally requires both
// structures to classify as neighbourhoods and the preimage to preserve
// joins.
bool is_regular_epi_nhd(const SpaceMorphism& sm);

struct Report {
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// The three heredity conditions for morphisms of neighbourhood spaces,
// instantiated on one concrete morphism: heredity forces a regular epi of
// structured spaces with regular-epi restrictions; Frobenius plus those
// premises forces heredity back; and under stable restrictions, regular
// epi of structured spaces is the same as pseudo open.
Report check_nhd_heredity_conditions(const SpaceMorphism& sm);

// The implication chain between pullback-stability of E, heredity of E,
// Frobenius conditions and heredity of regular epis, instantiated over a
// suite of finite-set functions. Source structures are enumerated when the
// subobject lattice is within `enum_cap`, otherwise sampled.
Report check_heredity_implication_chain(std::span<const FinFunction> fns,
                                        int enum_cap = 8);

}  // namespace nbhd
