#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/filter.hpp"

namespace nbhd {

// The fibration-level view of a morphism f: X -> Y, i.e. the adjoint pair
// image ⊣ preimage between the subobject lattices Sub(X) and Sub(Y). Both
// maps are stored even though each determines the other; ingested data may
// be wrong and we want precise diagnostics.
struct MorphismData {
  FiniteLattice dom;          // Sub(X)
  FiniteLattice cod;          // Sub(Y)
  std::vector<int> image;     // dom -> cod, left adjoint
  std::vector<int> preimage;  // cod -> dom, right adjoint
};

struct CheckItem {
  std::string check;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct ValidationReport {
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
};

// Verifies monotonicity, the adjunction, and its order-theoretic
// consequences (unit/counit inequalities, join/meet preservation,
// preimage(top)=top, image(bottom)=bottom). Report-valued.
ValidationReport check_morphism_data(const MorphismData& M);

// Validating constructor; throws NotAMorphism with the first failed law.
MorphismData make_morphism_data(FiniteLattice dom, FiniteLattice cod,
                                std::vector<int> image,
                                std::vector<int> preimage);

MorphismData identity_morphism_data(const FiniteLattice& L);
// Composite of g after f (f: X->Y, g: Y->Z).
MorphismData compose(const MorphismData& g, const MorphismData& f);

// Witness that the preimage preserves all joins: the right adjoint of the
// preimage, built as f!(x) = join{ y : preimage(y) <= x }.
struct PpjWitness {
  MorphismData morphism;
  std::vector<int> right_adjoint;  // dom -> cod
};

std::optional<PpjWitness> is_ppj(const MorphismData& M);
// Witness subset on which the preimage fails to preserve the join.
std::optional<Mask> ppj_failure_witness(const MorphismData& M);

// Forward filter of A under f: { y : preimage(y) ∈ A }, the smallest
// filter containing the images of members of A.
Filter forward_filter(const MorphismData& M, const Filter& A);
// Inverse filter of B under f: up-closure of { preimage(b) : b ∈ B }.
Filter inverse_filter(const MorphismData& M, const Filter& B);

// inverse_filter ⊣ forward_filter, checked over all filter pairs.
bool check_filter_galois(const MorphismData& M);

// Right adjoint of forward_filter, defined when the image preserves finite
// meets: { x : image(x) ∈ B }. Throws ImageNotMeetPreserving otherwise.
Filter big_image_filter(const MorphismData& M, const Filter& B);

// Left adjoint of inverse_filter, available under ppj:
// { y : exists a ∈ A with f!(a) <= y }.
Filter inv_filter_left_adjoint(const PpjWitness& W, const Filter& A);

// Frobenius law: image(preimage(y) ∧ x) = y ∧ image(x) for all x, y.
bool is_frobenius(const MorphismData& M);
std::optional<std::pair<int, int>> frobenius_counterexample(
    const MorphismData& M);

}  // namespace nbhd
