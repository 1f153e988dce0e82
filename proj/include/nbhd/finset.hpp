#pragma once

#include <string>
#include <vector>

#include "nbhd/morphism_data.hpp"
#include "nbhd/prenbhd.hpp"

namespace nbhd {

// Finite sets with the usual surjective/injective factorisation: the
// concrete base category for the regular-epi and heredity analyses.
struct FinSetObj {
  std::vector<std::string> points;

  int size() const { return static_cast<int>(points.size()); }
  int point_index(const std::string& p) const;  // ForeignElement
  bool operator==(const FinSetObj& o) const { return points == o.points; }
};

FinSetObj make_finset(std::vector<std::string> points);  // distinct names

struct FinFunction {
  FinSetObj dom, cod;
  std::vector<int> map;  // total, dom point index -> cod point index

  int apply(int i) const { return map[i]; }
};

FinFunction make_finfunction(FinSetObj dom, FinSetObj cod,
                             std::vector<int> map);
FinFunction identity_fn(const FinSetObj& X);
FinFunction compose(const FinFunction& g, const FinFunction& f);

// Point subsets are masks over point indices.
Mask fn_image_of(const FinFunction& f, Mask subset);     // direct image
Mask fn_preimage_of(const FinFunction& f, Mask subset);  // inverse image

// The complete atomic Boolean algebra of subsets, with canonical element
// names (sorted point lists) so lattices and reports are reproducible.
// Default cap keeps 2^|X| desk-sized.
FiniteLattice powerset_lattice(const FinSetObj& X, int cap = 6);

// Index of a point-subset in the powerset lattice (identical to the mask
// value by construction; kept explicit).
int subset_element(const FiniteLattice& P, Mask points);

MorphismData to_morphism_data(const FinFunction& f, int cap = 6);

struct EpiMonoFactorisation {
  FinSetObj image;
  FinFunction e;  // dom -> image, surjective
  FinFunction m;  // image -> cod, injective
};
EpiMonoFactorisation epi_mono_factorize(const FinFunction& f);

struct KernelPair {
  FinSetObj obj;  // pairs (x, x') with f(x) = f(x')
  FinFunction p1, p2;
};
KernelPair kernel_pair(const FinFunction& f);

bool is_surjective(const FinFunction& f);
bool is_injective(const FinFunction& f);
bool is_regular_epi(const FinFunction& f);  // in Set: surjective

// Restriction of f to a codomain subset t: f_t from f^{-1}(T) to T.
FinFunction restrict_along(const FinFunction& f, Mask cod_subset);

// Stably in E: every restriction f_t is surjective.
bool is_in_E_stably(const FinFunction& f);

// The three equivalent Frobenius formulations, evaluated separately on a
// concrete function: (a) the image/preimage equation, (b) the
// Beck-Chevalley squares over every codomain subset, (c) the comparison
// map into each pullback corner lies in E. The verdicts must agree.
struct FrobeniusEquivalenceReport {
  bool frobenius_equation = false;
  bool beck_chevalley_squares = false;
  bool comparison_in_E = false;
  bool agree() const {
    return frobenius_equation == beck_chevalley_squares &&
           beck_chevalley_squares == comparison_in_E;
  }
};
FrobeniusEquivalenceReport check_frobenius_equivalences(const FinFunction& f);

}  // namespace nbhd
