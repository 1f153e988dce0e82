#include "nbhd/finset.hpp"

#include <algorithm>
#include <unordered_set>

namespace nbhd {

int FinSetObj::point_index(const std::string& p) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == p) return i;
  fail(ErrorCode::ForeignElement, "point '" + p + "'");
}

FinSetObj make_finset(std::vector<std::string> points) {
  std::unordered_set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second)
      fail(ErrorCode::SchemaError, "duplicate point '" + p + "'");
  return FinSetObj{std::move(points)};
}

FinFunction make_finfunction(FinSetObj dom, FinSetObj cod,
                             std::vector<int> map) {
  if (static_cast<int>(map.size()) != dom.size())
    fail(ErrorCode::SchemaError, "map must be total on the domain");
  for (int v : map)
    if (v < 0 || v >= cod.size())
      fail(ErrorCode::ForeignElement, "map value out of codomain");
  return FinFunction{std::move(dom), std::move(cod), std::move(map)};
}

FinFunction identity_fn(const FinSetObj& X) {
  std::vector<int> id(X.size());
  for (int i = 0; i < X.size(); ++i) id[i] = i;
  return FinFunction{X, X, std::move(id)};
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (!(f.cod == g.dom))
    fail(ErrorCode::CarrierMismatch, "composite domains do not match");
  std::vector<int> map(f.dom.size());
  for (int i = 0; i < f.dom.size(); ++i) map[i] = g.map[f.map[i]];
  return FinFunction{f.dom, g.cod, std::move(map)};
}

Mask fn_image_of(const FinFunction& f, Mask subset) {
  Mask out = 0;
  for (int i : mask_indices(subset)) out |= mask_bit(f.map[i]);
  return out;
}

Mask fn_preimage_of(const FinFunction& f, Mask subset) {
  Mask out = 0;
  for (int i = 0; i < f.dom.size(); ++i)
    if (mask_has(subset, f.map[i])) out |= mask_bit(i);
  return out;
}

static std::string subset_name(const FinSetObj& X, Mask points) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_indices(points)) {
    if (!first) out += ",";
    out += X.points[i];
    first = false;
  }
  return out + "}";
}

FiniteLattice powerset_lattice(const FinSetObj& X, int cap) {
  if (X.size() > cap)
    fail(ErrorCode::TooLarge,
         "powerset of " + std::to_string(X.size()) + " points exceeds cap " +
             std::to_string(cap));
  int n = 1 << X.size();
  std::vector<std::string> names(n);
  std::vector<Mask> up(n, 0);
  for (int s = 0; s < n; ++s) {
    names[s] = subset_name(X, static_cast<Mask>(s));
    for (int t = 0; t < n; ++t)
      if ((s & ~t) == 0) up[s] |= mask_bit(t);
  }
  return FiniteLattice::from_up_sets(std::move(names), std::move(up));
}

int subset_element(const FiniteLattice& P, Mask points) {
  int idx = static_cast<int>(points);
  if (idx < 0 || idx >= P.size())
    fail(ErrorCode::ForeignSubset, "subset out of range");
  return idx;
}

MorphismData to_morphism_data(const FinFunction& f, int cap) {
  FiniteLattice dom = powerset_lattice(f.dom, cap);
  FiniteLattice cod = powerset_lattice(f.cod, cap);
  std::vector<int> image(dom.size()), preimage(cod.size());
  for (int s = 0; s < dom.size(); ++s)
    image[s] = static_cast<int>(fn_image_of(f, static_cast<Mask>(s)));
  for (int t = 0; t < cod.size(); ++t)
    preimage[t] = static_cast<int>(fn_preimage_of(f, static_cast<Mask>(t)));
  return MorphismData{std::move(dom), std::move(cod), std::move(image),
                      std::move(preimage)};
}

static FinSetObj subset_object(const FinSetObj& X, Mask points) {
  std::vector<std::string> p;
  for (int i : mask_indices(points)) p.push_back(X.points[i]);
  return FinSetObj{std::move(p)};
}

EpiMonoFactorisation epi_mono_factorize(const FinFunction& f) {
  Mask image_mask = fn_image_of(f, f.dom.size() == 0
                                       ? 0
                                       : (Mask{1} << f.dom.size()) - 1);
  FinSetObj image = subset_object(f.cod, image_mask);
  std::vector<int> to_image(f.dom.size());
  for (int i = 0; i < f.dom.size(); ++i)
    to_image[i] = image.point_index(f.cod.points[f.map[i]]);
  std::vector<int> incl(image.size());
  for (int i = 0; i < image.size(); ++i)
    incl[i] = f.cod.point_index(image.points[i]);
  return EpiMonoFactorisation{image,
                              FinFunction{f.dom, image, std::move(to_image)},
                              FinFunction{image, f.cod, std::move(incl)}};
}

KernelPair kernel_pair(const FinFunction& f) {
  std::vector<std::string> names;
  std::vector<int> p1, p2;
  for (int a = 0; a < f.dom.size(); ++a)
    for (int b = 0; b < f.dom.size(); ++b)
      if (f.map[a] == f.map[b]) {
        names.push_back("(" + f.dom.points[a] + "," + f.dom.points[b] + ")");
        p1.push_back(a);
        p2.push_back(b);
      }
  FinSetObj K{std::move(names)};
  return KernelPair{K, FinFunction{K, f.dom, std::move(p1)},
                    FinFunction{K, f.dom, std::move(p2)}};
}

bool is_surjective(const FinFunction& f) {
  std::vector<bool> hit(f.cod.size(), false);
  for (int v : f.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(const FinFunction& f) {
  std::vector<bool> hit(f.cod.size(), false);
  for (int v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_regular_epi(const FinFunction& f) { return is_surjective(f); }

FinFunction restrict_along(const FinFunction& f, Mask cod_subset) {
  if (f.cod.size() < 64 && (cod_subset & ~((Mask{1} << f.cod.size()) - 1)))
    fail(ErrorCode::ForeignSubset, "subset not within the codomain");
  Mask dom_subset = fn_preimage_of(f, cod_subset);
  FinSetObj P = subset_object(f.dom, dom_subset);
  FinSetObj T = subset_object(f.cod, cod_subset);
  std::vector<int> map(P.size());
  for (int i = 0; i < P.size(); ++i)
    map[i] = T.point_index(f.cod.points[f.map[f.dom.point_index(P.points[i])]]);
  return FinFunction{std::move(P), std::move(T), std::move(map)};
}

bool is_in_E_stably(const FinFunction& f) {
  Mask all = f.cod.size() == 0 ? 0 : (Mask{1} << f.cod.size()) - 1;
  for (Mask t = 0;; ++t) {
    if (!is_surjective(restrict_along(f, t))) return false;
    if (t == all) break;
  }
  return true;
}

FrobeniusEquivalenceReport check_frobenius_equivalences(const FinFunction& f) {
  FrobeniusEquivalenceReport rep;
  MorphismData M = to_morphism_data(f);
  rep.frobenius_equation = is_frobenius(M);

  Mask dom_all = f.dom.size() == 0 ? 0 : (Mask{1} << f.dom.size()) - 1;
  Mask cod_all = f.cod.size() == 0 ? 0 : (Mask{1} << f.cod.size()) - 1;

  // (b) for every codomain subset T the square
  //     restrict-then-image = image-then-intersect commutes
  rep.beck_chevalley_squares = true;
  for (Mask t = 0;; ++t) {
    Mask p_of_t = fn_preimage_of(f, t);
    for (Mask x = 0;; ++x) {
      Mask lhs = t & fn_image_of(f, x);
      Mask rhs = fn_image_of(f, x & p_of_t);
      if (lhs != rhs) rep.beck_chevalley_squares = false;
      if (x == dom_all) break;
    }
    if (t == cod_all) break;
  }

  // (c) the comparison map w : P ∩ f⁻¹(T) -> T ∩ f(P) is surjective
  rep.comparison_in_E = true;
  for (Mask t = 0;; ++t) {
    for (Mask p = 0;; ++p) {
      Mask source = p & fn_preimage_of(f, t);
      Mask target = t & fn_image_of(f, p);
      if (fn_image_of(f, source) != target) rep.comparison_in_E = false;
      if (p == dom_all) break;
    }
    if (t == cod_all) break;
  }
  return rep;
}

}  // namespace nbhd
