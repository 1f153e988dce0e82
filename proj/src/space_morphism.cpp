#include "nbhd/space_morphism.hpp"

#include <stdexcept>

namespace nbhd {

SpaceMorphism make_space_morphism(MorphismData data, PreNbhd src,
                                  PreNbhd dst) {
  if (!data.dom.same_carrier(src.carrier) ||
      !data.cod.same_carrier(dst.carrier))
    fail(ErrorCode::CarrierMismatch,
         "structures do not match the morphism's subobject lattices");
  return SpaceMorphism{std::move(data), std::move(src), std::move(dst),
                       std::nullopt};
}

SpaceMorphism space_morphism_from_fn(const FinFunction& f, PreNbhd src,
                                     PreNbhd dst) {
  SpaceMorphism sm =
      make_space_morphism(to_morphism_data(f), std::move(src), std::move(dst));
  sm.fn = f;
  return sm;
}

bool is_prenbhd_morphism(const MorphismData& M, const PreNbhd& src,
                         const PreNbhd& dst) {
  if (!M.dom.same_carrier(src.carrier) || !M.cod.same_carrier(dst.carrier))
    fail(ErrorCode::CarrierMismatch, "structure carriers do not match");

  // (a) definitional: p in dst(n) implies preimage(p) in src(preimage(n))
  bool a = true;
  for (int n = 0; n < M.cod.size() && a; ++n)
    for (int p : mask_indices(dst.assign[n]))
      if (!src.member(M.preimage[n], M.preimage[p])) {
        a = false;
        break;
      }

  // (b) inverse_filter(dst(n)) subset of src(preimage(n))
  bool b = true;
  for (int n = 0; n < M.cod.size() && b; ++n) {
    Filter inv = inverse_filter(M, Filter{M.cod, dst.assign[n]});
    if ((inv.members & ~src.assign[M.preimage[n]]) != 0) b = false;
  }

  // (c) dst(n) subset of forward_filter(src(preimage(n)))
  bool c = true;
  for (int n = 0; n < M.cod.size() && c; ++n) {
    Filter fwd = forward_filter(M, Filter{M.dom, src.assign[M.preimage[n]]});
    if ((dst.assign[n] & ~fwd.members) != 0) c = false;
  }

  // (d) inverse_filter(dst(image(m))) subset of src(m)
  bool d = true;
  for (int m = 0; m < M.dom.size() && d; ++m) {
    Filter inv = inverse_filter(M, Filter{M.cod, dst.assign[M.image[m]]});
    if ((inv.members & ~src.assign[m]) != 0) d = false;
  }

  if (a != b || b != c || c != d)
    throw std::logic_error("preneighbourhood-morphism formulations disagree");
  return a;
}

bool is_prenbhd_morphism(const SpaceMorphism& sm) {
  return is_prenbhd_morphism(sm.data, sm.src, sm.dst);
}

PreNbhd initial_structure(const MorphismData& M, const PreNbhd& phi) {
  if (!M.cod.same_carrier(phi.carrier))
    fail(ErrorCode::CarrierMismatch, "structure not on the codomain lattice");
  std::vector<Mask> assign(M.dom.size());
  for (int m = 0; m < M.dom.size(); ++m)
    assign[m] =
        inverse_filter(M, Filter{M.cod, phi.assign[M.image[m]]}).members;
  return make_prenbhd(M.dom, std::move(assign));
}

PreNbhd quotient_structure(const MorphismData& M, const PreNbhd& gamma) {
  if (!M.dom.same_carrier(gamma.carrier))
    fail(ErrorCode::CarrierMismatch, "structure not on the domain lattice");
  std::vector<Mask> assign(M.cod.size(), 0);
  for (int y = 0; y < M.cod.size(); ++y)
    for (int v : mask_indices(M.cod.up_set(y)))
      if (gamma.member(M.preimage[y], M.preimage[v]))
        assign[y] |= mask_bit(v);
  return make_prenbhd(M.cod, std::move(assign));
}

SpaceMorphism weak_reflection_factor(const SpaceMorphism& sm) {
  if (!class_at_least(classify(sm.dst), StructureClass::Weak))
    fail(ErrorCode::WrongClass, "destination structure is not weak");
  if (!is_prenbhd_morphism(sm))
    fail(ErrorCode::NotAMorphism, "not a preneighbourhood morphism");
  SpaceMorphism out = sm;
  out.src = reflect_weak(sm.src);
  if (!is_prenbhd_morphism(out))
    throw std::logic_error("weak reflection failed to factor");
  return out;
}

SpaceMorphism nbhd_reflection_factor(const SpaceMorphism& sm) {
  if (!class_at_least(classify(sm.src), StructureClass::Weak))
    fail(ErrorCode::WrongClass, "source structure is not weak");
  if (!class_at_least(classify(sm.dst), StructureClass::Nbhd))
    fail(ErrorCode::WrongClass, "destination structure is not a neighbourhood");
  if (!is_ppj(sm.data))
    fail(ErrorCode::NoPpjWitness, "preimage does not preserve joins");
  if (!is_prenbhd_morphism(sm))
    fail(ErrorCode::NotAMorphism, "not a preneighbourhood morphism");
  SpaceMorphism out = sm;
  out.src = reflect_nbhd(sm.src);
  if (!is_prenbhd_morphism(out))
    throw std::logic_error("neighbourhood reflection failed to factor");
  return out;
}

static const FinFunction& require_backend(const SpaceMorphism& sm) {
  if (!sm.fn)
    fail(ErrorCode::BackendRequired,
         "regular-epi analysis needs a concrete finite-set function");
  return *sm.fn;
}

bool is_regular_epi_pnhd(const SpaceMorphism& sm) {
  const FinFunction& f = require_backend(sm);
  if (!is_regular_epi(f)) return false;
  PreNbhd q = quotient_structure(sm.data, sm.src);
  bool result = sm.dst == q;
  if (result && is_in_E_stably(f)) {
    // stably-in-E gives the simple description: membership transports
    // along preimage with no side condition
    for (int y = 0; y < sm.data.cod.size(); ++y)
      for (int u = 0; u < sm.data.cod.size(); ++u) {
        bool lhs = sm.dst.member(y, u);
        bool rhs = sm.src.member(sm.data.preimage[y], sm.data.preimage[u]);
        if (lhs != rhs)
          throw std::logic_error("simple regular-epi description violated");
      }
  }
  return result;
}

// Restriction of the whole bundle to a codomain point-subset, with the
// induced structures on both sides.
static SpaceMorphism restrict_bundle(const SpaceMorphism& sm, Mask t_points) {
  const FinFunction& f = *sm.fn;
  FinFunction ft = restrict_along(f, t_points);
  Mask p_points = fn_preimage_of(f, t_points);
  InducedSubstructure gp =
      induced_substructure(sm.src, subset_element(sm.data.dom, p_points));
  InducedSubstructure pt =
      induced_substructure(sm.dst, subset_element(sm.data.cod, t_points));
  return space_morphism_from_fn(ft, gp.structure, pt.structure);
}

bool is_hereditary_regular_epi(const SpaceMorphism& sm) {
  const FinFunction& f = require_backend(sm);
  Mask cod_all = f.cod.size() == 0 ? 0 : (Mask{1} << f.cod.size()) - 1;

  bool definitional = true;
  for (Mask t = 0;; ++t) {
    if (!is_regular_epi_pnhd(restrict_bundle(sm, t))) definitional = false;
    if (t == cod_all) break;
  }

  // formula route: each restriction surjective plus the displayed
  // implication between the induced-structure memberships
  bool formula = true;
  for (Mask t = 0; formula; ++t) {
    if (!is_surjective(restrict_along(f, t))) {
      formula = false;
      break;
    }
    Mask finv_t = fn_preimage_of(f, t);
    for (Mask u = t;; u = (u - 1) & t) {  // u ranges over subsets of t
      for (Mask v = t;; v = (v - 1) & t) {
        int ue = subset_element(sm.data.cod, u);
        bool lhs = false;
        for (int p : mask_indices(sm.src.assign[sm.data.preimage[ue]])) {
          // powerset lattices index elements by their point mask
          Mask p_points = static_cast<Mask>(p);
          if ((fn_image_of(f, finv_t & p_points) & ~v) == 0) {
            lhs = true;
            break;
          }
        }
        bool rhs = false;
        for (int q : mask_indices(sm.dst.assign[ue])) {
          if (((t & static_cast<Mask>(q)) & ~v) == 0) {
            rhs = true;
            break;
          }
        }
        if (lhs && !rhs) formula = false;
        if (v == 0) break;
      }
      if (u == 0) break;
    }
    if (t == cod_all) break;
  }

  if (definitional != formula)
    throw std::logic_error("heredity computations disagree");
  return definitional;
}

bool is_pseudo_open(const SpaceMorphism& sm) {
  for (int y = 0; y < sm.data.cod.size(); ++y)
    for (int u : mask_indices(sm.src.assign[sm.data.preimage[y]]))
      if (!sm.dst.member(y, sm.data.image[u])) return false;
  return true;
}

bool is_regular_epi_nhd(const SpaceMorphism& sm) {
  if (!class_at_least(classify(sm.src), StructureClass::Nbhd) ||
      !class_at_least(classify(sm.dst), StructureClass::Nbhd))
    fail(ErrorCode::WrongClass, "both structures must be neighbourhoods");
  if (!is_ppj(sm.data))
    fail(ErrorCode::NoPpjWitness, "preimage does not preserve joins");
  const FinFunction& f = require_backend(sm);
  if (!is_regular_epi(f)) return false;
  return sm.dst == quotient_structure(sm.data, sm.src);
}

static bool hereditary_in_nhd(const SpaceMorphism& sm) {
  // regular epi of neighbourhood spaces whose every restriction is a
  // regular epi of structured spaces
  if (!is_regular_epi_nhd(sm)) return false;
  const FinFunction& f = *sm.fn;
  Mask cod_all = f.cod.size() == 0 ? 0 : (Mask{1} << f.cod.size()) - 1;
  for (Mask t = 0;; ++t) {
    if (!is_regular_epi_pnhd(restrict_bundle(sm, t))) return false;
    if (t == cod_all) break;
  }
  return true;
}

Report check_nhd_heredity_conditions(const SpaceMorphism& sm) {
  const FinFunction& f = require_backend(sm);
  if (!class_at_least(classify(sm.src), StructureClass::Nbhd) ||
      !class_at_least(classify(sm.dst), StructureClass::Nbhd))
    fail(ErrorCode::WrongClass, "both structures must be neighbourhoods");

  Report rep;
  Mask cod_all = f.cod.size() == 0 ? 0 : (Mask{1} << f.cod.size()) - 1;
  bool restrictions_regepi = true, restrictions_in_E = true;
  for (Mask t = 0;; ++t) {
    FinFunction ft = restrict_along(f, t);
    if (!is_regular_epi(ft)) restrictions_regepi = false;
    if (!is_surjective(ft)) restrictions_in_E = false;
    if (t == cod_all) break;
  }
  bool her = hereditary_in_nhd(sm);
  bool regepi_pre = is_regular_epi_pnhd(sm);
  bool frob = is_frobenius(sm.data);
  bool pseudo = is_pseudo_open(sm);

  rep.items.push_back(
      {"(a) hereditary in NHD implies regular epi of pNHD with every "
       "restriction a regular epi",
       !her || (regepi_pre && restrictions_regepi), ""});
  rep.items.push_back(
      {"(b) Frobenius + restrictions regular epi + regular epi of pNHD "
       "implies hereditary in NHD",
       !(frob && restrictions_regepi && regepi_pre) || her, ""});
  bool c_applicable = is_regular_epi(f) && restrictions_in_E;
  rep.items.push_back(
      {"(c) given a regular epi with restrictions in E: regular epi of pNHD "
       "iff pseudo open",
       !c_applicable || (regepi_pre == pseudo), ""});
  return rep;
}

Report check_heredity_implication_chain(std::span<const FinFunction> fns,
                                        int enum_cap) {
  Report rep;
  bool e_stable = true, e_hereditary = true, all_frobenius = true;
  bool e_frobenius = true, regepi_frobenius = true, regepi_hereditary = true;
  for (const FinFunction& f : fns) {
    bool surj = is_surjective(f);
    if (surj && !is_in_E_stably(f)) e_stable = false;
    if (surj) {
      // heredity of E: restrictions of E-morphisms stay in E
      Mask all = f.cod.size() == 0 ? 0 : (Mask{1} << f.cod.size()) - 1;
      for (Mask t = 0;; ++t) {
        if (!is_surjective(restrict_along(f, t))) e_hereditary = false;
        if (t == all) break;
      }
    }
    MorphismData M = to_morphism_data(f);
    bool frob = is_frobenius(M);
    if (!frob) all_frobenius = false;
    if (surj && !frob) {
      e_frobenius = false;
      regepi_frobenius = false;
    }
    if (surj) {
      std::vector<PreNbhd> sources;
      if ((1 << f.dom.size()) <= enum_cap)
        sources = enumerate_structures(M.dom, StructureClass::Pre, enum_cap);
      else
        sources = {nabla(M.dom), atleast(M.dom)};
      for (const PreNbhd& gamma : sources) {
        SpaceMorphism sm = space_morphism_from_fn(
            f, gamma, quotient_structure(M, gamma));
        if (!is_hereditary_regular_epi(sm)) regepi_hereditary = false;
      }
    }
  }
  rep.items.push_back({"(a) E stable under pullbacks", e_stable, ""});
  rep.items.push_back({"(b) E hereditary", e_hereditary, ""});
  rep.items.push_back({"(c) every morphism Frobenius", all_frobenius, ""});
  rep.items.push_back({"(a) implies (b)", !e_stable || e_hereditary, ""});
  rep.items.push_back(
      {"(b) iff (c)", e_hereditary == all_frobenius, ""});
  rep.items.push_back(
      {"(c) implies every E-morphism Frobenius", !all_frobenius || e_frobenius,
       ""});
  rep.items.push_back({"E-Frobenius implies regepi-Frobenius",
                       !e_frobenius || regepi_frobenius, ""});
  rep.items.push_back(
      {"regepi-Frobenius implies regular epis of structured spaces "
       "hereditary",
       !regepi_frobenius || regepi_hereditary, ""});
  return rep;
}

}  // namespace nbhd
