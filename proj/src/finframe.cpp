#include "nbhd/finframe.hpp"

#include <stdexcept>

#include "nbhd/space_morphism.hpp"

namespace nbhd {

FiniteFrame make_frame(FiniteLattice L) {
  int n = L.size();
  std::vector<int> imp(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask below = 0;
      for (int c = 0; c < n; ++c)
        if (L.leq(L.meet(c, a), b)) below |= mask_bit(c);
      imp[a * n + b] = L.join_all(below);
    }
  return make_frame_with_imp(std::move(L), std::move(imp));
}

FiniteFrame make_frame_with_imp(FiniteLattice L, std::vector<int> imp) {
  int n = L.size();
  if (static_cast<int>(imp.size()) != n * n)
    fail(ErrorCode::SchemaError, "implication table must be total");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        if (L.leq(L.meet(x, a), b) != L.leq(x, imp[a * n + b]))
          fail(ErrorCode::NotALattice,
               "residuation fails at (" + L.name(x) + ", " + L.name(a) + ", " +
                   L.name(b) + ")");
  return FiniteFrame{std::move(L), std::move(imp)};
}

bool is_sublocale_mask(const FiniteFrame& F, Mask carrier) {
  const FiniteLattice& L = F.lattice;
  if ((carrier & ~L.all_mask()) != 0) return false;
  if (!mask_has(carrier, L.top())) return false;
  for (int s : mask_indices(carrier)) {
    for (int t : mask_indices(carrier))
      if (!mask_has(carrier, L.meet(s, t))) return false;
    for (int a = 0; a < L.size(); ++a)
      if (!mask_has(carrier, F.imp_of(a, s))) return false;
  }
  return true;
}

Sublocale make_sublocale(const FiniteFrame& F, Mask carrier) {
  F.lattice.check_subset(carrier);
  if (!is_sublocale_mask(F, carrier))
    fail(ErrorCode::NotALattice, "not a sublocale: " +
                                     mask_to_string(F.lattice, carrier));
  return Sublocale{F, carrier};
}

Sublocale open_sublocale(const FiniteFrame& F, int a) {
  const FiniteLattice& L = F.lattice;
  if (a < 0 || a >= L.size()) fail(ErrorCode::ForeignElement, "index");
  Mask carrier = 0;
  for (int b = 0; b < L.size(); ++b) carrier |= mask_bit(F.imp_of(a, b));
  return make_sublocale(F, carrier);
}

Mask sublocale_meet_mask(const FiniteFrame&, Mask s, Mask t) { return s & t; }

Mask smallest_sublocale_containing(const FiniteFrame& F, Mask subset) {
  const FiniteLattice& L = F.lattice;
  Mask out = subset | mask_bit(L.top());
  bool changed = true;
  while (changed) {
    changed = false;
    Mask next = out;
    for (int s : mask_indices(out)) {
      for (int t : mask_indices(out)) next |= mask_bit(L.meet(s, t));
      for (int a = 0; a < L.size(); ++a) next |= mask_bit(F.imp_of(a, s));
    }
    if (next != out) {
      out = next;
      changed = true;
    }
  }
  return out;
}

Mask sublocale_join_mask(const FiniteFrame& F, Mask s, Mask t) {
  return smallest_sublocale_containing(F, s | t);
}

SublocaleLattice all_sublocales(const FiniteFrame& F, int cap) {
  const FiniteLattice& L = F.lattice;
  if (L.size() > cap)
    fail(ErrorCode::TooLarge,
         "sublocale enumeration capped at " + std::to_string(cap) +
             " frame elements");
  SublocaleLattice out;
  out.frame = F;
  for (Mask m = 0;; ++m) {
    if (is_sublocale_mask(F, m)) out.carriers.push_back(m);
    if (m == L.all_mask()) break;
  }
  int k = static_cast<int>(out.carriers.size());
  std::vector<std::string> names(k);
  std::vector<Mask> up(k, 0);
  for (int i = 0; i < k; ++i) {
    names[i] = mask_to_string(L, out.carriers[i]);
    for (int j = 0; j < k; ++j)
      if ((out.carriers[i] & ~out.carriers[j]) == 0) up[i] |= mask_bit(j);
  }
  out.lattice = FiniteLattice::from_up_sets(std::move(names), std::move(up));
  if (!is_coframe(out.lattice))
    throw std::logic_error("sublocale lattice fails the coframe law");
  return out;
}

int SublocaleLattice::index_of(Mask carrier) const {
  for (int i = 0; i < static_cast<int>(carriers.size()); ++i)
    if (carriers[i] == carrier) return i;
  fail(ErrorCode::ForeignElement, "no such sublocale");
}

LocalicMap make_localic(FiniteFrame X, FiniteFrame Y,
                        std::vector<int> frame_hom) {
  const FiniteLattice& LX = X.lattice;
  const FiniteLattice& LY = Y.lattice;
  if (static_cast<int>(frame_hom.size()) != LY.size())
    fail(ErrorCode::SchemaError, "frame homomorphism must be total");
  for (int v : frame_hom)
    if (v < 0 || v >= LX.size())
      fail(ErrorCode::ForeignElement, "frame homomorphism value");
  if (frame_hom[LY.top()] != LX.top())
    fail(ErrorCode::NotAMorphism, "frame hom must preserve the top");
  if (frame_hom[LY.bottom()] != LX.bottom())
    fail(ErrorCode::NotAMorphism, "frame hom must preserve the bottom");
  for (int a = 0; a < LY.size(); ++a)
    for (int b = 0; b < LY.size(); ++b) {
      if (frame_hom[LY.meet(a, b)] != LX.meet(frame_hom[a], frame_hom[b]))
        fail(ErrorCode::NotAMorphism,
             "frame hom must preserve meets; fails at (" + LY.name(a) + ", " +
                 LY.name(b) + ")");
      if (frame_hom[LY.join(a, b)] != LX.join(frame_hom[a], frame_hom[b]))
        fail(ErrorCode::NotAMorphism,
             "frame hom must preserve joins; fails at (" + LY.name(a) + ", " +
                 LY.name(b) + ")");
    }
  // localic direction: right adjoint of the frame hom
  std::vector<int> localic(LX.size());
  for (int x = 0; x < LX.size(); ++x) {
    Mask below = 0;
    for (int y = 0; y < LY.size(); ++y)
      if (LX.leq(frame_hom[y], x)) below |= mask_bit(y);
    localic[x] = LY.join_all(below);
  }
  for (int y = 0; y < LY.size(); ++y)
    for (int x = 0; x < LX.size(); ++x)
      if (LX.leq(frame_hom[y], x) != LY.leq(y, localic[x]))
        throw std::logic_error("frame hom has no right adjoint");
  return LocalicMap{std::move(X), std::move(Y), std::move(frame_hom),
                    std::move(localic)};
}

LocalicMap identity_localic(const FiniteFrame& F) {
  std::vector<int> id(F.lattice.size());
  for (int i = 0; i < F.lattice.size(); ++i) id[i] = i;
  return make_localic(F, F, std::move(id));
}

LocalicMap compose(const LocalicMap& g, const LocalicMap& f) {
  if (!(f.cod == g.dom))
    fail(ErrorCode::CarrierMismatch, "composite frames do not match");
  std::vector<int> hom(g.cod.lattice.size());
  for (int z = 0; z < g.cod.lattice.size(); ++z)
    hom[z] = f.frame_hom[g.frame_hom[z]];
  return make_localic(f.dom, g.cod, std::move(hom));
}

Sublocale localic_preimage(const LocalicMap& m, const SublocaleLattice& SX,
                           const Sublocale& S) {
  if (!(S.frame == m.cod))
    fail(ErrorCode::CarrierMismatch, "sublocale not on the codomain frame");
  if (!(SX.frame == m.dom))
    fail(ErrorCode::CarrierMismatch, "sublocale lattice not on the domain");
  // set preimage under the localic direction; it is meet-closed since the
  // right adjoint preserves meets
  Mask set_preimage = 0;
  for (int x = 0; x < m.dom.lattice.size(); ++x)
    if (mask_has(S.carrier, m.localic[x])) set_preimage |= mask_bit(x);
  Mask un = 0;
  for (Mask c : SX.carriers)
    if ((c & ~set_preimage) == 0) un |= c;
  // meets-closure of the union of all sublocales inside; stays inside
  Mask out = un | mask_bit(m.dom.lattice.top());
  bool changed = true;
  while (changed) {
    changed = false;
    Mask next = out;
    for (int s : mask_indices(out))
      for (int t : mask_indices(out)) next |= mask_bit(m.dom.lattice.meet(s, t));
    if (next != out) {
      out = next;
      changed = true;
    }
  }
  if ((out & ~set_preimage) != 0 || !is_sublocale_mask(m.dom, out))
    throw std::logic_error("largest sublocale inside the preimage escaped");
  return Sublocale{m.dom, out};
}

Sublocale localic_image(const LocalicMap& m, const Sublocale& S) {
  if (!(S.frame == m.dom))
    fail(ErrorCode::CarrierMismatch, "sublocale not on the domain frame");
  Mask set_image = 0;
  for (int x : mask_indices(S.carrier)) set_image |= mask_bit(m.localic[x]);
  return Sublocale{m.cod, smallest_sublocale_containing(m.cod, set_image)};
}

MorphismData localic_morphism_data(const LocalicMap& m,
                                   const SublocaleLattice& SX,
                                   const SublocaleLattice& SY) {
  std::vector<int> image(SX.lattice.size()), preimage(SY.lattice.size());
  for (int i = 0; i < SX.lattice.size(); ++i)
    image[i] =
        SY.index_of(localic_image(m, Sublocale{m.dom, SX.carriers[i]}).carrier);
  for (int j = 0; j < SY.lattice.size(); ++j)
    preimage[j] = SX.index_of(
        localic_preimage(m, SX, Sublocale{m.cod, SY.carriers[j]}).carrier);
  return make_morphism_data(SX.lattice, SY.lattice, std::move(image),
                            std::move(preimage));
}

PreNbhd natural_topology(const SublocaleLattice& SL) {
  const FiniteFrame& F = SL.frame;
  int k = SL.lattice.size();
  std::vector<Mask> open_carriers;
  for (int a = 0; a < F.lattice.size(); ++a)
    open_carriers.push_back(open_sublocale(F, a).carrier);
  std::vector<Mask> assign(k, 0);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      for (Mask oc : open_carriers)
        if ((SL.carriers[s] & ~oc) == 0 && (oc & ~SL.carriers[t]) == 0) {
          assign[s] |= mask_bit(t);
          break;
        }
    }
  return make_prenbhd(SL.lattice, std::move(assign));
}

RightInverseReport check_right_inverse(std::span<const LocalicMap> maps,
                                       int cap) {
  RightInverseReport rep;
  int idx = 0;
  for (const LocalicMap& m : maps) {
    SublocaleLattice SX = all_sublocales(m.dom, cap);
    SublocaleLattice SY = all_sublocales(m.cod, cap);
    MorphismData M = localic_morphism_data(m, SX, SY);
    bool ok = is_prenbhd_morphism(M, natural_topology(SX), natural_topology(SY));
    rep.items.push_back({"map #" + std::to_string(idx) +
                             " preserves the natural structures",
                         ok, ""});
    ++idx;
  }
  // functoriality: consecutive composable pairs compose at the
  // subobject-lattice level
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    const LocalicMap& f = maps[i];
    const LocalicMap& g = maps[i + 1];
    if (!(f.cod == g.dom)) continue;
    SublocaleLattice SX = all_sublocales(f.dom, cap);
    SublocaleLattice SY = all_sublocales(f.cod, cap);
    SublocaleLattice SZ = all_sublocales(g.cod, cap);
    MorphismData Mf = localic_morphism_data(f, SX, SY);
    MorphismData Mg = localic_morphism_data(g, SY, SZ);
    MorphismData Mgf = localic_morphism_data(compose(g, f), SX, SZ);
    bool ok = Mgf.image == compose(Mg, Mf).image &&
              Mgf.preimage == compose(Mg, Mf).preimage;
    rep.items.push_back({"maps #" + std::to_string(i) + ";#" +
                             std::to_string(i + 1) + " compose functorially",
                         ok, ""});
  }
  return rep;
}

}  // namespace nbhd
