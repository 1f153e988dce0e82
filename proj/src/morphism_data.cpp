#include "nbhd/morphism_data.hpp"

namespace nbhd {

static std::string pair_witness(const FiniteLattice& A, int a,
                                const FiniteLattice& B, int b) {
  return "(" + A.name(a) + ", " + B.name(b) + ")";
}

ValidationReport check_morphism_data(const MorphismData& M) {
  ValidationReport rep;
  const auto& D = M.dom;
  const auto& C = M.cod;
  int nd = D.size(), nc = C.size();
  auto add = [&rep](std::string check, bool pass, std::string witness = "") {
    rep.items.push_back({std::move(check), pass, std::move(witness)});
  };

  if (static_cast<int>(M.image.size()) != nd ||
      static_cast<int>(M.preimage.size()) != nc) {
    add("totality", false, "image/preimage table size mismatch");
    return rep;
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < nd && ok; ++a)
      for (int b = 0; b < nd && ok; ++b)
        if (D.leq(a, b) && !C.leq(M.image[a], M.image[b])) {
          ok = false;
          w = pair_witness(D, a, D, b);
        }
    add("image monotone", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < nc && ok; ++a)
      for (int b = 0; b < nc && ok; ++b)
        if (C.leq(a, b) && !D.leq(M.preimage[a], M.preimage[b])) {
          ok = false;
          w = pair_witness(C, a, C, b);
        }
    add("preimage monotone", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < nd && ok; ++m)
      for (int n = 0; n < nc && ok; ++n)
        if (C.leq(M.image[m], n) != D.leq(m, M.preimage[n])) {
          ok = false;
          w = pair_witness(D, m, C, n);
        }
    add("adjunction image ⊣ preimage", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < nd && ok; ++m)
      if (!D.leq(m, M.preimage[M.image[m]])) {
        ok = false;
        w = D.name(m);
      }
    add("m <= preimage(image(m))", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int n = 0; n < nc && ok; ++n)
      if (!C.leq(M.image[M.preimage[n]], n)) {
        ok = false;
        w = C.name(n);
      }
    add("image(preimage(n)) <= n", ok, w);
  }
  add("preimage(top) = top", M.preimage[C.top()] == D.top());
  add("image(bottom) = bottom", M.image[D.bottom()] == C.bottom());
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < nd && ok; ++a)
      for (int b = 0; b < nd && ok; ++b)
        if (M.image[D.join(a, b)] != C.join(M.image[a], M.image[b])) {
          ok = false;
          w = pair_witness(D, a, D, b);
        }
    add("image preserves joins", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < nc && ok; ++a)
      for (int b = 0; b < nc && ok; ++b)
        if (M.preimage[C.meet(a, b)] != D.meet(M.preimage[a], M.preimage[b])) {
          ok = false;
          w = pair_witness(C, a, C, b);
        }
    add("preimage preserves meets", ok, w);
  }
  return rep;
}

MorphismData make_morphism_data(FiniteLattice dom, FiniteLattice cod,
                                std::vector<int> image,
                                std::vector<int> preimage) {
  MorphismData M{std::move(dom), std::move(cod), std::move(image),
                 std::move(preimage)};
  auto rep = check_morphism_data(M);
  if (const CheckItem* f = rep.first_failure())
    fail(ErrorCode::NotAMorphism, f->check + " fails at " + f->witness);
  return M;
}

MorphismData identity_morphism_data(const FiniteLattice& L) {
  std::vector<int> id(L.size());
  for (int i = 0; i < L.size(); ++i) id[i] = i;
  return MorphismData{L, L, id, id};
}

MorphismData compose(const MorphismData& g, const MorphismData& f) {
  if (!f.cod.same_carrier(g.dom))
    fail(ErrorCode::CarrierMismatch, "composite domains do not match");
  std::vector<int> image(f.dom.size()), preimage(g.cod.size());
  for (int i = 0; i < f.dom.size(); ++i) image[i] = g.image[f.image[i]];
  for (int i = 0; i < g.cod.size(); ++i) preimage[i] = f.preimage[g.preimage[i]];
  return MorphismData{f.dom, g.cod, std::move(image), std::move(preimage)};
}

std::optional<Mask> ppj_failure_witness(const MorphismData& M) {
  const auto& D = M.dom;
  const auto& C = M.cod;
  if (M.preimage[C.bottom()] != D.bottom())
    return Mask{0};  // empty join not preserved
  for (int a = 0; a < C.size(); ++a)
    for (int b = 0; b < C.size(); ++b)
      if (M.preimage[C.join(a, b)] != D.join(M.preimage[a], M.preimage[b]))
        return mask_bit(a) | mask_bit(b);
  return std::nullopt;
}

std::optional<PpjWitness> is_ppj(const MorphismData& M) {
  if (ppj_failure_witness(M)) return std::nullopt;
  const auto& D = M.dom;
  const auto& C = M.cod;
  std::vector<int> radj(D.size());
  for (int x = 0; x < D.size(); ++x) {
    Mask below = 0;
    for (int y = 0; y < C.size(); ++y)
      if (D.leq(M.preimage[y], x)) below |= mask_bit(y);
    radj[x] = C.join_all(below);
  }
  // adjunction preimage ⊣ right_adjoint, exhaustively
  for (int y = 0; y < C.size(); ++y)
    for (int x = 0; x < D.size(); ++x)
      if (D.leq(M.preimage[y], x) != C.leq(y, radj[x])) return std::nullopt;
  return PpjWitness{M, std::move(radj)};
}

Filter forward_filter(const MorphismData& M, const Filter& A) {
  if (!A.carrier.same_carrier(M.dom))
    fail(ErrorCode::CarrierMismatch, "filter not on the domain lattice");
  Mask members = 0;
  for (int y = 0; y < M.cod.size(); ++y)
    if (A.contains(M.preimage[y])) members |= mask_bit(y);
  return Filter{M.cod, members};
}

Filter inverse_filter(const MorphismData& M, const Filter& B) {
  if (!B.carrier.same_carrier(M.cod))
    fail(ErrorCode::CarrierMismatch, "filter not on the codomain lattice");
  Mask gen = 0;
  for (int b : mask_indices(B.members)) gen |= mask_bit(M.preimage[b]);
  return Filter{M.dom, up_closure(M.dom, gen)};
}

bool check_filter_galois(const MorphismData& M) {
  auto FD = all_filters(M.dom);
  auto FC = all_filters(M.cod);
  for (Mask a : FD.filters) {
    Filter A{M.dom, a};
    Filter fwd = forward_filter(M, A);
    for (Mask b : FC.filters) {
      Filter B{M.cod, b};
      bool lhs = (inverse_filter(M, B).members & ~a) == 0;
      bool rhs = (b & ~fwd.members) == 0;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Filter big_image_filter(const MorphismData& M, const Filter& B) {
  if (!B.carrier.same_carrier(M.cod))
    fail(ErrorCode::CarrierMismatch, "filter not on the codomain lattice");
  const auto& D = M.dom;
  const auto& C = M.cod;
  if (M.image[D.top()] != C.top())
    fail(ErrorCode::ImageNotMeetPreserving, "image(top) != top");
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b)
      if (M.image[D.meet(a, b)] != C.meet(M.image[a], M.image[b]))
        fail(ErrorCode::ImageNotMeetPreserving,
             "witness " + pair_witness(D, a, D, b));
  Mask members = 0;
  for (int x = 0; x < D.size(); ++x)
    if (B.contains(M.image[x])) members |= mask_bit(x);
  return Filter{D, members};
}

Filter inv_filter_left_adjoint(const PpjWitness& W, const Filter& A) {
  const MorphismData& M = W.morphism;
  if (!A.carrier.same_carrier(M.dom))
    fail(ErrorCode::CarrierMismatch, "filter not on the domain lattice");
  Mask gen = 0;
  for (int a : mask_indices(A.members)) gen |= mask_bit(W.right_adjoint[a]);
  return Filter{M.cod, up_closure(M.cod, gen)};
}

std::optional<std::pair<int, int>> frobenius_counterexample(
    const MorphismData& M) {
  for (int x = 0; x < M.dom.size(); ++x)
    for (int y = 0; y < M.cod.size(); ++y) {
      int lhs = M.image[M.dom.meet(M.preimage[y], x)];
      int rhs = M.cod.meet(y, M.image[x]);
      if (lhs != rhs) return std::make_pair(x, y);
    }
  return std::nullopt;
}

bool is_frobenius(const MorphismData& M) {
  return !frobenius_counterexample(M).has_value();
}

}  // namespace nbhd
