#include "nbhd/prenbhd.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nbhd {

const char* structure_class_name(StructureClass c) {
  switch (c) {
    case StructureClass::Pre: return "Pre";
    case StructureClass::Weak: return "Weak";
    case StructureClass::Nbhd: return "Nbhd";
    case StructureClass::Topology: return "Topology";
  }
  return "?";
}

bool is_prenbhd_assignment(const FiniteLattice& L,
                           const std::vector<Mask>& assign) {
  int n = L.size();
  if (static_cast<int>(assign.size()) != n) return false;
  for (int m = 0; m < n; ++m) {
    if (!is_filter_mask(L, assign[m])) return false;
    if ((assign[m] & ~L.up_set(m)) != 0) return false;  // majorization
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(a, b) && (assign[b] & ~assign[a]) != 0) return false;
  return true;
}

PreNbhd make_prenbhd(FiniteLattice L, std::vector<Mask> assign) {
  int n = L.size();
  if (static_cast<int>(assign.size()) != n)
    fail(ErrorCode::SchemaError, "assignment must cover every element");
  for (int m = 0; m < n; ++m) {
    make_filter(L, assign[m]);
    if ((assign[m] & ~L.up_set(m)) != 0)
      fail(ErrorCode::NotAMorphism,
           "assign(" + L.name(m) + ") contains an element not above it");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(a, b) && (assign[b] & ~assign[a]) != 0)
        fail(ErrorCode::NotAMorphism,
             "assignment not order-reversing between '" + L.name(a) +
                 "' and '" + L.name(b) + "'");
  return PreNbhd{std::move(L), std::move(assign)};
}

PreNbhd nabla(const FiniteLattice& L) {
  std::vector<Mask> assign(L.size(), mask_bit(L.top()));
  assign[L.bottom()] = L.all_mask();
  return PreNbhd{L, std::move(assign)};
}

PreNbhd atleast(const FiniteLattice& L) {
  std::vector<Mask> assign(L.size());
  for (int m = 0; m < L.size(); ++m) assign[m] = L.up_set(m);
  return PreNbhd{L, std::move(assign)};
}

static void require_same_carrier(const PreNbhd& a, const PreNbhd& b) {
  if (!a.carrier.same_carrier(b.carrier))
    fail(ErrorCode::CarrierMismatch, "structures live on different lattices");
}

bool prenbhd_leq(const PreNbhd& a, const PreNbhd& b) {
  require_same_carrier(a, b);
  for (int m = 0; m < a.carrier.size(); ++m)
    if ((a.assign[m] & ~b.assign[m]) != 0) return false;
  return true;
}

bool prenbhd_leq_off_bottom(const PreNbhd& a, const PreNbhd& b) {
  require_same_carrier(a, b);
  int bot = a.carrier.bottom();
  for (int m = 0; m < a.carrier.size(); ++m)
    if (m != bot && (a.assign[m] & ~b.assign[m]) != 0) return false;
  return true;
}

bool is_interpolative(const PreNbhd& mu) {
  int n = mu.carrier.size();
  for (int m = 0; m < n; ++m) {
    Mask interpolated = 0;
    for (int q : mask_indices(mu.assign[m])) interpolated |= mu.assign[q];
    if (interpolated != mu.assign[m]) return false;
  }
  return true;
}

bool weak_condition_by_intersections(const PreNbhd& mu) {
  const FiniteLattice& L = mu.carrier;
  int n = L.size();
  std::vector<Mask> inter(n);
  for (int p = 0; p < n; ++p) {
    Mask acc = L.all_mask();
    for (int x : mask_indices(L.down_set(p))) acc &= mu.assign[x];
    inter[p] = acc;
  }
  for (int m = 0; m < n; ++m) {
    Mask u = 0;
    for (int p : mask_indices(mu.assign[m])) u |= inter[p];
    if ((mu.assign[m] & ~u) != 0) return false;
  }
  return true;
}

bool preserves_all_meets(const PreNbhd& mu) {
  const FiniteLattice& L = mu.carrier;
  int n = L.size();
  if (n <= 16) {
    Mask all = L.all_mask();
    for (Mask g = 0;; ++g) {
      Mask inter = all;
      for (int x : mask_indices(g)) inter &= mu.assign[x];
      if (mu.assign[L.join_all(g)] != inter) return false;
      if (g == all) break;
    }
    return true;
  }
  // binary + empty joins generate all finite (hence all) joins
  if (mu.assign[L.bottom()] != L.all_mask()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mu.assign[L.join(a, b)] != (mu.assign[a] & mu.assign[b]))
        return false;
  return true;
}

Mask opens(const PreNbhd& mu) {
  Mask out = 0;
  for (int p = 0; p < mu.carrier.size(); ++p)
    if (mu.member(p, p)) out |= mask_bit(p);
  return out;
}

int interior(const PreNbhd& mu, int m) {
  const FiniteLattice& L = mu.carrier;
  if (m < 0 || m >= L.size()) fail(ErrorCode::ForeignElement, "index");
  return L.join_all(opens(mu) & L.down_set(m));
}

std::vector<int> interior_table(const PreNbhd& mu) {
  std::vector<int> t(mu.carrier.size());
  for (int m = 0; m < mu.carrier.size(); ++m) t[m] = interior(mu, m);
  return t;
}

bool interiors_are_open(const PreNbhd& mu) {
  const FiniteLattice& L = mu.carrier;
  Mask O = opens(mu);
  // join-closure: binary joins plus the empty join (the bottom)
  bool join_closed = mask_has(O, L.bottom());
  for (int a : mask_indices(O))
    for (int b : mask_indices(O))
      if (!mask_has(O, L.join(a, b))) join_closed = false;
  bool every_interior_open = true;
  for (int m = 0; m < L.size(); ++m)
    if (!mask_has(O, interior(mu, m))) every_interior_open = false;
  if (join_closed != every_interior_open)
    throw std::logic_error("open-interior equivalence violated");
  return join_closed;
}

StructureClass classify(const PreNbhd& mu) {
  bool interp = is_interpolative(mu);
  if (interp != weak_condition_by_intersections(mu))
    throw std::logic_error("interpolativity tests disagree");
  if (!interp) return StructureClass::Pre;
  if (!preserves_all_meets(mu)) return StructureClass::Weak;
  if (!frame_law_holds_on(mu.carrier, opens(mu))) return StructureClass::Nbhd;
  return StructureClass::Topology;
}

bool is_pfs_mask(const FiniteLattice& L, Mask members) {
  if ((members & ~L.all_mask()) != 0) return false;
  if (!mask_has(members, L.top()) || !mask_has(members, L.bottom()))
    return false;
  for (int a : mask_indices(members))
    for (int b : mask_indices(members)) {
      if (!mask_has(members, L.meet(a, b))) return false;
      if (!mask_has(members, L.join(a, b))) return false;
    }
  return true;
}

PseudoFrameSet make_pfs(const FiniteLattice& L, Mask members) {
  L.check_subset(members);
  if (!is_pfs_mask(L, members))
    fail(ErrorCode::NotANeighbourhood,
         "not closed under finite meets and arbitrary joins: " +
             mask_to_string(L, members));
  return PseudoFrameSet{L, members};
}

Mask pfs_closure(const FiniteLattice& L, Mask members) {
  Mask out = members | mask_bit(L.top()) | mask_bit(L.bottom());
  bool changed = true;
  while (changed) {
    changed = false;
    Mask next = out;
    for (int a : mask_indices(out))
      for (int b : mask_indices(out)) {
        next |= mask_bit(L.meet(a, b));
        next |= mask_bit(L.join(a, b));
      }
    if (next != out) {
      out = next;
      changed = true;
    }
  }
  return out;
}

KuratowskiInterior make_kuratowski(FiniteLattice L, std::vector<int> i) {
  int n = L.size();
  if (static_cast<int>(i.size()) != n)
    fail(ErrorCode::SchemaError, "interior table must cover every element");
  for (int m = 0; m < n; ++m)
    if (i[m] < 0 || i[m] >= n) fail(ErrorCode::ForeignElement, "index");
  if (i[L.top()] != L.top())
    fail(ErrorCode::NotANeighbourhood, "i(top) != top");
  for (int m = 0; m < n; ++m) {
    if (!L.leq(i[m], m))
      fail(ErrorCode::NotANeighbourhood, "i not deflationary at " + L.name(m));
    if (i[i[m]] != i[m])
      fail(ErrorCode::NotANeighbourhood, "i not idempotent at " + L.name(m));
  }
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      if (i[L.meet(m, k)] != L.meet(i[m], i[k]))
        fail(ErrorCode::NotANeighbourhood, "i does not preserve the meet of " +
                                               L.name(m) + " and " + L.name(k));
  return KuratowskiInterior{std::move(L), std::move(i)};
}

PreNbhd nbhd_from_pfs(const PseudoFrameSet& O) {
  const FiniteLattice& L = O.carrier;
  std::vector<Mask> assign(L.size());
  for (int m = 0; m < L.size(); ++m) {
    Mask a = 0;
    for (int q : mask_indices(O.members & L.up_set(m))) a |= L.up_set(q);
    assign[m] = a;
  }
  return PreNbhd{L, std::move(assign)};
}

PreNbhd nbhd_from_kuratowski(const KuratowskiInterior& K) {
  const FiniteLattice& L = K.carrier;
  std::vector<Mask> assign(L.size(), 0);
  for (int m = 0; m < L.size(); ++m)
    for (int p = 0; p < L.size(); ++p)
      if (L.leq(m, K.i[p])) assign[m] |= mask_bit(p);
  return PreNbhd{L, std::move(assign)};
}

static void require_nbhd_class(const PreNbhd& mu) {
  StructureClass c = classify(mu);
  if (!class_at_least(c, StructureClass::Nbhd))
    fail(ErrorCode::NotANeighbourhood,
         std::string("structure classifies as ") + structure_class_name(c));
}

PseudoFrameSet pfs_from(const PreNbhd& mu) {
  require_nbhd_class(mu);
  return make_pfs(mu.carrier, opens(mu));
}

KuratowskiInterior kuratowski_from(const PreNbhd& mu) {
  require_nbhd_class(mu);
  return make_kuratowski(mu.carrier, interior_table(mu));
}

PreNbhd sup_pre(std::span<const PreNbhd> structures, const FiniteLattice& L) {
  if (structures.empty()) {
    // bottom of the structure lattice: everything maps to {top}
    std::vector<Mask> assign(L.size(), mask_bit(L.top()));
    return PreNbhd{L, std::move(assign)};
  }
  std::vector<Mask> assign(L.size());
  for (const PreNbhd& s : structures)
    if (!s.carrier.same_carrier(L))
      fail(ErrorCode::CarrierMismatch, "sup over mixed carriers");
  for (int m = 0; m < L.size(); ++m) {
    std::vector<Mask> fam;
    fam.reserve(structures.size());
    for (const PreNbhd& s : structures) fam.push_back(s.assign[m]);
    assign[m] = filter_join_masks(L, fam);
  }
  return PreNbhd{L, std::move(assign)};
}

PreNbhd inf_pre(std::span<const PreNbhd> structures, const FiniteLattice& L) {
  if (structures.empty()) return atleast(L);
  std::vector<Mask> assign(L.size(), L.all_mask());
  for (const PreNbhd& s : structures) {
    if (!s.carrier.same_carrier(L))
      fail(ErrorCode::CarrierMismatch, "inf over mixed carriers");
    for (int m = 0; m < L.size(); ++m) assign[m] &= s.assign[m];
  }
  return PreNbhd{L, std::move(assign)};
}

PreNbhd sup_pre(const PreNbhd& a, const PreNbhd& b) {
  require_same_carrier(a, b);
  const PreNbhd arr[2] = {a, b};
  return sup_pre(std::span<const PreNbhd>(arr, 2), a.carrier);
}

PreNbhd inf_pre(const PreNbhd& a, const PreNbhd& b) {
  require_same_carrier(a, b);
  const PreNbhd arr[2] = {a, b};
  return inf_pre(std::span<const PreNbhd>(arr, 2), a.carrier);
}

PreNbhd reflect_weak(const PreNbhd& mu) {
  PreNbhd cur = mu;
  for (;;) {
    std::vector<Mask> next(cur.carrier.size(), 0);
    for (int m = 0; m < cur.carrier.size(); ++m)
      for (int p : mask_indices(cur.assign[m])) next[m] |= cur.assign[p];
    if (next == cur.assign) return cur;
    cur.assign = std::move(next);
  }
}

// DFS over monotone generator choices g(m) in mu(m); calls fn on each
// completed assignment (as the vector of principal generators).
static void for_each_substructure(const PreNbhd& mu,
                                  const std::function<void(
                                      const std::vector<int>&)>& fn) {
  const FiniteLattice& L = mu.carrier;
  int n = L.size();
  std::vector<int> g(n, -1);
  std::vector<Mask> candidates(n);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      fn(g);
      return;
    }
    Mask cands = mu.assign[k];
    for (int j = 0; j < k; ++j) {
      if (L.leq(j, k)) cands &= L.up_set(g[j]);
      if (L.leq(k, j)) cands &= L.down_set(g[j]);
    }
    for (int c : mask_indices(cands)) {
      g[k] = c;
      self(self, k + 1);
    }
    g[k] = -1;
  };
  rec(rec, 0);
}

PreNbhd reflect_weak_enumerated(const PreNbhd& mu) {
  const FiniteLattice& L = mu.carrier;
  std::vector<PreNbhd> weak_below;
  for_each_substructure(mu, [&](const std::vector<int>& g) {
    std::vector<Mask> assign(L.size());
    for (int m = 0; m < L.size(); ++m) assign[m] = L.up_set(g[m]);
    PreNbhd nu{L, std::move(assign)};
    if (is_interpolative(nu)) weak_below.push_back(std::move(nu));
  });
  return sup_pre(std::span<const PreNbhd>(weak_below), L);
}

PreNbhd reflect_nbhd(const PreNbhd& mu) {
  StructureClass c = classify(mu);
  if (!class_at_least(c, StructureClass::Weak))
    fail(ErrorCode::WrongClass,
         std::string("expected at least Weak, got ") + structure_class_name(c));
  Mask closed = pfs_closure(mu.carrier, opens(mu));
  return nbhd_from_pfs(PseudoFrameSet{mu.carrier, closed});
}

PreNbhd reflect_top(const PreNbhd& mu) {
  StructureClass c = classify(mu);
  if (!class_at_least(c, StructureClass::Nbhd))
    fail(ErrorCode::WrongClass,
         std::string("expected at least Nbhd, got ") + structure_class_name(c));
  PreNbhd r = reflect_nbhd(mu);
  if (!frame_law_holds_on(r.carrier, opens(r)))
    throw std::logic_error("reflected opens fail the frame law");
  return r;
}

std::vector<PreNbhd> enumerate_structures(const FiniteLattice& L,
                                          StructureClass cls, int cap) {
  if (L.size() > cap)
    fail(ErrorCode::TooLarge, "enumeration capped at " + std::to_string(cap) +
                                  " lattice elements");
  std::vector<PreNbhd> out;
  for_each_substructure(atleast(L), [&](const std::vector<int>& g) {
    std::vector<Mask> assign(L.size());
    for (int m = 0; m < L.size(); ++m) assign[m] = L.up_set(g[m]);
    PreNbhd nu{L, std::move(assign)};
    if (class_at_least(classify(nu), cls)) out.push_back(std::move(nu));
  });
  return out;
}

std::vector<Mask> enumerate_pfs(const FiniteLattice& L) {
  if (L.size() > 20) fail(ErrorCode::TooLarge, "pfs enumeration cap");
  std::vector<Mask> out;
  for (Mask m = 0;; ++m) {
    if (is_pfs_mask(L, m)) out.push_back(m);
    if (m == L.all_mask()) break;
  }
  return out;
}

std::optional<PreNbhd> largest_topology(const FiniteLattice& L) {
  if (!frame_law_holds_on(L, L.all_mask())) return std::nullopt;
  return atleast(L);
}

InducedSubstructure induced_substructure(const PreNbhd& gamma, int p) {
  const FiniteLattice& L = gamma.carrier;
  if (p < 0 || p >= L.size()) fail(ErrorCode::ForeignElement, "index");
  SubLattice sub = down_set_lattice(L, p);
  int k = sub.lattice.size();
  std::vector<Mask> assign(k, 0);
  for (int m = 0; m < k; ++m) {
    for (int u = 0; u < k; ++u) {
      bool in = false;
      for (int w : mask_indices(gamma.assign[sub.embed[m]]))
        if (L.leq(L.meet(p, w), sub.embed[u])) {
          in = true;
          break;
        }
      if (in) assign[m] |= mask_bit(u);
    }
  }
  return InducedSubstructure{sub,
                             make_prenbhd(sub.lattice, std::move(assign))};
}

}  // namespace nbhd
