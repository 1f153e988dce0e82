#include "nbhd/filter.hpp"

#include <algorithm>

namespace nbhd {

bool is_filter_mask(const FiniteLattice& L, Mask members) {
  if ((members & ~L.all_mask()) != 0) return false;
  if (!mask_has(members, L.top())) return false;
  for (int i : mask_indices(members)) {
    if ((L.up_set(i) & ~members) != 0) return false;  // up-closed
    for (int j : mask_indices(members))
      if (!mask_has(members, L.meet(i, j))) return false;
  }
  return true;
}

Filter make_filter(const FiniteLattice& L, Mask members) {
  L.check_subset(members);
  if (!mask_has(members, L.top()))
    fail(ErrorCode::NotALattice, "filter must contain the top element");
  for (int i : mask_indices(members)) {
    if ((L.up_set(i) & ~members) != 0)
      fail(ErrorCode::NotALattice,
           "filter not up-closed at '" + L.name(i) + "'");
    for (int j : mask_indices(members))
      if (!mask_has(members, L.meet(i, j)))
        fail(ErrorCode::NotALattice, "filter not meet-closed at '" +
                                         L.name(i) + "' ∧ '" + L.name(j) +
                                         "'");
  }
  return Filter{L, members};
}

Filter principal_filter(const FiniteLattice& L, int x) {
  if (x < 0 || x >= L.size()) fail(ErrorCode::ForeignElement, "index");
  return Filter{L, L.up_set(x)};
}

int filter_min(const Filter& f) { return f.carrier.meet_all(f.members); }

static void require_same_carrier(const Filter& f, const Filter& g) {
  if (!f.carrier.same_carrier(g.carrier))
    fail(ErrorCode::CarrierMismatch, "filters live on different lattices");
}

Filter filter_meet(const Filter& f, const Filter& g) {
  require_same_carrier(f, g);
  return Filter{f.carrier, f.members & g.members};
}

Mask up_closure(const FiniteLattice& L, Mask generators) {
  Mask out = 0;
  for (int i : mask_indices(generators)) out |= L.up_set(i);
  return out;
}

Filter filter_join(const Filter& f, const Filter& g) {
  require_same_carrier(f, g);
  const FiniteLattice& L = f.carrier;
  Mask meets = 0;
  for (int i : mask_indices(f.members | g.members))
    for (int j : mask_indices(f.members | g.members))
      meets |= mask_bit(L.meet(i, j));
  return Filter{L, up_closure(L, meets)};
}

Mask filter_join_masks(const FiniteLattice& L, std::span<const Mask> members) {
  // join of a family: up-closure of all finite meets across the union;
  // finitely that is the up-set of the meet of the per-filter minima
  Mask un = 0;
  for (Mask m : members) un |= m;
  if (un == 0) return L.up_set(L.top());  // empty join = bottom filter {top}
  return L.up_set(L.meet_all(un));
}

FilterLattice all_filters(const FiniteLattice& L) {
  FilterLattice out;
  out.carrier = L;
  int n = L.size();
  if (n <= 20) {
    for (Mask m = 0; m <= L.all_mask(); ++m) {
      if (is_filter_mask(L, m)) out.filters.push_back(m);
      if (m == L.all_mask()) break;
    }
  } else {
    // every filter on a finite lattice is principal
    out.filters.reserve(n);
    for (int x = 0; x < n; ++x) out.filters.push_back(L.up_set(x));
    std::sort(out.filters.begin(), out.filters.end());
  }

  int k = static_cast<int>(out.filters.size());
  std::vector<std::string> names(k);
  std::vector<Mask> up(k, 0);
  for (int i = 0; i < k; ++i) {
    names[i] = mask_to_string(L, out.filters[i]);
    for (int j = 0; j < k; ++j)
      if ((out.filters[i] & ~out.filters[j]) == 0) up[i] |= mask_bit(j);
  }
  out.lattice = FiniteLattice::from_up_sets(std::move(names), std::move(up));
  return out;
}

int FilterLattice::index_of(Mask members) const {
  for (int i = 0; i < static_cast<int>(filters.size()); ++i)
    if (filters[i] == members) return i;
  fail(ErrorCode::ForeignElement, "no such filter");
}

std::vector<Filter> compact_elements(const FilterLattice& FL) {
  const FiniteLattice& L = FL.carrier;
  int k = static_cast<int>(FL.filters.size());
  std::vector<Filter> out;
  if (k <= 12) {
    for (int f = 0; f < k; ++f) {
      bool compact = true;
      for (Mask s = 0; s < (Mask{1} << k) && compact; ++s) {
        std::vector<Mask> fam;
        for (int i : mask_indices(s)) fam.push_back(FL.filters[i]);
        Mask sup = filter_join_masks(L, fam);
        if ((FL.filters[f] & ~sup) != 0) continue;  // not a cover
        bool finite_subcover = false;
        // subsets of s (all are finite; the scan mirrors the definition)
        for (Mask t = s;; t = (t - 1) & s) {
          std::vector<Mask> sub;
          for (int i : mask_indices(t)) sub.push_back(FL.filters[i]);
          if ((FL.filters[f] & ~filter_join_masks(L, sub)) == 0) {
            finite_subcover = true;
            break;
          }
          if (t == 0) break;
        }
        compact = finite_subcover;
      }
      if (compact) out.push_back(FL.filter_at(f));
    }
  } else {
    for (int x = 0; x < L.size(); ++x) out.push_back(principal_filter(L, x));
    std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
      return a.members < b.members;
    });
  }
  return out;
}

}  // namespace nbhd
