#include "nbhd/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace nbhd {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

FiniteLattice FiniteLattice::build(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  int n = static_cast<int>(elements.size());
  if (n == 0) fail(ErrorCode::NotALattice, "empty element list");
  if (n > kMaxLatticeSize)
    fail(ErrorCode::TooLarge, "lattice exceeds " +
                                  std::to_string(kMaxLatticeSize) +
                                  " elements");
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second)
      fail(ErrorCode::NotAPoset, "duplicate element '" + elements[i] + "'");
  }

  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; ++i) up[i] |= mask_bit(i);
  for (const auto& [lo, hi] : leq_pairs) {
    auto li = index.find(lo), hi_it = index.find(hi);
    if (li == index.end()) fail(ErrorCode::ForeignElement, "'" + lo + "'");
    if (hi_it == index.end()) fail(ErrorCode::ForeignElement, "'" + hi + "'");
    up[li->second] |= mask_bit(hi_it->second);
  }
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask acc = up[i];
      for (int j : mask_indices(up[i])) acc |= up[j];
      if (acc != up[i]) {
        up[i] = acc;
        changed = true;
      }
    }
  }
  // antisymmetry
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask_has(up[i], j) && mask_has(up[j], i))
        fail(ErrorCode::NotAPoset, "cycle through '" + elements[i] + "' and '" +
                                       elements[j] + "'");
  return finish(std::move(elements), std::move(up));
}

FiniteLattice FiniteLattice::from_up_sets(std::vector<std::string> elements,
                                          std::vector<Mask> up) {
  int n = static_cast<int>(elements.size());
  if (n == 0) fail(ErrorCode::NotALattice, "empty element list");
  if (n > kMaxLatticeSize) fail(ErrorCode::TooLarge, "lattice too large");
  for (int i = 0; i < n; ++i)
    if (!mask_has(up[i], i)) fail(ErrorCode::NotAPoset, "missing reflexivity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && mask_has(up[i], j)) {
        if (mask_has(up[j], i))
          fail(ErrorCode::NotAPoset, "cycle through '" + elements[i] + "'");
        if ((up[j] & ~up[i]) != 0)
          fail(ErrorCode::NotAPoset, "relation not transitive");
      }
  return finish(std::move(elements), std::move(up));
}

FiniteLattice FiniteLattice::finish(std::vector<std::string> names,
                                    std::vector<Mask> up) {
  int n = static_cast<int>(names.size());
  auto d = std::make_shared<Data>();
  d->names = std::move(names);
  d->up = std::move(up);
  d->down.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mask_has(d->up[j], i)) d->down[i] |= mask_bit(j);

  auto greatest_of = [&](Mask m) -> int {
    // unique element of m whose down-set covers m
    for (int g : mask_indices(m))
      if ((m & ~d->down[g]) == 0) return g;
    return -1;
  };
  auto least_of = [&](Mask m) -> int {
    for (int g : mask_indices(m))
      if ((m & ~d->up[g]) == 0) return g;
    return -1;
  };

  d->meet.assign(static_cast<size_t>(n) * n, 0);
  d->join.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = greatest_of(d->down[i] & d->down[j]);
      if (m < 0)
        fail(ErrorCode::NotALattice, "no meet for '" + d->names[i] + "', '" +
                                         d->names[j] + "'");
      int v = least_of(d->up[i] & d->up[j]);
      if (v < 0)
        fail(ErrorCode::NotALattice, "no join for '" + d->names[i] + "', '" +
                                         d->names[j] + "'");
      d->meet[i * n + j] = static_cast<std::uint8_t>(m);
      d->join[i * n + j] = static_cast<std::uint8_t>(v);
    }
  }

  Mask all = n == kMaxLatticeSize ? ~Mask{0} : (Mask{1} << n) - 1;
  d->bottom = least_of(all);
  d->top = greatest_of(all);
  if (d->bottom < 0 || d->top < 0)
    fail(ErrorCode::NotALattice, "missing bottom or top");

  // distributivity: x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z), scanned exhaustively
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = d->meet[x * n + d->join[y * n + z]];
        int rhs = d->join[d->meet[x * n + y] * n + d->meet[x * n + z]];
        if (lhs != rhs)
          fail(ErrorCode::NotDistributive,
               "witness (" + d->names[x] + ", " + d->names[y] + ", " +
                   d->names[z] + ")");
      }

  return FiniteLattice(std::move(d));
}

int FiniteLattice::index(const std::string& name) const {
  auto i = find(name);
  if (!i) fail(ErrorCode::ForeignElement, "'" + name + "'");
  return *i;
}

std::optional<int> FiniteLattice::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (d_->names[i] == name) return i;
  return std::nullopt;
}

void FiniteLattice::check_subset(Mask subset) const {
  if ((subset & ~all_mask()) != 0)
    fail(ErrorCode::ForeignElement, "subset mask out of range");
}

int FiniteLattice::meet_all(Mask subset) const {
  check_subset(subset);
  int acc = top();
  for (int i : mask_indices(subset)) acc = meet(acc, i);
  return acc;
}

int FiniteLattice::join_all(Mask subset) const {
  check_subset(subset);
  int acc = bottom();
  for (int i : mask_indices(subset)) acc = join(acc, i);
  return acc;
}

bool FiniteLattice::same_carrier(const FiniteLattice& other) const {
  if (d_ == other.d_) return true;
  if (!d_ || !other.d_) return false;
  return d_->names == other.d_->names && d_->up == other.d_->up;
}

// All-subsets scans are exact up to this size; above it the binary law is
// checked instead, which generates the full law in a finite lattice
// (arbitrary joins are finite, and finite joins reduce to binary plus the
// empty one).
constexpr int kSubsetScanLimit = 18;

bool is_frame(const FiniteLattice& L) {
  int n = L.size();
  if (n > kSubsetScanLimit) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
            return false;
    return true;
  }
  Mask all = L.all_mask();
  for (int x = 0; x < n; ++x) {
    for (Mask s = 0; s <= all; ++s) {
      int lhs = L.meet(x, L.join_all(s));
      Mask met = 0;
      for (int i : mask_indices(s)) met |= mask_bit(L.meet(x, i));
      if (lhs != L.join_all(met)) return false;
      if (s == all) break;
    }
  }
  return true;
}

bool is_coframe(const FiniteLattice& L) {
  int n = L.size();
  if (n > kSubsetScanLimit) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), L.join(x, z)))
            return false;
    return true;
  }
  Mask all = L.all_mask();
  for (int x = 0; x < n; ++x) {
    for (Mask s = 0; s <= all; ++s) {
      int lhs = L.join(x, L.meet_all(s));
      Mask joined = 0;
      for (int i : mask_indices(s)) joined |= mask_bit(L.join(x, i));
      if (lhs != L.meet_all(joined)) return false;
      if (s == all) break;
    }
  }
  return true;
}

bool frame_law_holds_on(const FiniteLattice& L, Mask subset) {
  L.check_subset(subset);
  auto elems = mask_indices(subset);
  size_t k = elems.size();
  if (k > kSubsetScanLimit) {
    for (int x : elems)
      for (int y : elems)
        for (int z : elems)
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
            return false;
    return true;
  }
  // joins/meets are inherited, so iterate subsets of `subset` directly
  for (int x : elems) {
    for (Mask bits = 0; bits < (Mask{1} << k); ++bits) {
      Mask s = 0;
      for (size_t b = 0; b < k; ++b)
        if (mask_has(bits, static_cast<int>(b))) s |= mask_bit(elems[b]);
      int lhs = L.meet(x, L.join_all(s));
      Mask met = 0;
      for (int i : mask_indices(s)) met |= mask_bit(L.meet(x, i));
      if (lhs != L.join_all(met)) return false;
    }
  }
  return true;
}

SubLattice sub_lattice(const FiniteLattice& L, Mask subset) {
  L.check_subset(subset);
  auto embed = mask_indices(subset);
  int k = static_cast<int>(embed.size());
  if (k == 0) fail(ErrorCode::NotALattice, "empty sublattice");
  std::vector<int> back(L.size(), -1);
  for (int i = 0; i < k; ++i) back[embed[i]] = i;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (back[L.meet(embed[i], embed[j])] < 0)
        fail(ErrorCode::NotALattice, "subset not closed under meets");
      if (back[L.join(embed[i], embed[j])] < 0)
        fail(ErrorCode::NotALattice, "subset not closed under joins");
    }
  std::vector<std::string> names;
  std::vector<Mask> up(k, 0);
  for (int i = 0; i < k; ++i) {
    names.push_back(L.name(embed[i]));
    for (int j = 0; j < k; ++j)
      if (L.leq(embed[i], embed[j])) up[i] |= mask_bit(j);
  }
  return SubLattice{FiniteLattice::from_up_sets(std::move(names), std::move(up)),
                    std::move(embed)};
}

SubLattice down_set_lattice(const FiniteLattice& L, int p) {
  return sub_lattice(L, L.down_set(p));
}

std::string mask_to_string(const FiniteLattice& L, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) out += ",";
    out += L.name(i);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace nbhd
