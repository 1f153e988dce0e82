#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/errors.hpp"

namespace nbhd {

// Subsets of lattice elements are bitmasks indexed by element position.
using Mask = std::uint64_t;

constexpr int kMaxLatticeSize = 64;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline int mask_count(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m);

// A finite bounded distributive lattice over named elements.
//
// The order relation is stored as a full matrix (up-sets per element) and
// binary meet/join tables are precomputed, so everything downstream is a
// table lookup. Construction rejects non-posets, non-lattices and
// non-distributive orders with concrete witnesses. Instances are immutable
// and cheap to copy (shared storage).
class FiniteLattice {
 public:
  FiniteLattice() = default;

  // Builds from an arbitrary `leq` pair list; the relation gets closed
  // reflexively and transitively first.
  static FiniteLattice build(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  // Builds from per-element up-set masks (already reflexive-transitive).
  // Used by the backends which generate orders directly.
  static FiniteLattice from_up_sets(std::vector<std::string> elements,
                                    std::vector<Mask> up);

  int size() const { return static_cast<int>(d_->names.size()); }
  const std::string& name(int i) const { return d_->names[i]; }
  const std::vector<std::string>& names() const { return d_->names; }
  int index(const std::string& name) const;  // throws ForeignElement
  std::optional<int> find(const std::string& name) const;

  bool leq(int i, int j) const { return mask_has(d_->up[i], j); }
  int meet(int i, int j) const { return d_->meet[i * size() + j]; }
  int join(int i, int j) const { return d_->join[i * size() + j]; }
  int bottom() const { return d_->bottom; }
  int top() const { return d_->top; }

  Mask up_set(int i) const { return d_->up[i]; }
  Mask down_set(int i) const { return d_->down[i]; }
  Mask all_mask() const {
    int n = size();
    return n == kMaxLatticeSize ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  // Greatest lower / least upper bound of a subset; empty meet is the top
  // and empty join is the bottom.
  int meet_all(Mask subset) const;
  int join_all(Mask subset) const;

  void check_subset(Mask subset) const;  // ForeignElement on stray bits

  // Structural equality: same element names in the same order, same order
  // relation. Used for carrier checks.
  bool same_carrier(const FiniteLattice& other) const;

  bool operator==(const FiniteLattice& other) const {
    return same_carrier(other);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<Mask> up, down;
    std::vector<std::uint8_t> meet, join;
    int bottom = 0, top = 0;
  };
  explicit FiniteLattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteLattice finish(std::vector<std::string> names,
                              std::vector<Mask> up);

  std::shared_ptr<const Data> d_;
};

// Frame / coframe laws, checked exhaustively over all (element, subset)
// pairs. Every finite distributive lattice satisfies both; the checks are
// kept for validating ingested data and induced sub-collections.
bool is_frame(const FiniteLattice& L);
bool is_coframe(const FiniteLattice& L);

// Frame law restricted to a subset closed under the induced joins/meets.
bool frame_law_holds_on(const FiniteLattice& L, Mask subset);

// Induced sublattice on a subset closed under binary meets and joins.
// Element names are inherited; `embed` maps new indices to old ones.
struct SubLattice {
  FiniteLattice lattice;
  std::vector<int> embed;
};
SubLattice sub_lattice(const FiniteLattice& L, Mask subset);

// The principal down-set of p as a lattice (subobject lattice of p).
SubLattice down_set_lattice(const FiniteLattice& L, int p);

std::string mask_to_string(const FiniteLattice& L, Mask m);

}  // namespace nbhd
