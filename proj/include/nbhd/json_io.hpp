#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nbhd/finframe.hpp"
#include "nbhd/finset.hpp"
#include "nbhd/prenbhd.hpp"
#include "nbhd/space_morphism.hpp"

namespace nbhd {

// Ordered JSON keeps report field order stable across runs.
using Json = nlohmann::ordered_json;

// One input file: a named, kinded payload. Payload sub-objects may either
// be inline or reference another file of the right kind by name.
struct SpecFile {
  std::string kind;
  std::string name;
  Json payload;
};

// Caps are flags, not constants; the defaults keep everything desk-sized.
struct Caps {
  int set = 6;      // powerset construction
  int lattice = 8;  // structure enumeration
  int frame = 8;    // sublocale enumeration
};

struct MorphismBundle {
  MorphismData data;
  std::optional<FinFunction> fn;
  std::optional<LocalicMap> loc;
  std::optional<PreNbhd> src, dst;
};

class SpecRegistry {
 public:
  explicit SpecRegistry(Caps caps = {}) : caps_(caps) {}

  void add(SpecFile file);            // SchemaError on duplicate names
  void add_parsed(const Json& file);  // {"kind":..., "name":..., "payload":...}
  void load_file(const std::string& path);

  const Caps& caps() const { return caps_; }
  std::vector<const SpecFile*> of_kind(const std::string& kind) const;
  // The single spec of a kind; SchemaError when absent or ambiguous.
  const SpecFile& only(const std::string& kind) const;

  // Resolvers accept an inline payload object or a string reference.
  FiniteLattice lattice(const Json& spec) const;
  FinSetObj finset(const Json& spec) const;
  FinFunction finfn(const Json& spec) const;
  FiniteFrame frame(const Json& spec) const;
  LocalicMap localic(const Json& spec) const;
  PreNbhd prenbhd(const Json& spec) const;
  PseudoFrameSet pfs(const Json& spec) const;
  KuratowskiInterior kuratowski(const Json& spec) const;
  MorphismData morphism_data(const Json& spec) const;
  MorphismBundle morphism(const Json& spec) const;

 private:
  const Json& resolve(const Json& spec, const std::string& kind) const;
  Caps caps_;
  std::vector<SpecFile> files_;
};

// Unknown fields are rejected so typos in mathematical data surface early.
void check_fields(const Json& j, std::initializer_list<const char*> allowed);

Json lattice_to_json(const FiniteLattice& L);
Json prenbhd_to_json(const PreNbhd& mu);
Json pfs_to_json(const PseudoFrameSet& O);
Json kuratowski_to_json(const KuratowskiInterior& K);
Json morphism_data_to_json(const MorphismData& M);
Json filter_to_json(const Filter& f);

}  // namespace nbhd
