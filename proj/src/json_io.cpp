#include "nbhd/json_io.hpp"

#include <fstream>

namespace nbhd {

void check_fields(const Json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(ErrorCode::SchemaError, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(ErrorCode::SchemaError, "unknown field '" + key + "'");
  }
}

static std::string require_string(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    fail(ErrorCode::SchemaError, std::string("missing string field '") +
                                     field + "'");
  return j[field].get<std::string>();
}

static const Json& require_field(const Json& j, const char* field) {
  if (!j.contains(field))
    fail(ErrorCode::SchemaError,
         std::string("missing field '") + field + "'");
  return j[field];
}

void SpecRegistry::add(SpecFile file) {
  static const char* kinds[] = {"lattice",  "finset", "finfn",
                                "frame",    "localic", "prenbhd",
                                "pfs",      "kuratowski", "morphism"};
  bool known = false;
  for (const char* k : kinds)
    if (file.kind == k) known = true;
  if (!known) fail(ErrorCode::SchemaError, "unknown kind '" + file.kind + "'");
  for (const auto& f : files_)
    if (f.name == file.name)
      fail(ErrorCode::SchemaError, "duplicate name '" + file.name + "'");
  files_.push_back(std::move(file));
}

void SpecRegistry::add_parsed(const Json& j) {
  check_fields(j, {"kind", "name", "payload"});
  SpecFile f;
  f.kind = require_string(j, "kind");
  f.name = require_string(j, "name");
  if (!j.contains("payload"))
    fail(ErrorCode::SchemaError, "missing payload");
  f.payload = j["payload"];
  add(std::move(f));
}

void SpecRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::SchemaError, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    fail(ErrorCode::SchemaError, "parse error in '" + path + "': " + e.what());
  }
  add_parsed(j);
}

std::vector<const SpecFile*> SpecRegistry::of_kind(
    const std::string& kind) const {
  std::vector<const SpecFile*> out;
  for (const auto& f : files_)
    if (f.kind == kind) out.push_back(&f);
  return out;
}

const SpecFile& SpecRegistry::only(const std::string& kind) const {
  auto all = of_kind(kind);
  if (all.size() != 1)
    fail(ErrorCode::SchemaError, "expected exactly one '" + kind +
                                     "' spec, found " +
                                     std::to_string(all.size()));
  return *all[0];
}

const Json& SpecRegistry::resolve(const Json& spec,
                                  const std::string& kind) const {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    for (const auto& f : files_)
      if (f.name == name) {
        if (f.kind != kind)
          fail(ErrorCode::SchemaError, "'" + name + "' is a " + f.kind +
                                           ", expected " + kind);
        return f.payload;
      }
    fail(ErrorCode::SchemaError, "unresolved reference '" + name + "'");
  }
  return spec;
}

FiniteLattice SpecRegistry::lattice(const Json& spec) const {
  const Json& j = resolve(spec, "lattice");
  check_fields(j, {"elements", "leq"});
  if (!j.contains("elements") || !j["elements"].is_array())
    fail(ErrorCode::SchemaError, "lattice needs an 'elements' array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) elements.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    for (const auto& p : j["leq"]) {
      if (!p.is_array() || p.size() != 2)
        fail(ErrorCode::SchemaError, "leq entries are [lo, hi] pairs");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return FiniteLattice::build(std::move(elements), pairs);
}

FinSetObj SpecRegistry::finset(const Json& spec) const {
  const Json& j = resolve(spec, "finset");
  check_fields(j, {"set"});
  if (!j.contains("set") || !j["set"].is_array())
    fail(ErrorCode::SchemaError, "finset needs a 'set' array");
  std::vector<std::string> points;
  for (const auto& p : j["set"]) points.push_back(p.get<std::string>());
  return make_finset(std::move(points));
}

FinFunction SpecRegistry::finfn(const Json& spec) const {
  const Json& j = resolve(spec, "finfn");
  check_fields(j, {"fn"});
  if (!j.contains("fn")) fail(ErrorCode::SchemaError, "finfn needs 'fn'");
  const Json& fn = j["fn"];
  check_fields(fn, {"dom", "cod", "map"});
  FinSetObj dom = finset(require_field(fn, "dom"));
  FinSetObj cod = finset(require_field(fn, "cod"));
  if (!fn.contains("map") || !fn["map"].is_object())
    fail(ErrorCode::SchemaError, "fn needs a 'map' object");
  std::vector<int> map(dom.size(), -1);
  for (const auto& [k, v] : fn["map"].items())
    map[dom.point_index(k)] = cod.point_index(v.get<std::string>());
  for (int i = 0; i < dom.size(); ++i)
    if (map[i] < 0)
      fail(ErrorCode::SchemaError, "map missing point '" + dom.points[i] + "'");
  return make_finfunction(std::move(dom), std::move(cod), std::move(map));
}

FiniteFrame SpecRegistry::frame(const Json& spec) const {
  const Json& j = resolve(spec, "frame");
  check_fields(j, {"elements", "leq", "imp"});
  Json lat = Json::object();
  lat["elements"] = j.contains("elements") ? j["elements"] : Json::array();
  if (j.contains("leq")) lat["leq"] = j["leq"];
  FiniteLattice L = lattice(lat);
  if (!j.contains("imp")) return make_frame(L);
  const Json& imp_j = j["imp"];
  int n = L.size();
  std::vector<int> imp(static_cast<size_t>(n) * n, -1);
  for (const auto& [a, row] : imp_j.items()) {
    int ai = L.index(a);
    for (const auto& [b, c] : row.items())
      imp[ai * n + L.index(b)] = L.index(c.get<std::string>());
  }
  for (int v : imp)
    if (v < 0) fail(ErrorCode::SchemaError, "imp table not total");
  return make_frame_with_imp(std::move(L), std::move(imp));
}

LocalicMap SpecRegistry::localic(const Json& spec) const {
  const Json& j = resolve(spec, "localic");
  check_fields(j, {"dom", "cod", "hom"});
  FiniteFrame X = frame(require_field(j, "dom"));
  FiniteFrame Y = frame(require_field(j, "cod"));
  if (!j.contains("hom") || !j["hom"].is_object())
    fail(ErrorCode::SchemaError, "localic map needs a 'hom' object");
  std::vector<int> hom(Y.lattice.size(), -1);
  for (const auto& [y, x] : j["hom"].items())
    hom[Y.lattice.index(y)] = X.lattice.index(x.get<std::string>());
  for (int v : hom)
    if (v < 0) fail(ErrorCode::SchemaError, "hom table not total");
  return make_localic(std::move(X), std::move(Y), std::move(hom));
}

PreNbhd SpecRegistry::prenbhd(const Json& spec) const {
  const Json& j = resolve(spec, "prenbhd");
  check_fields(j, {"lattice", "assign"});
  FiniteLattice L = lattice(require_field(j, "lattice"));
  if (!j.contains("assign") || !j["assign"].is_object())
    fail(ErrorCode::SchemaError, "prenbhd needs an 'assign' object");
  std::vector<Mask> assign(L.size(), 0);
  std::vector<bool> seen(L.size(), false);
  for (const auto& [m, filt] : j["assign"].items()) {
    int mi = L.index(m);
    seen[mi] = true;
    if (!filt.is_array())
      fail(ErrorCode::SchemaError, "assign values are element arrays");
    for (const auto& p : filt)
      assign[mi] |= mask_bit(L.index(p.get<std::string>()));
  }
  for (int i = 0; i < L.size(); ++i)
    if (!seen[i])
      fail(ErrorCode::SchemaError, "assign missing element '" + L.name(i) + "'");
  return make_prenbhd(std::move(L), std::move(assign));
}

PseudoFrameSet SpecRegistry::pfs(const Json& spec) const {
  const Json& j = resolve(spec, "pfs");
  check_fields(j, {"lattice", "members"});
  FiniteLattice L = lattice(require_field(j, "lattice"));
  if (!j.contains("members") || !j["members"].is_array())
    fail(ErrorCode::SchemaError, "pfs needs a 'members' array");
  Mask members = 0;
  for (const auto& m : j["members"])
    members |= mask_bit(L.index(m.get<std::string>()));
  return make_pfs(L, members);
}

KuratowskiInterior SpecRegistry::kuratowski(const Json& spec) const {
  const Json& j = resolve(spec, "kuratowski");
  check_fields(j, {"lattice", "i"});
  FiniteLattice L = lattice(require_field(j, "lattice"));
  if (!j.contains("i") || !j["i"].is_object())
    fail(ErrorCode::SchemaError, "kuratowski needs an 'i' object");
  std::vector<int> table(L.size(), -1);
  for (const auto& [m, v] : j["i"].items())
    table[L.index(m)] = L.index(v.get<std::string>());
  for (int v : table)
    if (v < 0) fail(ErrorCode::SchemaError, "interior table not total");
  return make_kuratowski(std::move(L), std::move(table));
}

MorphismData SpecRegistry::morphism_data(const Json& spec) const {
  const Json& j = resolve(spec, "morphism");
  check_fields(j, {"dom", "cod", "image", "preimage"});
  FiniteLattice dom = lattice(require_field(j, "dom"));
  FiniteLattice cod = lattice(require_field(j, "cod"));
  auto read_map = [&](const char* field, const FiniteLattice& from,
                      const FiniteLattice& to) {
    if (!j.contains(field) || !j[field].is_object())
      fail(ErrorCode::SchemaError,
           std::string("morphism data needs a '") + field + "' object");
    std::vector<int> t(from.size(), -1);
    for (const auto& [k, v] : j[field].items())
      t[from.index(k)] = to.index(v.get<std::string>());
    for (int v : t)
      if (v < 0)
        fail(ErrorCode::SchemaError, std::string(field) + " table not total");
    return t;
  };
  std::vector<int> image = read_map("image", dom, cod);
  std::vector<int> preimage = read_map("preimage", cod, dom);
  return make_morphism_data(std::move(dom), std::move(cod), std::move(image),
                            std::move(preimage));
}

MorphismBundle SpecRegistry::morphism(const Json& spec) const {
  const Json& j = resolve(spec, "morphism");
  check_fields(j, {"data", "fn", "localic", "src", "dst"});
  int sources = (j.contains("data") ? 1 : 0) + (j.contains("fn") ? 1 : 0) +
                (j.contains("localic") ? 1 : 0);
  if (sources != 1)
    fail(ErrorCode::SchemaError,
         "morphism bundle needs exactly one of 'data', 'fn', 'localic'");
  MorphismBundle b{};
  if (j.contains("data")) {
    b.data = morphism_data(j["data"]);
  } else if (j.contains("fn")) {
    b.fn = finfn(j["fn"]);
    b.data = to_morphism_data(*b.fn, caps_.set);
  } else {
    b.loc = localic(j["localic"]);
    SublocaleLattice SX = all_sublocales(b.loc->dom, caps_.frame);
    SublocaleLattice SY = all_sublocales(b.loc->cod, caps_.frame);
    b.data = localic_morphism_data(*b.loc, SX, SY);
  }
  if (j.contains("src")) b.src = prenbhd(j["src"]);
  if (j.contains("dst")) b.dst = prenbhd(j["dst"]);
  return b;
}

Json lattice_to_json(const FiniteLattice& L) {
  Json j = Json::object();
  j["elements"] = Json::array();
  for (int i = 0; i < L.size(); ++i) j["elements"].push_back(L.name(i));
  j["leq"] = Json::array();
  for (int i = 0; i < L.size(); ++i)
    for (int k = 0; k < L.size(); ++k)
      if (i != k && L.leq(i, k))
        j["leq"].push_back(Json::array({L.name(i), L.name(k)}));
  return j;
}

static Json mask_to_array(const FiniteLattice& L, Mask m) {
  Json a = Json::array();
  for (int i : mask_indices(m)) a.push_back(L.name(i));
  return a;
}

Json prenbhd_to_json(const PreNbhd& mu) {
  Json j = Json::object();
  j["lattice"] = lattice_to_json(mu.carrier);
  j["assign"] = Json::object();
  for (int m = 0; m < mu.carrier.size(); ++m)
    j["assign"][mu.carrier.name(m)] = mask_to_array(mu.carrier, mu.assign[m]);
  return j;
}

Json pfs_to_json(const PseudoFrameSet& O) {
  Json j = Json::object();
  j["members"] = mask_to_array(O.carrier, O.members);
  return j;
}

Json kuratowski_to_json(const KuratowskiInterior& K) {
  Json j = Json::object();
  j["i"] = Json::object();
  for (int m = 0; m < K.carrier.size(); ++m)
    j["i"][K.carrier.name(m)] = K.carrier.name(K.i[m]);
  return j;
}

Json morphism_data_to_json(const MorphismData& M) {
  Json j = Json::object();
  j["dom"] = lattice_to_json(M.dom);
  j["cod"] = lattice_to_json(M.cod);
  j["image"] = Json::object();
  for (int i = 0; i < M.dom.size(); ++i)
    j["image"][M.dom.name(i)] = M.cod.name(M.image[i]);
  j["preimage"] = Json::object();
  for (int i = 0; i < M.cod.size(); ++i)
    j["preimage"][M.cod.name(i)] = M.dom.name(M.preimage[i]);
  return j;
}

Json filter_to_json(const Filter& f) {
  return mask_to_array(f.carrier, f.members);
}

}  // namespace nbhd
