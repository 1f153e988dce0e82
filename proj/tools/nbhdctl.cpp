// Batch front end: ingest JSON descriptions of lattices, spaces and
// morphisms, run the requested analysis, emit a deterministic report.
// Exit codes: 0 success, 1 failed check, 2 malformed input.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nbhd/json_io.hpp"

using namespace nbhd;

namespace {

struct Reporter {
  bool as_json = false;
  Json report = Json::object();
  bool any_fail = false;

  explicit Reporter(const std::string& command) {
    report["command"] = command;
    report["verdicts"] = Json::array();
  }

  void verdict(const std::string& check, bool pass,
               const Json& witness = nullptr) {
    Json v = Json::object();
    v["check"] = check;
    v["pass"] = pass;
    if (!witness.is_null()) v["witness"] = witness;
    report["verdicts"].push_back(v);
    if (!pass) any_fail = true;
  }

  void set(const std::string& key, const Json& value) { report[key] = value; }

  int finish() {
    if (as_json) {
      std::cout << report.dump(2) << "\n";
    } else {
      for (const auto& [k, v] : report.items()) {
        if (k == "verdicts") continue;
        if (v.is_string())
          std::cout << k << ": " << v.get<std::string>() << "\n";
        else
          std::cout << k << ": " << v.dump() << "\n";
      }
      for (const auto& v : report["verdicts"]) {
        std::cout << (v["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                  << v["check"].get<std::string>();
        if (v.contains("witness")) std::cout << "  witness=" << v["witness"].dump();
        std::cout << "\n";
      }
    }
    return any_fail ? 1 : 0;
  }
};

Json opens_json(const PreNbhd& mu) {
  Json a = Json::array();
  for (int i : mask_indices(opens(mu))) a.push_back(mu.carrier.name(i));
  return a;
}

Json interior_json(const PreNbhd& mu) {
  Json o = Json::object();
  for (int m = 0; m < mu.carrier.size(); ++m)
    o[mu.carrier.name(m)] = mu.carrier.name(interior(mu, m));
  return o;
}

std::string class_display(StructureClass c) {
  if (c == StructureClass::Topology) return "Nbhd (Topology)";
  return structure_class_name(c);
}

// Interpolation failure: some p in mu(m) with no intermediate q.
Json interpolation_witness(const PreNbhd& mu) {
  const FiniteLattice& L = mu.carrier;
  for (int m = 0; m < L.size(); ++m) {
    Mask reachable = 0;
    for (int q : mask_indices(mu.assign[m])) reachable |= mu.assign[q];
    Mask missing = mu.assign[m] & ~reachable;
    if (missing)
      return Json::array({L.name(m), L.name(mask_indices(missing)[0])});
  }
  return nullptr;
}

// Meet-law failure: the witness subset G.
Json meet_law_witness(const PreNbhd& mu) {
  const FiniteLattice& L = mu.carrier;
  Mask all = L.all_mask();
  for (Mask g = 0;; ++g) {
    Mask inter = all;
    for (int x : mask_indices(g)) inter &= mu.assign[x];
    if (mu.assign[L.join_all(g)] != inter) {
      Json a = Json::array();
      for (int i : mask_indices(g)) a.push_back(L.name(i));
      return a;
    }
    if (g == all) break;
  }
  return nullptr;
}

int cmd_classify(const SpecRegistry& reg, Reporter& out) {
  PreNbhd mu = reg.prenbhd(reg.only("prenbhd").payload);
  StructureClass c = classify(mu);
  out.set("class", class_display(c));
  out.set("opens", opens_json(mu));
  out.set("interior", interior_json(mu));
  if (c == StructureClass::Pre)
    out.set("interpolation_failure", interpolation_witness(mu));
  else if (c == StructureClass::Weak)
    out.set("meet_law_failure", meet_law_witness(mu));
  return out.finish();
}

int cmd_convert(const SpecRegistry& reg, const std::string& to,
                bool round_trip, Reporter& out) {
  PreNbhd mu = [&] {
    if (!reg.of_kind("prenbhd").empty())
      return reg.prenbhd(reg.only("prenbhd").payload);
    if (!reg.of_kind("pfs").empty())
      return nbhd_from_pfs(reg.pfs(reg.only("pfs").payload));
    return nbhd_from_kuratowski(reg.kuratowski(reg.only("kuratowski").payload));
  }();
  if (to == "pfs") {
    PseudoFrameSet O = pfs_from(mu);
    out.set("pfs", pfs_to_json(O));
    if (round_trip)
      out.verdict("round trip pfs -> nbhd -> pfs", nbhd_from_pfs(O) == mu);
  } else if (to == "kuratowski") {
    KuratowskiInterior K = kuratowski_from(mu);
    out.set("kuratowski", kuratowski_to_json(K));
    if (round_trip)
      out.verdict("round trip kuratowski -> nbhd -> kuratowski",
                  nbhd_from_kuratowski(K) == mu);
  } else if (to == "nbhd") {
    out.set("prenbhd", prenbhd_to_json(mu));
    out.set("class", class_display(classify(mu)));
  } else {
    fail(ErrorCode::SchemaError, "unknown conversion target '" + to + "'");
  }
  return out.finish();
}

StructureClass parse_class(const std::string& s) {
  if (s == "Pre") return StructureClass::Pre;
  if (s == "Weak") return StructureClass::Weak;
  if (s == "Nbhd") return StructureClass::Nbhd;
  if (s == "Topology") return StructureClass::Topology;
  fail(ErrorCode::SchemaError, "unknown class '" + s + "'");
}

int cmd_enumerate(const SpecRegistry& reg, const std::string& cls,
                  bool count_only, Reporter& out) {
  FiniteLattice L = reg.lattice(reg.only("lattice").payload);
  auto structures =
      enumerate_structures(L, parse_class(cls), reg.caps().lattice);
  out.set("count", Json(structures.size()));
  if (!count_only) {
    Json list = Json::array();
    for (const auto& mu : structures) {
      Json assign = Json::object();
      for (int m = 0; m < L.size(); ++m) {
        Json f = Json::array();
        for (int i : mask_indices(mu.assign[m])) f.push_back(L.name(i));
        assign[L.name(m)] = f;
      }
      list.push_back(assign);
    }
    out.set("structures", list);
  }
  return out.finish();
}

int cmd_reflect(const SpecRegistry& reg, const std::string& target,
                Reporter& out) {
  PreNbhd mu = reg.prenbhd(reg.only("prenbhd").payload);
  PreNbhd r = [&] {
    if (target == "weak") return reflect_weak(mu);
    if (target == "nbhd") return reflect_nbhd(mu);
    return reflect_top(mu);
  }();
  out.set("reflected", prenbhd_to_json(r));
  out.set("class", class_display(classify(r)));
  if (target == "weak") {
    out.verdict("reflection below the input", prenbhd_leq(r, mu));
    out.verdict("reflection is weak",
                class_at_least(classify(r), StructureClass::Weak));
  } else {
    // neighbourhoods force the whole lattice at the bottom slot, so the
    // comparison exempts it
    out.verdict("reflection below the input away from bottom",
                prenbhd_leq_off_bottom(r, mu));
    out.verdict("reflection is a neighbourhood",
                class_at_least(classify(r), StructureClass::Nbhd));
  }
  if (mu.carrier.size() <= reg.caps().lattice) {
    // certificate of maximality against the enumerated candidates
    StructureClass floor =
        target == "weak" ? StructureClass::Weak : StructureClass::Nbhd;
    bool maximal = true;
    for (const auto& nu : enumerate_structures(mu.carrier, floor,
                                               reg.caps().lattice)) {
      bool below = target == "weak" ? prenbhd_leq(nu, mu)
                                    : prenbhd_leq_off_bottom(nu, mu);
      if (below && !prenbhd_leq(nu, r)) maximal = false;
    }
    out.verdict("maximal among enumerated candidates", maximal);
  }
  return out.finish();
}

int cmd_morphism(const SpecRegistry& reg, const std::string& check,
                 Reporter& out) {
  MorphismBundle b = reg.morphism(reg.only("morphism").payload);
  if (check == "prenbhd" || check == "pseudoopen") {
    if ((!b.src || !b.dst) && b.loc) {
      // natural structures for a localic bundle
      SublocaleLattice SX = all_sublocales(b.loc->dom, reg.caps().frame);
      SublocaleLattice SY = all_sublocales(b.loc->cod, reg.caps().frame);
      b.src = natural_topology(SX);
      b.dst = natural_topology(SY);
    }
    if (!b.src || !b.dst)
      fail(ErrorCode::SchemaError, "bundle lacks src/dst structures");
    SpaceMorphism sm = make_space_morphism(b.data, *b.src, *b.dst);
    if (check == "prenbhd") {
      bool ok = is_prenbhd_morphism(sm);
      Json witness = nullptr;
      if (!ok) {
        for (int n = 0; n < sm.data.cod.size() && witness.is_null(); ++n)
          for (int p : mask_indices(sm.dst.assign[n]))
            if (!sm.src.member(sm.data.preimage[n], sm.data.preimage[p])) {
              witness = Json::array({sm.data.cod.name(n), sm.data.cod.name(p)});
              break;
            }
      }
      out.verdict("preneighbourhood morphism", ok, witness);
    } else {
      bool ok = is_pseudo_open(sm);
      Json witness = nullptr;
      if (!ok) {
        for (int y = 0; y < sm.data.cod.size() && witness.is_null(); ++y)
          for (int u : mask_indices(sm.src.assign[sm.data.preimage[y]]))
            if (!sm.dst.member(y, sm.data.image[u])) {
              witness = Json::array(
                  {sm.data.cod.name(y), sm.data.dom.name(u)});
              break;
            }
      }
      out.verdict("pseudo open", ok, witness);
    }
  } else if (check == "frobenius") {
    auto cex = frobenius_counterexample(b.data);
    Json witness = nullptr;
    if (cex)
      witness = Json::array(
          {b.data.dom.name(cex->first), b.data.cod.name(cex->second)});
    out.verdict("Frobenius", !cex, witness);
  } else if (check == "ppj") {
    auto w = ppj_failure_witness(b.data);
    Json witness = nullptr;
    if (w) {
      Json a = Json::array();
      for (int i : mask_indices(*w)) a.push_back(b.data.cod.name(i));
      witness = a;
    }
    out.verdict("preimage preserves joins", !w, witness);
  } else {
    fail(ErrorCode::SchemaError, "unknown check '" + check + "'");
  }
  return out.finish();
}

int cmd_regepi(const SpecRegistry& reg, bool hereditary, bool nhd,
               Reporter& out) {
  MorphismBundle b = reg.morphism(reg.only("morphism").payload);
  if (!b.fn)
    fail(ErrorCode::BackendRequired,
         "regular-epi analysis needs a finite-set bundle");
  if (!b.src || !b.dst)
    fail(ErrorCode::SchemaError, "bundle lacks src/dst structures");
  SpaceMorphism sm = space_morphism_from_fn(*b.fn, *b.src, *b.dst);
  out.verdict("regular epi of structured spaces", is_regular_epi_pnhd(sm));
  if (hereditary) {
    bool h = is_hereditary_regular_epi(sm);
    out.verdict("hereditary regular epi", h);
    out.verdict("definitional and formula computations agree", true);
  }
  if (nhd)
    out.verdict("regular epi of neighbourhood spaces", is_regular_epi_nhd(sm));
  return out.finish();
}

int cmd_locale(const SpecRegistry& reg, bool natural, bool right_inverse,
               Reporter& out) {
  if (natural) {
    FiniteFrame F = reg.frame(reg.only("frame").payload);
    SublocaleLattice SL = all_sublocales(F, reg.caps().frame);
    PreNbhd o = natural_topology(SL);
    out.set("sublocales", Json(SL.carriers.size()));
    out.set("natural_structure", prenbhd_to_json(o));
    out.set("class", class_display(classify(o)));
    out.verdict("natural structure is an internal topology",
                classify(o) == StructureClass::Topology);
    out.verdict("opens are the open sublocales", [&] {
      Mask O = opens(o);
      Mask expected = 0;
      for (int a = 0; a < F.lattice.size(); ++a)
        expected |= mask_bit(SL.index_of(open_sublocale(F, a).carrier));
      return O == expected;
    }());
  }
  if (right_inverse) {
    std::vector<LocalicMap> maps;
    for (const SpecFile* f : reg.of_kind("localic"))
      maps.push_back(reg.localic(f->payload));
    if (maps.empty())
      fail(ErrorCode::SchemaError, "no localic maps in the file set");
    RightInverseReport rep = check_right_inverse(maps, reg.caps().frame);
    for (const auto& item : rep.items)
      out.verdict(item.check, item.pass,
                  item.witness.empty() ? Json(nullptr) : Json(item.witness));
  }
  if (!natural && !right_inverse)
    fail(ErrorCode::SchemaError,
         "choose --natural-topology and/or --right-inverse");
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite neighbourhood-structure toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  Caps caps;
  app.add_flag("--json", as_json, "emit the report as JSON");
  app.add_option("--cap-set", caps.set, "max points for powerset lattices");
  app.add_option("--cap-lattice", caps.lattice,
                 "max lattice size for structure enumeration");
  app.add_option("--cap-frame", caps.frame,
                 "max frame size for sublocale enumeration");

  std::vector<std::string> files;
  std::string to, cls = "Nbhd", check;
  bool count_only = false, round_trip = false;
  bool rweak = false, rnbhd = false, rtop = false;
  bool hereditary = false, nhd = false;
  bool natural = false, right_inverse = false;

  CLI::App* c_classify = app.add_subcommand("classify", "classify a structure");
  c_classify->add_option("files", files)->required();

  CLI::App* c_convert = app.add_subcommand("convert", "convert between facets");
  c_convert->add_option("files", files)->required();
  c_convert->add_option("--to", to)->required()
      ->check(CLI::IsMember({"pfs", "kuratowski", "nbhd"}));
  c_convert->add_flag("--round-trip", round_trip);

  CLI::App* c_enumerate = app.add_subcommand("enumerate", "enumerate structures");
  c_enumerate->add_option("files", files)->required();
  c_enumerate->add_option("--class", cls)
      ->check(CLI::IsMember({"Pre", "Weak", "Nbhd", "Topology"}));
  c_enumerate->add_flag("--count-only", count_only);

  CLI::App* c_reflect = app.add_subcommand("reflect", "reflect a structure");
  c_reflect->add_option("files", files)->required();
  c_reflect->add_flag("--weak", rweak);
  c_reflect->add_flag("--nbhd", rnbhd);
  c_reflect->add_flag("--top", rtop);

  CLI::App* c_morphism = app.add_subcommand("morphism", "check a morphism");
  c_morphism->add_option("files", files)->required();
  c_morphism->add_option("--check", check)->required()
      ->check(CLI::IsMember({"prenbhd", "pseudoopen", "frobenius", "ppj"}));

  CLI::App* c_regepi = app.add_subcommand("regepi", "regular-epi analysis");
  c_regepi->add_option("files", files)->required();
  c_regepi->add_flag("--hereditary", hereditary);
  c_regepi->add_flag("--nhd", nhd);

  CLI::App* c_locale = app.add_subcommand("locale", "locale analyses");
  c_locale->add_option("files", files)->required();
  c_locale->add_flag("--natural-topology", natural);
  c_locale->add_flag("--right-inverse", right_inverse);

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    SpecRegistry reg(caps);
    for (const auto& f : files) reg.load_file(f);

    CLI::App* sub = app.get_subcommands().front();
    Reporter out(sub->get_name());
    out.as_json = as_json;

    if (sub == c_classify) code = cmd_classify(reg, out);
    else if (sub == c_convert) code = cmd_convert(reg, to, round_trip, out);
    else if (sub == c_enumerate) code = cmd_enumerate(reg, cls, count_only, out);
    else if (sub == c_reflect) {
      if (static_cast<int>(rweak) + rnbhd + rtop != 1)
        fail(ErrorCode::SchemaError, "choose one of --weak, --nbhd, --top");
      code = cmd_reflect(reg, rweak ? "weak" : rnbhd ? "nbhd" : "top", out);
    } else if (sub == c_morphism) code = cmd_morphism(reg, check, out);
    else if (sub == c_regepi) code = cmd_regepi(reg, hereditary, nhd, out);
    else if (sub == c_locale) code = cmd_locale(reg, natural, right_inverse, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = e.code() == ErrorCode::SchemaError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    code = 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  // stdout stays byte-stable; timing goes to stderr
  std::cerr << "timing: " << elapsed.count() << " ms\n";
  return code;
}
