#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "fixtures.hpp"
#include "nbhd/prenbhd.hpp"

using namespace nbhd;

namespace {

// Structure from its principal generators, by element name.
PreNbhd from_generators(const FiniteLattice& L,
                        const std::map<std::string, std::string>& g) {
  std::vector<Mask> assign(L.size());
  for (const auto& [m, v] : g) assign[L.index(m)] = L.up_set(L.index(v));
  return make_prenbhd(L, assign);
}

// The running counterexamples from the worked examples.
PreNbhd mu_bad_c3() {
  return from_generators(fixtures::c3(), {{"0", "a"}, {"a", "1"}, {"1", "1"}});
}

PreNbhd mu_c_b2() {
  // m -> up(m ∨ a)
  FiniteLattice B = fixtures::b2();
  std::vector<Mask> assign(B.size());
  int a = B.index("a");
  for (int m = 0; m < B.size(); ++m) assign[m] = B.up_set(B.join(m, a));
  return make_prenbhd(B, assign);
}

Mask elems(const FiniteLattice& L, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= mask_bit(L.index(n));
  return m;
}

}  // namespace

TEST_CASE("nabla on C3 matches the displayed table") {
  FiniteLattice C = fixtures::c3();
  PreNbhd n = nabla(C);
  CHECK(n.assign[C.index("0")] == C.all_mask());
  CHECK(n.assign[C.index("a")] == mask_bit(C.index("1")));
  CHECK(n.assign[C.index("1")] == mask_bit(C.index("1")));
}

TEST_CASE("the two standard structures classify as topologies") {
  for (const FiniteLattice& L :
       {fixtures::c2(), fixtures::c3(), fixtures::b2(), fixtures::d12()}) {
    CHECK(classify(nabla(L)) == StructureClass::Topology);
    CHECK(classify(atleast(L)) == StructureClass::Topology);
  }
  FiniteLattice B = fixtures::b2();
  CHECK(atleast(B).assign[B.index("a")] == elems(B, {"a", "1"}));
}

TEST_CASE("make_prenbhd rejects bad assignments") {
  FiniteLattice C = fixtures::c3();
  // not order-reversing: assign(0) smaller than assign(a)
  std::vector<Mask> bad(C.size());
  bad[C.index("0")] = mask_bit(C.index("1"));
  bad[C.index("a")] = C.up_set(C.index("a"));
  bad[C.index("1")] = mask_bit(C.index("1"));
  CHECK_THROWS_AS(make_prenbhd(C, bad), Error);
  // majorization failure: assign(a) contains 0
  std::vector<Mask> bad2(C.size());
  bad2[C.index("0")] = C.all_mask();
  bad2[C.index("a")] = C.all_mask();
  bad2[C.index("1")] = mask_bit(C.index("1"));
  CHECK_THROWS_AS(make_prenbhd(C, bad2), Error);
}

TEST_CASE("classification of the counterexamples") {
  CHECK(classify(mu_bad_c3()) == StructureClass::Pre);
  CHECK(!is_interpolative(mu_bad_c3()));

  PreNbhd mc = mu_c_b2();
  CHECK(classify(mc) == StructureClass::Weak);
  CHECK(is_interpolative(mc));
  FiniteLattice B = mc.carrier;
  // the empty join breaks the meet law: mu(0) = up(a), not the whole lattice
  CHECK(mc.assign[B.bottom()] == B.up_set(B.index("a")));
  CHECK(!preserves_all_meets(mc));
}

TEST_CASE("interpolativity tests agree on every enumerated structure") {
  for (const FiniteLattice& L :
       {fixtures::c2(), fixtures::c3(), fixtures::b2()}) {
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Pre))
      CHECK(is_interpolative(mu) == weak_condition_by_intersections(mu));
  }
}

TEST_CASE("opens of the worked examples") {
  FiniteLattice C = fixtures::c3();
  CHECK(opens(nabla(C)) == (mask_bit(C.bottom()) | mask_bit(C.top())));
  CHECK(opens(atleast(C)) == C.all_mask());
  PreNbhd mc = mu_c_b2();
  CHECK(opens(mc) == elems(mc.carrier, {"a", "1"}));
}

TEST_CASE("interiors of the worked examples") {
  FiniteLattice B = fixtures::b2();
  PreNbhd n = nabla(B);
  for (int m = 0; m < B.size(); ++m)
    CHECK(interior(n, m) == (m == B.top() ? B.top() : B.bottom()));
  PreNbhd a = atleast(B);
  for (int m = 0; m < B.size(); ++m) CHECK(interior(a, m) == m);
  // O = {0, b, 1}: nothing nonzero sits below a
  PreNbhd mu = nbhd_from_pfs(make_pfs(B, elems(B, {"0", "b", "1"})));
  CHECK(interior(mu, B.index("a")) == B.bottom());
  CHECK(interior(mu, B.index("b")) == B.index("b"));
}

TEST_CASE("open characterizations and interior properties") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()}) {
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Pre)) {
      // p is open iff its filter is exactly the up-set
      Mask expected = 0;
      for (int p = 0; p < L.size(); ++p)
        if (mu.assign[p] == L.up_set(p)) expected |= mask_bit(p);
      CHECK(opens(mu) == expected);
      // the interior map is deflationary, monotone, idempotent and fixes
      // exactly the elements above their own interior join, the opens
      for (int m = 0; m < L.size(); ++m) {
        int i = interior(mu, m);
        CHECK(L.leq(i, m));
        CHECK(interior(mu, i) == i);
        for (int n = 0; n < L.size(); ++n)
          if (L.leq(m, n)) CHECK(L.leq(i, interior(mu, n)));
      }
      for (int p : mask_indices(opens(mu))) CHECK(interior(mu, p) == p);
    }
  }
}

TEST_CASE("interior-open equivalence and a failing example") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()})
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Nbhd))
      CHECK(interiors_are_open(mu));

  // opens {0, {x}, {y}, top} of B3 are meet-closed but not join-closed;
  // the generated structure is weak yet its interiors escape the opens
  FiniteLattice B = fixtures::b3();
  Mask O = elems(B, {"{}", "{x}", "{y}", "{x,y,z}"});
  std::vector<Mask> assign(B.size());
  for (int m = 0; m < B.size(); ++m) {
    Mask acc = 0;
    for (int q : mask_indices(O & B.up_set(m))) acc |= B.up_set(q);
    assign[m] = acc;
  }
  PreNbhd mu = make_prenbhd(B, assign);
  CHECK(opens(mu) == O);
  CHECK(classify(mu) == StructureClass::Weak);
  CHECK(!interiors_are_open(mu));
}

TEST_CASE("pfs construction and closure") {
  FiniteLattice B = fixtures::b2();
  CHECK_NOTHROW(make_pfs(B, elems(B, {"0", "b", "1"})));
  CHECK_THROWS_AS(make_pfs(B, elems(B, {"a", "1"})), Error);  // no bottom
  CHECK(pfs_closure(B, elems(B, {"a", "1"})) == elems(B, {"0", "a", "1"}));
  CHECK(pfs_closure(B, elems(B, {"a", "b"})) == B.all_mask());
}

TEST_CASE("nbhd_from_pfs on the standard pseudo-frame sets") {
  FiniteLattice B = fixtures::b2();
  PseudoFrameSet bottom_top = make_pfs(B, mask_bit(B.bottom()) | mask_bit(B.top()));
  CHECK(nbhd_from_pfs(bottom_top) == nabla(B));
  PseudoFrameSet whole = make_pfs(B, B.all_mask());
  CHECK(nbhd_from_pfs(whole) == atleast(B));
  PreNbhd mu = nbhd_from_pfs(make_pfs(B, elems(B, {"0", "b", "1"})));
  CHECK(mu.assign[B.index("a")] == mask_bit(B.index("1")));
  CHECK(classify(mu) == StructureClass::Topology);
  CHECK(opens(mu) == elems(B, {"0", "b", "1"}));
}

TEST_CASE("nbhd_from_kuratowski on the standard interiors") {
  FiniteLattice B = fixtures::b2();
  std::vector<int> id(B.size());
  for (int i = 0; i < B.size(); ++i) id[i] = i;
  CHECK(nbhd_from_kuratowski(make_kuratowski(B, id)) == atleast(B));

  std::vector<int> nab(B.size(), B.bottom());
  nab[B.top()] = B.top();
  CHECK(nbhd_from_kuratowski(make_kuratowski(B, nab)) == nabla(B));

  // i fixing {0, b, 1} with i(a) = 0
  std::vector<int> t(B.size());
  t[B.index("0")] = B.index("0");
  t[B.index("a")] = B.index("0");
  t[B.index("b")] = B.index("b");
  t[B.index("1")] = B.index("1");
  PreNbhd mu = nbhd_from_kuratowski(make_kuratowski(B, t));
  CHECK(mu.assign[B.index("a")] == mask_bit(B.index("1")));
}

TEST_CASE("kuratowski axioms are enforced") {
  FiniteLattice B = fixtures::b2();
  // inflationary at a
  std::vector<int> bad(B.size());
  bad[B.index("0")] = B.index("0");
  bad[B.index("a")] = B.index("1");
  bad[B.index("b")] = B.index("b");
  bad[B.index("1")] = B.index("1");
  CHECK_THROWS_AS(make_kuratowski(B, bad), Error);
  // meet preservation failure: fix a and b but send 0 to 0 and drop a∧b? —
  // fixing both atoms forces i(0)=0, so break idempotence instead
  // idempotence failure on the four-chain: i(b) = a but i(a) = 0
  FiniteLattice C4 = FiniteLattice::build(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}});
  std::vector<int> bad2 = {C4.index("0"), C4.index("0"), C4.index("a"),
                           C4.index("1")};
  CHECK_THROWS_AS(make_kuratowski(C4, bad2), Error);
}

TEST_CASE("facet round trips") {
  FiniteLattice B = fixtures::b2();
  PreNbhd a = atleast(B);
  CHECK(kuratowski_from(a).i == interior_table(a));
  CHECK(pfs_from(a).members == B.all_mask());
  for (Mask m : enumerate_pfs(B)) {
    PseudoFrameSet O{B, m};
    CHECK(pfs_from(nbhd_from_pfs(O)) == O);
  }
  CHECK_THROWS_AS(pfs_from(mu_bad_c3()), Error);
  CHECK_THROWS_AS(kuratowski_from(mu_bad_c3()), Error);
  CHECK_THROWS_AS(kuratowski_from(mu_c_b2()), Error);
}

TEST_CASE("the pfs bijection preserves and reflects order") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()}) {
    auto all = enumerate_pfs(L);
    for (Mask o1 : all)
      for (Mask o2 : all) {
        PreNbhd m1 = nbhd_from_pfs(PseudoFrameSet{L, o1});
        PreNbhd m2 = nbhd_from_pfs(PseudoFrameSet{L, o2});
        CHECK(((o1 & ~o2) == 0) == prenbhd_leq(m1, m2));
      }
  }
}

TEST_CASE("opens-generation and interior-membership are equivalent "
          "properties of interior-open structures") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()}) {
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Pre)) {
      if (!interiors_are_open(mu)) continue;
      Mask O = opens(mu);
      bool generated = true, membership = true;
      for (int m = 0; m < L.size(); ++m) {
        Mask gen = 0;
        for (int q : mask_indices(O & L.up_set(m))) gen |= L.up_set(q);
        if (mu.assign[m] != gen) generated = false;
        for (int p = 0; p < L.size(); ++p)
          if (mu.member(m, p) != L.leq(m, interior(mu, p)))
            membership = false;
      }
      CHECK(generated == membership);
    }
  }
}

TEST_CASE("retract theorem on the fixtures") {
  for (const FiniteLattice& L :
       {fixtures::c2(), fixtures::c3(), fixtures::b2()}) {
    auto all_pre = enumerate_structures(L, StructureClass::Pre);
    for (Mask m : enumerate_pfs(L)) {
      // every Kuratowski interior arises from a pfs and conversely
      KuratowskiInterior K = kuratowski_from(nbhd_from_pfs(PseudoFrameSet{L, m}));
      PreNbhd p = nbhd_from_kuratowski(K);
      // int ∘ p = id on Kuratowski interiors
      CHECK(interior_table(p) == K.i);
      // p_i is the unique neighbourhood in the fibre and its minimum
      int nbhd_count = 0;
      for (const PreNbhd& mu : all_pre) {
        if (!interiors_are_open(mu)) continue;
        if (interior_table(mu) != K.i) continue;
        CHECK(prenbhd_leq(p, mu));
        if (class_at_least(classify(mu), StructureClass::Nbhd)) {
          ++nbhd_count;
          CHECK(mu == p);
        }
      }
      CHECK(nbhd_count == 1);
    }
  }
}

TEST_CASE("sup and inf of structures") {
  FiniteLattice B = fixtures::b2();
  auto nbhds = enumerate_structures(B, StructureClass::Nbhd);
  for (const PreNbhd& mu : nbhds) {
    CHECK(sup_pre(nabla(B), mu) == mu);  // nabla is the bottom neighbourhood
    CHECK(inf_pre(atleast(B), mu) == mu);
  }
  // atleast is the top of all structures
  for (const PreNbhd& mu : enumerate_structures(B, StructureClass::Pre))
    CHECK(inf_pre(atleast(B), mu) == mu);
  // sup of weak structures stays weak
  auto weak = enumerate_structures(B, StructureClass::Weak);
  for (const PreNbhd& x : weak)
    for (const PreNbhd& y : weak)
      CHECK(class_at_least(classify(sup_pre(x, y)), StructureClass::Weak));
}

TEST_CASE("sup and inf are least upper and greatest lower bounds") {
  FiniteLattice C = fixtures::c3();
  auto all = enumerate_structures(C, StructureClass::Pre);
  for (const PreNbhd& x : all)
    for (const PreNbhd& y : all) {
      PreNbhd s = sup_pre(x, y);
      PreNbhd i = inf_pre(x, y);
      CHECK(prenbhd_leq(x, s));
      CHECK(prenbhd_leq(y, s));
      CHECK(prenbhd_leq(i, x));
      CHECK(prenbhd_leq(i, y));
      for (const PreNbhd& z : all) {
        if (prenbhd_leq(x, z) && prenbhd_leq(y, z)) CHECK(prenbhd_leq(s, z));
        if (prenbhd_leq(z, x) && prenbhd_leq(z, y)) CHECK(prenbhd_leq(z, i));
      }
    }
}

TEST_CASE("weak reflection is monotone") {
  FiniteLattice B = fixtures::b2();
  auto all = enumerate_structures(B, StructureClass::Pre);
  for (const PreNbhd& x : all)
    for (const PreNbhd& y : all)
      if (prenbhd_leq(x, y))
        CHECK(prenbhd_leq(reflect_weak(x), reflect_weak(y)));
}

TEST_CASE("weak reflection: fixpoint route equals enumeration route") {
  for (const FiniteLattice& L :
       {fixtures::c2(), fixtures::c3(), fixtures::b2()}) {
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Pre)) {
      PreNbhd fast = reflect_weak(mu);
      PreNbhd slow = reflect_weak_enumerated(mu);
      CHECK(fast == slow);
      CHECK(class_at_least(classify(fast), StructureClass::Weak));
      CHECK(prenbhd_leq(fast, mu));
      if (class_at_least(classify(mu), StructureClass::Weak))
        CHECK(fast == mu);
    }
  }
  // mu_bad reflects to the constant-top structure
  PreNbhd r = reflect_weak(mu_bad_c3());
  FiniteLattice C = r.carrier;
  for (int m = 0; m < C.size(); ++m)
    CHECK(r.assign[m] == mask_bit(C.top()));
  CHECK(reflect_weak(nabla(C)) == nabla(C));
}

TEST_CASE("neighbourhood reflection of the weak counterexample") {
  PreNbhd mc = mu_c_b2();
  FiniteLattice B = mc.carrier;
  PreNbhd r = reflect_nbhd(mc);
  CHECK(opens(r) == elems(B, {"0", "a", "1"}));
  CHECK(r.assign[B.index("b")] == mask_bit(B.index("1")));
  CHECK(class_at_least(classify(r), StructureClass::Nbhd));
  CHECK(prenbhd_leq_off_bottom(r, mc));
  CHECK_THROWS_AS(reflect_nbhd(mu_bad_c3()), Error);  // WrongClass
}

TEST_CASE("neighbourhood reflection is the enumerated supremum") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()}) {
    auto nbhds = enumerate_structures(L, StructureClass::Nbhd);
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Weak)) {
      PreNbhd r = reflect_nbhd(mu);
      CHECK(class_at_least(classify(r), StructureClass::Nbhd));
      // supremum of the candidates below mu (bottom slot exempt)
      Mask open_union = 0;
      bool any = false;
      for (const PreNbhd& nu : nbhds)
        if (prenbhd_leq_off_bottom(nu, mu)) {
          open_union |= opens(nu);
          any = true;
          CHECK(prenbhd_leq(nu, r));
        }
      CHECK(any);  // nabla-like candidates always qualify? not necessarily —
                   // but the reflected structure itself is one when maximal
      PreNbhd sup = nbhd_from_pfs(PseudoFrameSet{L, pfs_closure(L, open_union)});
      CHECK(r == sup);
      // when the supremum stays below mu it is the maximum
      if (prenbhd_leq_off_bottom(r, mu)) {
        for (const PreNbhd& nu : nbhds)
          if (prenbhd_leq_off_bottom(nu, mu)) CHECK(prenbhd_leq(nu, r));
      }
    }
  }
}

TEST_CASE("reflect_top equals reflect_nbhd on neighbourhoods") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()})
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Nbhd)) {
      CHECK(reflect_top(mu) == reflect_nbhd(mu));
      CHECK(reflect_top(mu) == mu);
    }
  CHECK_THROWS_AS(reflect_top(mu_c_b2()), Error);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_structures(fixtures::c2(), StructureClass::Pre).size() == 2);
  CHECK(enumerate_structures(fixtures::c3(), StructureClass::Pre).size() == 5);
  CHECK(enumerate_structures(fixtures::c3(), StructureClass::Weak).size() == 4);
  CHECK(enumerate_structures(fixtures::c3(), StructureClass::Nbhd).size() == 2);
  CHECK(enumerate_structures(fixtures::b2(), StructureClass::Pre).size() == 9);
  CHECK(enumerate_structures(fixtures::b2(), StructureClass::Nbhd).size() == 4);
  CHECK(enumerate_pfs(fixtures::b2()).size() == 4);
  CHECK(enumerate_pfs(fixtures::c3()).size() == 2);
  // the cap rejects oversized lattices
  CHECK_THROWS_AS(
      enumerate_structures(fixtures::b3(), StructureClass::Pre, 4), Error);
}

TEST_CASE("enumeration is canonically ordered with no duplicates") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()}) {
    auto all = enumerate_structures(L, StructureClass::Pre);
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      // lexicographic in the generator vectors
      std::vector<int> g1, g2;
      for (int m = 0; m < L.size(); ++m) {
        g1.push_back(L.meet_all(all[i].assign[m]));
        g2.push_back(L.meet_all(all[i + 1].assign[m]));
      }
      CHECK(g1 < g2);
    }
  }
}

TEST_CASE("structures are generated by their opens (neighbourhood case)") {
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()}) {
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Nbhd)) {
      Mask O = opens(mu);
      for (int m = 0; m < L.size(); ++m) {
        Mask generated = 0;
        for (int q : mask_indices(O & L.up_set(m))) generated |= L.up_set(q);
        CHECK(mu.assign[m] == generated);
        for (int p = 0; p < L.size(); ++p)
          CHECK(mu.member(m, p) == L.leq(m, interior(mu, p)));
      }
    }
  }
}

TEST_CASE("largest topology always exists finitely and is the up-set structure") {
  for (const FiniteLattice& L :
       {fixtures::c2(), fixtures::c3(), fixtures::b2(), fixtures::d12()}) {
    auto t = largest_topology(L);
    REQUIRE(t.has_value());
    CHECK(*t == atleast(L));
    CHECK(classify(*t) == StructureClass::Topology);
  }
}

TEST_CASE("induced substructures") {
  FiniteLattice B = fixtures::b2();
  // p = top gives the structure back
  for (const PreNbhd& mu : enumerate_structures(B, StructureClass::Pre)) {
    InducedSubstructure s = induced_substructure(mu, B.top());
    CHECK(s.structure.assign == mu.assign);
  }
  // p = bottom gives the unique structure on the one-point lattice
  InducedSubstructure t = induced_substructure(atleast(B), B.bottom());
  CHECK(t.sub.lattice.size() == 1);
  CHECK(t.structure.assign[0] == mask_bit(0));
  // weak inputs induce weak structures, neighbourhoods induce neighbourhoods
  for (const FiniteLattice& L : {fixtures::c3(), fixtures::b2()})
    for (const PreNbhd& mu : enumerate_structures(L, StructureClass::Weak))
      for (int p = 0; p < L.size(); ++p) {
        InducedSubstructure s = induced_substructure(mu, p);
        CHECK(class_at_least(classify(s.structure), StructureClass::Weak));
        if (class_at_least(classify(mu), StructureClass::Nbhd))
          CHECK(class_at_least(classify(s.structure), StructureClass::Nbhd));
      }
}
