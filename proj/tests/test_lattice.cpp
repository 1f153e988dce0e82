#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "nbhd/lattice.hpp"

using namespace nbhd;

static bool fails_with(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

TEST_CASE("two-element chain") {
  FiniteLattice L = fixtures::c2();
  CHECK(L.size() == 2);
  CHECK(L.bottom() == L.index("0"));
  CHECK(L.top() == L.index("1"));
  CHECK(L.meet(0, 1) == L.index("0"));
  CHECK(L.join(0, 1) == L.index("1"));
}

TEST_CASE("boolean lattice on two atoms") {
  FiniteLattice L = fixtures::b2();
  int a = L.index("a"), b = L.index("b");
  CHECK(L.meet(a, b) == L.index("0"));
  CHECK(L.join(a, b) == L.index("1"));
  CHECK(!L.leq(a, b));
  CHECK(!L.leq(b, a));
}

TEST_CASE("M3 is rejected with a witness triple") {
  CHECK(fails_with(ErrorCode::NotDistributive, [] {
    FiniteLattice::build({"0", "a", "b", "c", "1"},
                         {{"0", "a"},
                          {"0", "b"},
                          {"0", "c"},
                          {"a", "1"},
                          {"b", "1"},
                          {"c", "1"}});
  }));
}

TEST_CASE("N5 is rejected") {
  CHECK(fails_with(ErrorCode::NotDistributive, [] {
    FiniteLattice::build({"0", "a", "b", "c", "1"},
                         {{"0", "a"},
                          {"a", "c"},
                          {"c", "1"},
                          {"0", "b"},
                          {"b", "1"}});
  }));
}

TEST_CASE("cycles are rejected") {
  CHECK(fails_with(ErrorCode::NotAPoset, [] {
    FiniteLattice::build({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  }));
}

TEST_CASE("posets without joins are rejected") {
  CHECK(fails_with(ErrorCode::NotALattice, [] {
    FiniteLattice::build({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  }));
}

TEST_CASE("foreign elements in leq are rejected") {
  CHECK(fails_with(ErrorCode::ForeignElement, [] {
    FiniteLattice::build({"0", "1"}, {{"0", "q"}});
  }));
}

TEST_CASE("meet_all and join_all") {
  FiniteLattice B = fixtures::b2();
  Mask ab = mask_bit(B.index("a")) | mask_bit(B.index("b"));
  CHECK(B.join_all(ab) == B.index("1"));
  CHECK(B.meet_all(0) == B.top());
  CHECK(B.join_all(0) == B.bottom());
  FiniteLattice C = fixtures::c3();
  Mask a1 = mask_bit(C.index("a")) | mask_bit(C.index("1"));
  CHECK(C.meet_all(a1) == C.index("a"));
  CHECK(fails_with(ErrorCode::ForeignElement,
                   [&] { C.meet_all(Mask{1} << 40); }));
}

TEST_CASE("lattice laws hold exhaustively on the fixtures") {
  for (const FiniteLattice& L : {fixtures::c2(), fixtures::c3(), fixtures::b2(),
                                 fixtures::b3(), fixtures::d12()}) {
    for (int x = 0; x < L.size(); ++x) {
      CHECK(L.meet(x, x) == x);
      CHECK(L.join(x, x) == x);
      for (int y = 0; y < L.size(); ++y) {
        CHECK(L.meet(x, y) == L.meet(y, x));
        CHECK(L.join(x, y) == L.join(y, x));
        CHECK(L.meet(x, L.join(x, y)) == x);  // absorption
        CHECK(L.join(x, L.meet(x, y)) == x);
        for (int z = 0; z < L.size(); ++z) {
          CHECK(L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z));
          CHECK(L.join(x, L.join(y, z)) == L.join(L.join(x, y), z));
        }
      }
    }
  }
}

TEST_CASE("every constructed lattice is a frame and a coframe") {
  for (const FiniteLattice& L : {fixtures::c2(), fixtures::c3(), fixtures::b2(),
                                 fixtures::b3(), fixtures::d12()}) {
    CHECK(is_frame(L));
    CHECK(is_coframe(L));
  }
}

TEST_CASE("transitive closure on load") {
  // only covering pairs given; the closure must fill in 0 <= 1
  FiniteLattice L =
      FiniteLattice::build({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}});
  CHECK(L.leq(L.index("0"), L.index("1")));
}

TEST_CASE("down-set sublattice inherits names and order") {
  FiniteLattice B = fixtures::b3();
  int p = B.index("{x,y}");
  SubLattice sub = down_set_lattice(B, p);
  CHECK(sub.lattice.size() == 4);
  CHECK(sub.lattice.name(sub.lattice.top()) == "{x,y}");
  CHECK(sub.lattice.name(sub.lattice.bottom()) == "{}");
  for (int i = 0; i < sub.lattice.size(); ++i)
    for (int j = 0; j < sub.lattice.size(); ++j)
      CHECK(sub.lattice.leq(i, j) == B.leq(sub.embed[i], sub.embed[j]));
}

TEST_CASE("sub_lattice rejects subsets that are not closed") {
  FiniteLattice B = fixtures::b2();
  Mask bad = mask_bit(B.index("a")) | mask_bit(B.index("b"));
  CHECK(fails_with(ErrorCode::NotALattice, [&] { sub_lattice(B, bad); }));
}
