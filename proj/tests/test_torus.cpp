#include <doctest.h>

#include <algorithm>

#include "alcove/sampling.hpp"
#include "alcove/torus.hpp"

using namespace alcove;

namespace {

std::vector<IMat> sorted_mats(std::vector<IMat> v) {
  std::sort(v.begin(), v.end(),
            [](const IMat& a, const IMat& b) { return a.a < b.a; });
  return v;
}

}  // namespace

TEST_CASE("torus points canonicalize into the unit box") {
  RootSystem rs(CartanType::parse("A2"));
  TorusPoint t(rs, RatVec{rat(5, 4), rat(-1, 3)});
  for (const Rat& c : t.cw_coords()) {
    CHECK(c >= 0);
    CHECK(c < 1);
  }
  // shifting by any coweight leaves the canonical representative alone
  RatVec w0 = rs.fundamental_coweights()[0];
  TorusPoint shifted(rs, t.coords() + w0 + w0);
  CHECK(t == shifted);
  CHECK(t.cw_coords() == shifted.cw_coords());
}

TEST_CASE("weyl action on the torus") {
  RootSystem rs(CartanType::parse("A1"));
  TorusPoint quarter(rs, RatVec{rat(1, 4)});
  // the reflection sends x to -x, which is the same point mod the coweights
  IMat s = rs.simple_reflection(0);
  CHECK(act(rs, s, quarter) == quarter);
  TorusPoint eighth(rs, RatVec{rat(1, 8)});
  CHECK(!(act(rs, s, eighth) == eighth));
}

TEST_CASE("orbit and stabilizer on the line") {
  RootSystem rs(CartanType::parse("A1"));
  // the special point: fixed by everything mod coweights
  OrbitStabilizer os = orbit_stabilizer(rs, special_point(rs));
  CHECK(os.orbit_size == 1);
  CHECK(os.stabilizer.size() == 2);
  // a generic point: swapped with its negative
  OrbitStabilizer gen = orbit_stabilizer(rs, TorusPoint(rs, RatVec{rat(1, 8)}));
  CHECK(gen.orbit_size == 2);
  CHECK(gen.stabilizer.size() == 1);
}

TEST_CASE("special point stabilizers by both methods") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"}) {
    RootSystem rs(CartanType::parse(label));
    TorusPoint t0 = special_point(rs);
    StabilizerReport direct = stabilizer_direct(rs, t0);
    StabilizerReport alc = stabilizer_alcove(rs, t0);
    CHECK(direct.method == "orbit-bfs");
    CHECK(alc.method == "alcove");
    CHECK(Int(direct.order) == rs.connection_index());
    CHECK(direct.order == alc.order);
    CHECK(sorted_mats(direct.elements) == sorted_mats(alc.elements));
    CHECK(direct.abelian);
    REQUIRE(direct.structure);
    CHECK(direct.structure->factors == rs.fundamental_group().factors);
  }
}

TEST_CASE("full stabilizer at the origin") {
  RootSystem a2(CartanType::parse("A2"));
  StabilizerReport rep = stabilizer_direct(a2, TorusPoint(a2, zero_vec(2)));
  CHECK(rep.order == 6);
  CHECK(!rep.abelian);
  CHECK(rep.class_count == 3);
  CHECK(rep.orbit_size == 1);

  RootSystem b2(CartanType::parse("B2"));
  StabilizerReport rep2 = stabilizer_direct(b2, TorusPoint(b2, zero_vec(2)));
  CHECK(rep2.order == 8);
  CHECK(rep2.class_count == 5);
  StabilizerReport rep2a = stabilizer_alcove(b2, TorusPoint(b2, zero_vec(2)));
  CHECK(sorted_mats(rep2.elements) == sorted_mats(rep2a.elements));
}

TEST_CASE("two methods agree at wall points") {
  RootSystem rs(CartanType::parse("B3"));
  std::vector<RatVec> points = {
      RatVec{rat(1, 2), rat(0), rat(0)},
      RatVec{rat(1, 3), rat(1, 3), rat(0)},
      RatVec{rat(1, 4), rat(1, 2), rat(3, 4)},
      RatVec{rat(0), rat(0), rat(1, 2)},
  };
  for (const RatVec& x : points) {
    TorusPoint t(rs, x);
    StabilizerReport a = stabilizer_direct(rs, t);
    StabilizerReport b = stabilizer_alcove(rs, t);
    CHECK(a.order == b.order);
    CHECK(sorted_mats(a.elements) == sorted_mats(b.elements));
    CHECK(Int(a.orbit_size) * Int(a.order) == weyl_order(rs.type()));
    for (const IMat& w : a.elements) CHECK(act(rs, w, t) == t);
  }
}

TEST_CASE("two methods agree on seeded samples") {
  Rng rng(42);
  for (const char* label : {"A3", "B3", "C4", "D4", "F4"}) {
    RootSystem rs(CartanType::parse(label));
    for (int i = 0; i < 8; ++i) {
      TorusPoint t = sample_torus_point(rng, rs, 24);
      StabilizerReport a = stabilizer_direct(rs, t);
      StabilizerReport b = stabilizer_alcove(rs, t);
      CHECK(a.order == b.order);
      CHECK(sorted_mats(a.elements) == sorted_mats(b.elements));
    }
  }
}

TEST_CASE("stabilizer structures at the special point per type") {
  auto structure_of = [](const char* label) {
    RootSystem rs(CartanType::parse(label));
    StabilizerReport rep = stabilizer_direct(rs, special_point(rs));
    REQUIRE(rep.structure);
    return rep.structure->factors;
  };
  CHECK(structure_of("A3") == std::vector<Int>{4});
  CHECK(structure_of("D4") == std::vector<Int>{2, 2});
  CHECK(structure_of("D5") == std::vector<Int>{4});
  CHECK(structure_of("F4").empty());
  CHECK(structure_of("G2").empty());
}

TEST_CASE("barycenter stabilizer identification") {
  for (const char* label : {"A1", "A2", "A4", "B3", "C4", "D4", "D5", "G2"}) {
    BarycenterCheck lc = verify_barycenter_stabilizer(RootSystem(CartanType::parse(label)));
    CHECK(lc.ok);
    CHECK(lc.method == "orbit-bfs");
    CHECK(lc.failures.empty());
  }
  BarycenterCheck a3 = verify_barycenter_stabilizer(RootSystem(CartanType::parse("A3")));
  CHECK(a3.ok);
  CHECK(a3.order == 4);
}

TEST_CASE("barycenter stabilizer via the alcove route over the cap") {
  RootSystem e8(CartanType::parse("E8"));
  BarycenterCheck lc = verify_barycenter_stabilizer(e8);
  CHECK(lc.ok);
  CHECK(lc.method == "alcove");
  CHECK(lc.order == 1);
}

TEST_CASE("direct stabilizer respects the cap") {
  RootSystem e7(CartanType::parse("E7"));
  CHECK_THROWS_AS(stabilizer_direct(e7, special_point(e7), 1000000),
                  CapExceeded);
}
