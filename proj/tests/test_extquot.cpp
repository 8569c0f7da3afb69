#include <doctest.h>

#include "alcove/extquot.hpp"
#include "alcove/sampling.hpp"

using namespace alcove;

TEST_CASE("component table of A1") {
  RootSystem rs(CartanType::parse("A1"));
  std::vector<ExtQuotComponent> comps = components(rs);
  REQUIRE(comps.size() == 2);
  CHECK(is_identity(comps[0].class_rep));
  CHECK(comps[0].fixed_dim == 1);
  CHECK(comps[0].fixed_pi0 == 1);
  CHECK(comps[0].class_size == 1);
  CHECK(comps[0].centralizer_order == 2);
  CHECK(comps[0].rep_word.empty());
  // the reflection fixes the two half-period points
  CHECK(comps[1].fixed_dim == 0);
  CHECK(comps[1].fixed_pi0 == 2);
  CHECK(comps[1].class_size == 1);
  CHECK(comps[1].centralizer_order == 2);
  CHECK(comps[1].rep_word == std::vector<int>{0});
}

TEST_CASE("component table of A2") {
  RootSystem rs(CartanType::parse("A2"));
  std::vector<ExtQuotComponent> comps = components(rs);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].fixed_dim == 2);
  CHECK(comps[0].class_size == 1);
  CHECK(comps[0].centralizer_order == 6);
  CHECK(comps[0].fixed_pi0 == 1);
  // reflections: a circle of fixed points
  CHECK(comps[1].fixed_dim == 1);
  CHECK(comps[1].class_size == 3);
  CHECK(comps[1].centralizer_order == 2);
  CHECK(comps[1].fixed_pi0 == 1);
  // rotations: three isolated fixed points
  CHECK(comps[2].fixed_dim == 0);
  CHECK(comps[2].class_size == 2);
  CHECK(comps[2].centralizer_order == 3);
  CHECK(comps[2].fixed_pi0 == 3);
}

TEST_CASE("component table of B2") {
  RootSystem rs(CartanType::parse("B2"));
  std::vector<ExtQuotComponent> comps = components(rs);
  REQUIRE(comps.size() == 5);
  uint64_t total = 0;
  int full = 0;
  for (const auto& c : comps) {
    total += c.class_size;
    CHECK(c.centralizer_order * c.class_size == 8);
    if (c.fixed_dim == 2) ++full;
  }
  CHECK(total == 8);
  CHECK(full == 1);
}

TEST_CASE("fibers over the special point count the symmetry classes") {
  for (const char* label : {"A1", "A2", "A3", "B3", "D4", "D5", "G2"}) {
    RootSystem rs(CartanType::parse(label));
    ExtQuotFiber fb = fiber(rs, special_point(rs));
    CHECK(Int(fb.class_count) == rs.connection_index());
    CHECK(Int(fb.stabilizer_order) == rs.connection_index());
    CHECK(fb.abelian);
    CHECK(fb.method == "alcove");
  }
}

TEST_CASE("fiber over the identity point counts weyl classes") {
  RootSystem rs(CartanType::parse("A2"));
  ExtQuotFiber fb = fiber(rs, TorusPoint(rs, zero_vec(2)));
  CHECK(fb.stabilizer_order == 6);
  CHECK(fb.class_count == 3);
  CHECK(!fb.abelian);
}

TEST_CASE("generic fibers are singletons") {
  Rng rng(11);
  for (const char* label : {"A2", "B2", "C3"}) {
    RootSystem rs(CartanType::parse(label));
    Alcove a = fundamental_alcove(rs);
    for (int i = 0; i < 5; ++i) {
      TorusPoint t(rs, sample_interior_point(rng, a, 6));
      ExtQuotFiber fb = fiber(rs, t);
      CHECK(fb.class_count == 1);
      CHECK(fb.stabilizer_order == 1);
    }
  }
}

TEST_CASE("pair orbit census agrees with the class-count shortcut") {
  RootSystem a1(CartanType::parse("A1"));
  CHECK(extquot_point_count_over_orbit(a1, special_point(a1)) == 2);
  RootSystem a2(CartanType::parse("A2"));
  CHECK(extquot_point_count_over_orbit(a2, special_point(a2)) == 3);
  CHECK(extquot_point_count_over_orbit(a2, TorusPoint(a2, zero_vec(2))) == 3);
  RootSystem b2(CartanType::parse("B2"));
  CHECK(extquot_point_count_over_orbit(b2, special_point(b2)) == 2);
  // a generic point sits in a free orbit: one fiber point
  CHECK(extquot_point_count_over_orbit(
            a2, TorusPoint(a2, RatVec{rat(1, 5), rat(1, 7)})) == 1);
  // point on the first simple wall of A2: stabilizer Z/2, two classes
  TorusPoint wall(a2, RatVec{rat(1, 5), rat(2, 5)});
  ExtQuotFiber fb = fiber(a2, wall);
  CHECK(fb.class_count == 2);
  CHECK(extquot_point_count_over_orbit(a2, wall) == fb.class_count);
}

TEST_CASE("grid census matches the elementary divisor prediction") {
  RootSystem a1(CartanType::parse("A1"));
  WeylGroup w1 = generate(a1);
  // identity fixes the whole grid, the flip only the half-period points
  CHECK(fixed_points_on_grid(a1, w1.element(0), 12) == 12);
  CHECK(fixed_points_on_grid(a1, w1.element(1), 12) == 2);
  CHECK(predicted_fixed_points(a1, w1.element(1), 12) == 2);
  CHECK(fixed_points_on_grid(a1, w1.element(1), 60) == 2);

  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(label));
    WeylGroup w = generate(rs);
    for (long grid : {12L, 60L})
      for (size_t i = 0; i < w.size(); ++i)
        CHECK(Int(fixed_points_on_grid(rs, w.element(i), grid)) ==
              predicted_fixed_points(rs, w.element(i), grid));
  }
}

TEST_CASE("grid prediction scales with the grid for rotations") {
  RootSystem a2(CartanType::parse("A2"));
  WeylGroup w = generate(a2);
  // find a 3-cycle: nontrivial, no fixed line
  for (size_t i = 0; i < w.size(); ++i) {
    IMat m = w.element(i);
    IMat m3 = m * m * m;
    if (!is_identity(m) && is_identity(m3)) {
      CHECK(fixed_points_on_grid(a2, m, 12) == 3);
      CHECK(fixed_points_on_grid(a2, m, 60) == 3);
      return;
    }
  }
  FAIL("no rotation found in W(A2)");
}
