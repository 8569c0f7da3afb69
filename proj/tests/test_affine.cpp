#include <doctest.h>

#include <set>

#include "alcove/affine.hpp"
#include "alcove/sampling.hpp"

using namespace alcove;

TEST_CASE("fundamental alcove of A1") {
  RootSystem rs(CartanType::parse("A1"));
  Alcove a = fundamental_alcove(rs);
  REQUIRE(a.vertices.size() == 2);
  CHECK(a.vertices[0] == RatVec{rat(0)});
  CHECK(a.vertices[1] == RatVec{rat(1, 2)});
  CHECK(a.barycenter == RatVec{rat(1, 4)});
  CHECK(in_closed_alcove(rs, a.vertices[1]));
  CHECK(!in_open_alcove(rs, a.vertices[1]));
  CHECK(in_open_alcove(rs, a.barycenter));
}

TEST_CASE("fundamental alcove of A2") {
  RootSystem rs(CartanType::parse("A2"));
  Alcove a = fundamental_alcove(rs);
  REQUIRE(a.vertices.size() == 3);
  CHECK(a.vertices[0] == RatVec{rat(0), rat(0)});
  CHECK(a.vertices[1] == RatVec{rat(2, 3), rat(1, 3)});
  CHECK(a.vertices[2] == RatVec{rat(1, 3), rat(2, 3)});
  CHECK(a.barycenter == RatVec{rat(1, 3), rat(1, 3)});
}

TEST_CASE("alcove membership uses all the walls") {
  RootSystem rs(CartanType::parse("B2"));
  Alcove a = fundamental_alcove(rs);
  CHECK(in_open_alcove(rs, a.barycenter));
  // beyond the affine wall
  CHECK(!in_closed_alcove(rs, rat(3) * a.barycenter));
  // behind a simple wall
  CHECK(!in_closed_alcove(rs, RatVec{rat(-1, 10), rat(1, 10)}));
}

TEST_CASE("reduction into the alcove on the line") {
  RootSystem rs(CartanType::parse("A1"));
  ReduceResult r = reduce_to_alcove(rs, RatVec{rat(7, 10)});
  CHECK(r.point == RatVec{rat(3, 10)});
  CHECK(r.map(RatVec{rat(7, 10)}) == r.point);

  ReduceResult neg = reduce_to_alcove(rs, RatVec{rat(-3, 10)});
  CHECK(neg.point == RatVec{rat(3, 10)});

  ReduceResult inside = reduce_to_alcove(rs, RatVec{rat(1, 5)});
  CHECK(inside.steps == 0);
  CHECK(inside.point == RatVec{rat(1, 5)});
  CHECK(is_identity(inside.map.linear));
  CHECK(is_zero(inside.map.translation));

  // integer points land on the origin
  CHECK(reduce_to_alcove(rs, RatVec{rat(4)}).point == RatVec{rat(0)});
  // the reflection of the alcove's interior across a vertex comes back
  CHECK(reduce_to_alcove(rs, RatVec{rat(9, 10)}).point == RatVec{rat(1, 10)});
}

TEST_CASE("reduction certificates on random points") {
  Rng rng(2024);
  for (const char* label : {"A2", "B2", "G2", "B3", "D4"}) {
    RootSystem rs(CartanType::parse(label));
    for (int i = 0; i < 25; ++i) {
      RatVec x = sample_ambient_point(rng, rs.rank(), 10, 3);
      ReduceResult r = reduce_to_alcove(rs, x);
      CHECK(in_closed_alcove(rs, r.point));
      CHECK(r.map(x) == r.point);
      CHECK(translation_in_tagged_lattice(rs, r.map));
      CHECK(r.map.lattice == LatticeTag::coroot);
    }
  }
}

TEST_CASE("reduction is invariant under the plain affine group") {
  Rng rng(55);
  RootSystem rs(CartanType::parse("C3"));
  for (int i = 0; i < 20; ++i) {
    RatVec x = sample_ambient_point(rng, rs.rank(), 8, 2);
    AffineMap w = sample_affine_element(rng, rs, 5, 2);
    CHECK(reduce_to_alcove(rs, x).point == reduce_to_alcove(rs, w(x)).point);
  }
}

TEST_CASE("affine map algebra") {
  RootSystem rs(CartanType::parse("B2"));
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    AffineMap f = sample_affine_element(rng, rs, 4, 2);
    AffineMap g = sample_affine_element(rng, rs, 4, 2);
    RatVec x = sample_ambient_point(rng, rs.rank(), 6, 2);
    CHECK(compose(f, g)(x) == f(g(x)));
    AffineMap finv = inverse(f);
    CHECK(finv(f(x)) == x);
    CHECK(compose(finv, f).same_map(identity_map(rs.rank())));
  }
  AffineMap t = translation_map(rat_vec({1, 0}), LatticeTag::coroot);
  CHECK(t(rat_vec({0, 0})) == rat_vec({1, 0}));
}

TEST_CASE("retraction toward the barycenter") {
  RootSystem rs(CartanType::parse("A1"));
  Alcove a = fundamental_alcove(rs);
  CHECK(retract(a, RatVec{rat(0)}, rat(1, 2)) == RatVec{rat(1, 8)});
  CHECK(retract(a, RatVec{rat(1, 2)}, rat(0)) == RatVec{rat(1, 2)});
  CHECK(retract(a, RatVec{rat(1, 2)}, rat(1)) == a.barycenter);
  CHECK_THROWS_AS(retract(a, RatVec{rat(0)}, rat(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(retract(a, RatVec{rat(0)}, rat(-1, 2)),
                  std::invalid_argument);
}

TEST_CASE("alcove symmetry group of A1") {
  RootSystem rs(CartanType::parse("A1"));
  AlcoveStabilizer h = alcove_stabilizer(rs);
  REQUIRE(h.elements.size() == 2);
  CHECK(h.elements[0].same_map(identity_map(1)));
  // the flip c -> 1/2 - c
  CHECK(h.elements[1].translation == RatVec{rat(1, 2)});
  CHECK(h.elements[1].linear.at(0, 0) == -1);
  CHECK(h.vertex_perm[1] == std::vector<int>{1, 0});
  CHECK(h.structure.factors == std::vector<Int>{2});
}

TEST_CASE("alcove symmetry group of A2 is the vertex 3-cycle") {
  RootSystem rs(CartanType::parse("A2"));
  AlcoveStabilizer h = alcove_stabilizer(rs);
  REQUIRE(h.elements.size() == 3);
  std::set<std::vector<int>> perms(h.vertex_perm.begin(),
                                   h.vertex_perm.end());
  std::set<std::vector<int>> expect = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK(perms == expect);
  CHECK(h.structure.factors == std::vector<Int>{3});
  Alcove a = fundamental_alcove(rs);
  for (const AffineMap& m : h.elements) {
    CHECK(m(a.barycenter) == a.barycenter);
    CHECK(translation_in_tagged_lattice(rs, m));
    CHECK(m.lattice == LatticeTag::coweight);
  }
}

TEST_CASE("alcove symmetry group structures per type") {
  auto structure = [](const char* label) {
    return alcove_stabilizer(RootSystem(CartanType::parse(label))).structure;
  };
  CHECK(structure("A3").factors == std::vector<Int>{4});
  CHECK(structure("B4").factors == std::vector<Int>{2});
  CHECK(structure("C4").factors == std::vector<Int>{2});
  CHECK(structure("D4").factors == std::vector<Int>{2, 2});
  CHECK(structure("D5").factors == std::vector<Int>{4});
  CHECK(structure("E6").factors == std::vector<Int>{3});
  CHECK(structure("E7").factors == std::vector<Int>{2});
  CHECK(structure("E8").factors.empty());
  CHECK(structure("F4").factors.empty());
  CHECK(structure("G2").factors.empty());
}

TEST_CASE("alcove symmetries compose according to their table") {
  RootSystem rs(CartanType::parse("D4"));
  AlcoveStabilizer h = alcove_stabilizer(rs);
  for (size_t i = 0; i < h.elements.size(); ++i)
    for (size_t j = 0; j < h.elements.size(); ++j) {
      AffineMap prod = compose(h.elements[i], h.elements[j]);
      CHECK(prod.same_map(h.elements[h.table[i][j]]));
    }
}
