#include <doctest.h>

#include <set>

#include "alcove/ktheory.hpp"

using namespace alcove;

namespace {

FiniteAbelianGroup group(std::vector<long> factors) {
  FiniteAbelianGroup g;
  for (long f : factors) g.factors.push_back(Int(f));
  return g;
}

}  // namespace

TEST_CASE("character table of the trivial group") {
  FiniteAbelianGroup g = group({});
  std::vector<Character> t = character_table(g);
  REQUIRE(t.size() == 1);
  CHECK(t[0].exponents == std::vector<Rat>{rat(0)});
  CHECK(characters_orthogonal(g, t));
}

TEST_CASE("character table of Z/3") {
  FiniteAbelianGroup g = group({3});
  std::vector<Character> t = character_table(g);
  REQUIRE(t.size() == 3);
  // the three cube-root characters evaluated on the generator
  std::set<Rat> on_gen;
  for (const Character& chi : t) on_gen.insert(chi.exponents[1]);
  CHECK(on_gen == std::set<Rat>{rat(0), rat(1, 3), rat(2, 3)});
  CHECK(characters_orthogonal(g, t));
}

TEST_CASE("character table of Z/2 x Z/2 is real") {
  FiniteAbelianGroup g = group({2, 2});
  std::vector<Character> t = character_table(g);
  REQUIRE(t.size() == 4);
  for (const Character& chi : t)
    for (const Rat& e : chi.exponents)
      CHECK((e == 0 || e == rat(1, 2)));
  CHECK(characters_orthogonal(g, t));
}

TEST_CASE("orthogonality for mixed factor groups") {
  for (auto factors : {std::vector<long>{4}, std::vector<long>{2, 4},
                       std::vector<long>{2, 6}, std::vector<long>{3, 3}}) {
    FiniteAbelianGroup g = group(factors);
    CHECK(characters_orthogonal(g, character_table(g)));
  }
  // a mangled table must be rejected
  FiniteAbelianGroup z3 = group({3});
  std::vector<Character> t = character_table(z3);
  t[1].exponents[1] = rat(1, 2);
  CHECK(!characters_orthogonal(z3, t));
}

TEST_CASE("k-theory ranks for the A series") {
  for (int n = 1; n <= 6; ++n) {
    RootSystem rs({Series::A, n});
    KReport kr = k_groups_spherical(rs);
    CHECK(kr.k0_rank == (uint64_t)(n + 1));
    CHECK(kr.k1_rank == 0);
    CHECK(kr.k1_method == "cited-theorem");
    CHECK(kr.l_packet_size == (uint64_t)(n + 1));
    CHECK(kr.generator_count == (uint64_t)(n + 1));
    CHECK(!kr.point_k_theory);
    CHECK(kr.connection_index == n + 1);
    CHECK(kr.lattice_quotient_order == n + 1);
  }
}

TEST_CASE("five quantities agree on every route") {
  for (const char* label :
       {"A5", "B2", "B6", "C5", "D4", "D7", "E6", "F4", "G2"}) {
    RootSystem rs(CartanType::parse(label));
    KReport kr = k_groups_spherical(rs);
    Int f = rs.connection_index();
    CHECK(Int(kr.k0_rank) == f);
    CHECK(Int(kr.l_packet_size) == f);
    CHECK(Int(kr.generator_count) == f);
    CHECK(kr.lattice_quotient_order == f);
    CHECK(kr.k1_rank == 0);
  }
}

TEST_CASE("trivial symmetry groups reduce to a point") {
  for (const char* label : {"E8", "F4", "G2"}) {
    RootSystem rs(CartanType::parse(label));
    KReport kr = k_groups_spherical(rs);
    CHECK(kr.point_k_theory);
    CHECK(kr.k0_rank == 1);
    CHECK(kr.k1_rank == 0);
    CHECK(kr.l_packet_size == 1);
    CHECK(kr.generator_count == 1);
  }
}

TEST_CASE("large types stay within the alcove route") {
  // |W| far beyond the cap: the packet size must still be available
  RootSystem e7(CartanType::parse("E7"));
  CHECK(l_packet_size(e7) == 2);
  RootSystem e8(CartanType::parse("E8"));
  CHECK(l_packet_size(e8) == 1);
  RootSystem b8(CartanType::parse("B8"));
  CHECK(l_packet_size(b8) == 2);
  KReport kr = k_groups_spherical(e7);
  CHECK(kr.k0_rank == 2);
  CHECK(kr.generator_count == 2);
}

TEST_CASE("generator count reads the unit marks") {
  CHECK(generator_count(RootSystem(CartanType::parse("A4"))) == 5);
  CHECK(generator_count(RootSystem(CartanType::parse("B5"))) == 2);
  CHECK(generator_count(RootSystem(CartanType::parse("C5"))) == 2);
  CHECK(generator_count(RootSystem(CartanType::parse("D6"))) == 4);
  CHECK(generator_count(RootSystem(CartanType::parse("E6"))) == 3);
  CHECK(generator_count(RootSystem(CartanType::parse("E7"))) == 2);
  CHECK(generator_count(RootSystem(CartanType::parse("E8"))) == 1);
}
