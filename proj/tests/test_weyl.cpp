#include <doctest.h>

#include "alcove/weyl.hpp"

using namespace alcove;

namespace {

size_t generated_size(const char* label, uint64_t cap = 1000000) {
  RootSystem rs(CartanType::parse(label));
  return generate(rs, cap).size();
}

Int mat_order(const IMat& m) {
  IMat p = m;
  Int k = 1;
  while (!is_identity(p)) {
    p = p * m;
    k += 1;
  }
  return k;
}

}  // namespace

TEST_CASE("closed-form orders") {
  CHECK(weyl_order({Series::A, 1}) == 2);
  CHECK(weyl_order({Series::A, 4}) == 120);
  CHECK(weyl_order({Series::B, 2}) == 8);
  CHECK(weyl_order({Series::B, 5}) == 3840);
  CHECK(weyl_order({Series::C, 5}) == 3840);
  CHECK(weyl_order({Series::D, 4}) == 192);
  CHECK(weyl_order({Series::D, 6}) == 23040);
  CHECK(weyl_order({Series::E, 6}) == 51840);
  CHECK(weyl_order({Series::E, 7}) == 2903040);
  CHECK(weyl_order({Series::E, 8}) == Int("696729600"));
  CHECK(weyl_order({Series::F, 4}) == 1152);
  CHECK(weyl_order({Series::G, 2}) == 12);
}

TEST_CASE("enumeration matches the closed form") {
  CHECK(generated_size("A1") == 2);
  CHECK(generated_size("A2") == 6);
  CHECK(generated_size("A3") == 24);
  CHECK(generated_size("A4") == 120);
  CHECK(generated_size("B2") == 8);
  CHECK(generated_size("B3") == 48);
  CHECK(generated_size("B4") == 384);
  CHECK(generated_size("C3") == 48);
  CHECK(generated_size("D4") == 192);
  CHECK(generated_size("G2") == 12);
  CHECK(generated_size("F4") == 1152);
}

TEST_CASE("generation stops at the cap") {
  RootSystem e7(CartanType::parse("E7"));
  CHECK_THROWS_AS(generate(e7, 1000000), CapExceeded);
  RootSystem e8(CartanType::parse("E8"));
  CHECK_THROWS_AS(generate(e8, 1000000), CapExceeded);
  try {
    generate(e7, 1000000);
  } catch (const CapExceeded& e) {
    CHECK(e.needed == 2903040);
    CHECK(e.cap == 1000000);
  }
}

TEST_CASE("coxeter relations hold for the generators") {
  for (const char* label : {"A3", "B3", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(label));
    const IntMatrix& c = rs.cartan();
    std::vector<IMat> s = rs.simple_reflections();
    int n = rs.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          CHECK(is_identity(s[i] * s[i]));
          continue;
        }
        long prod = Int(c.at(i, j) * c.at(j, i)).get_si();
        long m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        CHECK(mat_order(s[i] * s[j]) == m);
      }
  }
}

TEST_CASE("bfs words rebuild the elements") {
  RootSystem rs(CartanType::parse("B3"));
  WeylGroup w = generate(rs);
  CHECK(is_identity(w.element(0)));
  CHECK(w.word(0).empty());
  for (size_t idx = 0; idx < w.size(); idx += 7) {
    IMat prod = IMat::identity(rs.rank());
    for (int g : w.word(idx)) prod = prod * w.generators()[g];
    CHECK(prod == w.element(idx));
    CHECK(w.find(prod) == (int64_t)idx);
  }
  IMat nonmember(3);
  nonmember.at(0, 0) = 2;
  nonmember.at(1, 1) = 1;
  nonmember.at(2, 2) = 1;
  CHECK(w.find(nonmember) == -1);
}

TEST_CASE("conjugacy class counts") {
  auto classes = [](const char* label) {
    RootSystem rs(CartanType::parse(label));
    WeylGroup w = generate(rs);
    return conjugacy_classes(w).size();
  };
  CHECK(classes("A2") == 3);
  CHECK(classes("A3") == 5);
  CHECK(classes("A4") == 7);
  CHECK(classes("B2") == 5);
  CHECK(classes("B3") == 10);
  CHECK(classes("G2") == 6);
  CHECK(classes("D4") == 13);
  CHECK(classes("F4") == 25);
}

TEST_CASE("conjugacy classes partition the group") {
  RootSystem rs(CartanType::parse("B3"));
  WeylGroup w = generate(rs);
  std::vector<std::vector<uint32_t>> cls = conjugacy_classes(w);
  size_t total = 0;
  std::vector<bool> seen(w.size(), false);
  for (const auto& cl : cls) {
    total += cl.size();
    CHECK(w.size() % cl.size() == 0);  // class size divides the order
    for (uint32_t idx : cl) {
      CHECK(!seen[idx]);
      seen[idx] = true;
    }
    // all members share the trace and order of the representative
    Int ord = mat_order(w.element(cl[0]));
    for (size_t k = 1; k < cl.size(); k += 3)
      CHECK(mat_order(w.element(cl[k])) == ord);
  }
  CHECK(total == w.size());
}

TEST_CASE("group closure helper") {
  RootSystem rs(CartanType::parse("A2"));
  std::vector<IMat> one = close_group({rs.simple_reflection(0)}, 100);
  CHECK(one.size() == 2);
  CHECK(is_identity(one[0]));
  std::vector<IMat> all = close_group(rs.simple_reflections(), 100);
  CHECK(all.size() == 6);
  CayleyTable t = cayley_table_for(all);
  CHECK(table_identity(t) == 0);
  CHECK(table_class_count(t) == 3);
  GroupAnalysis ga = analyze_elements(all);
  CHECK(ga.order == 6);
  CHECK(!ga.abelian);
  CHECK(ga.class_count == 3);
  CHECK_THROWS_AS(close_group(rs.simple_reflections(), 3), CapExceeded);
}
