#include "alcove/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "alcove/extquot.hpp"

namespace alcove {
namespace {

constexpr uint64_t kStabilizerAnalysisLimit = 20000;
constexpr uint64_t kPairOrbitLimit = 400;
constexpr long kSampleDenominator = 60;

struct Collector {
  const CartanType& type;
  std::vector<CheckResult> out;

  void pass(const std::string& name, const std::string& method,
            const std::string& detail) {
    out.push_back({name, type.name(), "pass", method, detail});
  }
  void fail(const std::string& name, const std::string& method,
            const std::string& detail) {
    out.push_back({name, type.name(), "fail", method, detail});
  }
  void skip(const std::string& name, const std::string& why,
            const std::string& detail) {
    out.push_back({name, type.name(), why, "", detail});
  }
  void result(const std::string& name, bool ok, const std::string& method,
              const std::string& good, const std::string& bad) {
    if (ok)
      pass(name, method, good);
    else
      fail(name, method, bad);
  }
};

std::string int_str(const Int& v) { return v.get_str(); }

std::string joined(const std::vector<std::string>& parts) {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i)
    os << (i ? "; " : "") << parts[i];
  return os.str();
}

Int element_order_of(const IMat& m) {
  IMat p = m;
  Int k = 1;
  while (!is_identity(p)) {
    p = p * m;
    k += 1;
    if (k > 10000) throw std::logic_error("element order runaway");
  }
  return k;
}

void check_roots(Collector& c, const RootSystem& rs) {
  size_t expect = positive_root_count(rs.type());
  bool ok = rs.positive_roots().size() == expect;
  for (const Root& r : rs.positive_roots())
    if (r.height() < 1) ok = false;
  for (int64_t m : rs.marks())
    if (m < 1) ok = false;
  c.result("root-counts", ok, "closure",
           std::to_string(expect) + " positive roots",
           "closure produced " + std::to_string(rs.positive_roots().size()) +
               " positive roots, closed form says " + std::to_string(expect));
}

void check_connection_index(Collector& c, const RootSystem& rs) {
  Int got = rs.connection_index();
  Int want = expected_connection_index(rs.type());
  c.result("connection-index", got == want, "determinant",
           "f = " + int_str(got),
           "determinant gave f = " + int_str(got) + ", series table says " +
               int_str(want));
}

void check_lattice_quotient(Collector& c, const RootSystem& rs) {
  InvariantFactors got = rs.fundamental_group();
  std::vector<Int> want = expected_lattice_factors(rs.type());
  bool ok = got.free_rank == 0 && got.factors == want &&
            got.torsion_order() == rs.connection_index();
  c.result("lattice-quotient", ok, "smith-normal-form",
           "coweight/coroot quotient is " + factors_str(got),
           "quotient came out as " + factors_str(got) + " with free rank " +
               std::to_string(got.free_rank));
}

void check_weyl_order(Collector& c, const RootSystem& rs, uint64_t cap) {
  Int predicted = weyl_order(rs.type());
  if (predicted > Int(cap)) {
    c.skip("weyl-order", "skipped (cap)",
           "order " + int_str(predicted) + " exceeds cap " +
               std::to_string(cap));
    return;
  }
  WeylGroup w = generate(rs, cap);
  c.result("weyl-order", Int(w.size()) == predicted, "orbit-bfs",
           "|W| = " + int_str(predicted),
           "enumeration found " + std::to_string(w.size()) +
               " elements, closed form says " + int_str(predicted));
}

void check_alcove_geometry(Collector& c, const RootSystem& rs) {
  int n = rs.rank();
  Alcove a = fundamental_alcove(rs);
  std::vector<std::string> bad;
  if (!is_zero(a.vertices[0])) bad.push_back("base vertex is not the origin");
  for (int i = 1; i <= n; ++i) {
    RatVec cw = rs.to_coweight_coords(a.vertices[i]);
    for (int j = 0; j < n; ++j) {
      Rat want = (j == i - 1) ? Rat(1) / Rat((long)rs.marks()[j]) : Rat(0);
      if (cw[j] != want)
        bad.push_back("vertex " + std::to_string(i) + " fails simple wall " +
                      std::to_string(j));
    }
    if (rs.eval_root(rs.highest_root(), a.vertices[i]) != Rat(1))
      bad.push_back("vertex " + std::to_string(i) + " is off the affine wall");
  }
  if (!in_open_alcove(rs, a.barycenter))
    bad.push_back("barycenter is not interior");
  if (retract(a, a.vertices[0], rat(0)) != a.vertices[0] ||
      retract(a, a.vertices[0], rat(1)) != a.barycenter)
    bad.push_back("retraction endpoints are wrong");
  c.result("alcove-geometry", bad.empty(), "exact",
           std::to_string(n + 1) + " vertices verified", joined(bad));
}

void check_alcove_symmetries(Collector& c, const RootSystem& rs) {
  AlcoveStabilizer h = alcove_stabilizer(rs);
  Int f = rs.connection_index();
  std::vector<std::string> bad;
  if (Int(h.elements.size()) != f)
    bad.push_back("group order " + std::to_string(h.elements.size()) +
                  " differs from f = " + int_str(f));
  if (h.structure.factors != rs.fundamental_group().factors)
    bad.push_back("abstract structure " + h.structure.name() +
                  " does not match the lattice quotient");
  Alcove a = fundamental_alcove(rs);
  std::set<std::vector<int>> perms;
  for (size_t i = 0; i < h.elements.size(); ++i) {
    if (h.elements[i](a.barycenter) != a.barycenter)
      bad.push_back("element " + std::to_string(i) + " moves the barycenter");
    perms.insert(h.vertex_perm[i]);
  }
  if (perms.size() != h.elements.size())
    bad.push_back("vertex action is not faithful");
  c.result("alcove-symmetries", bad.empty(), "alcove",
           "symmetry group is " + h.structure.name(), joined(bad));
}

void check_barycenter(Collector& c, const RootSystem& rs, uint64_t cap) {
  BarycenterCheck lc = verify_barycenter_stabilizer(rs, cap);
  c.result("barycenter-stabilizer", lc.ok, lc.method,
           "stabilizer of the special point matches the alcove symmetries, "
           "order " + std::to_string(lc.order),
           joined(lc.failures));
}

std::vector<IMat> sorted_mats(std::vector<IMat> v) {
  std::sort(v.begin(), v.end(),
            [](const IMat& a, const IMat& b) { return a.a < b.a; });
  return v;
}

void check_two_method(Collector& c, const RootSystem& rs,
                      const VerifyOptions& opt) {
  Int wo = weyl_order(rs.type());
  if (wo > Int(opt.cap)) {
    c.skip("two-method-stabilizers", "skipped (cap)",
           "|W| = " + int_str(wo) + " exceeds cap " + std::to_string(opt.cap));
    return;
  }
  Rng rng(seed_for(opt.seed, rs.type(), "two-method-stabilizers"));
  std::vector<std::pair<TorusPoint, StabilizerReport>> points;
  points.emplace_back(special_point(rs),
                      stabilizer_alcove(rs, special_point(rs), opt.cap));
  int resampled = 0;
  while ((int)points.size() < opt.samples + 1) {
    TorusPoint t = sample_torus_point(rng, rs, kSampleDenominator);
    try {
      // probe with a tight cap so a draw landing on a deep wall stratum is
      // rejected before its stabilizer is materialized
      StabilizerReport probe =
          stabilizer_alcove(rs, t, kStabilizerAnalysisLimit);
      points.emplace_back(std::move(t), std::move(probe));
    } catch (const CapExceeded&) {
      ++resampled;
      if (resampled > 10 * opt.samples) break;
    }
  }
  std::vector<std::string> bad;
  for (size_t i = 0; i < points.size(); ++i) {
    StabilizerReport a = stabilizer_direct(rs, points[i].first, opt.cap);
    const StabilizerReport& b = points[i].second;
    std::string where = "point " + std::to_string(i) + " = " +
                        vec_str(points[i].first.cw_coords());
    if (a.order != b.order) {
      bad.push_back(where + ": orders " + std::to_string(a.order) + " vs " +
                    std::to_string(b.order));
      continue;
    }
    if (sorted_mats(a.elements) != sorted_mats(b.elements)) {
      bad.push_back(where + ": same order but different element sets");
      continue;
    }
    if (a.structure && b.structure && !(*a.structure == *b.structure))
      bad.push_back(where + ": structures disagree");
    if (Int(a.orbit_size) * Int(a.order) != wo)
      bad.push_back(where + ": orbit " + std::to_string(a.orbit_size) +
                    " times stabilizer " + std::to_string(a.order) +
                    " is not |W|");
  }
  c.result("two-method-stabilizers", bad.empty(), "orbit-bfs/alcove",
           std::to_string(points.size()) + " points agree" +
               (resampled ? " (" + std::to_string(resampled) + " resampled)"
                          : ""),
           joined(bad));
}

StabilizerReport probe_stabilizer(const RootSystem& rs, const TorusPoint& t,
                                  uint64_t cap) {
  return stabilizer_alcove(rs, t, std::min<uint64_t>(cap, kStabilizerAnalysisLimit));
}

void check_canonicalization(Collector& c, const RootSystem& rs,
                            const VerifyOptions& opt) {
  Rng rng(seed_for(opt.seed, rs.type(), "canonicalization"));
  std::vector<std::string> bad;
  for (int i = 0; i < 5; ++i) {
    TorusPoint t = sample_torus_point(rng, rs, kSampleDenominator);
    RatVec shift = zero_vec(rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      shift[j] = rat(rng.range(-3, 3));
    TorusPoint moved(rs, t.coords() + rs.from_coweight_coords(shift));
    if (!(t == moved))
      bad.push_back("coweight shift changed the canonical form of " +
                    vec_str(t.cw_coords()));
    TorusPoint again(rs, t.coords());
    if (!(t == again)) bad.push_back("canonical form is not idempotent");
    try {
      StabilizerReport sa = probe_stabilizer(rs, t, opt.cap);
      StabilizerReport sb = probe_stabilizer(rs, moved, opt.cap);
      if (sa.order != sb.order)
        bad.push_back("stabilizer changed under a coweight shift at " +
                      vec_str(t.cw_coords()));
    } catch (const CapExceeded&) {
      // a rare draw can land on a deep wall stratum; the equality of the
      // canonical forms above is still checked
    }
  }
  c.result("canonicalization", bad.empty(), "alcove",
           "5 points stable under coweight shifts", joined(bad));
}

void check_special_fiber(Collector& c, const RootSystem& rs, uint64_t cap) {
  ExtQuotFiber fb = fiber(rs, special_point(rs), cap);
  Int f = rs.connection_index();
  bool ok = Int(fb.class_count) == f && fb.abelian &&
            Int(fb.stabilizer_order) == f;
  c.result("special-fiber", ok, fb.method,
           "fiber over the special point has " +
               std::to_string(fb.class_count) + " points",
           "got " + std::to_string(fb.class_count) + " classes over order " +
               std::to_string(fb.stabilizer_order) + ", expected f = " +
               int_str(f));
}

void check_generic_fiber(Collector& c, const RootSystem& rs,
                         const VerifyOptions& opt) {
  Rng rng(seed_for(opt.seed, rs.type(), "generic-fiber"));
  Alcove a = fundamental_alcove(rs);
  std::vector<std::string> bad;
  for (int i = 0; i < 5; ++i) {
    RatVec x = sample_interior_point(rng, a, 7);
    ExtQuotFiber fb = fiber(rs, TorusPoint(rs, x), opt.cap);
    if (fb.class_count != 1 || fb.stabilizer_order != 1)
      bad.push_back("interior point " + vec_str(x) + " has fiber size " +
                    std::to_string(fb.class_count));
  }
  c.result("generic-fiber", bad.empty(), "alcove",
           "5 interior points have singleton fibers", joined(bad));
}

void check_pair_count(Collector& c, const RootSystem& rs,
                      const VerifyOptions& opt) {
  Int wo = weyl_order(rs.type());
  if (wo > Int(kPairOrbitLimit)) {
    c.skip("pair-count", "skipped (size)",
           "|W| = " + int_str(wo) + " makes the pair orbit too large");
    return;
  }
  TorusPoint t0 = special_point(rs);
  uint64_t pairs = extquot_point_count_over_orbit(rs, t0, opt.cap);
  ExtQuotFiber fb = fiber(rs, t0, opt.cap);
  Rng rng(seed_for(opt.seed, rs.type(), "pair-count"));
  Alcove a = fundamental_alcove(rs);
  TorusPoint t(rs, sample_interior_point(rng, a, 7));
  uint64_t generic = extquot_point_count_over_orbit(rs, t, opt.cap);
  bool ok = pairs == fb.class_count && generic == 1;
  c.result("pair-count", ok, "pair-orbits",
           "commuting-pair orbits match fiber class counts",
           "pair orbits gave " + std::to_string(pairs) +
               " over the special point (" + std::to_string(fb.class_count) +
               " expected) and " + std::to_string(generic) +
               " at a generic point (1 expected)");
}

void check_components(Collector& c, const RootSystem& rs, uint64_t cap) {
  Int wo = weyl_order(rs.type());
  if (wo > Int(cap)) {
    c.skip("components", "skipped (cap)",
           "|W| = " + int_str(wo) + " exceeds cap " + std::to_string(cap));
    return;
  }
  std::vector<ExtQuotComponent> comps = components(rs, cap);
  std::vector<std::string> bad;
  Int total = 0;
  int full_dim = 0;
  for (const auto& comp : comps) {
    total += Int(comp.class_size);
    if (comp.fixed_dim == rs.rank()) {
      ++full_dim;
      if (!is_identity(comp.class_rep) || comp.fixed_pi0 != 1)
        bad.push_back("full-dimensional component is not the identity class");
    }
    if (Int(comp.centralizer_order) * Int(comp.class_size) != wo)
      bad.push_back("class " + std::to_string(comp.class_index) +
                    " violates the centralizer identity");
    Int d = element_order_of(comp.class_rep);
    Int dn = 1;
    for (int i = 0; i < rs.rank(); ++i) dn *= d;
    if (!mpz_divisible_p(dn.get_mpz_t(), comp.fixed_pi0.get_mpz_t()))
      bad.push_back("class " + std::to_string(comp.class_index) +
                    " has pi0 = " + int_str(comp.fixed_pi0) +
                    " not dividing " + int_str(d) + "^n");
  }
  if (total != wo) bad.push_back("class sizes do not sum to |W|");
  if (full_dim != 1)
    bad.push_back("expected exactly one full-dimensional component");
  c.result("components", bad.empty(), "conjugacy-classes",
           std::to_string(comps.size()) + " components verified", joined(bad));
}

void check_discretization(Collector& c, const RootSystem& rs, uint64_t cap) {
  if (rs.rank() > 2) {
    c.skip("discretization", "skipped (size)",
           "grid census is only run for rank <= 2");
    return;
  }
  std::vector<std::string> bad;
  WeylGroup w = generate(rs, cap);
  for (long grid : {12L, 60L}) {
    for (size_t i = 0; i < w.size(); ++i) {
      uint64_t got = fixed_points_on_grid(rs, w.element(i), grid);
      Int want = predicted_fixed_points(rs, w.element(i), grid);
      if (Int(got) != want)
        bad.push_back("element " + std::to_string(i) + " on the 1/" +
                      std::to_string(grid) + " grid: counted " +
                      std::to_string(got) + ", predicted " + int_str(want));
    }
  }
  c.result("discretization", bad.empty(), "grid-census",
           "grid fixed-point counts match the lattice prediction",
           joined(bad));
}

void check_k_theory(Collector& c, const RootSystem& rs, uint64_t cap) {
  KReport kr = k_groups_spherical(rs, cap);
  Int f = rs.connection_index();
  std::vector<std::string> bad;
  if (Int(kr.k0_rank) != f) bad.push_back("k0 rank disagrees with f");
  if (kr.k1_rank != 0) bad.push_back("k1 rank is nonzero");
  if (Int(kr.l_packet_size) != f)
    bad.push_back("packet size disagrees with f");
  if (Int(kr.generator_count) != f)
    bad.push_back("generator count " + std::to_string(kr.generator_count) +
                  " disagrees with f");
  if (kr.lattice_quotient_order != f)
    bad.push_back("lattice quotient order disagrees with f");
  if (kr.point_k_theory != (f == 1)) bad.push_back("point-space flag is wrong");
  c.result("k-theory", bad.empty(), kr.k1_method,
           "K0 free of rank " + int_str(f) + ", K1 = 0", joined(bad));
}

void check_characters(Collector& c, const RootSystem& rs) {
  FiniteAbelianGroup g = from_invariant_factors(rs.fundamental_group());
  std::vector<Character> table = character_table(g);
  std::vector<std::string> bad;
  if (Int(table.size()) != g.order())
    bad.push_back("character count differs from the group order");
  std::set<std::vector<std::string>> seen;
  for (const auto& ch : table) {
    std::vector<std::string> key;
    for (const Rat& e : ch.exponents) key.push_back(rat_str(e));
    seen.insert(key);
  }
  if (Int(seen.size()) != g.order())
    bad.push_back("characters are not pairwise distinct");
  if (!characters_orthogonal(g, table)) bad.push_back("orthogonality fails");
  c.result("character-table", bad.empty(), "exact",
           int_str(g.order()) + " characters, orthogonal", joined(bad));
}

void check_retraction(Collector& c, const RootSystem& rs,
                      const VerifyOptions& opt) {
  Rng rng(seed_for(opt.seed, rs.type(), "retraction-equivariance"));
  Alcove a = fundamental_alcove(rs);
  AlcoveStabilizer h = alcove_stabilizer(rs);
  std::vector<std::string> bad;
  for (int i = 0; i < opt.property_samples; ++i) {
    RatVec x = sample_alcove_point(rng, a, 5);
    Rat s = sample_unit_rat(rng, 16);
    const AffineMap& hm = h.elements[rng.below(h.elements.size())];
    if (retract(a, hm(x), s) != hm(retract(a, x, s))) {
      bad.push_back("x = " + vec_str(x) + ", s = " + rat_str(s));
      if (bad.size() >= 3) break;
    }
  }
  c.result("retraction-equivariance", bad.empty(), "exact",
           std::to_string(opt.property_samples) +
               " draws commute with the symmetry action",
           joined(bad));
}

void check_reduce(Collector& c, const RootSystem& rs,
                  const VerifyOptions& opt) {
  Rng rng(seed_for(opt.seed, rs.type(), "reduce-invariance"));
  std::vector<std::string> bad;
  for (int i = 0; i < opt.property_samples; ++i) {
    RatVec x = sample_ambient_point(rng, rs.rank(), 12, 3);
    AffineMap w = sample_affine_element(rng, rs, 6, 2);
    ReduceResult rx = reduce_to_alcove(rs, x);
    ReduceResult rwx = reduce_to_alcove(rs, w(x));
    if (rx.map(x) != rx.point || !in_closed_alcove(rs, rx.point)) {
      bad.push_back("certificate fails at " + vec_str(x));
    } else if (rx.point != rwx.point) {
      bad.push_back("images differ for x = " + vec_str(x));
    }
    if (bad.size() >= 3) break;
  }
  c.result("reduce-invariance", bad.empty(), "alcove-walk",
           std::to_string(opt.property_samples) +
               " ambient points reduce consistently",
           joined(bad));
}

}  // namespace

Int expected_connection_index(const CartanType& t) {
  switch (t.series) {
    case Series::A: return Int(t.rank + 1);
    case Series::B: return 2;
    case Series::C: return 2;
    case Series::D: return 4;
    case Series::E: return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1);
    case Series::F: return 1;
    case Series::G: return 1;
  }
  throw std::logic_error("unreachable");
}

std::vector<Int> expected_lattice_factors(const CartanType& t) {
  switch (t.series) {
    case Series::A: return {Int(t.rank + 1)};
    case Series::B:
    case Series::C: return {2};
    case Series::D:
      if (t.rank % 2 == 0) return {2, 2};
      return {4};
    case Series::E:
      if (t.rank == 6) return {3};
      if (t.rank == 7) return {2};
      return {};
    case Series::F:
    case Series::G: return {};
  }
  throw std::logic_error("unreachable");
}

uint64_t seed_for(uint64_t seed, const CartanType& t,
                  const std::string& check) {
  std::string key = t.name() + "/" + check;
  uint64_t h = 1469598103934665603ull;
  for (char ch : key) {
    h ^= (unsigned char)ch;
    h *= 1099511628211ull;
  }
  return h ^ seed;
}

std::vector<CartanType> default_scope(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Series::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n)
    out.push_back({Series::E, n});
  if (max_rank >= 4) out.push_back({Series::F, 4});
  if (max_rank >= 2) out.push_back({Series::G, 2});
  return out;
}

std::vector<CheckResult> verify_type(const CartanType& t,
                                     const VerifyOptions& opt) {
  RootSystem rs(t);
  Collector c{t, {}};
  check_roots(c, rs);
  check_connection_index(c, rs);
  check_lattice_quotient(c, rs);
  check_weyl_order(c, rs, opt.cap);
  check_alcove_geometry(c, rs);
  check_alcove_symmetries(c, rs);
  check_barycenter(c, rs, opt.cap);
  check_two_method(c, rs, opt);
  check_canonicalization(c, rs, opt);
  check_special_fiber(c, rs, opt.cap);
  check_generic_fiber(c, rs, opt);
  check_pair_count(c, rs, opt);
  check_components(c, rs, opt.cap);
  check_discretization(c, rs, opt.cap);
  check_k_theory(c, rs, opt.cap);
  check_characters(c, rs);
  check_retraction(c, rs, opt);
  check_reduce(c, rs, opt);
  return c.out;
}

std::vector<CheckResult> verify_scope(const std::vector<CartanType>& types,
                                      const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const CartanType& t : types) {
    std::vector<CheckResult> one = verify_type(t, opt);
    out.insert(out.end(), one.begin(), one.end());
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == "fail") return false;
  return true;
}

}  // namespace alcove
