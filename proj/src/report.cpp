#include "alcove/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "alcove/extquot.hpp"

namespace alcove {
namespace {

Json str_vec(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rat_str(r));
  return out;
}

Json type_block(const CartanType& t) {
  Json j;
  j["name"] = t.name();
  j["canonical"] = t.canonical().name();
  j["series"] = std::string(1, (char)t.series);
  j["rank"] = t.rank;
  return j;
}

Json params_block(const VerifyOptions& opt) {
  Json j;
  j["seed"] = opt.seed;
  j["cap"] = opt.cap;
  j["samples"] = opt.samples;
  return j;
}

Json matrix_block(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j)
      row.push_back((long)m.at(i, j).get_si());
    rows.push_back(row);
  }
  return rows;
}

Json fiber_block(const RootSystem& rs, const TorusPoint& t, bool special,
                 uint64_t cap) {
  Json j;
  j["point_cw"] = str_vec(t.cw_coords());
  j["special"] = special;
  try {
    // clamp so a sample on a deep wall stratum is skipped, not materialized
    ExtQuotFiber fb = fiber(rs, t, std::min<uint64_t>(cap, 20000));
    j["status"] = "ok";
    j["stabilizer_order"] = fb.stabilizer_order;
    j["class_count"] = fb.class_count;
    j["abelian"] = fb.abelian;
    j["method"] = fb.method;
  } catch (const CapExceeded&) {
    j["status"] = "skipped (cap)";
    j["method"] = "skipped (cap)";
  }
  return j;
}

Json fiber_samples_block(const RootSystem& rs, const VerifyOptions& opt) {
  Json samples = Json::array();
  samples.push_back(fiber_block(rs, special_point(rs), true, opt.cap));
  Rng rng(seed_for(opt.seed, rs.type(), "fiber-samples"));
  for (int i = 0; i < opt.samples; ++i) {
    TorusPoint t = sample_torus_point(rng, rs, 60);
    samples.push_back(fiber_block(rs, t, false, opt.cap));
  }
  return samples;
}

Json components_block(const RootSystem& rs, const VerifyOptions& opt) {
  Json j;
  Int wo = weyl_order(rs.type());
  if (wo > Int(opt.cap)) {
    j["status"] = "skipped (cap)";
    j["entries"] = Json::array();
    return j;
  }
  j["status"] = "ok";
  Json entries = Json::array();
  for (const ExtQuotComponent& comp : components(rs, opt.cap)) {
    Json e;
    e["class_index"] = comp.class_index;
    e["rep_word"] = comp.rep_word;
    e["class_size"] = comp.class_size;
    e["centralizer_order"] = comp.centralizer_order;
    e["fixed_dim"] = comp.fixed_dim;
    e["fixed_pi0"] = comp.fixed_pi0.get_str();
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

Json stabilizer_block(const RootSystem& rs, const VerifyOptions& opt) {
  Json j;
  TorusPoint t0 = special_point(rs);
  Json direct;
  bool have_direct = false;
  uint64_t direct_order = 0;
  try {
    StabilizerReport r = stabilizer_direct(rs, t0, opt.cap);
    direct["status"] = "ok";
    direct["order"] = r.order;
    direct["orbit_size"] = r.orbit_size;
    direct["method"] = r.method;
    have_direct = true;
    direct_order = r.order;
  } catch (const CapExceeded&) {
    direct["status"] = "skipped (cap)";
    direct["method"] = "skipped (cap)";
  }
  StabilizerReport a = stabilizer_alcove(rs, t0, opt.cap);
  Json alc;
  alc["status"] = "ok";
  alc["order"] = a.order;
  alc["method"] = a.method;
  if (a.structure) alc["structure"] = a.structure->name();
  j["direct"] = direct;
  j["alcove"] = alc;
  if (have_direct)
    j["agree"] = direct_order == a.order;
  else
    j["agree"] = nullptr;
  return j;
}

Json checks_block(const std::vector<CheckResult>& results) {
  Json arr = Json::array();
  for (const CheckResult& r : results) {
    Json e;
    e["name"] = r.name;
    e["type"] = r.type;
    e["status"] = r.status;
    e["method"] = r.method;
    e["detail"] = r.detail;
    arr.push_back(e);
  }
  return arr;
}

Json summary_block(const std::vector<CheckResult>& results) {
  uint64_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    if (r.status == "pass")
      ++pass;
    else if (r.status == "fail")
      ++fail;
    else
      ++skipped;
  }
  Json j;
  j["pass"] = pass;
  j["fail"] = fail;
  j["skipped"] = skipped;
  j["ok"] = fail == 0;
  return j;
}

std::string status_cell(const Json& j, const char* key) {
  return j.contains(key) ? j[key].get<std::string>() : std::string();
}

}  // namespace

Json report_document(const CartanType& t, const VerifyOptions& opt) {
  RootSystem rs(t);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["type"] = type_block(t);
  doc["parameters"] = params_block(opt);
  doc["cartan_matrix"] = matrix_block(rs.cartan());
  doc["positive_root_count"] = rs.positive_roots().size();
  doc["weyl_order"] = weyl_order(t).get_str();
  Json marks = Json::array();
  for (int64_t m : rs.marks()) marks.push_back(m);
  doc["marks"] = marks;
  doc["connection_index"] = rs.connection_index().get_str();
  InvariantFactors fg = rs.fundamental_group();
  Json fgj;
  Json factors = Json::array();
  for (const Int& d : fg.factors) factors.push_back(d.get_str());
  fgj["invariant_factors"] = factors;
  fgj["name"] = factors_str(fg);
  doc["fundamental_group"] = fgj;

  Alcove a = fundamental_alcove(rs);
  Json alcove;
  Json vertices = Json::array();
  for (const RatVec& v : a.vertices) vertices.push_back(str_vec(v));
  alcove["vertices"] = vertices;
  alcove["barycenter"] = str_vec(a.barycenter);
  alcove["special_point_cw"] = str_vec(special_point(rs).cw_coords());
  doc["alcove"] = alcove;

  AlcoveStabilizer h = alcove_stabilizer(rs);
  Json sym;
  sym["order"] = h.elements.size();
  sym["structure"] = h.structure.name();
  Json perms = Json::array();
  Json trans = Json::array();
  for (size_t i = 0; i < h.elements.size(); ++i) {
    perms.push_back(h.vertex_perm[i]);
    trans.push_back(str_vec(h.elements[i].translation));
  }
  sym["vertex_permutations"] = perms;
  sym["translations"] = trans;
  doc["alcove_symmetries"] = sym;

  KReport kr = k_groups_spherical(rs, opt.cap);
  Json kj;
  kj["k0_rank"] = kr.k0_rank;
  kj["k1_rank"] = kr.k1_rank;
  kj["k1_method"] = kr.k1_method;
  kj["l_packet_size"] = kr.l_packet_size;
  kj["generator_count"] = kr.generator_count;
  kj["point_k_theory"] = kr.point_k_theory;
  kj["lattice_quotient_order"] = kr.lattice_quotient_order.get_str();
  doc["k_theory"] = kj;

  Json chars = Json::array();
  for (const Character& ch :
       character_table(from_invariant_factors(fg)))
    chars.push_back(str_vec(ch.exponents));
  doc["character_table"] = chars;

  doc["special_point_stabilizer"] = stabilizer_block(rs, opt);

  BarycenterCheck lc = verify_barycenter_stabilizer(rs, opt.cap);
  Json bc;
  bc["ok"] = lc.ok;
  bc["order"] = lc.order;
  bc["method"] = lc.method;
  doc["barycenter_stabilizer"] = bc;

  doc["fiber_samples"] = fiber_samples_block(rs, opt);
  doc["components"] = components_block(rs, opt);

  std::vector<CheckResult> checks = verify_type(t, opt);
  doc["checks"] = checks_block(checks);
  doc["summary"] = summary_block(checks);
  return doc;
}

Json extquot_document(const CartanType& t, const VerifyOptions& opt) {
  RootSystem rs(t);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["type"] = type_block(t);
  doc["parameters"] = params_block(opt);
  doc["connection_index"] = rs.connection_index().get_str();
  doc["components"] = components_block(rs, opt);
  doc["fiber_samples"] = fiber_samples_block(rs, opt);
  Int wo = weyl_order(t);
  Json pair;
  if (wo > Int(400)) {
    pair["status"] = "skipped (size)";
  } else {
    TorusPoint t0 = special_point(rs);
    uint64_t pairs = extquot_point_count_over_orbit(rs, t0, opt.cap);
    ExtQuotFiber fb = fiber(rs, t0, opt.cap);
    pair["status"] = "ok";
    pair["pair_orbits"] = pairs;
    pair["fiber_class_count"] = fb.class_count;
    pair["agree"] = pairs == fb.class_count;
  }
  doc["pair_orbit_check"] = pair;
  return doc;
}

Json verify_document(const std::vector<CheckResult>& results,
                     const VerifyOptions& opt) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["parameters"] = params_block(opt);
  doc["results"] = checks_block(results);
  doc["summary"] = summary_block(results);
  return doc;
}

std::string to_bytes(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_report(const Json& doc) {
  std::ostringstream os;
  const Json& t = doc["type"];
  os << "type                 " << t["name"].get<std::string>()
     << "  (canonical " << t["canonical"].get<std::string>() << ", rank "
     << t["rank"].get<int>() << ")\n";
  os << "positive roots       " << doc["positive_root_count"].get<uint64_t>()
     << "\n";
  os << "weyl order           " << doc["weyl_order"].get<std::string>()
     << "\n";
  os << "connection index     " << doc["connection_index"].get<std::string>()
     << "\n";
  os << "fundamental group    "
     << doc["fundamental_group"]["name"].get<std::string>() << "\n";
  os << "alcove vertices      ";
  const Json& verts = doc["alcove"]["vertices"];
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) os << "; ";
    os << "(";
    for (size_t j = 0; j < verts[i].size(); ++j)
      os << (j ? ", " : "") << verts[i][j].get<std::string>();
    os << ")";
  }
  os << "\n";
  os << "barycenter           (";
  const Json& bc = doc["alcove"]["barycenter"];
  for (size_t j = 0; j < bc.size(); ++j)
    os << (j ? ", " : "") << bc[j].get<std::string>();
  os << ")\n";
  os << "alcove symmetries    "
     << doc["alcove_symmetries"]["structure"].get<std::string>() << ", order "
     << doc["alcove_symmetries"]["order"].get<uint64_t>() << "\n";
  const Json& k = doc["k_theory"];
  os << "k0 rank              " << k["k0_rank"].get<uint64_t>() << "\n";
  os << "k1 rank              " << k["k1_rank"].get<uint64_t>() << "  ("
     << k["k1_method"].get<std::string>() << ")\n";
  os << "packet size          " << k["l_packet_size"].get<uint64_t>() << "\n";
  os << "generator count      " << k["generator_count"].get<uint64_t>()
     << "\n";
  os << "point k-theory       "
     << (k["point_k_theory"].get<bool>() ? "yes" : "no") << "\n";
  const Json& st = doc["special_point_stabilizer"];
  os << "special stabilizer   direct: " << status_cell(st["direct"], "status");
  if (st["direct"].contains("order"))
    os << " (order " << st["direct"]["order"].get<uint64_t>() << ")";
  os << ", alcove: order " << st["alcove"]["order"].get<uint64_t>() << "\n";
  const Json& bstab = doc["barycenter_stabilizer"];
  os << "barycenter check     " << (bstab["ok"].get<bool>() ? "ok" : "FAIL")
     << " via " << bstab["method"].get<std::string>() << "\n";
  os << "components           " << status_cell(doc["components"], "status");
  if (doc["components"]["status"] == "ok")
    os << " (" << doc["components"]["entries"].size() << " classes)";
  os << "\n";
  const Json& sum = doc["summary"];
  os << "checks               " << sum["pass"].get<uint64_t>() << " pass, "
     << sum["fail"].get<uint64_t>() << " fail, "
     << sum["skipped"].get<uint64_t>() << " skipped\n";
  if (sum["fail"].get<uint64_t>() > 0) {
    for (const Json& e : doc["checks"]) {
      if (e["status"] == "fail")
        os << "  FAIL " << e["name"].get<std::string>() << ": "
           << e["detail"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

std::string render_extquot(const Json& doc) {
  std::ostringstream os;
  const Json& t = doc["type"];
  os << "type                 " << t["name"].get<std::string>() << "\n";
  os << "connection index     " << doc["connection_index"].get<std::string>()
     << "\n";
  os << "components           " << status_cell(doc["components"], "status")
     << "\n";
  if (doc["components"]["status"] == "ok") {
    os << "  class   size  centralizer  dim  pi0  word\n";
    for (const Json& e : doc["components"]["entries"]) {
      os << "  " << std::setw(5) << e["class_index"].get<uint64_t>() << "  "
         << std::setw(5) << e["class_size"].get<uint64_t>() << "  "
         << std::setw(11) << e["centralizer_order"].get<uint64_t>() << "  "
         << std::setw(3) << e["fixed_dim"].get<int>() << "  " << std::setw(3)
         << e["fixed_pi0"].get<std::string>() << "  [";
      const Json& w = e["rep_word"];
      for (size_t i = 0; i < w.size(); ++i)
        os << (i ? " " : "") << w[i].get<int>();
      os << "]\n";
    }
  }
  os << "fibers\n";
  for (const Json& s : doc["fiber_samples"]) {
    os << "  (";
    for (size_t j = 0; j < s["point_cw"].size(); ++j)
      os << (j ? ", " : "") << s["point_cw"][j].get<std::string>();
    os << ")";
    if (s["special"].get<bool>()) os << " [special]";
    if (s["status"] == "ok")
      os << "  stabilizer " << s["stabilizer_order"].get<uint64_t>()
         << ", fiber " << s["class_count"].get<uint64_t>() << " ("
         << s["method"].get<std::string>() << ")";
    else
      os << "  " << status_cell(s, "status");
    os << "\n";
  }
  const Json& pair = doc["pair_orbit_check"];
  os << "pair-orbit check     " << status_cell(pair, "status");
  if (pair["status"] == "ok")
    os << " (" << pair["pair_orbits"].get<uint64_t>() << " orbits, fiber "
       << pair["fiber_class_count"].get<uint64_t>() << ")";
  os << "\n";
  return os.str();
}

std::string render_verify(const Json& doc) {
  std::ostringstream os;
  size_t name_w = 4, type_w = 4;
  for (const Json& e : doc["results"]) {
    name_w = std::max(name_w, e["name"].get<std::string>().size());
    type_w = std::max(type_w, e["type"].get<std::string>().size());
  }
  for (const Json& e : doc["results"]) {
    std::string type = e["type"].get<std::string>();
    std::string name = e["name"].get<std::string>();
    std::string status = e["status"].get<std::string>();
    os << type << std::string(type_w - type.size() + 2, ' ') << name
       << std::string(name_w - name.size() + 2, ' ') << status;
    std::string method = e["method"].get<std::string>();
    if (status == "pass" && !method.empty()) os << "  [" << method << "]";
    if (status == "fail")
      os << "  " << e["detail"].get<std::string>();
    os << "\n";
  }
  const Json& sum = doc["summary"];
  os << "summary: " << sum["pass"].get<uint64_t>() << " pass, "
     << sum["fail"].get<uint64_t>() << " fail, "
     << sum["skipped"].get<uint64_t>() << " skipped\n";
  return os.str();
}

}  // namespace alcove
