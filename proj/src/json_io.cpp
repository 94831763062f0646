#include "isogr/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "isogr/lm.hpp"
#include "isogr/picard.hpp"

namespace isogr {

namespace {

std::string fam_str(Family f) { return f == Family::LG ? "lg" : "og"; }

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

int parse_int_field(const Json& j, const std::string& field) {
  if (!j.contains(field)) {
    throw usage_error("missing field '" + field + "'");
  }
  const Json& v = j.at(field);
  if (!v.is_number_integer()) {
    throw usage_error("field '" + field + "' must be an integer");
  }
  return v.get<int>();
}

Rat parse_rat_value(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return rat_parse(v.get<std::string>());
  throw usage_error("field '" + field + "' must be a rational string like \"3/4\"");
}

std::vector<int> parse_int_array(const Json& j, const std::string& field) {
  if (!j.is_array()) {
    throw usage_error("field '" + field + "' must be an array of integers");
  }
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw usage_error("field '" + field + "' must be an array of integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

// Splits a coordinate name like "xi_1_2" into its kind and indices.
struct CoordName {
  std::string kind;  // "a", "b", "y", "x", "xi"
  int i = 0;
  int j = 0;         // 0 for single-index kinds
};

CoordName parse_coord_name(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t us = name.find('_', start);
    if (us == std::string::npos) {
      parts.push_back(name.substr(start));
      break;
    }
    parts.push_back(name.substr(start, us - start));
    start = us + 1;
  }
  const auto as_index = [&name](const std::string& tok) {
    if (tok.empty() || tok.size() > 6 ||
        !std::all_of(tok.begin(), tok.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw usage_error("bad coordinate name '" + name + "'");
    }
    return std::stoi(tok);
  };
  CoordName out;
  out.kind = parts[0];
  if ((out.kind == "a" || out.kind == "b" || out.kind == "y") &&
      parts.size() == 2) {
    out.i = as_index(parts[1]);
    return out;
  }
  if ((out.kind == "x" || out.kind == "xi") && parts.size() == 3) {
    out.i = as_index(parts[1]);
    out.j = as_index(parts[2]);
    if (out.kind == "xi" && out.i >= out.j) {
      throw usage_error("coordinate '" + name + "' must have i < j");
    }
    return out;
  }
  throw usage_error("unknown coordinate '" + name + "'");
}

// Destinations for parsed coordinates; y may be absent (nullptr).
struct CoordSink {
  std::map<int, Rat>* a = nullptr;
  std::map<int, Rat>* b = nullptr;
  std::map<int, Rat>* y = nullptr;
  std::map<CoordKey, Rat>* x = nullptr;
  std::map<CoordKey, Rat>* xi = nullptr;
};

void parse_coords(const Json& payload, const CoordSink& sink) {
  if (!payload.contains("coords")) return;
  const Json& coords = payload.at("coords");
  if (!coords.is_object()) {
    throw usage_error("field 'coords' must be an object");
  }
  for (const auto& [name, value] : coords.items()) {
    const CoordName cn = parse_coord_name(name);
    const Rat r = parse_rat_value(value, name);
    if (cn.kind == "a") {
      (*sink.a)[cn.i] = r;
    } else if (cn.kind == "b") {
      (*sink.b)[cn.i] = r;
    } else if (cn.kind == "y") {
      if (sink.y == nullptr) {
        throw usage_error("coordinate '" + name + "' only applies to a glued chart");
      }
      (*sink.y)[cn.i] = r;
    } else if (cn.kind == "x") {
      (*sink.x)[CoordKey{cn.i, cn.j}] = r;
    } else {
      (*sink.xi)[CoordKey{cn.i, cn.j}] = r;
    }
  }
}

Type2Tau parse_tau(const Json& payload) {
  const Json& tau = payload.at("tau");
  if (!tau.is_object()) {
    throw usage_error("field 'tau' must be an object with 'plus'/'minus' arrays");
  }
  Type2Tau out;
  if (tau.contains("plus")) out.plus = parse_int_array(tau.at("plus"), "tau.plus");
  if (tau.contains("minus")) out.minus = parse_int_array(tau.at("minus"), "tau.minus");
  return out;
}

struct BuiltChart {
  Family family = Family::LG;
  int n = 0;
  int l = 0;
  std::string type;
  Mat layout;
  IsotropicPoint point;
};

BuiltChart build_chart(const Json& payload) {
  BuiltChart out;
  out.family = parse_family(payload);
  out.n = parse_int_field(payload, "n");
  out.l = parse_int_field(payload, "l");
  if (out.family == Family::LG && payload.contains("tau")) {
    ChartCoordsII c;
    c.n = out.n;
    c.l = out.l;
    c.tau = parse_tau(payload);
    parse_coords(payload, CoordSink{&c.a, &c.b, &c.y, &c.x, &c.xi});
    out.type = "II";
    out.layout = chart_layout(c);
    out.point = chart_point(c);
  } else if (out.family == Family::LG) {
    ChartCoordsI c;
    c.n = out.n;
    c.l = out.l;
    parse_coords(payload, CoordSink{&c.a, &c.b, nullptr, &c.x, &c.xi});
    out.type = "I";
    out.layout = chart_layout(c);
    out.point = chart_point(c);
  } else {
    if (payload.contains("tau")) {
      throw usage_error("field 'tau' applies to the lg family only");
    }
    ChartCoordsO c;
    c.n = out.n;
    c.l = out.l;
    parse_coords(payload, CoordSink{&c.a, &c.b, nullptr, &c.x, &c.xi});
    out.type = "O";
    out.layout = chart_layout(c);
    out.point = chart_point(c);
  }
  return out;
}

IsotropicPoint point_from_payload(const Json& payload) {
  if (payload.contains("matrix")) {
    IsotropicPoint p;
    p.family = parse_family(payload);
    p.n = parse_int_field(payload, "n");
    p.m = parse_matrix(payload.at("matrix"), "matrix");
    return p;
  }
  return build_chart(payload).point;
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(v, path.empty() ? k : path + "." + k, out);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const Json& v : j) {
      flatten(v, path + "[" + std::to_string(i) + "]", out);
      ++i;
    }
  } else {
    out += path;
    out += '\t';
    if (j.is_string()) {
      out += j.get<std::string>();
    } else {
      out += j.dump();
    }
    out += '\n';
  }
}

}  // namespace

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ivec_json(const IVec& v) {
  Json row = Json::array();
  for (const Int& c : v) row.push_back(to_ll(c));
  return row;
}

Json rays_json(const std::vector<IVec>& rays) {
  Json out = Json::array();
  for (const IVec& r : rays) out.push_back(ivec_json(r));
  return out;
}

std::string plucker_key(const std::vector<int>& idx) {
  std::string key;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(idx[i]);
  }
  return key;
}

std::string subset_key(std::uint32_t mask) {
  return plucker_key(mask_to_subset(mask));
}

Json plucker_json(const PluckerVector& v) {
  Json coords = Json::object();
  for (const auto& [idx, val] : v.coords) coords[plucker_key(idx)] = rat_str(val);
  Json out;
  out["n"] = v.n;
  out["coords"] = std::move(coords);
  return out;
}

Json spinor_json(const ExtElement& e) {
  std::vector<std::uint32_t> masks;
  masks.reserve(e.terms.size());
  for (const auto& [mask, val] : e.terms) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), subset_lex_less);
  Json terms = Json::object();
  for (const std::uint32_t mask : masks) terms[subset_key(mask)] = rat_str(e.terms.at(mask));
  Json out;
  out["n"] = e.n;
  out["terms"] = std::move(terms);
  return out;
}

Json suites_json(Family family, int n, std::uint64_t seed, int trials,
                 const std::vector<SuiteResult>& suites) {
  Json out;
  out["family"] = fam_str(family);
  if (n > 0) out["n"] = n;
  out["seed"] = seed;
  out["trials"] = trials;
  bool pass = true;
  Json js = Json::array();
  for (const SuiteResult& s : suites) {
    Json jsuite;
    jsuite["suite"] = s.suite;
    jsuite["pass"] = s.all_pass();
    Json checks = Json::array();
    for (const CheckResult& c : s.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      if (!c.pass) jc["counterexample"] = c.detail;
      checks.push_back(std::move(jc));
    }
    jsuite["checks"] = std::move(checks);
    pass = pass && s.all_pass();
    js.push_back(std::move(jsuite));
  }
  out["suites"] = std::move(js);
  out["pass"] = pass;
  return out;
}

Json report_json(Family family, int n) {
  const PicardBasis basis = picard_basis(family, n);
  Json out;
  out["family"] = fam_str(family);
  out["n"] = n;

  Json jp;
  jp["rank"] = 1 + basis.nplus + basis.nminus;
  jp["basis"] = basis.labels;
  out["picard"] = std::move(jp);

  const auto [k_direct, k_via] = class_K(family, n);
  Json jk;
  jk["direct"] = ivec_json(k_direct);
  jk["via_sections"] = ivec_json(k_via);
  jk["equal"] = (k_direct == k_via);
  out["canonical_class"] = std::move(jk);

  Json jsec = Json::array();
  const int kmax = family == Family::LG ? n : n / 2;
  for (int k = 0; k <= kmax; ++k) {
    Json row;
    row["k"] = k;
    row["class"] = ivec_json(class_B(family, n, k));
    jsec.push_back(std::move(row));
  }
  out["sections"] = std::move(jsec);

  Json jmori = Json::array();
  for (const CurveClass& c : mori_generators(family, n)) {
    Json row;
    row["label"] = c.label;
    row["pairings_with_basis"] = ivec_json(c.pairings);
    jmori.push_back(std::move(row));
  }
  out["mori_generators"] = std::move(jmori);

  const std::vector<IVec> claimed = nef_claimed(family, n);
  const std::vector<IVec> computed = nef_extremal_rays(family, n);
  Json jnef;
  jnef["coordinates"] = "(h, a_1.., b_1..): h H + sum a_j Delta^-_j + sum b_i Delta^+_i";
  jnef["claimed_rays"] = rays_json(claimed);
  jnef["computed_rays"] = rays_json(computed);
  jnef["equal"] = same_ray_set(claimed, computed);
  out["nef"] = std::move(jnef);

  Json jeff = Json::array();
  for (const DivClass& d : eff_generators(family, n)) jeff.push_back(ivec_json(d));
  out["effective_generators"] = std::move(jeff);

  const FanoReport fano = fano_classify(family, n);
  Json jfano;
  jfano["verdict"] = fano.verdict;
  Json jpair = Json::array();
  for (const auto& [label, value] : fano.pairings) {
    Json row;
    row["curve"] = label;
    row["value"] = to_ll(value);
    jpair.push_back(std::move(row));
  }
  jfano["anticanonical_pairings"] = std::move(jpair);
  out["fano"] = std::move(jfano);

  const auto [full, reduced] = blowup_step_counts(family, n);
  Json jres;
  jres["full_blowup_steps"] = full;
  jres["reduced_blowup_steps"] = reduced;
  out["resolution"] = std::move(jres);
  return out;
}

Family parse_family(const Json& payload) {
  if (!payload.is_object() || !payload.contains("family")) {
    throw usage_error("missing field 'family'");
  }
  const Json& v = payload.at("family");
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "lg") return Family::LG;
    if (s == "og") return Family::OG;
  }
  throw usage_error("field 'family' must be \"lg\" or \"og\"");
}

Rat parse_rat_field(const Json& j, const std::string& field) {
  if (!j.contains(field)) {
    throw usage_error("missing field '" + field + "'");
  }
  return parse_rat_value(j.at(field), field);
}

Mat parse_matrix(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw usage_error("field '" + field + "' must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j.at(0).is_array()) {
    throw usage_error("field '" + field + "' must be an array of rows");
  }
  const std::size_t cols = j.at(0).size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw usage_error("field '" + field + "' has rows of unequal length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m.at(i, k) = parse_rat_value(row.at(k), field);
    }
  }
  return m;
}

Json eval_chart(const Json& payload) {
  const BuiltChart bc = build_chart(payload);
  Json out;
  out["family"] = fam_str(bc.family);
  out["n"] = bc.n;
  out["l"] = bc.l;
  out["type"] = bc.type;
  out["layout"] = mat_json(bc.layout);
  out["standard"] = mat_json(bc.point.m);
  out["isotropic"] = is_isotropic(bc.point);
  return out;
}

Json eval_plucker(const Json& payload) {
  const IsotropicPoint p = point_from_payload(payload);
  Json out;
  out["family"] = fam_str(p.family);
  out["n"] = p.n;
  const Json pj = plucker_json(plucker_embed(p));
  out["coords"] = pj.at("coords");
  return out;
}

Json eval_spinor(const Json& payload) {
  const IsotropicPoint p = point_from_payload(payload);
  if (p.family != Family::OG) {
    throw usage_error("field 'family' must be \"og\" for spinor evaluation");
  }
  const int l = parse_int_field(payload, "l");
  const ExtElement e = spinor_embed(p, l);
  Json out;
  out["family"] = "og";
  out["n"] = p.n;
  out["l"] = l;
  out["terms"] = spinor_json(e).at("terms");
  return out;
}

Json eval_lm(const Json& payload) {
  const Family family = parse_family(payload);
  const int n = parse_int_field(payload, "n");
  const Rat x00 = parse_rat_field(payload, "x00");
  if (!payload.contains("X")) throw usage_error("missing field 'X'");
  const Mat X = parse_matrix(payload.at("X"), "X");
  const LMPoint p = make_lm_point(family, n, x00, X);
  const IsotropicPoint image = lm_eval(p);

  Json out;
  out["family"] = fam_str(family);
  out["n"] = n;
  out["point"] = mat_json(image.m);
  if (x00 == 0) {
    // The projection drops to zero along x00 = 0; no inverse there.
    out["projection"] = nullptr;
    out["inverse"] = nullptr;
    out["round_trip"] = nullptr;
    return out;
  }
  LMPoint back;
  if (family == Family::LG) {
    const PluckerVector proj = kal_project_lg(plucker_embed(image));
    out["projection"] = plucker_json(proj).at("coords");
    back = lm_invert_lg(proj);
  } else {
    const ExtElement proj = kal_project_og(spinor_embed(image, 0));
    out["projection"] = spinor_json(proj).at("terms");
    back = lm_invert_og(proj);
  }
  Json jinv;
  jinv["x00"] = rat_str(back.x00);
  jinv["X"] = mat_json(back.X);
  out["inverse"] = std::move(jinv);
  out["round_trip"] = lm_equal_projective(p, back);
  return out;
}

std::string to_tsv(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace isogr
