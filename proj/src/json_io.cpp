#include "trop/json_io.hpp"

#include <limits>

#include "trop/error.hpp"

namespace trop {

namespace {

[[noreturn]] void bad_shape(const std::string& detail) {
  fail_validation("SchemaMismatch", detail);
}

BigInt int_from_string(const std::string& s, const char* what) {
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    bad_shape(std::string(what) + ": \"" + s + "\" is not an integer");
  }
}

}  // namespace

const Json& json_field(const Json& j, const char* name) {
  if (!j.is_object()) bad_shape("expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad_shape(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json* json_optional_field(const Json& j, const char* name) {
  if (!j.is_object()) bad_shape("expected an object");
  auto it = j.find(name);
  return it == j.end() ? nullptr : &*it;
}

Json to_json(const BigInt& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json to_json(const BigRat& q) {
  if (q.get_den() == 1) return to_json(BigInt(q.get_num()));
  return Json(q.get_str());
}

Json to_json(const UnivarPoly& p) {
  Json out = Json::array();
  for (const BigInt& c : p.coeff_list()) out.push_back(to_json(c));
  return out;
}

Json to_json(const LaurentBivarPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["c"] = to_json(c);
    term["e"] = Json::array({e[0], e[1]});
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  out["vars"] = Json::array({"u", "v"});
  return out;
}

Json table_to_json(const LimitHodgeTable& t) {
  Json rows = Json::array();
  for (const auto& [key, h] : t.entries) {
    Json row;
    row["h"] = to_json(h);
    row["m"] = key[0];
    row["p"] = key[1];
    row["q"] = key[2];
    rows.push_back(std::move(row));
  }
  return rows;
}

Json audit_to_json(const std::vector<AuditEntry>& audit) {
  Json out = Json::array();
  for (const AuditEntry& a : audit) {
    Json entry;
    entry["advisory"] = a.advisory;
    entry["check"] = a.check;
    entry["pass"] = a.pass;
    out.push_back(std::move(entry));
  }
  return out;
}

Json report_to_json(const EPolyReport& report) {
  Json out;
  out["audit"] = audit_to_json(report.audit);
  out["betti"] = to_json(report.betti_gamma_d);
  out["e_generic"] = to_json(report.e_generic);
  out["e_limit"] = to_json(report.e_limit);
  out["euler"] = to_json(report.euler);
  out["genus"] = to_json(report.genus);
  out["limit_hodge"] = table_to_json(report.table);
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail_validation("ParseError", e.what());
  }
}

BigInt big_int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) {
    std::uint64_t u = j.get<std::uint64_t>();
    return int_from_string(std::to_string(u), "integer");
  }
  if (j.is_string()) return int_from_string(j.get<std::string>(), "integer");
  bad_shape("expected an integer (number or decimal string)");
}

BigRat big_rat_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return BigRat(big_int_from_json(j));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const size_t slash = s.find('/');
    if (slash == std::string::npos)
      return BigRat(int_from_string(s, "rational"));
    BigInt num = int_from_string(s.substr(0, slash), "rational numerator");
    BigInt den = int_from_string(s.substr(slash + 1), "rational denominator");
    if (den == 0) bad_shape("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
  }
  bad_shape("expected a rational (integer or \"p/q\" string)");
}

long long_from_json(const Json& j) {
  BigInt n = big_int_from_json(j);
  if (!n.fits_slong_p()) bad_shape("integer out of range");
  return n.get_si();
}

std::vector<IVec> int_matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array())
    bad_shape(std::string(what) + " must be an array of integer vectors");
  std::vector<IVec> rows;
  for (const Json& row : j) {
    if (!row.is_array())
      bad_shape(std::string(what) + " entries must be arrays");
    IVec v;
    for (const Json& c : row) v.push_back(big_int_from_json(c));
    if (!rows.empty() && v.size() != rows.front().size())
      bad_shape(std::string(what) + " rows must share one length");
    rows.push_back(std::move(v));
  }
  return rows;
}

QVec rational_vector_from_json(const Json& j, const char* what) {
  if (!j.is_array())
    bad_shape(std::string(what) + " must be an array of rationals");
  QVec v;
  for (const Json& c : j) v.push_back(big_rat_from_json(c));
  return v;
}

NewtonInput parse_newton(const Json& j) {
  NewtonInput in;
  in.points = int_matrix_from_json(json_field(j, "points"), "points");
  if (in.points.empty()) bad_shape("points must be nonempty");
  if (const Json* lifts = json_optional_field(j, "lifts")) {
    if (!lifts->is_array()) bad_shape("lifts must be an array of integers");
    for (const Json& c : *lifts) in.lifts.push_back(big_int_from_json(c));
    if (in.lifts.size() != in.points.size())
      bad_shape("lifts must match points in length");
  } else {
    in.lifts.assign(in.points.size(), BigInt(0));
  }
  return in;
}

Matroid parse_matroid(const Json& j) {
  if (const Json* u = json_optional_field(j, "uniform")) {
    if (!u->is_array() || u->size() != 2)
      bad_shape("uniform must be [rank, size]");
    return Matroid::uniform(long_from_json((*u)[0]), long_from_json((*u)[1]));
  }
  long n = long_from_json(json_field(j, "ground"));
  const Json& bj = json_field(j, "bases");
  if (!bj.is_array()) bad_shape("bases must be an array");
  std::vector<std::vector<long>> bases;
  for (const Json& b : bj) {
    if (!b.is_array()) bad_shape("each basis must be an array");
    std::vector<long> basis;
    for (const Json& e : b) basis.push_back(long_from_json(e));
    bases.push_back(std::move(basis));
  }
  return Matroid::from_bases(n, bases);
}

FinitePoset parse_poset(const Json& j) {
  long n = long_from_json(json_field(j, "elements"));
  if (n < 0) bad_shape("elements must be nonnegative");
  const Json& cj = json_field(j, "covers");
  if (!cj.is_array()) bad_shape("covers must be an array of pairs");
  std::vector<std::pair<long, long>> covers;
  for (const Json& c : cj) {
    if (!c.is_array() || c.size() != 2) bad_shape("each cover must be a pair");
    covers.emplace_back(long_from_json(c[0]), long_from_json(c[1]));
  }
  return FinitePoset::from_covers(size_t(n), covers);
}

TropicalComplex parse_complex(const Json& j) {
  long ambient = long_from_json(json_field(j, "ambient"));
  if (ambient < 1) bad_shape("ambient must be positive");

  std::vector<QVec> vertex_pool;
  const Json& vj = json_field(j, "vertices");
  if (!vj.is_array()) bad_shape("vertices must be an array");
  for (const Json& v : vj)
    vertex_pool.push_back(rational_vector_from_json(v, "vertex"));

  std::vector<IVec> ray_pool;
  if (const Json* rj = json_optional_field(j, "rays"))
    ray_pool = int_matrix_from_json(*rj, "rays");

  const Json& fj = json_field(j, "faces");
  if (!fj.is_array()) bad_shape("faces must be an array");
  std::vector<TropicalFace> faces;
  for (const Json& fo : fj) {
    TropicalFace f;
    const Json& v = json_field(fo, "v");
    if (!v.is_array()) bad_shape("face field v must be an index array");
    for (const Json& idx : v) {
      long k = long_from_json(idx);
      if (k < 0 || size_t(k) >= vertex_pool.size())
        bad_shape("vertex index out of range");
      f.vertices.push_back(vertex_pool[size_t(k)]);
    }
    if (const Json* r = json_optional_field(fo, "r")) {
      if (!r->is_array()) bad_shape("face field r must be an index array");
      for (const Json& idx : *r) {
        long k = long_from_json(idx);
        if (k < 0 || size_t(k) >= ray_pool.size())
          bad_shape("ray index out of range");
        f.rays.push_back(ray_pool[size_t(k)]);
      }
    }
    if (const Json* m = json_optional_field(fo, "mult"))
      f.multiplicity = long_from_json(*m);
    if (const Json* label = json_optional_field(fo, "label")) {
      const Json* ec = json_optional_field(*label, "eclass");
      const Json* ma = json_optional_field(*label, "matroid");
      if ((ec != nullptr) == (ma != nullptr))
        bad_shape("label must hold exactly one of eclass, matroid");
      if (ec) f.eclass = bivar_from_json(*ec);
      if (ma) f.matroid = parse_matroid(*ma);
    }
    faces.push_back(std::move(f));
  }
  return TropicalComplex::build(size_t(ambient), std::move(faces));
}

CurveInput parse_curve(const Json& j) {
  CurveInput in;
  if (json_optional_field(j, "degrees")) {
    const Json& dj = json_field(j, "degrees");
    if (!dj.is_array()) bad_shape("degrees must be an array");
    for (const Json& d : dj) in.degrees.push_back(long_from_json(d));
    if (const Json* ej = json_optional_field(j, "edges")) {
      if (!ej->is_array()) bad_shape("edges must be an array of pairs");
      for (const Json& e : *ej) {
        if (!e.is_array() || e.size() != 2)
          bad_shape("each edge must be a pair");
        long a = long_from_json(e[0]);
        long b = long_from_json(e[1]);
        if (a < 0 || b < 0) bad_shape("edge endpoints must be nonnegative");
        in.edges.emplace_back(size_t(a), size_t(b));
      }
    }
    if (const Json* lj = json_optional_field(j, "legs"))
      in.legs = long_from_json(*lj);
    return in;
  }
  in.counts_only = true;
  in.vertices = long_from_json(json_field(j, "V"));
  in.bounded_edges = long_from_json(json_field(j, "B"));
  in.unbounded_edges = long_from_json(json_field(j, "U"));
  return in;
}

UnivarPoly univar_from_json(const Json& j) {
  if (!j.is_array()) bad_shape("polynomial must be a coefficient array");
  UnivarPoly p;
  long e = 0;
  for (const Json& c : j) p += UnivarPoly::monomial(e++, big_int_from_json(c));
  return p;
}

LaurentBivarPoly bivar_from_json(const Json& j) {
  if (const Json* vars = json_optional_field(j, "vars")) {
    if (!vars->is_array() || vars->size() != 2 || (*vars)[0] != "u" ||
        (*vars)[1] != "v")
      bad_shape("vars must be [\"u\", \"v\"]");
  }
  const Json& terms = json_field(j, "terms");
  if (!terms.is_array()) bad_shape("terms must be an array");
  LaurentBivarPoly p;
  for (const Json& t : terms) {
    const Json& e = json_field(t, "e");
    if (!e.is_array() || e.size() != 2)
      bad_shape("term exponent must be a pair");
    p += LaurentBivarPoly::monomial(long_from_json(e[0]), long_from_json(e[1]),
                                    big_int_from_json(json_field(t, "c")));
  }
  return p;
}

}  // namespace trop
