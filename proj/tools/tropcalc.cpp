/*
 * tropcalc: exact invariants of degenerating torus hypersurfaces and
 * tropical complexes.  One subcommand per pipeline; JSON in, JSON out.
 *
 * Exit codes: 0 success, 2 invalid input, 3 internal invariant violation
 * (including a failed non-advisory audit unless --no-strict).
 */
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trop/complex.hpp"
#include "trop/error.hpp"
#include "trop/hodge.hpp"
#include "trop/json_io.hpp"
#include "trop/matroid.hpp"
#include "trop/polytope.hpp"
#include "trop/poset.hpp"
#include "trop/subdivision.hpp"

namespace {

using trop::Json;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      trop::fail_validation("ParseError", "cannot read input file " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    trop::fail_validation("ParseError", "cannot write output file " + path);
  out << text;
}

std::vector<size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array())
    trop::fail_validation("SchemaMismatch",
                          std::string(what) + " must be an index array");
  std::vector<size_t> out;
  for (const Json& e : j) {
    long k = trop::long_from_json(e);
    if (k < 0)
      trop::fail_validation("SchemaMismatch",
                            std::string(what) + " indices must be nonnegative");
    out.push_back(size_t(k));
  }
  return out;
}

trop::LatticePolytope polytope_of(const trop::NewtonInput& in, long dim_cap) {
  return trop::LatticePolytope::from_points(in.points, dim_cap);
}

struct RunResult {
  Json report;
  int exit_code = 0;
};

RunResult run_command(const std::string& cmd, const Json& j, long dim_cap,
                      bool audit, bool strict) {
  RunResult res;
  Json& out = res.report;

  if (cmd == "ehrhart") {
    trop::LatticePolytope P = polytope_of(trop::parse_newton(j), dim_cap);
    out["dim"] = P.dim();
    out["hstar"] = trop::to_json(P.ehrhart_hstar());
  } else if (cmd == "hvector") {
    trop::LatticePolytope P = polytope_of(trop::parse_newton(j), dim_cap);
    out["h"] = trop::to_json(P.h_vector());
  } else if (cmd == "gpoly") {
    trop::FinitePoset poset = trop::parse_poset(j);
    out["g"] = trop::to_json(poset.g_polynomial());
  } else if (cmd == "bb") {
    trop::LatticePolytope P = polytope_of(trop::parse_newton(j), dim_cap);
    out["bb"] = trop::to_json(trop::bb_epoly(P));
  } else if (cmd == "limit") {
    trop::NewtonInput in = trop::parse_newton(j);
    trop::Subdivision S =
        trop::regular_subdivision(in.points, in.lifts, dim_cap);
    trop::EPolyReport rep = trop::full_report(S, audit);
    out = trop::report_to_json(rep);
    if (audit && strict && !rep.audits_pass()) res.exit_code = 3;
  } else if (cmd == "table") {
    trop::NewtonInput in = trop::parse_newton(j);
    trop::Subdivision S =
        trop::regular_subdivision(in.points, in.lifts, dim_cap);
    trop::LimitHodgeTable t = trop::limit_hodge_table(S);
    out["d"] = t.d;
    out["limit_hodge"] = trop::table_to_json(t);
  } else if (cmd == "euler") {
    trop::LatticePolytope P = polytope_of(trop::parse_newton(j), dim_cap);
    out["euler"] = trop::to_json(trop::euler_generic(P));
  } else if (cmd == "genus") {
    trop::LatticePolytope P = polytope_of(trop::parse_newton(j), dim_cap);
    out["genus"] = trop::to_json(trop::genus(P));
  } else if (cmd == "matroid") {
    trop::Matroid m = trop::parse_matroid(j);
    out["chi"] = trop::to_json(m.reduced_char_poly());
    out["class"] = trop::to_json(m.complement_class());
    out["euler"] = trop::to_json(m.complement_euler());
    out["flats"] = m.flats().size();
  } else if (cmd == "bergman") {
    trop::BergmanFan fan = trop::bergman_fan(trop::parse_matroid(j));
    Json cones = Json::array();
    for (const auto& c : fan.cones) cones.push_back(c);
    Json rays = Json::array();
    for (const trop::IVec& r : fan.rays) {
      Json row = Json::array();
      for (const trop::BigInt& x : r) row.push_back(trop::to_json(x));
      rays.push_back(std::move(row));
    }
    out["cones"] = std::move(cones);
    out["dim"] = fan.dim;
    out["maximal"] = fan.maximal;
    out["rays"] = std::move(rays);
  } else if (cmd == "psi") {
    trop::TropicalComplex C = trop::parse_complex(j);
    bool all_matroid = !C.faces().empty();
    for (const trop::TropicalFace& f : C.faces())
      if (!f.matroid) all_matroid = false;
    if (all_matroid) {
      trop::UnivarPoly psi_L = trop::matroidal_fiber(C);
      out["matroidal_euler"] = trop::to_json(trop::matroidal_euler(C));
      out["psi"] =
          trop::to_json(trop::LaurentBivarPoly::from_univar_uv(psi_L));
      out["psi_L"] = trop::to_json(psi_L);
      out["warnings"] = trop::consistency_warnings(C);
    } else {
      out["psi"] = trop::to_json(trop::tropical_motivic_fiber(C));
    }
  } else if (cmd == "curve") {
    trop::CurveInput in = trop::parse_curve(j);
    trop::CurveReport rep =
        in.counts_only
            ? trop::curve_graph_fiber_counts(in.vertices, in.bounded_edges,
                                             in.unbounded_edges)
            : trop::curve_graph_fiber(in.degrees, in.edges, in.legs);
    out["euler"] = trop::to_json(rep.euler);
    out["genus"] = rep.genus;
    out["psi"] = trop::to_json(rep.psi);
  } else if (cmd == "check-lemma") {
    trop::NewtonInput in = trop::parse_newton(j);
    trop::Subdivision S =
        trop::regular_subdivision(in.points, in.lifts, dim_cap);
    const Json* ex = trop::json_optional_field(j, "exhaustive");
    if (ex && ex->is_boolean() && ex->get<bool>()) {
      trop::MobiusCheck c = trop::mobius_cell_identity_exhaustive(S);
      out["cases"] = c.cases;
      out["pass"] = c.pass;
    } else {
      std::vector<size_t> sigma =
          index_list(trop::json_field(j, "sigma"), "sigma");
      std::vector<size_t> sigma_prime =
          index_list(trop::json_field(j, "sigma_prime"), "sigma_prime");
      out["sum"] = trop::to_json(
          trop::mobius_cell_identity(S, sigma, sigma_prime));
    }
  } else if (cmd == "refine-check") {
    trop::TropicalComplex C =
        trop::parse_complex(trop::json_field(j, "complex"));
    const Json& rj = trop::json_field(j, "refine");
    trop::Refinement r;
    if (const Json* p = trop::json_optional_field(rj, "point")) {
      r.split_point = trop::rational_vector_from_json(*p, "point");
    } else if (const Json* d = trop::json_optional_field(rj, "drop_face")) {
      long k = trop::long_from_json(*d);
      if (k < 0)
        trop::fail_validation("SchemaMismatch",
                              "drop_face must be nonnegative");
      r.drop_face = size_t(k);
    } else {
      trop::fail_validation("SchemaMismatch",
                            "refine must hold point or drop_face");
    }
    trop::RefineOutcome o = trop::refine_and_check(C, r);
    out["equal"] = o.equal;
    out["psi_after"] = trop::to_json(o.psi_after);
    out["psi_before"] = trop::to_json(o.psi_before);
  } else {
    trop::fail_validation("SchemaMismatch", "unknown command " + cmd);
  }
  return res;
}

Json error_object(const std::string& code, const std::string& detail) {
  Json err;
  err["detail"] = detail;
  err["error"] = code;
  return err;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tropcalc: exact limit Hodge data of degenerating torus hypersurfaces\n"
      "and class sums of tropical complexes (JSON in, JSON out)"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string input_path, output_path;
  long dim_cap = 6;
  bool no_strict = false, no_audit = false;
  app.add_option("-i,--input", input_path,
                 "input JSON file (default: stdin, \"-\" accepted)");
  app.add_option("-o,--output", output_path,
                 "output JSON file (default: stdout, \"-\" accepted)");
  app.add_option("--dim-cap", dim_cap,
                 "largest allowed polytope dimension (default 6)")
      ->envname("TROP_DIM_CAP");
  app.add_flag("--no-strict", no_strict,
               "report failed audits without forcing exit code 3");
  app.add_flag("--no-audit", no_audit, "skip the audit battery entirely");

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"ehrhart", "lattice-point generating numerator of a polytope"},
      {"hvector", "toric h-vector of a polytope"},
      {"gpoly", "g-polynomial of a graded poset"},
      {"bb", "torus-hypersurface E-polynomial of a Newton polytope"},
      {"limit", "full limit-Hodge report for lifted Newton data"},
      {"table", "limit Hodge number table only"},
      {"euler", "Euler characteristic of the generic hypersurface"},
      {"genus", "interior lattice point count of a polytope"},
      {"matroid", "characteristic polynomial and complement class"},
      {"bergman", "Bergman fan of a matroid"},
      {"psi", "class sum of a labelled tropical complex"},
      {"curve", "dual-graph invariants of a degenerating curve"},
      {"check-lemma", "signed interior-cell count identity"},
      {"refine-check", "refinement invariance of the class sum"},
  };
  for (const Cmd& c : cmds) app.add_subcommand(c.name, c.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << error_object("ParseError", e.what()).dump(2) << "\n";
    return 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    if (dim_cap < 1)
      trop::fail_validation("SchemaMismatch", "dim cap must be at least 1");
    Json input = trop::parse_json_text(read_input(input_path));
    RunResult res = run_command(cmd, input, dim_cap, !no_audit, !no_strict);
    write_output(output_path, res.report);
    return res.exit_code;
  } catch (const trop::ValidationError& e) {
    std::cout << error_object(e.code(), e.what()).dump(2) << "\n";
    return 2;
  } catch (const trop::InvariantError& e) {
    std::cout << error_object(e.code(), e.what()).dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << error_object("InternalError", e.what()).dump(2) << "\n";
    return 3;
  }
}
