#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

/* End-to-end tests of the tropcalc binary: golden outputs, determinism,
 * flag handling, and error reporting with exit codes. */

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_shell(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) {
  return run_shell(std::string(TROPCALC_BIN) + " " + args + " 2>/dev/null");
}

const std::string& temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/tropcalc_cli_XXXXXX";
    char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

std::string write_input(const std::string& name, const Json& j) {
  std::string path = temp_dir() + "/" + name;
  std::ofstream f(path);
  f << j.dump();
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  std::string path = temp_dir() + "/" + name;
  std::ofstream f(path);
  f << text;
  return path;
}

Json newton_simplex(long dilation, long dim, bool honeycomb_lift = false) {
  std::vector<std::vector<long>> pts;
  std::vector<long> p(dim, 0);
  // Enumerate lattice points of dilation * standard simplex in given dim.
  while (true) {
    long s = 0;
    for (long c : p) s += c;
    if (s <= dilation) pts.push_back(p);
    long i = dim - 1;
    while (i >= 0 && p[i] == dilation) p[i--] = 0;
    if (i < 0) break;
    ++p[i];
  }
  Json j;
  j["points"] = pts;
  if (honeycomb_lift) {
    std::vector<long> lifts;
    for (const auto& q : pts)
      lifts.push_back(q[0] * q[0] + q[0] * q[1] + q[1] * q[1]);
    j["lifts"] = lifts;
  }
  return j;
}

Json eclass_label(Json terms) {
  return Json{{"eclass", {{"terms", std::move(terms)}}}};
}

Json labelled_segment() {
  // One bounded segment [0,1] on the line, every face labelled uv.
  Json uv = eclass_label(Json::array({{{"c", 1}, {"e", {1, 1}}}}));
  return Json{{"ambient", 1},
              {"vertices", {{0}, {1}}},
              {"faces",
               {{{"v", {0}}, {"label", uv}},
                {{"v", {1}}, {"label", uv}},
                {{"v", {0, 1}}, {"label", uv}}}}};
}

Json labelled_half_line() {
  // A vertex with one outgoing ray, labelled uv and 1.
  Json uv = eclass_label(Json::array({{{"c", 1}, {"e", {1, 1}}}}));
  Json one = eclass_label(Json::array({{{"c", 1}, {"e", {0, 0}}}}));
  return Json{{"ambient", 1},
              {"vertices", {{0}}},
              {"rays", {{1}}},
              {"faces",
               {{{"v", {0}}, {"label", uv}},
                {{"v", {0}}, {"r", {0}}, {"label", one}}}}};
}

Json matroid_line() {
  // Tropical line in the plane: one vertex with matroid U(2,3), three rays
  // with matroid U(1,1).
  Json u23 = {{"uniform", {2, 3}}};
  Json u11 = {{"uniform", {1, 1}}};
  return Json{{"ambient", 2},
              {"vertices", {{0, 0}}},
              {"rays", {{-1, 0}, {0, -1}, {1, 1}}},
              {"faces",
               {{{"v", {0}}, {"label", {{"matroid", u23}}}},
                {{"v", {0}}, {"r", {0}}, {"label", {{"matroid", u11}}}},
                {{"v", {0}}, {"r", {1}}, {"label", {{"matroid", u11}}}},
                {{"v", {0}}, {"r", {2}}, {"label", {{"matroid", u11}}}}}}};
}

}  // namespace

TEST_CASE("matroid subcommand prints characteristic data") {
  std::string in = write_input("u23.json", Json{{"uniform", {2, 3}}});
  RunResult r = run("matroid -i " + in);
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["chi"] == Json({-3, 1}));
  CHECK(j["class"] == Json({-2, 1}));
  CHECK(j["euler"] == -1);
  CHECK(j["flats"] == 5);
}

TEST_CASE("gpoly subcommand on the face lattice of a square") {
  Json poset = {{"elements", 10},
                {"covers",
                 {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                  {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8},
                  {4, 8}, {4, 5},
                  {5, 9}, {6, 9}, {7, 9}, {8, 9}}}};
  RunResult r = run("gpoly -i " + write_input("square_poset.json", poset));
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out) == Json{{"g", {1, 1}}});
}

TEST_CASE("limit subcommand on the honeycomb cubic") {
  std::string in = write_input("honeycomb.json", newton_simplex(3, 2, true));
  RunResult r = run("limit -i " + in);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["genus"] == 1);
  CHECK(j["euler"] == 0);
  CHECK(j["betti"] == 1);
  CHECK(j["e_limit"]["terms"].empty());
  for (const Json& a : j["audit"]) CHECK(a["pass"] == true);

  // Limit Hodge numbers of H^1: only the (0,0) and (1,1) entries survive.
  int h00 = 0, h11 = 0, h10 = 0;
  for (const Json& row : j["limit_hodge"]) {
    if (row["m"] != 1) continue;
    if (row["p"] == 0 && row["q"] == 0) h00 = row["h"].get<int>();
    if (row["p"] == 1 && row["q"] == 1) h11 = row["h"].get<int>();
    if (row["p"] == 1 && row["q"] == 0) h10 = row["h"].get<int>();
  }
  CHECK(h00 == 1);
  CHECK(h11 == 1);
  CHECK(h10 == 0);

  SUBCASE("byte-identical output across runs") {
    RunResult again = run("limit -i " + in);
    CHECK(again.exit_code == 0);
    CHECK(again.out == r.out);
  }
  SUBCASE("--no-audit suppresses the audit battery") {
    RunResult quiet = run("limit --no-audit -i " + in);
    CHECK(quiet.exit_code == 0);
    Json q = Json::parse(quiet.out);
    CHECK(q["audit"].empty());
    CHECK(q["genus"] == 1);
  }
  SUBCASE("--no-strict keeps a passing run at exit zero") {
    RunResult lax = run("limit --no-strict -i " + in);
    CHECK(lax.exit_code == 0);
    CHECK(Json::parse(lax.out)["genus"] == 1);
  }
}

TEST_CASE("limit subcommand with the trivial lift") {
  std::string in = write_input("cubic_trivial.json", newton_simplex(3, 2));
  RunResult r = run("limit -i " + in);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  int h10 = 0, h00 = 0;
  for (const Json& row : j["limit_hodge"]) {
    if (row["m"] != 1) continue;
    if (row["p"] == 1 && row["q"] == 0) h10 = row["h"].get<int>();
    if (row["p"] == 0 && row["q"] == 0) h00 = row["h"].get<int>();
  }
  CHECK(h10 == 1);
  CHECK(h00 == 0);
}

TEST_CASE("polytope subcommands: ehrhart, hvector, bb, euler, genus") {
  Json seg = {{"points", {{0}, {1}, {2}, {3}}}};
  RunResult r = run("ehrhart -i " + write_input("seg3.json", seg));
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out) == Json{{"dim", 1}, {"hstar", {1, 2}}});

  std::string cubic = write_input("cubic.json", newton_simplex(3, 2));
  r = run("bb -i " + cubic);
  CHECK(r.exit_code == 0);
  Json expected_bb = Json::parse(
      R"({"bb":{"terms":[{"c":-8,"e":[0,0]},{"c":-1,"e":[0,1]},)"
      R"({"c":-1,"e":[1,0]},{"c":1,"e":[1,1]}],"vars":["u","v"]}})");
  CHECK(Json::parse(r.out) == expected_bb);

  r = run("genus -i " + cubic);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out) == Json{{"genus", 1}});

  std::string quartic = write_input("quartic3.json", newton_simplex(4, 3));
  r = run("euler -i " + quartic);
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out) == Json{{"euler", 24}});

  r = run("hvector -i " + cubic);
  CHECK(r.exit_code == 0);
  Json h = Json::parse(r.out);
  REQUIRE(h.contains("h"));
  CHECK(h["h"].is_array());
}

TEST_CASE("table subcommand emits dimension and rows") {
  std::string in = write_input("hc2.json", newton_simplex(3, 2, true));
  RunResult r = run("table -i " + in);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["d"] == 1);
  CHECK(j["limit_hodge"].size() == 4);
}

TEST_CASE("bergman subcommand lists rays and cones") {
  std::string in = write_input("u23b.json", Json{{"uniform", {2, 3}}});
  RunResult r = run("bergman -i " + in);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["dim"] == 1);
  CHECK(j["rays"].size() == 3);
  CHECK(j["cones"].size() == 4);
  CHECK(j["maximal"].size() == 3);
}

TEST_CASE("psi subcommand: matroid labels give the L-polynomial route") {
  std::string in = write_input("line.json", matroid_line());
  RunResult r = run("psi -i " + in);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["psi_L"] == Json({1, 1}));
  CHECK(j["matroidal_euler"] == 2);
  CHECK(j["warnings"].empty());
  Json uv_plus_1 = Json::parse(
      R"({"terms":[{"c":1,"e":[0,0]},{"c":1,"e":[1,1]}],"vars":["u","v"]})");
  CHECK(j["psi"] == uv_plus_1);
}

TEST_CASE("psi subcommand: E-class labels give the bivariate route only") {
  std::string in = write_input("halfline.json", labelled_half_line());
  RunResult r = run("psi -i " + in);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(!j.contains("psi_L"));
  Json uv_plus_1 = Json::parse(
      R"({"terms":[{"c":1,"e":[0,0]},{"c":1,"e":[1,1]}],"vars":["u","v"]})");
  CHECK(j["psi"] == uv_plus_1);
}

TEST_CASE("curve subcommand in both input forms") {
  Json theta = {{"degrees", {3, 3}},
                {"edges", {{0, 1}, {0, 1}, {0, 1}}},
                {"legs", 0}};
  RunResult r = run("curve -i " + write_input("theta.json", theta));
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["euler"] == -2);
  CHECK(j["genus"] == 2);
  CHECK(j["psi"] == Json({-1, -1}));

  Json counts = {{"V", 2}, {"B", 3}, {"U", 0}};
  RunResult rc = run("curve -i " + write_input("theta_counts.json", counts));
  REQUIRE(rc.exit_code == 0);
  CHECK(Json::parse(rc.out) == j);
}

TEST_CASE("check-lemma subcommand: exhaustive and single-pair modes") {
  Json in = newton_simplex(3, 2, true);
  in["exhaustive"] = true;
  RunResult r = run("check-lemma -i " + write_input("lemma_ex.json", in));
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["cases"] == 7);

  Json one = newton_simplex(3, 2, true);
  one["sigma"] = {0};        // the corner (0,0) is a vertex cell
  one["sigma_prime"] = {0};
  r = run("check-lemma -i " + write_input("lemma_eq.json", one));
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out) == Json{{"sum", 1}});

  one["sigma_prime"] = Json::array();
  r = run("check-lemma -i " + write_input("lemma_ne.json", one));
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out) == Json{{"sum", 0}});
}

TEST_CASE("refine-check subcommand: split, support edit, fan change") {
  Json split = {{"complex", labelled_segment()},
                {"refine", {{"point", {"1/2"}}}}};
  RunResult r = run("refine-check -i " + write_input("rc_split.json", split));
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["equal"] == true);
  CHECK(j["psi_before"] == j["psi_after"]);

  Json drop = {{"complex", labelled_segment()},
               {"refine", {{"drop_face", 2}}}};
  r = run("refine-check -i " + write_input("rc_drop.json", drop));
  REQUIRE(r.exit_code == 0);
  j = Json::parse(r.out);
  CHECK(j["equal"] == false);
  CHECK(j["psi_before"] != j["psi_after"]);

  Json fan = {{"complex", labelled_half_line()},
              {"refine", {{"drop_face", 1}}}};
  r = run("refine-check -i " + write_input("rc_fan.json", fan));
  CHECK(r.exit_code == 2);
  CHECK(Json::parse(r.out)["error"] == "RecessionFanChanged");
}

TEST_CASE("input and output redirection") {
  std::string in = write_input("io_u23.json", Json{{"uniform", {2, 3}}});
  std::string out_path = temp_dir() + "/matroid_out.json";
  RunResult r = run("matroid -i " + in + " -o " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  Json j = Json::parse(f);
  CHECK(j["chi"] == Json({-3, 1}));

  // stdin is the default input stream.
  RunResult piped =
      run_shell(std::string(TROPCALC_BIN) + " matroid < " + in +
                " 2>/dev/null");
  CHECK(piped.exit_code == 0);
  CHECK(Json::parse(piped.out)["chi"] == Json({-3, 1}));
}

TEST_CASE("dimension cap: flag, environment variable, precedence") {
  std::string quartic = write_input("cap.json", newton_simplex(4, 3));
  RunResult r = run("euler --dim-cap 2 -i " + quartic);
  CHECK(r.exit_code == 2);
  CHECK(Json::parse(r.out)["error"] == "DimensionTooLarge");

  RunResult env = run_shell("TROP_DIM_CAP=2 " + std::string(TROPCALC_BIN) +
                            " euler -i " + quartic + " 2>/dev/null");
  CHECK(env.exit_code == 2);
  CHECK(Json::parse(env.out)["error"] == "DimensionTooLarge");

  // An explicit flag beats the environment.
  RunResult flag = run_shell("TROP_DIM_CAP=2 " + std::string(TROPCALC_BIN) +
                             " euler --dim-cap 6 -i " + quartic +
                             " 2>/dev/null");
  CHECK(flag.exit_code == 0);
  CHECK(Json::parse(flag.out)["euler"] == 24);
}

TEST_CASE("error reporting: malformed JSON, schema violations, usage") {
  std::string garbage = write_text("garbage.json", "{not json");
  RunResult r = run("euler -i " + garbage);
  CHECK(r.exit_code == 2);
  CHECK(Json::parse(r.out)["error"] == "ParseError");

  std::string empty_obj = write_text("empty.json", "{}");
  r = run("euler -i " + empty_obj);
  CHECK(r.exit_code == 2);
  CHECK(Json::parse(r.out)["error"] == "SchemaMismatch");

  r = run("matroid -i /nonexistent/input.json");
  CHECK(r.exit_code == 2);
  CHECK(Json::parse(r.out)["error"] == "ParseError");

  // Usage errors report on stderr, since no pipeline has started.
  RunResult usage = run_shell(std::string(TROPCALC_BIN) +
                              " no-such-command 2>&1 1>/dev/null");
  CHECK(usage.exit_code == 2);
  CHECK(Json::parse(usage.out)["error"] == "ParseError");

  RunResult help = run_shell(std::string(TROPCALC_BIN) + " --help 2>/dev/null");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}
