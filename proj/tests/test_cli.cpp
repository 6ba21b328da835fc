#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "charvar/cli.hpp"
#include "charvar/figures.hpp"
#include "charvar/json_io.hpp"

using namespace charvar;
using namespace charvar::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, const std::string& input = "") {
  const Run r = run(std::move(args), input);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n' ? 1 : 0;
  return n;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("sample is valid and deterministic") {
  const Run a = run({"sample", "--group", "SU", "--n", "2", "--r", "3", "--seed", "7"});
  const Run b = run({"sample", "--group", "SU", "--n", "2", "--r", "3", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const RepTuple rho = tuple_from_json(Json::parse(a.out));
  CHECK(rho.rank() == 3);
  CHECK(validate(rho, 1e-12));
  CHECK(run({"sample", "--group", "SU", "--n", "2", "--r", "3", "--seed", "8"}).out != a.out);

  const RepTuple sl = tuple_from_json(run_json({"sample", "--group", "SL", "--n", "3", "--r", "2", "--seed", "1"}));
  for (const auto& m : sl.mats) CHECK(std::abs(m.det() - 1.0) < 1e-10);

  const Json many = run_json({"sample", "--group", "SU", "--n", "3", "--r", "2", "--samples", "4"});
  CHECK(many.is_array());
  CHECK(many.size() == 4);
}

TEST_CASE("invariants dispatch by shape") {
  const std::string su2 = run({"sample", "--group", "SU", "--n", "2", "--r", "2"}).out;
  const Json r2 = run_json({"invariants"}, su2);
  CHECK(r2["system"] == "su2-rank2");
  for (const char* k : {"a1", "a2", "a3", "sigma"}) CHECK(r2["values"].contains(k));

  const std::string su3 = run({"sample", "--group", "SU", "--n", "3", "--r", "2"}).out;
  const Json r3 = run_json({"invariants", "-"}, su3);
  CHECK(r3["system"] == "su3-rank2");
  for (const char* k : {"t1", "t-5", "u1", "u-4", "u5", "P", "Q", "Delta"}) CHECK(r3["values"].contains(k));

  const std::string r5 = run({"sample", "--group", "SU", "--n", "2", "--r", "5"}).out;
  const Json w = run_json({"invariants"}, r5);
  CHECK(w["system"] == "word-traces");
  CHECK(w["values"].size() == enumerate_words(5, 3).size());

  const Run csv = run({"invariants", "--format", "csv"}, su3);
  CHECK(csv.out.rfind("name,re,im\n", 0) == 0);
}

TEST_CASE("region grids") {
  const Run alcove = run({"region", "su3-alcove", "--resolution", "16"});
  REQUIRE(alcove.code == 0);
  CHECK(count_lines(alcove.out) == 1 + 16 * 16);
  CHECK(alcove.out.rfind("p1,p2,margin\n", 0) == 0);

  // Corners tau = 3, 3w, 3w^-1 have zero margin.
  const RegionGrid g = su3_alcove_grid(64);
  const double s = 1.5 * std::sqrt(3.0);
  int corners = 0;
  for (const auto& row : g.rows) {
    const bool at_three = std::abs(row[0] - 3.0) < 1e-12 && std::abs(row[1]) < 1e-12;
    const bool at_w = std::abs(row[0] + 1.5) < 1e-12 && std::abs(std::abs(row[1]) - s) < 1e-12;
    if (at_three || at_w) {
      ++corners;
      CHECK(std::abs(row[2]) < 1e-9);
    }
  }
  CHECK(corners == 3);

  const RegionGrid tet = su2_tetrahedron_boundary(16);
  const std::vector<std::array<double, 3>> singular{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const auto& p : singular) {
    bool found = false;
    for (const auto& row : tet.rows)
      if (std::abs(row[0] - p[0]) + std::abs(row[1] - p[1]) + std::abs(row[2] - p[2]) == 0.0) found = true;
    CHECK(found);
  }
  // Every boundary point lies on the sigma = 0 or sigma = 1 level.
  for (const auto& row : tet.rows) {
    const double sg = sigma({row[0], row[1], row[2]});
    CHECK(std::min(std::abs(sg), std::abs(sg - 1.0)) < 1e-12);
  }

  const Run bad = run({"region", "nope", "--resolution", "16"});
  CHECK(bad.code == 2);
  CHECK(Json::parse(bad.err)["error"] == "UnknownRegion");
  CHECK(run({"region", "su3-alcove", "--resolution", "8"}).code == 2);
}

TEST_CASE("verify suites") {
  const Run fricke = run({"verify", "fricke", "--samples", "10000"});
  CHECK(fricke.code == 0);
  const Json report = Json::parse(fricke.out);
  CHECK(report["passed"] == true);
  CHECK(report["checks"][0]["name"] == "max_residual");
  CHECK(report["checks"][0]["value"].get<double>() < 1e-12);

  const Json baird = run_json({"verify", "baird"});
  CHECK(baird["details"]["polynomials"].size() == 8);

  CHECK(run({"verify", "su3-membership", "--samples", "2000"}).code == 0);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "fricke", "--samples", "0"}).code == 2);

  // The same seed reproduces the same measurements.
  const Json x = run_json({"verify", "sigma", "--samples", "2000", "--seed", "5"});
  const Json y = run_json({"verify", "sigma", "--samples", "2000", "--seed", "5", "--threads", "3"});
  CHECK(x["checks"] == y["checks"]);
}

TEST_CASE("sample | invariants | lift | invariants round trip") {
  for (const char* r : {"2", "3"}) {
    for (int seed = 1; seed <= 20; ++seed) {
      const std::string tuple = run({"sample", "--group", "SU", "--n", "2", "--r", r, "--seed", std::to_string(seed)}).out;
      const Run inv = run({"invariants"}, tuple);
      const Run lift = run({"lift"}, inv.out);
      REQUIRE(lift.code == 0);
      const Run again = run({"invariants"}, lift.out);
      REQUIRE(again.code == 0);
      const InvariantRecord a = record_from_json(Json::parse(inv.out));
      const InvariantRecord b = record_from_json(Json::parse(again.out));
      CHECK(record_distance(a, b) < 1e-9);
    }
  }
}

TEST_CASE("lift options") {
  const Json plus = run_json({"lift"}, R"({"a1":0,"a2":0,"a3":0,"a12":0,"a13":0,"a23":0})");
  CHECK(plus["sign"] == 1);
  CHECK(plus["unique"] == false);
  CHECK(plus.contains("alternate"));
  const Json minus = run_json({"lift", "--sign", "-1"}, R"({"a1":0,"a2":0,"a3":0,"a12":0,"a13":0,"a23":0})");
  CHECK(minus["sign"] == -1);
  const Run outside = run({"lift"}, R"({"a1":1,"a2":-1,"a3":1})");
  CHECK(outside.code == 2);
  CHECK(Json::parse(outside.err)["error"] == "NotInImage");
}

TEST_CASE("retract, flow and conjugacy wrappers") {
  const std::string sl = run({"sample", "--group", "SL", "--n", "3", "--r", "2", "--seed", "3"}).out;
  const RepTuple out = tuple_from_json(run_json({"retract", "--t", "1"}, sl));
  CHECK(validate(out, 1e-10));
  CHECK(run({"retract", "--t", "2"}, sl).code == 2);

  const Json comp = run_json({"retract", "--t", "1", "--composite"}, sl);
  CHECK(comp.contains("before"));
  CHECK(comp.contains("after"));

  const Json flow = run_json({"flow", "--max-iter", "50"}, sl);
  CHECK(flow.contains("converged"));
  const Run csv = run({"flow", "--max-iter", "5", "--format", "csv"}, sl);
  CHECK(csv.out.rfind("iter,p,residual,step\n", 0) == 0);

  const std::string su = run({"sample", "--group", "SU", "--n", "3", "--r", "2", "--seed", "4"}).out;
  const auto path = temp_file("charvar_conj_a.json");
  std::ofstream(path) << su;
  Rng rng(4);
  const RepTuple moved = conjugate_tuple(haar_su(3, rng), tuple_from_json(Json::parse(su)));
  const auto path_b = temp_file("charvar_conj_b.json");
  std::ofstream(path_b) << to_json(moved).dump();
  const Json yes = run_json({"conjugacy", path.string(), path_b.string()});
  CHECK(yes["conjugate"] == true);
  const std::string other = run({"sample", "--group", "SU", "--n", "3", "--r", "2", "--seed", "5"}).out;
  std::ofstream(path_b) << other;
  const Run no = run({"conjugacy", path.string(), path_b.string()});
  CHECK(no.code == 0);
  CHECK(Json::parse(no.out)["conjugate"] == false);
}

TEST_CASE("poincare command") {
  const Json p = run_json({"poincare", "--r", "3"});
  CHECK(p["coefficients"] == Json::parse("[1,0,0,0,0,0,1]"));
  CHECK(p["polynomial"] == "1 + t^6");
  const Json s = run_json({"poincare", "--surface"});
  CHECK(s["character_variety"][5] == 34);
  CHECK(s["differ"] == true);
}

TEST_CASE("errors are reported as JSON with exit code 2") {
  const Run parse = run({"invariants"}, "{not json");
  CHECK(parse.code == 2);
  CHECK(Json::parse(parse.err)["error"] == "Parse");
  const Run notgroup = run({"invariants"}, R"({"family":"SU","n":2,"r":1,"matrices":[[[[1,0],[1,0]],[[0,0],[1,0]]]]})");
  CHECK(notgroup.code == 2);
  CHECK(Json::parse(notgroup.err)["error"] == "NotInGroup");
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("tolerance from the environment and --out") {
  // A unitary tuple perturbed by 1e-7 passes only with a loose tolerance.
  Json j = Json::parse(run({"sample", "--group", "SU", "--n", "2", "--r", "2"}).out);
  j["matrices"][0][0][0][0] = j["matrices"][0][0][0][0].get<double>() + 1e-7;
  const std::string perturbed = j.dump();
  CHECK(run({"invariants"}, perturbed).code == 2);
  CHECK(run({"invariants", "--tol", "1e-5"}, perturbed).code == 0);
  setenv("CHARVAR_TOL", "1e-5", 1);
  CHECK(run({"invariants"}, perturbed).code == 0);
  CHECK(run({"invariants", "--tol", "1e-12"}, perturbed).code == 2);
  unsetenv("CHARVAR_TOL");

  const auto path = temp_file("charvar_out.json");
  std::filesystem::remove(path);
  const Run r = run({"poincare", "--r", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["polynomial"] == "1 + 4t^6 + t^9");
}

TEST_CASE("installed binary works in a shell pipeline") {
  const char* bin = std::getenv("CHARVAR_BIN");
  if (bin == nullptr) return;
  const std::string b = bin;
  const std::string cmd = b + " sample --group SU --n 2 --r 3 --seed 11 | " + b + " invariants | " + b + " lift | " + b + " invariants";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
  CHECK(pclose(pipe) == 0);
  const Json direct = run_json({"invariants"}, run({"sample", "--group", "SU", "--n", "2", "--r", "3", "--seed", "11"}).out);
  CHECK(record_distance(record_from_json(direct), record_from_json(Json::parse(text))) < 1e-9);
}
