#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "g2kit/json_io.hpp"
#include "process.hpp"

using namespace g2kit;
using json_io::ordered_json;
using testing::cli;
using testing::run;

namespace {

std::string write_temp(const std::string& name, const ordered_json& j) {
  auto path = std::filesystem::temp_directory_path() / ("g2kit_test_" + name);
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_CASE("derivations on the exact backend") {
  auto r = run(cli() + " derivations --backend exact");
  REQUIRE(r.status == 0);
  auto j = ordered_json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["dimension"] == 14);
  CHECK(j["basis"].size() == 14);
  CHECK(j["basis"][0][0][0].is_string());
}

TEST_CASE("classify identity") {
  auto path = write_temp("identity.json", {{"matrix", json_io::matrix(Matrix<double>::identity(8))}});
  auto r = run(cli() + " classify " + path);
  REQUIRE(r.status == 0);
  auto j = ordered_json::parse(r.out);
  CHECK(j["type"] == "Identity");
  CHECK(j["measured_dim"] == 14);
  CHECK(j["passed"] == true);
}

TEST_CASE("classify and centralizer accept SU(3) input") {
  using C = Complex<double>;
  auto path = write_temp("u2.json", {{"su3", json_io::su3(representative_matrix(OrbitType::U2Type, 1.0, 0.0))}});
  auto r = run(cli() + " classify " + path);
  REQUIRE(r.status == 0);
  CHECK(ordered_json::parse(r.out)["type"] == "U2Type");
  auto c = run(cli() + " centralizer " + path);
  REQUIRE(c.status == 0);
  CHECK(ordered_json::parse(c.out)["measured_dim"] == 4);
  (void)C();
}

TEST_CASE("failed checks exit 1 with a serialized counterexample") {
  Matrix<double> m = Matrix<double>::identity(8);
  m(1, 1) = -1.0;
  auto r = run(cli() + " classify " + write_temp("bad.json", {{"matrix", json_io::matrix(m)}}));
  CHECK(r.status == 1);
  auto j = ordered_json::parse(r.out);
  CHECK(j["error"] == "NotAutomorphism");
  CHECK(j.contains("counterexample"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run(cli() + " 2>/dev/null").status == 2);
  CHECK(run(cli() + " frobnicate 2>/dev/null").status == 2);
  CHECK(run(cli() + " --backend fast derivations 2>/dev/null").status == 2);
  CHECK(run(cli() + " classify /nonexistent.json 2>/dev/null").status == 2);
  CHECK(run(cli() + " verify 2>/dev/null").status == 2);
  CHECK(run(cli() + " verify rp --p 1,2 2>/dev/null").status == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::string args : {" sample -n 50 --seed 9", " verify rp -n 60 --seed 3", " axioms -n 50 --seed 4",
                                 " verify rp --backend exact -n 20"}) {
    auto a = run(cli() + args), b = run(cli() + args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  auto t1 = run(cli() + " table"), t2 = run(cli() + " table");
  CHECK(t1.out == t2.out);
}

TEST_CASE("--out writes the report to a file") {
  auto path = (std::filesystem::temp_directory_path() / "g2kit_test_out.json").string();
  auto r = run(cli() + " sample -n 10 --out " + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  auto j = ordered_json::parse(f);
  CHECK(j["trials"] == 10);
}

TEST_CASE("extend-iso") {
  auto alg = Algebra<Rational>::compact();
  auto l = default_quadratic(alg);
  Matrix<Rational> m(2, 2);
  m(0, 0) = 1, m(1, 1) = -1;
  ordered_json iso = json_io::iso(SubalgebraIso<Rational>(l, l, m));
  auto path = write_temp("iso.json", iso);
  auto r = run(cli() + " extend-iso --backend exact " + path);
  REQUIRE(r.status == 0);
  auto j = ordered_json::parse(r.out);
  CHECK(j["restricts_to_iso"] == true);
  CHECK(j["automorphism"]["certified"] == true);
  CHECK(run(cli() + " extend-iso " + path).status == 0);
}

TEST_CASE("tolerance override reaches the table") {
  auto r = run("G2KIT_TOLERANCE=1e-6 " + cli() + " table");
  auto pos = testing::json_start(r.out);
  REQUIRE(pos != std::string::npos);
  CHECK(ordered_json::parse(r.out.substr(pos))["tolerance"] == 1e-6);
  CHECK(run("G2KIT_TOLERANCE=nope " + cli() + " table").status == 2);
}

TEST_CASE("verify involution reports the SO(4) centralizer") {
  auto r = run(cli() + " verify involution -n 10");
  auto j = ordered_json::parse(r.out);
  CHECK(j["commutation_passed"] == true);
  CHECK(j["measured_dim"] == 6);
  CHECK(j["stabilizer_dim"] == 6);
}
