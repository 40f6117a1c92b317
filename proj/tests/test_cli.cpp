#include <doctest.h>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

#include "process.hpp"

using nlohmann::json;

TEST_CASE("coeff tables") {
  auto r = run_cli("coeff r3 --n-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\t1\n1\t6\n2\t12\n3\t8\n4\t6\n");

  r = run_cli("coeff holo --n-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1\t-1.32381360092\n") != std::string::npos);
  CHECK(r.out.find("4\t-1.32381360092\n") != std::string::npos);

  r = run_cli("--format json coeff shadow --n-max 3");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["family"] == "shadow");
  CHECK(j["n_max"] == 3);
  REQUIRE(j["entries"].size() == 3);
  for (const auto& e : j["entries"]) {
    CHECK(std::abs(e["im"].get<double>()) <= 1e-10);
    CHECK(std::abs(e["residual"].get<double>()) <= 1e-10);
  }
  CHECK(std::abs(j["entries"][0]["re"].get<double>() + 1.692568750643269) <= 1e-12);

  r = run_cli("--format csv coeff holo --n-max 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,re,im\n", 0) == 0);
  // shortest round-trip floats
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto first = line.find(','), second = line.find(',', first + 1);
    const std::string re = line.substr(first + 1, second - first - 1);
    char buf[64];
    const auto end = std::to_chars(buf, buf + sizeof buf, std::stod(re)).ptr;
    CHECK(std::string(buf, end) == re);
  }
}

TEST_CASE("digits flag") {
  auto r = run_cli("--digits 5 coeff holo --n-max 1");
  CHECK(r.out == "0\t-0.66191\n1\t-1.3238\n");
  CHECK(run_cli("--digits 16 coeff holo --n-max 1").exit_code == 2);
}

TEST_CASE("quantities") {
  auto r = run_cli("quantity hurwitz --N 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4/3\n");
  r = run_cli("quantity unit --D 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("x=1 y=1") != std::string::npos);
  CHECK(r.out.find("logeps=0.481211825") != std::string::npos);
  r = run_cli("--format json quantity zeta-kloosterman --n 3 --s 2 --closed");
  REQUIRE(r.exit_code == 0);
  const json z = json::parse(r.out);
  CHECK(z["phase_residual"].get<double>() < 1e-12);
  CHECK(z["method"] == "closed_form");
  r = run_cli("--format json quantity zeta-kloosterman --n 3 --s 2 --series --cutoff 2000");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["error_bound"].get<double>() > 0);
  CHECK(run_cli("quantity zeta-kloosterman --n 3 --s 1.5 --series").exit_code == 4);
  CHECK(run_cli("quantity zeta-kloosterman --n 3 --s 2 --series --closed").exit_code == 2);
  CHECK(run_cli("quantity classnumber --D 229").out == "D=229 h=3\n");
  CHECK(run_cli("quantity classnumber --D 20").exit_code == 2);
  CHECK(run_cli("quantity hurwitz --N 5").exit_code == 2);
  CHECK(run_cli("quantity unit --D 2000001").exit_code == 2);
  CHECK(run_cli("quantity lvalue --D 8 --s 1").out.find("value=0.62322524014") != std::string::npos);
}

TEST_CASE("eval") {
  auto r = run_cli("--format json eval --tau 0+50i --n-max 5");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  const double c0 = -(3 / 3.14159265358979323846) * std::log(2.0);
  CHECK(std::abs(j["F"]["re"].get<double>() - (c0 + 2 * std::sqrt(50.0))) <= 1e-10);
  r = run_cli("--format json eval --tau 0+1i --n-max 40");
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  CHECK(std::abs(j["theta"]["re"].get<double>() - 1.086434811213308) <= 1e-12);
  r = run_cli("--format json eval --tau 0.5+1i --n-max 40");
  REQUIRE(r.exit_code == 0);
  j = json::parse(r.out);
  for (const char* key : {"Theta", "theta", "Theta_cubed", "F"}) {
    CHECK(std::isfinite(j[key]["re"].get<double>()));
    CHECK(std::isfinite(j[key]["im"].get<double>()));
  }
  CHECK(run_cli("eval --tau 0-1i").exit_code == 2);
  CHECK(run_cli("eval --tau 0+0i").exit_code == 2);
  CHECK(run_cli("eval --tau banana").exit_code == 2);
  CHECK(run_cli("eval --tau 2i").exit_code == 0);
}

TEST_CASE("verify") {
  auto r = run_cli("verify --suite hecke --n-max 100");
  CHECK(r.exit_code == 0);
  r = run_cli("--format json verify --suite shadow --n-max 300");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["cases_failed"] == 0);
  CHECK(j["suite"] == "shadow");
  r = run_cli("--format json verify --suite classnumbers --n-max 20 --verbose");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).contains("cases"));
  r = run_cli("--tol-scale 1e-12 verify --suite kloosterman --n-max 20");
  CHECK(r.exit_code == 1);
  CHECK(run_cli("verify --suite shadow --n-max 5").exit_code == 2);
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("--format xml verify").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
