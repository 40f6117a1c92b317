#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thetalift/errors.hpp"
#include "thetalift/lseries.hpp"

using namespace thetalift;

TEST_CASE("zeta values") {
  const double pi = oracle::pi;
  CHECK(std::abs(zeta(2).value - pi * pi / 6) <= 1e-14);
  CHECK(std::abs(zeta(4).value - std::pow(pi, 4) / 90) <= 1e-14);
  CHECK(std::abs(zeta(3).value - 1.2020569031595942854) <= 1e-14);
  CHECK(zeta(1.5).abs_error_bound <= 1e-12);
  CHECK_THROWS_AS(zeta(1.1), DomainError);
  // partial sum plus integral tail brackets the value
  for (double s : {1.5, 2.0, 2.5, 3.0, 4.5}) {
    double partial = 0.0;
    const int K = 200000;
    for (int k = K; k >= 1; --k) partial += std::pow(double(k), -s);
    const double lo = partial + std::pow(double(K + 1), 1 - s) / (s - 1);
    const double hi = partial + std::pow(double(K), 1 - s) / (s - 1);
    CHECK(zeta(s).value >= lo - 1e-12);
    CHECK(zeta(s).value <= hi + 1e-12);
  }
}

TEST_CASE("Hurwitz zeta near s = 1 stays consistent") {
  for (double s : {1.001, 1.01, 1.1}) {
    const LValue z = hurwitz_zeta(s, 1.0);
    // zeta(s) = 1/(s-1) + gamma + O(s-1)
    CHECK(std::abs(z.value - (1 / (s - 1) + 0.5772156649015329)) <= 0.1 * (s - 1) + 1e-9);
  }
  const double a = 0.25;
  double direct = 0.0;
  for (int k = 200000; k >= 0; --k) direct += std::pow(k + a, -3.0);
  CHECK(std::abs(hurwitz_zeta(3.0, a).value - direct) <= 1e-10);
}

TEST_CASE("L_direct examples") {
  const LValue catalan = L_direct(-4, 2, 1000000);
  CHECK(std::abs(catalan.value - 0.915965594177219) <= catalan.abs_error_bound + 1e-15);
  // L(2, chi_5) = 4 pi^2 / (25 sqrt 5)
  const LValue l5 = L_direct(5, 2, 1000000);
  CHECK(std::abs(l5.value - 4 * oracle::pi * oracle::pi / (25 * std::sqrt(5.0))) <= l5.abs_error_bound);
  CHECK(L_direct(1, 2, 10).value == zeta(2).value);
  CHECK_THROWS_AS(L_direct(20, 2, 10), DomainError);
}

TEST_CASE("L values against Euler products") {
  for (i64 D = -40; D <= 40; ++D) {
    if (!oracle::fundamental(D)) continue;
    for (double s : {2.0, 3.0}) {
      const LValue direct = L_direct(D, s, 1000000);
      const auto euler = oracle::euler_product(D, s, 10000);
      CHECK(std::abs(direct.value - euler.value) <= direct.abs_error_bound + euler.bound);
      const LValue periodic = L_value(D, s);
      CHECK(std::abs(periodic.value - euler.value) <= periodic.abs_error_bound + euler.bound);
      CHECK(std::abs(periodic.value - direct.value) <= periodic.abs_error_bound + direct.abs_error_bound);
      const double ratio = zeta(2 * s).value * direct.value;
      CHECK(std::isfinite(ratio));
      CHECK(ratio > 0);
    }
  }
}

TEST_CASE("L at 1") {
  const double pi = oracle::pi;
  CHECK(std::abs(L_at_1(-4).value - pi / 4) <= 1e-14);
  CHECK(std::abs(L_at_1(-3).value - pi / (3 * std::sqrt(3.0))) <= 1e-14);
  CHECK(std::abs(L_at_1(5).value - 2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0)) <= 1e-14);
  CHECK(std::abs(L_at_1(8).value - 0.623225240140231) <= 1e-12);
  CHECK_THROWS_AS(L_at_1(1), DomainError);
  CHECK_THROWS_AS(L_at_1(-8 * 9), DomainError);
  for (i64 D = -500; D < 500; ++D) {
    if (!oracle::fundamental(D)) continue;
    CHECK(L_at_1(D).abs_error_bound <= 1e-12);
    // the value at 1 joins the L(s) curve continuously from the right
    const double s = 1.0 + 1e-7;
    CHECK(std::abs(L_value(D, s).value - L_at_1(D).value) <= 1e-4);
  }
}
