#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "thetalift/parallel.hpp"

using namespace thetalift;

TEST_CASE("parallel_for visits each index once") {
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    std::vector<int> hits(1001, 0);
    parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::size_t i) {
                                 if (i == 37) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("pairwise sum is shape-fixed and accurate") {
  std::vector<double> xs;
  for (int i = 1; i <= 100000; ++i) xs.push_back(1.0 / (double(i) * i));
  const double a = pairwise_sum(xs);
  const double b = pairwise_sum(xs);
  CHECK(a == b);
  CHECK(std::abs(a - (1.6449340668482264 - 1.0 / 100000.5)) <= 1e-12);
  std::vector<std::complex<double>> zs(777, {0.1, -0.2});
  const auto z = pairwise_sum(zs);
  CHECK(std::abs(z - std::complex<double>(77.7, -155.4)) <= 1e-11);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}
