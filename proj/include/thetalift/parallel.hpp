#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace thetalift {

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// dealt round-robin; body must only write state owned by index i. The first
// exception (by worker order) is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// Fixed-shape pairwise reduction; the result depends only on the input.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> xs);
double pairwise_sum(std::span<const double> xs);

}  // namespace thetalift
