#pragma once

#include <functional>
#include <span>

namespace icc {

// Execution policy for the data-parallel kernels. Every kernel has a plain
// serial path that produces bit-identical results to the OpenMP path; the
// serial path is the reference the tests compare against.
enum class ExecPolicy { Serial, OpenMP };

int hardware_jobs();

// Runs body(i) for i in [0, n). Iterations must be independent and write
// only to locations owned by index i so both policies give identical output.
void parallel_for(ExecPolicy policy, int n, const std::function<void(int)>& body);

// Fixed-order pairwise summation; identical result no matter how the terms
// were produced (serially or by OpenMP workers).
double pairwise_sum(std::span<const double> values);
double pairwise_mean(std::span<const double> values);

}  // namespace icc
