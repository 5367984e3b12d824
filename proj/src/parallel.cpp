#include "icc/parallel.hpp"

#include <omp.h>

#include <stdexcept>

namespace icc {

int hardware_jobs() {
  return omp_get_max_threads();
}

void parallel_for(ExecPolicy policy, int n, const std::function<void(int)>& body) {
  if (policy == ExecPolicy::Serial) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) body(i);
}

namespace {

double pairwise_sum_impl(const double* data, std::size_t n) {
  if (n <= 32) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += data[i];
    return acc;
  }
  std::size_t half = n / 2;
  return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_impl(values.data(), values.size());
}

double pairwise_mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("pairwise_mean: empty input");
  return pairwise_sum(values) / static_cast<double>(values.size());
}

}  // namespace icc
