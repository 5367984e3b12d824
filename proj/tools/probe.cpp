// Scratch probe for integrator accuracy: compares coarse pseudotime
// discretization against dense substepping across parameter draws and
// depth-2 paths. Not part of the deliverable targets.
#include <chrono>
#include <cstdio>

#include "icc/constitutive.hpp"
#include "icc/loadpath.hpp"
#include "icc/stats.hpp"

using namespace icc;

int main() {
  MaterialParameters base;
  base.youngs_modulus = 70000.0;
  base.poisson_ratio = 0.3;
  base.hill_h = 0.5;
  base.yield_stress = 200.0;
  base.hardening_modulus = 200.0;
  base.voce_modulus = 200.0;
  base.voce_exponent = 20.0;

  Eigen::MatrixX2d bounds(2, 2);
  bounds << 0.3, 0.7, 0.3, 0.7;
  Eigen::MatrixXd thetas = halton_in_bounds(2, 20, bounds);

  auto t0 = std::chrono::steady_clock::now();
  for (int exemplar = 1; exemplar <= 2; ++exemplar) {
    double delta = exemplar == 1 ? 0.01 : 0.02;
    for (int m : {100, 200, 400}) {
      double worst = 0.0, worst_abs = 0.0, worst_val = 0.0;
      int worst_i = -1;
      for (int k = 0; k < 20; ++k) {
        MaterialParameters p = base;
        p.hill_f = thetas(k, 0);
        p.hill_g = thetas(k, 1);
        if (exemplar == 2) {
          p.hardening_modulus = 0.0;
          p.yield_stress = 300.0;
          p.voce_modulus = 100.0;
        }
        for (const auto& path : enumerate_paths(2)) {
          StrainHistory coarse = path_history(path, delta, m);
          StrainHistory fine = path_history(path, delta, 10000);
          // matching pseudotime fractions {0.33, 0.67, 1.0} of each step
          std::vector<int> idx_coarse, idx_fine;
          for (int s = 0; s < 2; ++s) {
            for (int frac : {33, 67, 100}) {
              idx_coarse.push_back(s * m + frac * m / 100);
              idx_fine.push_back(s * 10000 + frac * 100);
            }
          }
          QoiSeries a = simulate_path(p, coarse, idx_coarse);
          QoiSeries b = simulate_path(p, fine, idx_fine);
          for (std::size_t i = 0; i < a.values.size(); ++i) {
            double denom = std::max(std::abs(b.values[i]), 1.0);
            double rel = std::abs(a.values[i] - b.values[i]) / denom;
            if (rel > worst) {
              worst = rel;
              worst_abs = std::abs(a.values[i] - b.values[i]);
              worst_val = b.values[i];
              worst_i = static_cast<int>(i);
            }
          }
        }
      }
      std::printf("exemplar%d m=%4d worst rel %.3e  (abs %.3e MPa at value %.2f, slot %d)\n",
                  exemplar, m, worst, worst_abs, worst_val, worst_i);
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  std::printf("elapsed: %.1f s\n", std::chrono::duration<double>(t1 - t0).count());
  return 0;
}
