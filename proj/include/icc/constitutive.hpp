#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icc/loadpath.hpp"

namespace icc {

// Constitutive constants for the plane-stress elastoplastic material point:
// isotropic elasticity, Hill-type anisotropic yield on the biaxial stress
// subspace and combined linear/saturating-exponential isotropic hardening.
// Stresses and moduli are in MPa, strains dimensionless.
struct MaterialParameters {
  double youngs_modulus = 70000.0;  // E [MPa]
  double poisson_ratio = 0.3;      // nu
  double hill_f = 0.5;             // F
  double hill_g = 0.5;             // G
  double hill_h = 0.5;             // H
  double yield_stress = 200.0;     // sigma_y [MPa]
  double hardening_modulus = 0.0;  // h_bar [MPa]
  double voce_modulus = 0.0;       // A [MPa]
  double voce_exponent = 0.0;      // n

  void validate() const;
};

// Solution variables at one pseudotime instant. Total in-plane strains are
// the drivers and live in the strain history, not here.
struct MaterialState {
  double sigma11 = 0.0;
  double sigma22 = 0.0;
  double eps33 = 0.0;
  double kappa = 0.0;
  double eps_p11 = 0.0;
  double eps_p22 = 0.0;
  double eps_p33 = 0.0;
};

struct ReturnMapOptions {
  double tol_rel = 1e-10;  // consistency tolerance relative to the flow stress
  int max_iter = 50;
  // Quadrature point of the plastic flow direction: 0.5 is the second-order
  // midpoint rule, 1.0 the backward-Euler endpoint rule.
  double flow_alpha = 0.5;
  // Split the increment at the elastic/plastic transition before returning.
  bool locate_yield_crossing = true;
  // Absolute stress tolerance [MPa] for internal step-halving refinement of
  // one pseudotime increment; 0 disables refinement.
  double substep_tol = 1e-6;
  int max_substep_depth = 24;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_norm(residual), iterations(iterations) {}

  double residual_norm = 0.0;
  int iterations = 0;
};

// Hill effective stress restricted to the biaxial subspace:
// phi = sqrt(F*s22^2 + G*s11^2 + H*(s11 - s22)^2).
double effective_stress(double sigma11, double sigma22, const MaterialParameters& params);

// Flow stress sigma_y + h_bar*kappa + A*(1 - exp(-n*kappa)); kappa >= 0.
double flow_stress(double kappa, const MaterialParameters& params);

// Convention for the yield multipliers R11, R22. `AsPrinted` is the
// (G+H)^-1 / (F+H)^-1 form; `StressRatio` is the (G+H)^-1/2 / (F+H)^-1/2
// form implied by the uniaxial stress ratio definition.
enum class YieldRatioConvention { AsPrinted, StressRatio };

std::pair<double, double> yield_multipliers(
    const MaterialParameters& params,
    YieldRatioConvention convention = YieldRatioConvention::AsPrinted);

// Advances the state by one pseudotime increment of total strain: elastic
// predictor, then if the trial state violates the yield condition, a full
// Newton solve of the return map (plastic multiplier + plane-stress flow)
// with halving line search.
MaterialState integrate_step(const MaterialState& state, double d_eps11, double d_eps22,
                             const MaterialParameters& params,
                             const ReturnMapOptions& opts = {});

// Stress pairs recorded at scheduled increments, flattened
// (s11, s22, s11, s22, ...) in index order.
struct QoiSeries {
  std::vector<double> values;
  MaterialState final_state;
};

// Integrates a strain history increment by increment and records the
// in-plane stresses at the given 1-based global increment indices
// (ascending). The initial state must correspond to the history's start
// totals; the default is the virgin state at zero strain. Deterministic for
// fixed inputs.
QoiSeries simulate_path(const MaterialParameters& params, const StrainHistory& history,
                        std::span<const int> measurement_indices,
                        const MaterialState& initial_state = {},
                        const ReturnMapOptions& opts = {});

// Full per-increment stress trace (row i holds the state after increment
// i+1); used for uncertainty bands over pseudotime.
struct StressTrace {
  std::vector<double> sigma11;
  std::vector<double> sigma22;
  MaterialState final_state;
};

StressTrace simulate_path_trace(const MaterialParameters& params, const StrainHistory& history,
                                const MaterialState& initial_state = {},
                                const ReturnMapOptions& opts = {});

}  // namespace icc
