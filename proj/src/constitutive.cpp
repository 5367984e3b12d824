#include "icc/constitutive.hpp"

#include <cmath>

namespace icc {

void MaterialParameters::validate() const {
  if (!(youngs_modulus > 0.0)) throw std::invalid_argument("MaterialParameters: E must be > 0");
  if (!(poisson_ratio > 0.0 && poisson_ratio < 0.5)) {
    throw std::invalid_argument("MaterialParameters: nu must lie in (0, 0.5)");
  }
  if (!(hill_f > 0.0 && hill_g > 0.0 && hill_h > 0.0)) {
    throw std::invalid_argument("MaterialParameters: F, G, H must be > 0");
  }
  if (!(yield_stress > 0.0)) {
    throw std::invalid_argument("MaterialParameters: sigma_y must be > 0");
  }
  if (hardening_modulus < 0.0 || voce_modulus < 0.0 || voce_exponent < 0.0) {
    throw std::invalid_argument("MaterialParameters: hardening constants must be >= 0");
  }
}

double effective_stress(double sigma11, double sigma22, const MaterialParameters& params) {
  double d = sigma11 - sigma22;
  double phi2 = params.hill_g * sigma11 * sigma11 + params.hill_f * sigma22 * sigma22 +
                params.hill_h * d * d;
  return std::sqrt(phi2);
}

double flow_stress(double kappa, const MaterialParameters& params) {
  if (kappa < 0.0) throw std::domain_error("flow_stress: kappa must be >= 0");
  return params.yield_stress + params.hardening_modulus * kappa +
         params.voce_modulus * (1.0 - std::exp(-params.voce_exponent * kappa));
}

std::pair<double, double> yield_multipliers(const MaterialParameters& params,
                                            YieldRatioConvention convention) {
  double gh = params.hill_g + params.hill_h;
  double fh = params.hill_f + params.hill_h;
  if (!(gh > 0.0 && fh > 0.0)) {
    throw std::domain_error("yield_multipliers: G+H and F+H must be > 0");
  }
  if (convention == YieldRatioConvention::StressRatio) {
    return {1.0 / std::sqrt(gh), 1.0 / std::sqrt(fh)};
  }
  return {1.0 / gh, 1.0 / fh};
}

namespace {

// Hardening slope d(sigma_bar)/d(kappa).
double flow_stress_slope(double kappa, const MaterialParameters& p) {
  return p.hardening_modulus +
         p.voce_modulus * p.voce_exponent * std::exp(-p.voce_exponent * kappa);
}

}  // namespace

namespace {

// One return-map solve over a single strain increment, no refinement.
MaterialState integrate_once(const MaterialState& state, double d_eps11, double d_eps22,
                             const MaterialParameters& params, const ReturnMapOptions& opts) {
  const double e_mod = params.youngs_modulus;
  const double nu = params.poisson_ratio;
  const double c11 = e_mod / (1.0 - nu * nu);
  const double c12 = nu * c11;

  // Elastic predictor: plastic strains frozen.
  const double tr1 = state.sigma11 + (c11 * d_eps11 + c12 * d_eps22);
  const double tr2 = state.sigma22 + (c11 * d_eps22 + c12 * d_eps11);

  const double p11 = params.hill_g + params.hill_h;
  const double p22 = params.hill_f + params.hill_h;
  const double p12 = -params.hill_h;

  MaterialState next = state;

  const double sigma_bar0 = flow_stress(state.kappa, params);
  const double tol0 = opts.tol_rel * sigma_bar0;
  double g_trial = effective_stress(tr1, tr2, params) - sigma_bar0;

  if (g_trial <= tol0) {
    next.sigma11 = tr1;
    next.sigma22 = tr2;
    next.eps33 = -nu * (tr1 + tr2) / e_mod + next.eps_p33;
    return next;
  }

  // Stress where plastic flow starts within this increment. When the
  // previous state already sits on the yield surface this is just sigma_n;
  // otherwise the elastic segment is split at the crossing. phi is convex
  // along the ray, so the upward crossing is unique.
  double y1 = state.sigma11;
  double y2 = state.sigma22;
  if (opts.locate_yield_crossing) {
    double g0 = effective_stress(state.sigma11, state.sigma22, params) - sigma_bar0;
    if (g0 < -tol0) {
      double lo = 0.0, hi = 1.0;
      double zeta = -g0 / (g_trial - g0);  // secant start
      for (int it = 0; it < 100; ++it) {
        double z1 = state.sigma11 + zeta * (tr1 - state.sigma11);
        double z2 = state.sigma22 + zeta * (tr2 - state.sigma22);
        double gz = effective_stress(z1, z2, params) - sigma_bar0;
        if (std::abs(gz) <= tol0 || (hi - lo) < 1e-15) break;
        if (gz > 0.0) {
          hi = zeta;
        } else {
          lo = zeta;
        }
        double dphi1 = (p11 * z1 + p12 * z2);
        double dphi2 = (p22 * z2 + p12 * z1);
        double phi_z = effective_stress(z1, z2, params);
        double slope_z =
            (dphi1 * (tr1 - state.sigma11) + dphi2 * (tr2 - state.sigma22)) / phi_z;
        double newton = zeta - gz / slope_z;
        zeta = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
      }
      y1 = state.sigma11 + zeta * (tr1 - state.sigma11);
      y2 = state.sigma22 + zeta * (tr2 - state.sigma22);
    }
  }

  // Return map: unknowns (s1, s2, dk) with residuals
  //   R12 = s - s_tr + dk*C*m(s_a),   R3 = phi(s) - sigma_bar(kappa + dk),
  // where s_a = (1-alpha)*s_yield + alpha*s carries the flow direction
  // m = P*s_a/phi(s_a). Expressions are kept in two-term sums so that
  // exchanging the axes mirrors the arithmetic exactly when F == G.
  const double alpha_q = opts.flow_alpha;
  double s1 = tr1;
  double s2 = tr2;
  double dk = 0.0;

  auto residual = [&](double a1, double a2, double ak, double& r1, double& r2, double& r3,
                      double& m1, double& m2, double& phi_a) {
    double w1 = (1.0 - alpha_q) * y1 + alpha_q * a1;
    double w2 = (1.0 - alpha_q) * y2 + alpha_q * a2;
    phi_a = effective_stress(w1, w2, params);
    m1 = (p11 * w1 + p12 * w2) / phi_a;
    m2 = (p22 * w2 + p12 * w1) / phi_a;
    double cm1 = c11 * m1 + c12 * m2;
    double cm2 = c11 * m2 + c12 * m1;
    r1 = (a1 - tr1) + ak * cm1;
    r2 = (a2 - tr2) + ak * cm2;
    r3 = effective_stress(a1, a2, params) - flow_stress(state.kappa + ak, params);
  };

  double r1, r2, r3, m1, m2, phi_a;
  residual(s1, s2, dk, r1, r2, r3, m1, m2, phi_a);
  double res_norm2 = (r1 * r1 + r2 * r2) + r3 * r3;

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    double sigma_bar = flow_stress(state.kappa + dk, params);
    double tol = opts.tol_rel * sigma_bar;
    if (std::abs(r3) <= tol && std::abs(r1) <= tol && std::abs(r2) <= tol) break;

    // Jacobian blocks: A = I + dk*alpha*C*(P - m m^T)/phi_a, b = C*m,
    // c = m(s) from the endpoint effective stress, d = -sigma_bar'.
    double n11 = alpha_q * (p11 - m1 * m1) / phi_a;
    double n22 = alpha_q * (p22 - m2 * m2) / phi_a;
    double n12 = alpha_q * (p12 - m1 * m2) / phi_a;
    double a11 = 1.0 + dk * (c11 * n11 + c12 * n12);
    double a12 = dk * (c11 * n12 + c12 * n22);
    double a21 = dk * (c11 * n12 + c12 * n11);
    double a22 = 1.0 + dk * (c11 * n22 + c12 * n12);
    double b1 = c11 * m1 + c12 * m2;
    double b2 = c11 * m2 + c12 * m1;
    double phi_s = effective_stress(s1, s2, params);
    double e1 = (p11 * s1 + p12 * s2) / phi_s;
    double e2 = (p22 * s2 + p12 * s1) / phi_s;
    double slope = flow_stress_slope(state.kappa + dk, params);

    double det = a11 * a22 - a12 * a21;
    if (det == 0.0 || !std::isfinite(det)) {
      throw IntegrationError("integrate_step: singular return-map Jacobian",
                             std::sqrt(res_norm2), iter);
    }
    // u = A^-1 * R12, v = A^-1 * b via Cramer.
    double u1 = (a22 * r1 - a12 * r2) / det;
    double u2 = (a11 * r2 - a21 * r1) / det;
    double v1 = (a22 * b1 - a12 * b2) / det;
    double v2 = (a11 * b2 - a21 * b1) / det;

    double denom = -slope - (e1 * v1 + e2 * v2);
    if (denom == 0.0 || !std::isfinite(denom)) {
      throw IntegrationError("integrate_step: singular consistency pivot",
                             std::sqrt(res_norm2), iter);
    }
    double dkappa_step = ((e1 * u1 + e2 * u2) - r3) / denom;
    double ds1 = -(u1 + v1 * dkappa_step);
    double ds2 = -(u2 + v2 * dkappa_step);

    // Halving line search on the residual norm.
    double step = 1.0;
    double t1 = s1, t2 = s2, tk = dk;
    double n1, n2, n3, q1, q2, qphi;
    bool accepted = false;
    for (int half = 0; half < 12; ++half) {
      t1 = s1 + step * ds1;
      t2 = s2 + step * ds2;
      tk = dk + step * dkappa_step;
      residual(t1, t2, tk, n1, n2, n3, q1, q2, qphi);
      double trial_norm2 = (n1 * n1 + n2 * n2) + n3 * n3;
      if (std::isfinite(trial_norm2) && trial_norm2 < res_norm2) {
        accepted = true;
        res_norm2 = trial_norm2;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // Take the smallest step and let the iteration cap decide.
      residual(t1, t2, tk, n1, n2, n3, q1, q2, qphi);
      res_norm2 = (n1 * n1 + n2 * n2) + n3 * n3;
    }
    s1 = t1;
    s2 = t2;
    dk = tk;
    r1 = n1;
    r2 = n2;
    r3 = n3;
    m1 = q1;
    m2 = q2;
    phi_a = qphi;
  }

  double sigma_bar = flow_stress(state.kappa + std::max(dk, 0.0), params);
  if (!(std::abs(r3) <= opts.tol_rel * sigma_bar && std::abs(r1) <= opts.tol_rel * sigma_bar &&
        std::abs(r2) <= opts.tol_rel * sigma_bar)) {
    throw IntegrationError("integrate_step: return map did not converge",
                           std::sqrt(res_norm2), iter);
  }
  if (dk < 0.0) {
    if (dk < -1e-14) {
      throw IntegrationError("integrate_step: negative plastic increment", dk, iter);
    }
    dk = 0.0;
  }

  next.sigma11 = s1;
  next.sigma22 = s2;
  next.kappa = state.kappa + dk;
  next.eps_p11 = state.eps_p11 + dk * m1;
  next.eps_p22 = state.eps_p22 + dk * m2;
  next.eps_p33 = -(next.eps_p11 + next.eps_p22);  // plastic incompressibility
  next.eps33 = -nu * (s1 + s2) / e_mod + next.eps_p33;
  return next;
}

QoiSeries simulate_path(const MaterialParameters& params, const StrainHistory& history,
                        std::span<const int> measurement_indices,
                        const MaterialState& initial_state, const ReturnMapOptions& opts) {
  QoiSeries out;
  out.values.reserve(2 * measurement_indices.size());
  MaterialState state = initial_state;
  double prev11 = history.start_eps11;
  double prev22 = history.start_eps22;
  std::size_t next_meas = 0;
  for (int i = 0; i < history.size(); ++i) {
    double d11 = history.eps11[static_cast<std::size_t>(i)] - prev11;
    double d22 = history.eps22[static_cast<std::size_t>(i)] - prev22;
    try {
      state = integrate_step(state, d11, d22, params, opts);
    } catch (const IntegrationError& err) {
      throw IntegrationError("increment " + std::to_string(i + 1) + ": " + err.what(),
                             err.residual_norm, err.iterations);
    }
    prev11 = history.eps11[static_cast<std::size_t>(i)];
    prev22 = history.eps22[static_cast<std::size_t>(i)];
    while (next_meas < measurement_indices.size() && measurement_indices[next_meas] == i + 1) {
      out.values.push_back(state.sigma11);
      out.values.push_back(state.sigma22);
      ++next_meas;
    }
  }
  if (next_meas != measurement_indices.size()) {
    throw std::invalid_argument("simulate_path: measurement index beyond history length");
  }
  out.final_state = state;
  return out;
}

StressTrace simulate_path_trace(const MaterialParameters& params, const StrainHistory& history,
                                const MaterialState& initial_state,
                                const ReturnMapOptions& opts) {
  StressTrace trace;
  trace.sigma11.reserve(static_cast<std::size_t>(history.size()));
  trace.sigma22.reserve(static_cast<std::size_t>(history.size()));
  MaterialState state = initial_state;
  double prev11 = history.start_eps11;
  double prev22 = history.start_eps22;
  for (int i = 0; i < history.size(); ++i) {
    double d11 = history.eps11[static_cast<std::size_t>(i)] - prev11;
    double d22 = history.eps22[static_cast<std::size_t>(i)] - prev22;
    state = integrate_step(state, d11, d22, params, opts);
    prev11 = history.eps11[static_cast<std::size_t>(i)];
    prev22 = history.eps22[static_cast<std::size_t>(i)];
    trace.sigma11.push_back(state.sigma11);
    trace.sigma22.push_back(state.sigma22);
  }
  trace.final_state = state;
  return trace;
}

}  // namespace icc
