#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "icc/rng.hpp"

namespace icc {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile function (inverse CDF), accurate to full double
// precision via a rational approximation plus one Halley refinement.
double normal_quantile(double p);

// One-dimensional normal density truncated to [lower, upper].
struct TruncatedNormal {
  double mean = 0.0;
  double variance = 1.0;
  double lower = 0.0;
  double upper = 1.0;

  void validate() const;
  // Probability mass of the untruncated normal on [lower, upper].
  double support_mass() const;
};

double tn_logpdf(const TruncatedNormal& dist, double x);
double tn_sample(const TruncatedNormal& dist, RngStream& rng);

// Multivariate normal with cached Cholesky factor. Construction throws
// std::invalid_argument if the covariance is not symmetric positive definite.
class MultivariateNormal {
 public:
  MultivariateNormal(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  Eigen::VectorXd sample(RngStream& rng) const;
  double logpdf(const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd chol_lower_;
  double log_det_ = 0.0;
};

Eigen::VectorXd mvn_sample(const MultivariateNormal& dist, RngStream& rng);
double mvn_logpdf(const MultivariateNormal& dist, const Eigen::VectorXd& x);

// Halton radical-inverse sequence. Rows are points, columns dimensions; the
// sequence starts at index `offset + 1` (the usual convention where the first
// base-2 value is 0.5). Deterministic; dim is limited by the prime table.
Eigen::MatrixXd halton(int dim, int n, std::uint64_t offset = 0);

// Halton points affinely mapped into per-dimension [lo, hi] bounds
// (bounds has `dim` rows and 2 columns).
Eigen::MatrixXd halton_in_bounds(int dim, int n, const Eigen::MatrixX2d& bounds,
                                 std::uint64_t offset = 0);

int halton_max_dim();

// Five-number-plus-mean summary with type-7 (linear interpolation) quantiles.
struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

BoxStats box_stats(std::span<const double> samples);

// Type-7 quantile of a sample, p in [0, 1].
double quantile(std::span<const double> samples, double p);

}  // namespace icc
