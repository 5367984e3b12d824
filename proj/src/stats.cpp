#include "icc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace icc {

namespace {

constexpr double kInv2Pi = 0.15915494309189534;  // 1/(2*pi)
constexpr double kSqrt2 = 1.4142135623730951;

double normal_pdf(double x) {
  return std::sqrt(kInv2Pi) * std::exp(-0.5 * x * x);
}

// Acklam's rational approximation for the normal quantile.
double quantile_approx(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

constexpr int kHaltonPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

double radical_inverse(int base, std::uint64_t index) {
  double inv_base = 1.0 / base;
  double factor = inv_base;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * factor;
    index /= base;
    factor *= inv_base;
  }
  return value;
}

}  // namespace

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / kSqrt2);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw std::domain_error("normal_quantile: p outside [0, 1]");
  }
  double x = quantile_approx(p);
  // One Halley step against the exact CDF.
  double e = normal_cdf(x) - p;
  double u = e / normal_pdf(x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

void TruncatedNormal::validate() const {
  if (!(variance > 0.0)) throw std::invalid_argument("TruncatedNormal: variance must be > 0");
  if (!(lower < upper)) throw std::invalid_argument("TruncatedNormal: requires lower < upper");
}

double TruncatedNormal::support_mass() const {
  double sd = std::sqrt(variance);
  return normal_cdf((upper - mean) / sd) - normal_cdf((lower - mean) / sd);
}

double tn_logpdf(const TruncatedNormal& dist, double x) {
  if (x < dist.lower || x > dist.upper) {
    return -std::numeric_limits<double>::infinity();
  }
  double sd = std::sqrt(dist.variance);
  double z = (x - dist.mean) / sd;
  return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * M_PI) -
         std::log(dist.support_mass());
}

double tn_sample(const TruncatedNormal& dist, RngStream& rng) {
  double sd = std::sqrt(dist.variance);
  double lo = normal_cdf((dist.lower - dist.mean) / sd);
  double hi = normal_cdf((dist.upper - dist.mean) / sd);
  double u = lo + rng.uniform_open01() * (hi - lo);
  u = std::clamp(u, std::numeric_limits<double>::min(), 1.0 - 1e-16);
  double x = dist.mean + sd * normal_quantile(u);
  return std::clamp(x, dist.lower, dist.upper);
}

MultivariateNormal::MultivariateNormal(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (cov_.rows() != cov_.cols() || cov_.rows() != mean_.size()) {
    throw std::invalid_argument("MultivariateNormal: dimension mismatch");
  }
  if (!cov_.isApprox(cov_.transpose(), 1e-12)) {
    throw std::invalid_argument("MultivariateNormal: covariance not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov_);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("MultivariateNormal: covariance not positive definite");
  }
  chol_lower_ = llt.matrixL();
  log_det_ = 2.0 * chol_lower_.diagonal().array().log().sum();
}

Eigen::VectorXd MultivariateNormal::sample(RngStream& rng) const {
  Eigen::VectorXd z(mean_.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.normal();
  return mean_ + chol_lower_ * z;
}

double MultivariateNormal::logpdf(const Eigen::VectorXd& x) const {
  Eigen::VectorXd r = x - mean_;
  Eigen::VectorXd w = chol_lower_.triangularView<Eigen::Lower>().solve(r);
  double d = static_cast<double>(mean_.size());
  return -0.5 * w.squaredNorm() - 0.5 * log_det_ - 0.5 * d * std::log(2.0 * M_PI);
}

Eigen::VectorXd mvn_sample(const MultivariateNormal& dist, RngStream& rng) {
  return dist.sample(rng);
}

double mvn_logpdf(const MultivariateNormal& dist, const Eigen::VectorXd& x) {
  return dist.logpdf(x);
}

int halton_max_dim() {
  return static_cast<int>(std::size(kHaltonPrimes));
}

Eigen::MatrixXd halton(int dim, int n, std::uint64_t offset) {
  if (dim < 1 || dim > halton_max_dim()) {
    throw std::invalid_argument("halton: unsupported dimension");
  }
  Eigen::MatrixXd points(n, dim);
  for (int i = 0; i < n; ++i) {
    std::uint64_t index = offset + static_cast<std::uint64_t>(i) + 1;
    for (int d = 0; d < dim; ++d) {
      points(i, d) = radical_inverse(kHaltonPrimes[d], index);
    }
  }
  return points;
}

Eigen::MatrixXd halton_in_bounds(int dim, int n, const Eigen::MatrixX2d& bounds,
                                 std::uint64_t offset) {
  if (bounds.rows() != dim) throw std::invalid_argument("halton_in_bounds: bounds shape");
  Eigen::MatrixXd points = halton(dim, n, offset);
  for (int d = 0; d < dim; ++d) {
    points.col(d) = bounds(d, 0) + (points.col(d).array() * (bounds(d, 1) - bounds(d, 0))).matrix().array();
  }
  return points;
}

double quantile(std::span<const double> samples, double p) {
  if (samples.empty()) throw std::invalid_argument("quantile: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  double h = p * (static_cast<double>(sorted.size()) - 1.0);
  auto lo = static_cast<std::size_t>(std::floor(h));
  auto hi = std::min(lo + 1, sorted.size() - 1);
  double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxStats box_stats(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("box_stats: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  auto q = [&](double p) {
    double h = p * (static_cast<double>(sorted.size()) - 1.0);
    auto lo = static_cast<std::size_t>(std::floor(h));
    auto hi = std::min(lo + 1, sorted.size() - 1);
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
  };
  BoxStats out;
  out.min = sorted.front();
  out.q1 = q(0.25);
  out.median = q(0.5);
  out.q3 = q(0.75);
  out.max = sorted.back();
  double acc = 0.0;
  for (double v : sorted) acc += v;
  out.mean = acc / static_cast<double>(sorted.size());
  return out;
}

}  // namespace icc
