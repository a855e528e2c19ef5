#include "splitmerge/diagnostics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "splitmerge/chains.hpp"
#include "splitmerge/parallel.hpp"
#include "splitmerge/samplers.hpp"

namespace splitmerge {

double moment_sum(const ContinuousPartition& p, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  double acc = 0.0;
  for (double x : p.parts()) acc += std::pow(x, alpha);
  return acc;
}

double moment_dust_bound(const ContinuousPartition& p, double alpha,
                         double eps_trunc) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(eps_trunc > 0.0)) throw std::invalid_argument("eps_trunc must be positive");
  if (p.dust() == 0.0) return 0.0;
  // Pieces of size q <= eps satisfy q^alpha <= q * eps^(alpha-1) for
  // alpha >= 1; for alpha < 1 the concave worst case is dust/eps pieces of
  // size eps. Both give dust * eps^(alpha-1).
  return p.dust() * std::pow(eps_trunc, alpha - 1.0);
}

int interval_count(const ContinuousPartition& p, int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const double hi = std::ldexp(1.0, -m);      // 2^-m
  const double lo = std::ldexp(1.0, -m - 1);  // 2^-m-1
  int count = 0;
  for (double x : p.parts())
    if (lo < x && x <= hi) ++count;
  return count;
}

double w_stat(const ContinuousPartition& p, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const double threshold = std::ldexp(1.0, -m);
  double acc = 0.0;
  for (double x : p.parts()) {
    if (!(x > threshold)) break;  // parts are nonincreasing
    acc += x;
  }
  return acc;
}

MeanStdErr stationarity_residual(
    const std::function<ContinuousPartition(RngStream&)>& mu_sampler, int m,
    int replicas, const RngStream& rng) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (replicas < 1) throw std::invalid_argument("replicas must be positive");
  std::vector<double> diff(replicas);
  parallel_for(replicas, [&](int r) {
    RngStream stream(rng.seed(), rng.stream_id() + 1 + r);
    ContinuousPartition before = mu_sampler(stream);
    double w0 = w_stat(before, m);
    ContinuousPartition after = ccf_step(before, stream);
    diff[r] = w_stat(after, m) - w0;
  });
  double mean = 0.0;
  for (double d : diff) mean += d;
  mean /= replicas;
  double var = 0.0;
  for (double d : diff) var += (d - mean) * (d - mean);
  var = replicas > 1 ? var / (replicas - 1) : 0.0;
  return MeanStdErr{mean, std::sqrt(var / replicas), replicas};
}

double tv_distance(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("tv_distance needs a shared index set");
  return 0.5 * (mu - nu).cwiseAbs().sum();
}

Rational tv_distance(const RationalVector& mu, const RationalVector& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("tv_distance needs a shared index set");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    acc += rational_abs(mu[i] - nu[i]);
  return acc / 2;
}

MomentReport gem_moment_report(double alpha, int replicas, const RngStream& rng,
                               double eps_trunc) {
  if (replicas < 1) throw std::invalid_argument("replicas must be positive");
  std::vector<double> vals(replicas);
  parallel_for(replicas, [&](int r) {
    RngStream stream(rng.seed(), rng.stream_id() + 1 + r);
    vals[r] = moment_sum(sample_gem(stream, eps_trunc), alpha);
  });
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= replicas;
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  var = replicas > 1 ? var / (replicas - 1) : 0.0;
  return MomentReport{alpha, mean, std::sqrt(var / replicas), replicas};
}

}  // namespace splitmerge
