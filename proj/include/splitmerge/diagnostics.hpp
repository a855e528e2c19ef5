#pragma once

#include <Eigen/Dense>

#include <functional>

#include "splitmerge/partitions.hpp"
#include "splitmerge/rational.hpp"
#include "splitmerge/rng.hpp"

namespace splitmerge {

// Monte Carlo summary of one statistic.
struct MeanStdErr {
  double mean = 0.0;
  double std_error = 0.0;
  int replicas = 0;
};

// Sample mean of sum p_i^alpha over sampler draws.
struct MomentReport {
  double alpha = 0.0;
  double sample_mean = 0.0;
  double std_error = 0.0;
  int replicas = 0;
};

// sum_i p_i^alpha over the stored parts; dust is excluded. alpha > 0.
double moment_sum(const ContinuousPartition& p, double alpha);

// Worst-case contribution of the dust to the alpha-moment, given that the
// dust consists of pieces below eps_trunc: dust * eps_trunc^(alpha-1).
double moment_dust_bound(const ContinuousPartition& p, double alpha,
                         double eps_trunc);

// #{i : p_i in (2^{-m-1}, 2^{-m}]}.
int interval_count(const ContinuousPartition& p, int m);

// Mass carried by parts strictly exceeding 2^{-m}. m >= 1.
double w_stat(const ContinuousPartition& p, int m);

// Monte Carlo estimate of E[W_m(one step) - W_m(start)] under draws from
// mu_sampler; zero (within noise) exactly when the sampled law is invariant
// for the continuous chain. Replica r uses stream (rng.seed(),
// rng.stream_id() + 1 + r).
MeanStdErr stationarity_residual(
    const std::function<ContinuousPartition(RngStream&)>& mu_sampler, int m,
    int replicas, const RngStream& rng);

// (1/2) sum |mu - nu| over a shared index set.
double tv_distance(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu);
Rational tv_distance(const RationalVector& mu, const RationalVector& nu);

// Mean of sum p_i^alpha over `replicas` Poisson-Dirichlet(1) draws.
MomentReport gem_moment_report(double alpha, int replicas, const RngStream& rng,
                               double eps_trunc = kDefaultTruncation);

}  // namespace splitmerge
