#pragma once

#include <Eigen/Dense>

#include "splitmerge/parallel.hpp"
#include "splitmerge/partitions.hpp"
#include "splitmerge/rational.hpp"
#include "splitmerge/rng.hpp"
#include "splitmerge/samplers.hpp"

namespace splitmerge {

// Transition matrix of the discrete split-merge chain on partitions of n,
// exact and row-stochastic, indexed by the canonical enumeration.
struct ExactKernel {
  int n = 0;
  PartitionIndex index;
  RationalMatrix entries;
};

// Exact probability vector over the canonical enumeration of partitions of n.
struct ExactDistribution {
  int n = 0;
  RationalVector weights;
};

// One split-merge step on a continuous partition: two size-biased picks with
// replacement; the same part twice splits at an independent uniform fraction,
// two distinct parts merge. Dust is never picked (a pick landing in dust is
// redrawn) and is carried through unchanged.
ContinuousPartition ccf_step(const ContinuousPartition& p, RngStream& rng);

// One random-transposition step on the cycle type: two atoms sampled
// uniformly without replacement from {1..n}; same part splits uniformly,
// distinct parts merge. Requires n >= 2.
IntegerPartition dcf_step(const IntegerPartition& l, RngStream& rng);

// Full exact transition matrix of dcf_step on the partitions of n.
ExactKernel exact_kernel(int n, int cap = kDefaultExactCap);

// The Ewens(theta = 1) stationary law: weights 1 / prod_k k^{N(k)} N(k)!.
ExactDistribution ewens_pmf(int n, int cap = kDefaultExactCap);

// Point mass at one partition.
ExactDistribution point_mass(const IntegerPartition& l,
                             int cap = kDefaultExactCap);

// mu0 * K^k by repeated exact vector-matrix products.
ExactDistribution k_step_distribution(const ExactDistribution& mu0,
                                      const ExactKernel& kernel, int k);

// max over pairs of |K(l,l') pi(l) - K(l',l) pi(l')|; exactly zero for a
// correctly built kernel.
Rational check_detailed_balance(const ExactKernel& kernel);

// Monte Carlo estimate of the k-step law of `step` started at `start`,
// as frequencies over the canonical enumeration. Replica r draws from the
// stream (rng.seed(), rng.stream_id() + 1 + r); replicas run in parallel.
template <class StepFn>
Eigen::VectorXd empirical_distribution(StepFn&& step,
                                       const IntegerPartition& start, int k,
                                       int replicas, const RngStream& rng,
                                       int cap = kDefaultExactCap) {
  PartitionIndex index(start.n(), cap);
  std::vector<int> hits(replicas);
  parallel_for(replicas, [&](int r) {
    RngStream stream(rng.seed(), rng.stream_id() + 1 + r);
    IntegerPartition state = start;
    for (int i = 0; i < k; ++i) state = step(state, stream);
    hits[r] = index.index_of(state);
  });
  Eigen::VectorXd freq = Eigen::VectorXd::Zero(index.size());
  for (int h : hits) freq[h] += 1.0;
  return freq / static_cast<double>(replicas);
}

}  // namespace splitmerge
