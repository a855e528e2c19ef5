#pragma once

#include <optional>
#include <vector>

#include "splitmerge/partitions.hpp"
#include "splitmerge/rng.hpp"

namespace splitmerge {

// Uniform stick-breaking: X_m = U_m * Y_m removed from the remaining stick
// Y_m, until Y falls below eps_trunc. Returned in removal order, unsorted;
// the last remaining stick is the dust.
std::vector<double> gem_sticks(RngStream& rng,
                               double eps_trunc = kDefaultTruncation);

// A Poisson-Dirichlet(1) draw up to truncation: sorted GEM sticks, with the
// remainder below eps_trunc kept as dust.
ContinuousPartition sample_gem(RngStream& rng,
                               double eps_trunc = kDefaultTruncation);

// Exact draw from the Ewens(theta = 1) law on partitions of n: the cycle
// type of a uniform random permutation, built by sequential insertion.
IntegerPartition sample_ewens(int n, RngStream& rng);

// The unique 0-based j with sum_{i<j} p_i <= u < sum_{i<=j} p_i, or nullopt
// when u falls into the dust mass.
std::optional<std::size_t> size_biased_index(const ContinuousPartition& p,
                                             double u);

}  // namespace splitmerge
