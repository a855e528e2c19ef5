#pragma once

#include <cstdint>
#include <vector>

#include "splitmerge/chains.hpp"
#include "splitmerge/partitions.hpp"
#include "splitmerge/rational.hpp"

namespace splitmerge {

// Exact irreducible character values chi(lambda, gamma) of the symmetric
// group S_n, rows and columns in canonical partition order. Values are
// integers; they are stored as rationals so the table plugs directly into
// the exact linear algebra.
struct CharacterTable {
  int n = 0;
  PartitionIndex index;
  RationalMatrix chi;
};

// Eigenvalues theta_lambda of the transposition kernel, canonical order.
struct Spectrum {
  int n = 0;
  PartitionIndex index;
  RationalVector theta;
};

// Everything needed for exact spectral computations at one n.
struct SpectralEngine {
  CharacterTable table;
  Spectrum spectrum;
  ExactDistribution stationary;

  int n() const { return table.n; }
  const PartitionIndex& index() const { return table.index; }
};

// chi_lambda(gamma) by the Murnaghan-Nakayama recursion, stripping rim
// segments of gamma's largest part first. Requires |lambda| = |gamma|.
Integer character(const IntegerPartition& lambda, const IntegerPartition& gamma);

// Full table via the same recursion, memoized, parallel over rows.
CharacterTable character_table(int n, int cap = kDefaultExactCap);

// theta_lambda = (sum lambda_i^2 - sum lambda'_j^2) / (n(n-1)). n >= 2.
Rational eigenvalue(const IntegerPartition& lambda);

Spectrum make_spectrum(int n, int cap = kDefaultExactCap);

SpectralEngine make_spectral_engine(int n, int cap = kDefaultExactCap);

// <f,g> = sum_gamma f(gamma) g(gamma) pi(gamma), exact.
Rational inner_product(const RationalVector& f, const RationalVector& g,
                       const ExactDistribution& pi);

// max over lambda, gamma of |(K chi_lambda)(gamma) - theta_lambda
// chi_lambda(gamma)|; exactly zero when table and kernel agree.
Rational verify_eigenrelation(int n, int cap = kDefaultExactCap);

// P(X(k) in A) for the chain started from mu0, via the character expansion
// sum_lambda theta^k <g0,chi><1_A,chi>. `event` masks the canonical order.
Rational spectral_event_probability(const SpectralEngine& engine,
                                    const ExactDistribution& mu0,
                                    const std::vector<std::uint8_t>& event,
                                    int k);

// Membership mask of the scaled cylinder nC over the canonical order.
std::vector<std::uint8_t> cylinder_event(const SpectralEngine& engine,
                                         const CylinderSet& c);

// Delta_C(k) = P(X(k) in nC) - pi(nC), exact.
Rational delta_C(const SpectralEngine& engine, const ExactDistribution& mu0,
                 const CylinderSet& c, int k);

// Return probability of the one-part state after 2k steps:
// (1/n) sum_{i=1..n} ((2i-n-1)/(n-1))^{2k}, the hook-eigenvalue sum.
Rational return_probability(int n, long k);

}  // namespace splitmerge
