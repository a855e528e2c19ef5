#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "splitmerge/partitions.hpp"
#include "splitmerge/rng.hpp"

namespace splitmerge {

// One maximal constant piece of the labeled partition of [0, n).
struct LabeledInterval {
  double begin;
  double end;
  std::int64_t label;
};

// Joint state of the coupled continuous/discrete split-merge chains: a
// label function c on [0,n) stored as disjoint half-open intervals, a label
// d(m) per atom m in {1..n}, and the decoupling flag e. Merges relabel
// lazily through per-side union-find maps; splits and normalize_labels()
// compact the touched labels. Labels are drawn from a monotone counter, so
// fresh ones are always available.
class CoupledState {
 public:
  // The embedding: parts laid out consecutively on [0,n) scaled by n, with
  // labels 1,2,...; d(m) copies the continuous label at the left endpoint
  // m-1; e = 0. Dust, when present, occupies a final interval under its own
  // label so the intervals still tile [0,n).
  CoupledState(const ContinuousPartition& p, int n);

  int n() const { return n_; }
  bool decoupled() const { return e_; }
  std::int64_t next_label() const { return next_label_; }
  const std::vector<LabeledInterval>& intervals() const { return intervals_; }

  // Resolved label owning point x in [0, n).
  std::int64_t continuous_label_at(double x) const;
  // Resolved label of atom m in {1..n}.
  std::int64_t discrete_label_at(int m) const;

  // Sorted interval measures / n. Sums to 1 up to floating accumulation.
  ContinuousPartition project_continuous() const;
  // Sorted atom counts per label; a partition of n.
  IntegerPartition project_discrete() const;

  // Lebesgue measure of {x : c(x) != d(ceil x)}.
  double discrepancy() const;

  struct StepOps {
    bool continuous_merge = false;  // else the continuous side split
    bool discrete_merge = false;
    bool used_zeta = false;  // discrete side fell back to the no-replacement pair
    bool decoupled_after = false;
  };

  // One coupled transition driven by fresh uniforms from rng.
  StepOps step(RngStream& rng);

  // Deterministic core of the transition: xi1, xi2 in [0,n) drive both
  // sides; (zeta1, zeta2) with distinct unit cells replace them on the
  // discrete side when the xi pair lands in one atom twice.
  StepOps step_with(double xi1, double xi2, double zeta1, double zeta2);

  // Flush the lazy relabeling maps into the stored labels. Projections,
  // label queries and discrepancy are valid with or without this; scans are
  // cheaper after it.
  void normalize_labels();

 private:
  int interval_at(double x) const;
  void continuous_merge(std::int64_t from, std::int64_t into);
  void continuous_split(std::int64_t cls, double cut, std::int64_t fresh);
  void discrete_merge(std::int64_t from, std::int64_t into);
  void discrete_split(std::int64_t cls, double w, std::int64_t fresh);
  void compact_continuous();
  void compact_discrete();

  int n_ = 0;
  std::vector<LabeledInterval> intervals_;  // sorted, tiling [0, n)
  std::vector<std::int64_t> atoms_;         // atoms_[m-1] = stored label of m
  // union-find parents for merged labels; absent key = root
  mutable std::unordered_map<std::int64_t, std::int64_t> cparent_, dparent_;
  bool e_ = false;
  std::int64_t next_label_ = 1;

  std::int64_t cfind(std::int64_t l) const;
  std::int64_t dfind(std::int64_t l) const;
};

// Per-step record of one coupled trajectory. Index k runs 0..k_max; the op
// flags describe the step that produced state k (so they start at k = 1).
struct CouplingTrace {
  int n = 0;
  std::vector<double> rho;            // discrepancy at each k
  std::vector<std::uint8_t> e;        // decoupling flag at each k
  std::vector<double> l1_gap;         // |p(k) - l(k)/n|_1 at each k
  std::vector<std::uint8_t> c_merge;  // c_merge[k-1]: step k merged (else split)
  std::optional<int> tau;             // first k >= 1 with e_k = 1
};

CoupledState embed(const ContinuousPartition& p, int n);
ContinuousPartition project_continuous(const CoupledState& s);
IntegerPartition project_discrete(const CoupledState& s);
double discrepancy(const CoupledState& s);
CoupledState coupled_step(const CoupledState& s, RngStream& rng);

// k_max coupled steps from embed(p, n), recording rho, e and the l1 gap.
CouplingTrace run_coupling(const ContinuousPartition& p, int n, int k_max,
                           RngStream& rng);

}  // namespace splitmerge
