#include "splitmerge/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splitmerge {

namespace {

constexpr std::size_t kCompactThreshold = 64;

std::int64_t resolve(std::unordered_map<std::int64_t, std::int64_t>& parent,
                     std::int64_t label) {
  auto it = parent.find(label);
  if (it == parent.end()) return label;
  std::int64_t root = resolve(parent, it->second);
  it->second = root;
  return root;
}

}  // namespace

std::int64_t CoupledState::cfind(std::int64_t l) const {
  return cparent_.empty() ? l : resolve(cparent_, l);
}

std::int64_t CoupledState::dfind(std::int64_t l) const {
  return dparent_.empty() ? l : resolve(dparent_, l);
}

CoupledState::CoupledState(const ContinuousPartition& p, int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("embed needs n >= 1");
  const double scale = static_cast<double>(n);
  double cursor = 0.0;
  std::int64_t label = 1;
  for (double part : p.parts()) {
    double end = std::min(cursor + scale * part, scale);
    if (end > cursor) intervals_.push_back({cursor, end, label});
    cursor = end;
    ++label;
  }
  if (cursor < scale) {
    // dust (or the residue of rounding) under its own label
    intervals_.push_back({cursor, scale, label});
    ++label;
  } else if (!intervals_.empty()) {
    intervals_.back().end = scale;
  }
  next_label_ = label;
  atoms_.resize(n);
  for (int m = 0; m < n; ++m)
    atoms_[m] = intervals_[interval_at(static_cast<double>(m))].label;
}

int CoupledState::interval_at(double x) const {
  // rightmost interval with begin <= x; tiling guarantees x < its end
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const LabeledInterval& iv) { return v < iv.begin; });
  return static_cast<int>(it - intervals_.begin()) - 1;
}

std::int64_t CoupledState::continuous_label_at(double x) const {
  if (!(x >= 0.0 && x < n_))
    throw std::invalid_argument("point outside [0, n)");
  return cfind(intervals_[interval_at(x)].label);
}

std::int64_t CoupledState::discrete_label_at(int m) const {
  if (m < 1 || m > n_) throw std::invalid_argument("atom outside {1..n}");
  return dfind(atoms_[m - 1]);
}

ContinuousPartition CoupledState::project_continuous() const {
  // accumulate per resolved label, slots in first-encounter order
  std::unordered_map<std::int64_t, std::size_t> slot;
  std::vector<double> mass;
  for (const LabeledInterval& iv : intervals_) {
    std::int64_t root = cfind(iv.label);
    auto [it, fresh] = slot.emplace(root, mass.size());
    if (fresh) mass.push_back(0.0);
    mass[it->second] += iv.end - iv.begin;
  }
  for (double& m : mass) m /= static_cast<double>(n_);
  return ContinuousPartition(std::move(mass), 0.0);
}

IntegerPartition CoupledState::project_discrete() const {
  std::unordered_map<std::int64_t, std::size_t> slot;
  std::vector<int> count;
  for (std::int64_t label : atoms_) {
    std::int64_t root = dfind(label);
    auto [it, fresh] = slot.emplace(root, count.size());
    if (fresh) count.push_back(0);
    ++count[it->second];
  }
  return IntegerPartition(std::move(count));
}

double CoupledState::discrepancy() const {
  double rho = 0.0;
  for (const LabeledInterval& iv : intervals_) {
    std::int64_t root = cfind(iv.label);
    int m0 = static_cast<int>(std::floor(iv.begin));
    int m1 = static_cast<int>(std::ceil(iv.end));
    if (m1 > n_) m1 = n_;
    for (int m = m0; m < m1; ++m) {
      double lo = std::max(iv.begin, static_cast<double>(m));
      double hi = std::min(iv.end, static_cast<double>(m + 1));
      if (hi <= lo) continue;
      if (root != dfind(atoms_[m])) rho += hi - lo;
    }
  }
  return rho;
}

void CoupledState::compact_continuous() {
  if (cparent_.empty()) return;
  for (LabeledInterval& iv : intervals_) iv.label = cfind(iv.label);
  cparent_.clear();
}

void CoupledState::compact_discrete() {
  if (dparent_.empty()) return;
  for (std::int64_t& l : atoms_) l = dfind(l);
  dparent_.clear();
}

void CoupledState::normalize_labels() {
  compact_continuous();
  compact_discrete();
}

void CoupledState::continuous_merge(std::int64_t from, std::int64_t into) {
  cparent_[from] = into;
  if (cparent_.size() > kCompactThreshold) compact_continuous();
}

void CoupledState::discrete_merge(std::int64_t from, std::int64_t into) {
  dparent_[from] = into;
  if (dparent_.size() > kCompactThreshold) compact_discrete();
}

void CoupledState::continuous_split(std::int64_t cls, double cut,
                                    std::int64_t fresh) {
  // Points of the class strictly beyond the cut move to the fresh label;
  // ties at stored boundaries follow the half-open convention, so the
  // interval starting exactly at `cut` goes right whole.
  std::vector<LabeledInterval> next;
  next.reserve(intervals_.size() + 1);
  for (const LabeledInterval& iv : intervals_) {
    std::int64_t root = cfind(iv.label);
    if (root != cls) {
      next.push_back({iv.begin, iv.end, root});
      continue;
    }
    if (iv.end <= cut) {
      next.push_back({iv.begin, iv.end, cls});
    } else if (iv.begin >= cut) {
      next.push_back({iv.begin, iv.end, fresh});
    } else {
      next.push_back({iv.begin, cut, cls});
      next.push_back({cut, iv.end, fresh});
    }
  }
  intervals_ = std::move(next);
  cparent_.clear();  // every stored label was just resolved
}

void CoupledState::discrete_split(std::int64_t cls, double w,
                                  std::int64_t fresh) {
  // The class splits around atom b = ceil(w): atoms beyond b go to the
  // fresh label, and b itself joins them when w lies left of
  // floor(w) + (#class atoms <= w) / (class size - 1), which reproduces the
  // uniform split law of the discrete chain.
  const int b_index = static_cast<int>(std::floor(w));  // 0-based index of b
  int class_size = 0, below = 0;
  for (int m = 0; m < n_; ++m) {
    if (dfind(atoms_[m]) != cls) continue;
    ++class_size;
    if (m < b_index) ++below;
  }
  const bool boundary_right =
      w < static_cast<double>(b_index) +
              static_cast<double>(below) / static_cast<double>(class_size - 1);
  for (int m = 0; m < n_; ++m) {
    if (dfind(atoms_[m]) != cls) continue;
    if (m > b_index || (m == b_index && boundary_right))
      atoms_[m] = fresh;
    else
      atoms_[m] = cls;
  }
}

CoupledState::StepOps CoupledState::step(RngStream& rng) {
  const double scale = static_cast<double>(n_);
  double xi1 = rng.uniform01() * scale;
  double xi2 = rng.uniform01() * scale;
  // (zeta1, zeta2): uniform on the square minus its diagonal unit cells,
  // by rejection (< 2 draws in expectation)
  double zeta1, zeta2;
  do {
    zeta1 = rng.uniform01() * scale;
    zeta2 = rng.uniform01() * scale;
  } while (static_cast<int>(zeta1) == static_cast<int>(zeta2));
  return step_with(xi1, xi2, zeta1, zeta2);
}

CoupledState::StepOps CoupledState::step_with(double xi1, double xi2,
                                              double zeta1, double zeta2) {
  if (n_ < 2) throw std::invalid_argument("coupled step needs n >= 2");
  StepOps ops;

  const std::int64_t c1 = continuous_label_at(xi1);
  const std::int64_t c2 = continuous_label_at(xi2);
  const int a1 = static_cast<int>(xi1), a2 = static_cast<int>(xi2);
  const std::int64_t d1 = dfind(atoms_[a1]), d2 = dfind(atoms_[a2]);

  // decoupling check against the state before the transition
  const bool same_atom = (a1 == a2);
  const bool ebar = e_ || same_atom || c1 != d1 || c2 != d2;

  // at most one fresh label per step, shared by both sides when both split
  std::int64_t fresh = 0;
  auto fresh_label = [&]() {
    if (fresh == 0) fresh = next_label_++;
    return fresh;
  };

  if (c1 != c2) {
    ops.continuous_merge = true;
    continuous_merge(c2, c1);
  } else {
    continuous_split(c1, xi1, fresh_label());
  }

  double w1 = xi1;
  int b1 = a1, b2 = a2;
  if (same_atom) {
    ops.used_zeta = true;
    w1 = zeta1;
    b1 = static_cast<int>(zeta1);
    b2 = static_cast<int>(zeta2);
  }
  const std::int64_t e1 = dfind(atoms_[b1]), e2 = dfind(atoms_[b2]);
  if (e1 != e2) {
    ops.discrete_merge = true;
    discrete_merge(e2, e1);
  } else {
    discrete_split(e1, w1, fresh_label());
  }

  e_ = ebar;
  ops.decoupled_after = e_;
  return ops;
}

CoupledState embed(const ContinuousPartition& p, int n) {
  return CoupledState(p, n);
}

ContinuousPartition project_continuous(const CoupledState& s) {
  return s.project_continuous();
}

IntegerPartition project_discrete(const CoupledState& s) {
  return s.project_discrete();
}

double discrepancy(const CoupledState& s) { return s.discrepancy(); }

CoupledState coupled_step(const CoupledState& s, RngStream& rng) {
  CoupledState next = s;
  next.step(rng);
  return next;
}

namespace {

double l1_gap(const ContinuousPartition& p, const IntegerPartition& l, int n) {
  const std::size_t len = std::max(p.size(), static_cast<std::size_t>(l.num_parts()));
  double gap = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    double a = i < p.size() ? p[i] : 0.0;
    double b = i < static_cast<std::size_t>(l.num_parts())
                   ? static_cast<double>(l[i]) / n
                   : 0.0;
    gap += std::abs(a - b);
  }
  return gap;
}

}  // namespace

CouplingTrace run_coupling(const ContinuousPartition& p, int n, int k_max,
                           RngStream& rng) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  CoupledState state(p, n);
  CouplingTrace trace;
  trace.n = n;
  trace.rho.reserve(k_max + 1);
  trace.e.reserve(k_max + 1);
  trace.l1_gap.reserve(k_max + 1);
  trace.c_merge.reserve(k_max);
  auto record = [&]() {
    trace.rho.push_back(state.discrepancy());
    trace.e.push_back(state.decoupled() ? 1 : 0);
    trace.l1_gap.push_back(
        l1_gap(state.project_continuous(), state.project_discrete(), n));
  };
  record();
  for (int k = 1; k <= k_max; ++k) {
    CoupledState::StepOps ops = state.step(rng);
    state.normalize_labels();
    trace.c_merge.push_back(ops.continuous_merge ? 1 : 0);
    record();
    if (!trace.tau && ops.decoupled_after) trace.tau = k;
  }
  return trace;
}

}  // namespace splitmerge
