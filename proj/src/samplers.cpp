#include "splitmerge/samplers.hpp"

#include <stdexcept>

namespace splitmerge {

std::vector<double> gem_sticks(RngStream& rng, double eps_trunc) {
  if (!(eps_trunc > 0.0 && eps_trunc < 1.0))
    throw std::invalid_argument("eps_trunc must lie in (0,1)");
  std::vector<double> sticks;
  double remaining = 1.0;
  // ~log(1/eps) iterations in expectation; the hard cap only guards against
  // a pathological run of U ~ 0 draws.
  for (long guard = 0; remaining >= eps_trunc && guard < 1000000; ++guard) {
    double x = rng.uniform01() * remaining;
    if (x > 0.0) sticks.push_back(x);
    remaining -= x;
  }
  return sticks;
}

ContinuousPartition sample_gem(RngStream& rng, double eps_trunc) {
  std::vector<double> sticks = gem_sticks(rng, eps_trunc);
  double dust = 1.0;
  for (double s : sticks) dust -= s;
  if (dust < 0.0) dust = 0.0;
  return ContinuousPartition(std::move(sticks), dust);
}

IntegerPartition sample_ewens(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  // Insert element i: with probability 1/i it opens a new cycle, otherwise
  // it lands after one of the i-1 already placed elements, which extends
  // the cycle containing that element.
  std::vector<int> cycles;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t slot = rng.uniform_below(static_cast<std::uint64_t>(i));
    if (slot == static_cast<std::uint64_t>(i - 1)) {
      cycles.push_back(1);
    } else {
      std::uint64_t acc = 0;
      for (int& c : cycles) {
        acc += static_cast<std::uint64_t>(c);
        if (slot < acc) {
          ++c;
          break;
        }
      }
    }
  }
  return IntegerPartition(std::move(cycles));
}

std::optional<std::size_t> size_biased_index(const ContinuousPartition& p,
                                             double u) {
  if (!(u >= 0.0 && u < 1.0))
    throw std::invalid_argument("u must lie in [0,1)");
  double acc = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    acc += p[j];
    if (u < acc) return j;
  }
  return std::nullopt;  // dust
}

}  // namespace splitmerge
