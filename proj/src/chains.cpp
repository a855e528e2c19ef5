#include "splitmerge/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitmerge {

ContinuousPartition ccf_step(const ContinuousPartition& p, RngStream& rng) {
  auto pick = [&]() {
    // Dust carries no part structure; a pick landing there is redrawn.
    // The redraw probability is below the truncation threshold per draw.
    for (;;) {
      if (auto j = size_biased_index(p, rng.uniform01())) return *j;
    }
  };
  std::size_t j1 = pick();
  std::size_t j2 = pick();
  std::vector<double> parts = p.parts();
  if (j1 == j2) {
    double mass = parts[j1];
    double u = rng.uniform01();
    // Computing the larger piece first makes small = mass - big exact
    // (Sterbenz), so a split conserves the total mass to the last bit.
    double big = std::max(u, 1.0 - u) * mass;
    double small = mass - big;
    parts.erase(parts.begin() + j1);
    auto it = std::upper_bound(parts.begin(), parts.end(), big,
                               std::greater<double>());
    it = parts.insert(it, big);
    if (small > 0.0) {
      auto it2 = std::upper_bound(it + 1, parts.end(), small,
                                  std::greater<double>());
      parts.insert(it2, small);
    }
  } else {
    double merged = parts[j1] + parts[j2];
    parts.erase(parts.begin() + std::max(j1, j2));
    parts.erase(parts.begin() + std::min(j1, j2));
    auto it = std::upper_bound(parts.begin(), parts.end(), merged,
                               std::greater<double>());
    parts.insert(it, merged);
  }
  return ContinuousPartition::from_sorted(std::move(parts), p.dust());
}

IntegerPartition dcf_step(const IntegerPartition& l, RngStream& rng) {
  const int n = l.n();
  if (n < 2) throw std::invalid_argument("dcf_step needs n >= 2");
  // Lay the parts out consecutively on {0,...,n-1} and sample two distinct
  // atoms; only the induced part indices matter.
  auto locate = [&](std::uint64_t atom) {
    std::uint64_t acc = 0;
    int i = 0;
    for (;; ++i) {
      acc += static_cast<std::uint64_t>(l[i]);
      if (atom < acc) return i;
    }
  };
  std::uint64_t x = rng.uniform_below(static_cast<std::uint64_t>(n));
  std::uint64_t y = rng.uniform_below(static_cast<std::uint64_t>(n - 1));
  if (y >= x) ++y;
  int i = locate(x), j = locate(y);
  std::vector<int> parts = l.parts();
  if (i == j) {
    int m = parts[i];
    int left = 1 + static_cast<int>(rng.uniform_below(
                       static_cast<std::uint64_t>(m - 1)));
    parts.erase(parts.begin() + i);
    parts.push_back(left);
    parts.push_back(m - left);
  } else {
    int merged = parts[i] + parts[j];
    parts.erase(parts.begin() + std::max(i, j));
    parts.erase(parts.begin() + std::min(i, j));
    parts.push_back(merged);
  }
  return IntegerPartition(std::move(parts));
}

ExactKernel exact_kernel(int n, int cap) {
  if (n < 2) throw std::invalid_argument("exact_kernel needs n >= 2");
  PartitionIndex index(n, cap);
  const int size = index.size();
  RationalMatrix K(size, size);
  K.setZero();
  const Rational denom(1, static_cast<long>(n) * (n - 1));
  for (int row = 0; row < size; ++row) {
    const IntegerPartition& l = index.at(row);
    const PartitionType t = type_counts(l);
    auto add = [&](std::vector<int> target, const Rational& w) {
      K(row, index.index_of(IntegerPartition(std::move(target)))) += w;
    };
    // merges of two distinct part sizes j < k
    for (auto a = t.counts.begin(); a != t.counts.end(); ++a) {
      for (auto b = std::next(a); b != t.counts.end(); ++b) {
        std::vector<int> target = l.parts();
        target.erase(std::find(target.begin(), target.end(), a->first));
        target.erase(std::find(target.begin(), target.end(), b->first));
        target.push_back(a->first + b->first);
        add(std::move(target),
            Rational(2L * a->first * b->first * a->second * b->second) * denom);
      }
      // merges of two parts of the same size
      if (a->second >= 2) {
        std::vector<int> target = l.parts();
        auto it = std::find(target.begin(), target.end(), a->first);
        target.erase(it);
        target.erase(std::find(target.begin(), target.end(), a->first));
        target.push_back(2 * a->first);
        add(std::move(target),
            Rational(static_cast<long>(a->first) * a->first * a->second *
                     (a->second - 1)) *
                denom);
      }
    }
    // splits of a part of size m into (j, m-j)
    for (const auto& [m, count] : t.counts) {
      if (m < 2) continue;
      for (int j = 1; 2 * j <= m; ++j) {
        std::vector<int> target = l.parts();
        target.erase(std::find(target.begin(), target.end(), m));
        target.push_back(j);
        target.push_back(m - j);
        long ways = (2 * j == m) ? m : 2L * m;  // equal halves arise once
        add(std::move(target), Rational(ways * count) * denom);
      }
    }
  }
  return ExactKernel{n, std::move(index), std::move(K)};
}

ExactDistribution ewens_pmf(int n, int cap) {
  PartitionIndex index(n, cap);
  RationalVector w(index.size());
  for (int i = 0; i < index.size(); ++i) {
    Integer denom = 1;
    for (const auto& [k, m] : type_counts(index.at(i)).counts) {
      Integer pw, fact;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k),
                    static_cast<unsigned long>(m));
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
      denom *= pw * fact;
    }
    w[i] = Rational(1) / Rational(denom);
  }
  return ExactDistribution{n, std::move(w)};
}

ExactDistribution point_mass(const IntegerPartition& l, int cap) {
  PartitionIndex index(l.n(), cap);
  RationalVector w(index.size());
  w.setZero();
  w[index.index_of(l)] = 1;
  return ExactDistribution{l.n(), std::move(w)};
}

ExactDistribution k_step_distribution(const ExactDistribution& mu0,
                                      const ExactKernel& kernel, int k) {
  if (mu0.n != kernel.n)
    throw std::invalid_argument("distribution and kernel disagree on n");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  RationalVector w = mu0.weights;
  for (int i = 0; i < k; ++i) w = kernel.entries.transpose() * w;
  return ExactDistribution{mu0.n, std::move(w)};
}

Rational check_detailed_balance(const ExactKernel& kernel) {
  const ExactDistribution pi = ewens_pmf(kernel.n);
  Rational worst = 0;
  const int size = kernel.index.size();
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      Rational gap = rational_abs(kernel.entries(i, j) * pi.weights[i] -
                                  kernel.entries(j, i) * pi.weights[j]);
      if (gap > worst) worst = gap;
    }
  return worst;
}

}  // namespace splitmerge
