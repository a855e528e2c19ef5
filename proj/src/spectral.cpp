#include "splitmerge/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "splitmerge/parallel.hpp"

namespace splitmerge {

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
using Memo = std::map<MemoKey, Integer>;

// Rim segments that can be stripped have the same length as the straddling
// cell's hook; hooks are strictly decreasing along each row, so every row
// holds at most one candidate cell, found by binary search.
Integer mn_recurse(const std::vector<int>& lam, const std::vector<int>& gam,
                   std::size_t gam_from, Memo& memo) {
  if (lam.empty()) return gam_from >= gam.size() ? 1 : 0;
  MemoKey key(lam, std::vector<int>(gam.begin() + gam_from, gam.end()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int target = gam[gam_from];
  std::vector<int> conj(lam[0], 0);
  for (int j = 0; j < lam[0]; ++j)
    for (int p : lam)
      if (p >= j + 1) ++conj[j];

  Integer total = 0;
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
    // hook(i,j) = lam_i - j + conj_j - i + 1, strictly decreasing in j
    int lo = 1, hi = lam[i - 1], found = 0;
    while (lo <= hi) {
      int j = (lo + hi) / 2;
      int hook = lam[i - 1] - j + conj[j - 1] - i + 1;
      if (hook == target) {
        found = j;
        break;
      }
      if (hook > target)
        lo = j + 1;
      else
        hi = j - 1;
    }
    if (found == 0) continue;
    const int j = found;
    const int last_row = conj[j - 1];
    std::vector<int> stripped;
    stripped.reserve(lam.size());
    for (int u = 1; u <= static_cast<int>(lam.size()); ++u) {
      int v;
      if (u < i || u > last_row)
        v = lam[u - 1];
      else if (u < last_row)
        v = lam[u] - 1;
      else
        v = j - 1;
      if (v > 0) stripped.push_back(v);
    }
    Integer sub = mn_recurse(stripped, gam, gam_from + 1, memo);
    if ((last_row - i) % 2 != 0) sub = -sub;
    total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer character(const IntegerPartition& lambda, const IntegerPartition& gamma) {
  if (lambda.n() != gamma.n())
    throw std::invalid_argument("character needs |lambda| = |gamma|");
  Memo memo;
  return mn_recurse(lambda.parts(), gamma.parts(), 0, memo);
}

CharacterTable character_table(int n, int cap) {
  PartitionIndex index(n, cap);
  const int size = index.size();
  RationalMatrix chi(size, size);
  parallel_chunks(size, [&](int begin, int end) {
    Memo memo;  // per-worker; values are deterministic
    for (int row = begin; row < end; ++row)
      for (int col = 0; col < size; ++col)
        chi(row, col) = Rational(
            mn_recurse(index.at(row).parts(), index.at(col).parts(), 0, memo));
  });
  return CharacterTable{n, std::move(index), std::move(chi)};
}

Rational eigenvalue(const IntegerPartition& lambda) {
  const int n = lambda.n();
  if (n < 2) throw std::invalid_argument("eigenvalue needs n >= 2");
  long sq = 0;
  for (int p : lambda.parts()) sq += static_cast<long>(p) * p;
  long sq_conj = 0;
  for (int p : conjugate(lambda).parts()) sq_conj += static_cast<long>(p) * p;
  return Rational(sq - sq_conj, static_cast<long>(n) * (n - 1));
}

Spectrum make_spectrum(int n, int cap) {
  PartitionIndex index(n, cap);
  RationalVector theta(index.size());
  for (int i = 0; i < index.size(); ++i) theta[i] = eigenvalue(index.at(i));
  return Spectrum{n, std::move(index), std::move(theta)};
}

SpectralEngine make_spectral_engine(int n, int cap) {
  return SpectralEngine{character_table(n, cap), make_spectrum(n, cap),
                        ewens_pmf(n, cap)};
}

Rational inner_product(const RationalVector& f, const RationalVector& g,
                       const ExactDistribution& pi) {
  if (f.size() != g.size() || f.size() != pi.weights.size())
    throw std::invalid_argument("inner_product needs matching index sets");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    acc += f[i] * g[i] * pi.weights[i];
  return acc;
}

Rational verify_eigenrelation(int n, int cap) {
  const ExactKernel kernel = exact_kernel(n, cap);
  const CharacterTable table = character_table(n, cap);
  Rational worst = 0;
  for (int row = 0; row < table.index.size(); ++row) {
    const Rational theta = eigenvalue(table.index.at(row));
    RationalVector chi = table.chi.row(row).transpose();
    RationalVector image = kernel.entries * chi;
    for (Eigen::Index i = 0; i < image.size(); ++i) {
      Rational gap = rational_abs(image[i] - theta * chi[i]);
      if (gap > worst) worst = gap;
    }
  }
  return worst;
}

Rational spectral_event_probability(const SpectralEngine& engine,
                                    const ExactDistribution& mu0,
                                    const std::vector<std::uint8_t>& event,
                                    int k) {
  const int size = engine.index().size();
  if (mu0.n != engine.n() || static_cast<int>(event.size()) != size)
    throw std::invalid_argument("event probability: index sets disagree");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Rational total = 0;
  for (int lam = 0; lam < size; ++lam) {
    // <g0, chi> with g0 = dmu0/dpi collapses to sum mu0(gamma) chi(gamma).
    Rational a = 0, b = 0;
    for (int g = 0; g < size; ++g) {
      if (!(mu0.weights[g] == 0)) a += mu0.weights[g] * engine.table.chi(lam, g);
      if (event[g]) b += engine.table.chi(lam, g) * engine.stationary.weights[g];
    }
    if (a == 0 || b == 0) continue;
    total += rational_pow(engine.spectrum.theta[lam],
                          static_cast<unsigned long>(k)) *
             a * b;
  }
  return total;
}

std::vector<std::uint8_t> cylinder_event(const SpectralEngine& engine,
                                         const CylinderSet& c) {
  const int size = engine.index().size();
  std::vector<std::uint8_t> mask(size, 0);
  for (int i = 0; i < size; ++i)
    mask[i] = scaled_cylinder_contains(c, engine.index().at(i), engine.n());
  return mask;
}

Rational delta_C(const SpectralEngine& engine, const ExactDistribution& mu0,
                 const CylinderSet& c, int k) {
  const std::vector<std::uint8_t> mask = cylinder_event(engine, c);
  Rational pi_mass = 0;
  for (int i = 0; i < engine.index().size(); ++i)
    if (mask[i]) pi_mass += engine.stationary.weights[i];
  return spectral_event_probability(engine, mu0, mask, k) - pi_mass;
}

Rational return_probability(int n, long k) {
  if (n < 2) throw std::invalid_argument("return_probability needs n >= 2");
  if (k < 1) throw std::invalid_argument("return_probability needs k >= 1");
  Rational total = 0;
  for (int i = 1; i <= n; ++i) {
    Rational theta(2L * i - n - 1, n - 1);
    total += rational_pow(theta, static_cast<unsigned long>(2 * k));
  }
  return total / n;
}

}  // namespace splitmerge
