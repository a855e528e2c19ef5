#include "splitmerge/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace splitmerge {

namespace {

void check_mass(const std::vector<double>& parts, double dust) {
  if (dust < 0.0) throw std::invalid_argument("dust must be nonnegative");
  double sum = dust;
  for (double p : parts) {
    if (!(p > 0.0)) throw std::invalid_argument("parts must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kMassTolerance)
    throw std::invalid_argument("parts + dust must sum to 1");
}

}  // namespace

ContinuousPartition::ContinuousPartition(std::vector<double> parts, double dust)
    : dust_(dust) {
  std::erase(parts, 0.0);
  std::stable_sort(parts.begin(), parts.end(), std::greater<double>());
  check_mass(parts, dust);
  parts_ = std::move(parts);
}

ContinuousPartition ContinuousPartition::from_sorted(std::vector<double> parts,
                                                     double dust) {
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<double>()))
    throw std::invalid_argument("parts must be nonincreasing");
  check_mass(parts, dust);
  ContinuousPartition p;
  p.parts_ = std::move(parts);
  p.dust_ = dust;
  return p;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("parts must be nonnegative");
  std::erase(parts, 0);
  std::stable_sort(parts.begin(), parts.end(), std::greater<int>());
  n_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

CylinderSet::CylinderSet(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size())
    throw std::invalid_argument("cylinder set needs matching nonempty a, b");
  double sum_a = 0.0, sum_b = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(0.0 < a_[i] && a_[i] < b_[i] && b_[i] < 1.0))
      throw std::invalid_argument("cylinder set needs 0 < a_i < b_i < 1");
    sum_a += a_[i];
    sum_b += b_[i];
  }
  if (!(sum_b < 1.0))
    throw std::invalid_argument("cylinder set needs sum(b) < 1");
  if (!(a_.back() > 1.0 - sum_a))
    throw std::invalid_argument("cylinder set needs a_k > 1 - sum(a)");
}

PartitionIndex::PartitionIndex(int n, int cap)
    : n_(n), order_(enumerate_partitions(n, cap)) {
  for (int i = 0; i < static_cast<int>(order_.size()); ++i)
    lookup_.emplace(order_[i].parts(), i);
}

int PartitionIndex::index_of(const IntegerPartition& p) const {
  auto it = lookup_.find(p.parts());
  if (it == lookup_.end())
    throw std::invalid_argument("partition is not a partition of n = " +
                                std::to_string(n_));
  return it->second;
}

std::vector<double> sort_descending(std::vector<double> values) {
  std::erase(values, 0.0);
  std::stable_sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

std::vector<int> sort_descending(std::vector<int> values) {
  std::erase(values, 0);
  std::stable_sort(values.begin(), values.end(), std::greater<int>());
  return values;
}

PartitionType type_counts(const IntegerPartition& l) {
  PartitionType t;
  for (int p : l.parts()) ++t.counts[p];
  t.total_parts = l.num_parts();
  return t;
}

IntegerPartition conjugate(const IntegerPartition& lambda) {
  std::vector<int> out;
  if (!lambda.empty()) {
    out.reserve(lambda[0]);
    for (int j = 1; j <= lambda[0]; ++j) {
      int count = 0;
      for (int p : lambda.parts())
        if (p >= j) ++count;
      out.push_back(count);
    }
  }
  return IntegerPartition(std::move(out));
}

int diagonal_length(const IntegerPartition& lambda) {
  int d = 0;
  for (int i = 0; i < lambda.num_parts(); ++i)
    if (lambda[i] >= i + 1) d = i + 1;
  return d;
}

namespace {

void check_in_diagram(const IntegerPartition& lambda, Cell cell) {
  if (cell.row < 1 || cell.col < 1 || cell.row > lambda.num_parts() ||
      cell.col > lambda[cell.row - 1])
    throw std::invalid_argument("cell lies outside the Young diagram");
}

}  // namespace

std::vector<Cell> rim_segment(const IntegerPartition& lambda, Cell cell) {
  check_in_diagram(lambda, cell);
  const IntegerPartition lc = conjugate(lambda);
  const int last_row = lc[cell.col - 1];
  std::vector<Cell> out;
  for (int u = cell.row; u <= last_row; ++u) {
    int next = u < lambda.num_parts() ? lambda[u] : 0;
    int lo = std::max(cell.col, next);
    for (int v = lo; v <= lambda[u - 1]; ++v) out.push_back({u, v});
  }
  return out;
}

IntegerPartition strip_rim(const IntegerPartition& lambda, Cell cell) {
  check_in_diagram(lambda, cell);
  const IntegerPartition lc = conjugate(lambda);
  const int last_row = lc[cell.col - 1];
  std::vector<int> rows = lambda.parts();
  // Rows row..last_row-1 shrink to the row below minus one; the last
  // touched row keeps only the cells left of the straddling column.
  for (int u = cell.row; u < last_row; ++u) rows[u - 1] = lambda[u] - 1;
  rows[last_row - 1] = cell.col - 1;
  return IntegerPartition(std::move(rows));
}

IntegerPartition remove_part(const IntegerPartition& gamma, int r) {
  if (r < 1 || r > gamma.num_parts())
    throw std::invalid_argument("part index out of range");
  std::vector<int> rows = gamma.parts();
  rows.erase(rows.begin() + (r - 1));
  return IntegerPartition(std::move(rows));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntegerPartition(prefix));
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    emit_partitions(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> enumerate_partitions(int n, int cap) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > cap)
    throw CapacityError("partition enumeration requested for n = " +
                        std::to_string(n) + " above the exact-mode cap " +
                        std::to_string(cap));
  std::vector<IntegerPartition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

bool cylinder_contains(const CylinderSet& c, const ContinuousPartition& x) {
  for (int i = 0; i < c.k(); ++i) {
    double xi = i < static_cast<int>(x.size()) ? x[i] : 0.0;
    if (!(c.a()[i] < xi && xi < c.b()[i])) return false;
  }
  return true;
}

double cylinder_delta(const CylinderSet& c) {
  double sum_a = std::accumulate(c.a().begin(), c.a().end(), 0.0);
  double sum_b = std::accumulate(c.b().begin(), c.b().end(), 0.0);
  return std::min(1.0 - sum_b, c.a().back() - (1.0 - sum_a));
}

bool scaled_cylinder_contains(const CylinderSet& c, const IntegerPartition& gamma,
                              int n) {
  if (gamma.n() != n)
    throw std::invalid_argument("gamma must be a partition of n");
  for (int i = 0; i < c.k(); ++i) {
    double gi = i < gamma.num_parts() ? gamma[i] : 0.0;
    if (!(n * c.a()[i] < gi && gi < n * c.b()[i])) return false;
  }
  return true;
}

std::string to_string(const IntegerPartition& p, char sep) {
  std::ostringstream os;
  for (int i = 0; i < p.num_parts(); ++i) {
    if (i) os << sep;
    os << p[i];
  }
  return os.str();
}

}  // namespace splitmerge
