#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitmerge {

// Thrown when an exact-mode request exceeds the configured size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest n for which full enumerations of integer partitions (and the
// matrices indexed by them) are built by default; p(30) = 5604.
inline constexpr int kDefaultExactCap = 30;

// Additive tolerance on the unit-mass invariant of ContinuousPartition.
inline constexpr double kMassTolerance = 1e-12;

// Default truncation threshold for samplers producing continuous partitions.
inline constexpr double kDefaultTruncation = 1e-9;

// Nonincreasing positive reals summing to 1 together with "dust": the mass
// left unrepresented by a truncating sampler. Immutable after construction.
class ContinuousPartition {
 public:
  // Sorts the given masses (stable, zeros dropped) and validates that
  // masses + dust = 1 within kMassTolerance.
  explicit ContinuousPartition(std::vector<double> parts, double dust = 0.0);

  // Same validation but requires `parts` to be already nonincreasing;
  // avoids the sort on hot paths that maintain order themselves.
  static ContinuousPartition from_sorted(std::vector<double> parts,
                                         double dust = 0.0);

  const std::vector<double>& parts() const { return parts_; }
  double dust() const { return dust_; }
  std::size_t size() const { return parts_.size(); }
  double operator[](std::size_t i) const { return parts_[i]; }

 private:
  ContinuousPartition() = default;
  std::vector<double> parts_;
  double dust_ = 0.0;
};

// Nonincreasing positive integers; an element of the partitions of n = sum.
class IntegerPartition {
 public:
  IntegerPartition() = default;  // the empty partition of 0
  // Sorts descending and drops zeros; negative entries are rejected.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const IntegerPartition& a,
                         const IntegerPartition& b) = default;
  // Lexicographic on the part vectors; within a fixed n, "greater" is
  // exactly the canonical reverse-lexicographic enumeration order.
  friend std::strong_ordering operator<=>(const IntegerPartition& a,
                                          const IntegerPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Multiplicities N(k) = #{i : part_i = k} of an integer partition.
struct PartitionType {
  std::map<int, int> counts;
  int total_parts = 0;
};

// One cell (row, col) of a Young diagram, 1-based.
struct Cell {
  int row = 1;
  int col = 1;
};

// The set of continuous partitions whose i-th part lies in (a_i, b_i) for
// i = 1..k, with the side conditions sum(b) < 1 and a_k > 1 - sum(a) that
// force the tail mass of any member below its k-th part.
class CylinderSet {
 public:
  CylinderSet(std::vector<double> a, std::vector<double> b);

  int k() const { return static_cast<int>(a_.size()); }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }

 private:
  std::vector<double> a_, b_;
};

// Fixed enumeration of the partitions of n with a reverse lookup.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n, int cap = kDefaultExactCap);

  int n() const { return n_; }
  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<IntegerPartition>& order() const { return order_; }
  const IntegerPartition& at(int i) const { return order_[i]; }
  int index_of(const IntegerPartition& p) const;

 private:
  int n_;
  std::vector<IntegerPartition> order_;
  std::map<std::vector<int>, int> lookup_;
};

// Nonincreasing rearrangement with zeros dropped; stable for ties.
std::vector<double> sort_descending(std::vector<double> values);
std::vector<int> sort_descending(std::vector<int> values);

PartitionType type_counts(const IntegerPartition& l);

// Transpose of the Young diagram.
IntegerPartition conjugate(const IntegerPartition& lambda);

// max{i : lambda_i >= i}, the length of the main diagonal.
int diagonal_length(const IntegerPartition& lambda);

// The rim segment straddled by `cell`: {(u,v) : i <= u <= lambda'_j,
// max(j, lambda_{u+1}) <= v <= lambda_u}. Throws std::invalid_argument if
// the cell is outside the diagram.
std::vector<Cell> rim_segment(const IntegerPartition& lambda, Cell cell);

// Partition whose diagram is lambda's minus the rim segment of `cell`.
IntegerPartition strip_rim(const IntegerPartition& lambda, Cell cell);

// Removes the r-th part (1-based).
IntegerPartition remove_part(const IntegerPartition& gamma, int r);

// All partitions of n in reverse-lexicographic order, (n) first.
// Throws CapacityError for n above `cap`.
std::vector<IntegerPartition> enumerate_partitions(int n,
                                                   int cap = kDefaultExactCap);

// Strict membership x_i in (a_i, b_i) for i = 1..k; parts beyond the stored
// ones count as zero.
bool cylinder_contains(const CylinderSet& c, const ContinuousPartition& x);

// min(1 - sum(b), a_k - (1 - sum(a))), positive for every valid set.
double cylinder_delta(const CylinderSet& c);

// Membership of gamma/n in the cylinder, i.e. gamma_i in (n a_i, n b_i).
bool scaled_cylinder_contains(const CylinderSet& c, const IntegerPartition& gamma,
                              int n);

std::string to_string(const IntegerPartition& p, char sep = ' ');

}  // namespace splitmerge
