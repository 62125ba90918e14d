#pragma once

#include "hallprim/bigrational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hallprim {

/// Weakly decreasing list of positive integers. The empty partition is the
/// partition of 0.
///
/// Ordering (operator<) is the canonical order used for every serialized
/// output: by weight, then reverse lexicographic, so partitions_of(3) iterates
/// as (3), (2,1), (1,1,1).
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts the parts first; still rejects nonpositive entries.
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses "2,1,1"; "0" and "" give the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int multiplicity(int part) const;
  /// m_1 .. m_{max part}; index 0 holds m_1.
  std::vector<int> multiplicities() const;
  /// sum_i (i-1) * lambda_i.
  int n_stat() const;
  /// prod_i i^{m_i} m_i!.
  BigInt zee() const;

  /// Union of parts (the product index for power sums).
  Partition join(const Partition& other) const;

  /// "2,1,1"; the empty partition renders as "0".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

/// Dominance order: lambda >= mu iff all partial sums of lambda are >= those of mu.
/// Only meaningful for equal weights.
bool dominates(const Partition& lambda, const Partition& mu);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

using Composition = std::vector<int>;

/// All ordered k-tuples of positive integers summing to n, lexicographic.
std::vector<Composition> compositions_of(int n, int k);

/// total! / prod parts_i!; throws std::invalid_argument if the parts do not sum to total.
BigInt multinomial(int total, const std::vector<int>& parts);

/// Number of ordered tuples with multiplicities r (r[i] counts the value i+1)
/// whose last entry is l. Throws std::invalid_argument when r_l = 0.
BigInt composition_count_g(const std::vector<int>& r, int l);

}  // namespace hallprim
