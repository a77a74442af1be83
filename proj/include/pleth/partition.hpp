#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pleth/rational.hpp"

namespace pleth {

/// Integer partition, parts in weakly decreasing order, no zero parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts and drops zeros first.
  static Partition from_unsorted(std::vector<int> parts);
  /// "[3,1,1]", "3,1,1", "311" (single digits) or "[]".
  static Partition parse(std::string_view s);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based); 0 beyond the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  /// Cells (i, j), 0-based row and column.
  std::vector<std::pair<int, int>> cells() const;
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && j < (*this)[i]; }

  /// Arm and leg measured in this partition; may be negative for cells outside it.
  int arm(int i, int j) const { return (*this)[i] - j - 1; }
  int leg(int i, int j) const;
  int hook(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }
  std::vector<int> hooks() const;

  /// n(lambda) = sum (i-1) lambda_i.
  int n() const;
  /// Multiplicity of each part size: m[k] = number of parts equal to k.
  std::vector<int> multiplicities() const;
  /// z_lambda = prod k^{m_k} m_k!.
  Rational z() const;
  /// (-1)^{|lambda| - l(lambda)}.
  int sign() const { return ((size_ - length()) % 2) ? -1 : 1; }

  bool dominated_by(const Partition& o) const;

  /// Union of parts.
  Partition join(const Partition& o) const;
  /// All parts multiplied by k.
  Partition scaled(int k) const;
  /// Removes one occurrence of part k; throws if absent.
  Partition remove_part(int k) const;

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordering used for maps: by size, then reverse lexicographic ([2] before [1,1]).
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// Partitions of n in reverse lexicographic order.
const std::vector<Partition>& partitions(int n);
/// Partitions of 0..n.
std::vector<Partition> partitions_up_to(int n);
/// Number of partitions of n.
long partition_count(int n);

// ---- cores and Maya diagrams ----

bool is_core(const Partition& p, int r);
/// r-core obtained by removing all removable r-rim hooks.
Partition core_of(const Partition& p, int r);
/// Integer vector (n_0, ..., n_{r-1}) with sum 0 labelling the r-core of p.
std::vector<int> core_vector(const Partition& p, int r);
/// Inverse of core_vector on r-cores.
Partition core_from_vector(const std::vector<int>& n, int r);
/// Size of the r-core with vector n: (r/2) sum n_k^2 + sum k n_k.
int core_size_from_vector(const std::vector<int>& n, int r);
/// All r-cores of size <= max_size, sorted by PartitionOrder.
std::vector<Partition> cores_up_to(int r, int max_size);
/// v = r n + rho with rho = (-k, ..., k); odd r = 2k+1 only.
std::vector<int> core_v_vector(const Partition& p, int r);
/// Inverse of core_v_vector; throws unless v_i = i mod r and sum v = 0.
Partition core_from_v_vector(const std::vector<int>& v, int r);

/// Finite part of the Maya diagram {lambda_i - i : i >= 1}: the first `count`
/// entries (count >= length). Entries beyond are -i.
std::vector<int> maya(const Partition& p, int count);
/// Partition from a strictly decreasing sequence s_1 > s_2 > ... with
/// s_i = -i for all large i (entries given up to where that holds).
Partition from_maya(const std::vector<int>& s);
/// Strict Maya set {mu_1, mu_2 - 1, mu_3 - 2, ...}: first `count` entries.
std::vector<int> maya_set(const Partition& p, int count);
/// The partition mu~ with maya_set(mu~) = {i} u (maya_set(mu) - 1) and the
/// sign (-1)^#{x in maya_set(mu) - 1 : x > i}; nullopt when i is occupied.
std::optional<std::pair<Partition, int>> maya_insert(const Partition& mu, int i);

}  // namespace pleth
