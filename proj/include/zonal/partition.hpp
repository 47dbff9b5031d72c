#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

/// An integer partition: nonincreasing positive parts, no trailing zeros.
/// The empty partition (weight 0) is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and nonincreasing.
  /// Trailing zeros are accepted and dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to n entries. Throws if the partition has more than n parts.
  std::vector<int> padded(int n) const;

  /// Multiplies every part by k (2κ for k = 2).
  Partition scaled(int k) const;

  /// Comma-joined parts, "" for the empty partition.
  std::string str() const;
  /// Inverse of str(); also accepts whitespace around parts.
  static Partition parse(std::string_view text);

  /// Lexicographic on the parts, so "greater" is earlier in descending enumeration.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of f in descending lexicographic order: (f) first, (1^f) last.
std::vector<Partition> partitions_of(int f);

/// True iff g is below or equal to f in dominance order. Throws on weight mismatch.
bool dominates(const Partition& g, const Partition& f);

Partition conjugate(const Partition& lambda);

/// Σ λ_i² (the A statistic) and Σ i·λ_i with 1-based i (the B statistic).
long sum_of_squares(const Partition& lambda);
long weighted_index_sum(const Partition& lambda);
/// A − B = Σ λ_i(λ_i − i). Differences of rho are the recursion denominators.
long rho(const Partition& lambda);

/// Σ k_i(k_i + n − i − 1). Throws if λ has more than n parts.
long lb_eigenvalue(const Partition& lambda, int n);

/// Dimension of the GL(n) irreducible with highest weight f (padded to n parts),
/// as the Vandermonde ratio Π_{i<j}(f_i − f_j + j − i) / Π_{i<j}(j − i).
BigInt gl_dimension(const std::vector<int>& highest_weight);
BigInt gl_dimension(const Partition& lambda, int n);

/// Degree χ_λ(1) of the symmetric-group irreducible, by the hook-length formula.
BigInt sym_group_degree(const Partition& lambda);

/// Multiplicity of each part size: result[k] = #{i : λ_i = k}.
std::vector<int> multiplicities(const Partition& lambda);

}  // namespace zonal
