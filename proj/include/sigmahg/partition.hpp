// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>
#include <span>

namespace sigmahg {

struct PartitionStats {
  int delta_max = 0;  // largest part
  int delta_min = 0;  // smallest part
  int s = 0;          // number of parts

  bool operator==(const PartitionStats&) const = default;
};

/// An integer partition of r, stored with parts in non-increasing order.
class Partition {
 public:
  Partition() = default;

  /// Canonicalises `raw_parts` (any order). Throws Error(validation) on an
  /// empty list or a non-positive entry.
  static Partition normalize(std::vector<int> raw_parts);

  /// Parses "1,2,1" style lists.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  PartitionStats stats() const;
  int largest() const { return parts_.front(); }
  int smallest() const { return parts_.back(); }

  /// Multiplicity of each distinct part value, paired with the value, in
  /// non-increasing value order.
  std::vector<std::pair<int, int>> grouped() const;

  /// "(2,1,1)"
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int r_ = 0;
};

PartitionStats partition_stats(const Partition& sigma);

/// All partitions of r with at least `min_parts` parts, in reverse
/// lexicographic order ((r), (r-1,1), ...).
std::vector<Partition> enumerate_partitions(int r, int min_parts = 1);

struct ConditionFailure {
  std::string condition;  // e.g. "r >= 3"
  std::string detail;
};

struct ValidationResult {
  std::vector<ConditionFailure> violations;
  bool degenerate = false;
  std::vector<std::string> degenerate_reasons;

  bool ok() const { return violations.empty(); }
  std::string message() const;
};

/// Gatekeeper for H(n,r,q|sigma). Accepts iff n >= 1, q >= 1, r >= 3,
/// sum(sigma) = r and s(sigma) >= 2. Accepted instances on which no r-subset
/// can realise sigma (largest part > q, or more parts than classes) are
/// flagged degenerate.
ValidationResult validate_instance(int n, int r, int q, const Partition& sigma);

}  // namespace sigmahg
