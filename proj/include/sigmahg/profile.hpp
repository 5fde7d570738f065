// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sigmahg/hypergraph.hpp"

namespace sigmahg {

/// Per-class colour multiplicities. Every edge question (monochromatic,
/// rainbow, distinct-colour range) is decided on this table alone.
struct ClassProfile {
  using Row = std::vector<std::pair<int, int>>;  // (colour, count), colour ascending

  std::vector<Row> rows;
  std::vector<int> palette;  // colours with nonzero total, ascending

  int class_count() const { return static_cast<int>(rows.size()); }
  /// Common row sum; 0 for an empty profile.
  int class_size() const;
  int count(int class_index, int colour) const;

  /// Throws Error(validation) if rows disagree on their sum or the palette
  /// is not the union of the row supports.
  void validate() const;

  static ClassProfile from_rows(std::vector<Row> rows);
};

ClassProfile build_profile(const SigmaInstance& inst, const Colouring& col);

struct MonochromaticWitness {
  int colour = 0;
  std::vector<int> classes;  // classes[j] receives the j-th largest part
};

/// A colour c forms a monochromatic edge iff, with the per-class counts of c
/// sorted non-increasing, the j-th largest count is at least the j-th largest
/// part for every j < s.
std::optional<MonochromaticWitness> has_monochromatic_edge(const ClassProfile& profile,
                                                           const Partition& sigma);

struct DistinctRange {
  std::optional<int> min_distinct;
  std::optional<int> max_distinct;

  bool operator==(const DistinctRange&) const = default;
};

/// Exact minimum and maximum number of distinct colours over all edges.
/// Both empty when the profile admits no edge.
DistinctRange distinct_colour_range(const ClassProfile& profile, const Partition& sigma);

/// Profile-based checker; agrees with check_explicit on status.
Verdict check_fast(const SigmaInstance& inst, const Colouring& col, const ColourBounds& bounds);

inline bool is_valid(const SigmaInstance& inst, const Colouring& col, const ColourBounds& bounds) {
  return check_fast(inst, col, bounds).status == VerdictStatus::valid;
}

}  // namespace sigmahg
