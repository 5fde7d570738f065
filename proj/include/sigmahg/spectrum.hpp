// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmahg/hypergraph.hpp"

namespace sigmahg {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class KStatus { yes, no, unknown };

const char* to_string(KStatus s);

struct KVerdict {
  int k = 0;
  KStatus status = KStatus::unknown;
  std::optional<Colouring> witness;  // present iff yes
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;
  std::string source;  // "search", "degenerate", or a construction name
};

struct SpectrumReport {
  SigmaInstance instance;
  ColourBounds bounds;
  int k_min = 1;
  int k_max = 0;
  std::vector<KVerdict> verdicts;  // k = k_min..k_max
  std::optional<int> chi;
  std::optional<int> chi_bar;
  std::vector<std::pair<int, int>> gaps;
  bool complete = false;

  const KVerdict* at(int k) const;
  std::vector<int> members() const;
};

struct KInterval {
  int lo = 0;
  int hi = 0;

  bool contains(int k) const { return lo <= k && k <= hi; }
  bool operator==(const KInterval&) const = default;
};

/// [ceil(n/(s-1)), n] when the largest part exceeds 1, otherwise empty.
std::optional<KInterval> monochromatic_zone(const SigmaInstance& inst);

/// Exhaustive symmetry-reduced search for a colouring with exactly k colours.
/// Classes are enumerated as a non-decreasing sequence of colour multisets
/// with new colours introduced in first-use order; a multiset type is never
/// repeated more than s times, since further copies create no new edge
/// patterns. NO means the reduced space was exhausted within `budget`
/// search nodes; UNKNOWN means the budget ran out.
KVerdict decide_k(const SigmaInstance& inst, int k, const ColourBounds& bounds,
                  std::uint64_t budget = kDefaultBudget);

/// A construction colouring for k when one applies and is valid under
/// `bounds`, otherwise decide_k.
KVerdict resolve_k(const SigmaInstance& inst, int k, const ColourBounds& bounds,
                   std::uint64_t budget = kDefaultBudget);

/// resolve_k for every k in 1..k_max. Degenerate instances and construction
/// colourings (checked with check_fast) answer YES before any search.
SpectrumReport compute_spectrum(const SigmaInstance& inst, const ColourBounds& bounds,
                                int k_max, std::uint64_t budget_per_k = kDefaultBudget);

/// Recomputes chi, chi_bar, gaps and completeness from the verdicts.
void summarise(SpectrumReport& report);

}  // namespace sigmahg
