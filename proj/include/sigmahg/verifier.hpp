// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmahg/hypergraph.hpp"
#include "sigmahg/spectrum.hpp"

namespace sigmahg {

enum class ClaimKind { colourable, not_colourable, no_gap, empty_spectrum };
enum class ClaimStatus { confirmed, refuted, undecided, inactive };

const char* to_string(ClaimKind k);
const char* to_string(ClaimStatus s);

/// Union of closed k-intervals, kept sorted and disjoint.
class KSet {
 public:
  KSet() = default;
  static KSet interval(int lo, int hi);
  static KSet single(int k) { return interval(k, k); }

  KSet& add(int lo, int hi);
  bool contains(int k) const;
  bool empty() const { return parts_.empty(); }
  const std::vector<KInterval>& intervals() const { return parts_; }
  std::optional<int> max() const;
  std::vector<int> members() const;
  /// "{2} ∪ [7,13]", or "∅".
  std::string to_string() const;

  bool operator==(const KSet&) const = default;

 private:
  std::vector<KInterval> parts_;
};

struct Precondition {
  std::string name;
  bool satisfied = false;
};

struct Claim {
  std::string source;  // theorem family, e.g. "gap-delta-one"
  ClaimKind kind = ClaimKind::colourable;
  KSet ks;  // empty for NO_GAP / EMPTY_SPECTRUM means all of 1..nq
  std::vector<Precondition> preconditions;

  bool active() const;
  std::vector<std::string> failed_preconditions() const;
  std::string describe() const;
};

struct ClaimResult {
  Claim claim;
  ClaimStatus status = ClaimStatus::inactive;
  std::optional<int> counterexample_k;  // set iff refuted
  std::string evidence;
};

struct VerificationReport {
  SigmaInstance instance;
  ColourBounds bounds;
  std::vector<ClaimResult> results;
  std::optional<SpectrumReport> spectrum;  // absent when nothing was computed
  std::optional<KInterval> theorem_silent;  // computed only, no claim made

  bool any_refuted() const;
  int count(ClaimStatus s) const;
};

/// Every theorem-family claim matching the instance and bounds, with
/// preconditions evaluated strictly. NMNR families only under (2, r-1), the
/// (2,2) family only under (2,2). Never throws for a valid instance.
std::vector<Claim> predict_claims(const SigmaInstance& inst, const ColourBounds& bounds);

/// Evaluates each active claim against computed verdicts for k = 1..K, where
/// K is the largest k any active claim mentions (nq for whole-spectrum
/// claims) unless `k_max` is given. Each claim is decided only by
/// construction witnesses and exhausted searches.
VerificationReport verify_instance(const SigmaInstance& inst, const ColourBounds& bounds,
                                   std::uint64_t budget = kDefaultBudget,
                                   std::optional<int> k_max = std::nullopt);

}  // namespace sigmahg
