// SPDX-License-Identifier: Apache-2.0
//
// Edge-free search over class types. A "type" is one class's colour
// multiset; classes with equal multisets are interchangeable, and since an
// edge meets at most s classes only the first s copies of a type matter.
#pragma once

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sigmahg::detail {

inline constexpr int kWideColours = 1024;
using NarrowMask = std::uint64_t;
using WideMask = std::bitset<kWideColours>;

template <class Mask>
struct MaskOps;

template <>
struct MaskOps<NarrowMask> {
  static constexpr int capacity = 64;
  static void set(NarrowMask& m, int colour) { m |= NarrowMask{1} << (colour - 1); }
  static bool test(const NarrowMask& m, int colour) { return (m >> (colour - 1)) & 1U; }
  static int count(const NarrowMask& m) { return std::popcount(m); }
  static bool any(const NarrowMask& m) { return m != 0; }
};

template <>
struct MaskOps<WideMask> {
  static constexpr int capacity = kWideColours;
  static void set(WideMask& m, int colour) { m.set(static_cast<std::size_t>(colour - 1)); }
  static bool test(const WideMask& m, int colour) { return m.test(static_cast<std::size_t>(colour - 1)); }
  static int count(const WideMask& m) { return static_cast<int>(m.count()); }
  static bool any(const WideMask& m) { return m.any(); }
};

template <class Mask>
struct TypeEntry {
  std::vector<std::pair<int, int>> counts;  // (colour, count), colour ascending
  Mask support{};
  int total = 0;         // class size
  int multiplicity = 0;  // capped at s by callers

  int count_of(int colour) const {
    for (auto [c, k] : counts)
      if (c == colour) return k;
    return 0;
  }
};

template <class Mask>
TypeEntry<Mask> make_type(std::vector<std::pair<int, int>> counts, int multiplicity) {
  TypeEntry<Mask> t;
  for (auto [c, k] : counts) {
    MaskOps<Mask>::set(t.support, c);
    t.total += k;
  }
  t.counts = std::move(counts);
  t.multiplicity = multiplicity;
  return t;
}

struct MonoHit {
  int colour = 0;
  std::vector<int> types;  // type used for each part, in part order
};

/// Monochromatic-edge test for one colour by the sorted-counts rule.
template <class Mask>
std::optional<MonoHit> mono_for_colour(std::span<const TypeEntry<Mask>> types,
                                       std::span<const int> parts, int colour,
                                       std::vector<std::pair<int, int>>& scratch) {
  scratch.clear();
  for (std::size_t t = 0; t < types.size(); ++t) {
    const int k = types[t].count_of(colour);
    if (k == 0) continue;
    for (int m = 0; m < types[t].multiplicity; ++m) scratch.emplace_back(k, static_cast<int>(t));
  }
  if (scratch.size() < parts.size()) return std::nullopt;
  std::stable_sort(scratch.begin(), scratch.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (scratch[j].first < parts[j]) return std::nullopt;
  }
  MonoHit hit;
  hit.colour = colour;
  for (std::size_t j = 0; j < parts.size(); ++j) hit.types.push_back(scratch[j].second);
  return hit;
}

template <class Mask>
std::optional<MonoHit> find_mono(std::span<const TypeEntry<Mask>> types,
                                 std::span<const int> parts, std::span<const int> colours) {
  std::vector<std::pair<int, int>> scratch;
  for (int c : colours) {
    if (auto hit = mono_for_colour<Mask>(types, parts, c, scratch)) return hit;
  }
  return std::nullopt;
}

/// Depth-first search over part-to-type assignments, parts largest first.
/// Equal consecutive parts take non-decreasing type indices.
template <class Mask>
class EdgeSearch {
  using Ops = MaskOps<Mask>;

 public:
  struct Choice {
    int type = 0;
    Mask must{};     // colours that must each appear at least once
    Mask allowed{};  // colours the part may draw from
  };
  struct Result {
    int distinct = 0;
    std::vector<Choice> choices;
  };

  EdgeSearch(std::span<const TypeEntry<Mask>> types, std::span<const int> parts)
      : types_(types), parts_(parts), used_(types.size(), 0), current_(parts.size()) {
    suffix_.assign(parts.size() + 1, 0);
    for (std::size_t j = parts.size(); j-- > 0;) suffix_[j] = suffix_[j + 1] + parts[j];
  }

  /// Smallest distinct count over edges (that use `required`, if >= 0),
  /// stopping as soon as one with at most `stop_at` colours is found.
  std::optional<Result> min_distinct(int stop_at, int required = -1) {
    reset(required, stop_at);
    best_ = static_cast<int>(suffix_[0]) + 1;
    min_rec(0, Mask{}, 0);
    return take();
  }

  /// Largest distinct count, stopping at the first edge with at least
  /// `stop_at` colours.
  std::optional<Result> max_distinct(int stop_at, int required = -1) {
    reset(required, stop_at);
    best_ = 0;
    max_rec(0, Mask{}, 0);
    return take();
  }

  std::uint64_t visits() const { return visits_; }

 private:
  void reset(int required, int stop_at) {
    required_ = required;
    stop_at_ = stop_at;
    done_ = false;
    found_ = false;
    std::fill(used_.begin(), used_.end(), 0);
  }

  std::optional<Result> take() {
    if (!found_) return std::nullopt;
    return Result{best_, best_choices_};
  }

  bool required_satisfied() const {
    return required_ < 0 || used_[static_cast<std::size_t>(required_)] > 0;
  }

  // Type range for part j, honouring the equal-part ordering and the
  // requirement that the last part must pick `required` if still unused.
  std::pair<int, int> type_range(std::size_t j, int prev_type) const {
    int lo = (j > 0 && parts_[j] == parts_[j - 1]) ? prev_type : 0;
    int hi = static_cast<int>(types_.size());
    if (required_ >= 0 && !required_satisfied() && j + 1 == parts_.size()) {
      if (required_ < lo) return {0, 0};
      lo = required_;
      hi = required_ + 1;
    }
    return {lo, hi};
  }

  void record(int value) {
    best_ = value;
    best_choices_ = current_;
    found_ = true;
  }

  void min_rec(std::size_t j, Mask used_colours, int prev_type) {
    ++visits_;
    const int have = Ops::count(used_colours);
    if (have >= best_) return;
    if (j == parts_.size()) {
      if (!required_satisfied()) return;
      record(have);
      if (best_ <= stop_at_) done_ = true;
      return;
    }
    const int part = parts_[j];
    auto [lo, hi] = type_range(j, prev_type);
    for (int t = lo; t < hi && !done_; ++t) {
      const auto& type = types_[static_cast<std::size_t>(t)];
      if (used_[static_cast<std::size_t>(t)] >= type.multiplicity || type.total < part) continue;
      int old_total = 0;
      fresh_.clear();
      for (auto [c, k] : type.counts) {
        if (Ops::test(used_colours, c)) {
          old_total += k;
        } else {
          fresh_.emplace_back(c, k);
        }
      }
      Mask old_part = type.support & used_colours;
      ++used_[static_cast<std::size_t>(t)];
      if (old_total >= part) {
        current_[j] = Choice{t, Mask{}, old_part};
        min_rec(j + 1, used_colours, t);
      } else {
        auto fresh = fresh_;
        Mask extra{};
        subset_min(j, t, used_colours, old_part, fresh, 0, old_total, extra);
      }
      --used_[static_cast<std::size_t>(t)];
    }
  }

  // Adds fresh colours until the part can be filled; each emitted set is
  // minimal with respect to its last element.
  void subset_min(std::size_t j, int t, Mask used_colours, Mask old_part,
                  const std::vector<std::pair<int, int>>& fresh, std::size_t from, int total,
                  Mask extra) {
    for (std::size_t i = from; i < fresh.size() && !done_; ++i) {
      Mask with = extra;
      Ops::set(with, fresh[i].first);
      const int next_total = total + fresh[i].second;
      if (next_total >= parts_[j]) {
        current_[j] = Choice{t, Mask{}, old_part | with};
        min_rec(j + 1, used_colours | with, t);
      } else {
        subset_min(j, t, used_colours, old_part, fresh, i + 1, next_total, with);
      }
    }
  }

  void max_rec(std::size_t j, Mask used_colours, int prev_type) {
    ++visits_;
    const int have = Ops::count(used_colours);
    if (have + suffix_[j] <= best_) return;
    if (j == parts_.size()) {
      if (!required_satisfied()) return;
      record(have);
      if (best_ >= stop_at_) done_ = true;
      return;
    }
    const int part = parts_[j];
    auto [lo, hi] = type_range(j, prev_type);
    for (int t = lo; t < hi && !done_; ++t) {
      const auto& type = types_[static_cast<std::size_t>(t)];
      if (used_[static_cast<std::size_t>(t)] >= type.multiplicity || type.total < part) continue;
      ++used_[static_cast<std::size_t>(t)];
      Mask fresh = type.support & ~used_colours;
      const int fresh_count = Ops::count(fresh);
      if (fresh_count <= part) {
        current_[j] = Choice{t, fresh, type.support};
        max_rec(j + 1, used_colours | fresh, t);
      } else {
        std::vector<int> colours;
        for (auto [c, k] : type.counts)
          if (Ops::test(fresh, c)) colours.push_back(c);
        subset_max(j, t, used_colours, type.support, colours, 0, part, Mask{});
      }
      --used_[static_cast<std::size_t>(t)];
    }
  }

  void subset_max(std::size_t j, int t, Mask used_colours, Mask support,
                  const std::vector<int>& colours, std::size_t from, int need, Mask pick) {
    if (need == 0) {
      current_[j] = Choice{t, pick, support};
      max_rec(j + 1, used_colours | pick, t);
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= colours.size() && !done_; ++i) {
      Mask with = pick;
      Ops::set(with, colours[i]);
      subset_max(j, t, used_colours, support, colours, i + 1, need - 1, with);
    }
  }

  std::span<const TypeEntry<Mask>> types_;
  std::span<const int> parts_;
  std::vector<int> suffix_;
  std::vector<int> used_;
  std::vector<Choice> current_;
  std::vector<Choice> best_choices_;
  std::vector<std::pair<int, int>> fresh_;
  int required_ = -1;
  int stop_at_ = 0;
  int best_ = 0;
  bool done_ = false;
  bool found_ = false;
  std::uint64_t visits_ = 0;
};

}  // namespace sigmahg::detail
