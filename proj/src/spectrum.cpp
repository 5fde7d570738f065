// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/spectrum.hpp"

#include <algorithm>

#include "edge_search.hpp"
#include "sigmahg/constructions.hpp"
#include "sigmahg/error.hpp"
#include "sigmahg/profile.hpp"

namespace sigmahg {

namespace {

using detail::EdgeSearch;
using detail::MaskOps;
using detail::TypeEntry;

struct BudgetExhausted {};

// Orderly search over sorted sequences of class multisets. The sequence is
// kept as runs of equal types so each run is one TypeEntry.
template <class Mask>
class ClassSequenceSearch {
 public:
  ClassSequenceSearch(const SigmaInstance& inst, int k, const ColourBounds& bounds,
                      std::uint64_t budget)
      : inst_(inst), k_(k), bounds_(bounds), budget_(budget), cap_(inst.sigma().size()) {
    tuples_.assign(static_cast<std::size_t>(inst.n()) + 1, std::vector<int>(static_cast<std::size_t>(inst.q())));
    // generate() holds a pointer into runs_ across deeper pushes
    runs_.reserve(static_cast<std::size_t>(inst.n()) + 1);
    types_.reserve(static_cast<std::size_t>(inst.n()) + 1);
  }

  std::optional<Colouring> run() {
    try {
      if (extend(0, 0)) return expand();
    } catch (const BudgetExhausted&) {
      exhausted_ = true;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  struct Run {
    std::vector<int> tuple;
    int count = 0;
  };

  // True once a witness sits on the stack.
  bool extend(int placed, int used_colours) {
    if (used_colours == k_ && (placed == inst_.n() || (placed < inst_.n() && capped_runs_ > 0))) {
      return true;
    }
    if (placed == inst_.n()) return false;
    auto& tuple = tuples_[static_cast<std::size_t>(placed)];
    const std::vector<int>* last = runs_.empty() ? nullptr : &runs_.back().tuple;
    return generate(placed, tuple, last, 0, true, used_colours);
  }

  // Builds sorted tuples >= *last lexicographically. Values above the
  // colours used so far are new and must appear in order u+1, u+2, ...
  bool generate(int placed, std::vector<int>& tuple, const std::vector<int>* last,
                int pos, bool tight, int top) {
    const int q = inst_.q();
    if (pos == q) return try_tuple(placed, tuple, top);
    int lo = pos == 0 ? 1 : tuple[static_cast<std::size_t>(pos - 1)];
    if (tight && last) lo = std::max(lo, (*last)[static_cast<std::size_t>(pos)]);
    const int hi = std::min(k_, top + 1);
    for (int v = lo; v <= hi; ++v) {
      tuple[static_cast<std::size_t>(pos)] = v;
      const bool still_tight = tight && last && v == (*last)[static_cast<std::size_t>(pos)];
      if (generate(placed, tuple, last, pos + 1, still_tight, std::max(top, v))) return true;
    }
    return false;
  }

  bool try_tuple(int placed, const std::vector<int>& tuple, int top) {
    const int remaining_classes = inst_.n() - placed - 1;
    if (k_ - top > inst_.q() * remaining_classes) return false;
    const bool same = !runs_.empty() && runs_.back().tuple == tuple;
    if (same && runs_.back().count == cap_) return false;

    if (++nodes_ > budget_) throw BudgetExhausted{};
    push(tuple, same);
    bool found = false;
    if (valid_after_push()) found = extend(placed + 1, top);
    if (!found) pop(same);
    return found;
  }

  void push(const std::vector<int>& tuple, bool same) {
    if (same) {
      auto& entry = types_.back();
      ++entry.multiplicity;
      if (entry.multiplicity == cap_) ++capped_runs_;
      ++runs_.back().count;
      return;
    }
    std::vector<std::pair<int, int>> counts;
    for (int c : tuple) {
      if (!counts.empty() && counts.back().first == c) {
        ++counts.back().second;
      } else {
        counts.emplace_back(c, 1);
      }
    }
    types_.push_back(detail::make_type<Mask>(std::move(counts), 1));
    if (cap_ == 1) ++capped_runs_;
    runs_.push_back(Run{tuple, 1});
  }

  void pop(bool same) {
    auto& entry = types_.back();
    if (entry.multiplicity == cap_) --capped_runs_;
    if (same) {
      --entry.multiplicity;
      --runs_.back().count;
    } else {
      types_.pop_back();
      runs_.pop_back();
    }
  }

  // The sequence before the push was valid and validity is hereditary, so
  // only edges through the newest class need examining.
  bool valid_after_push() {
    std::span<const TypeEntry<Mask>> types(types_);
    const auto parts = inst_.sigma().parts();
    const int newest = static_cast<int>(types_.size()) - 1;
    if (bounds_.alpha >= 2) {
      colours_.clear();
      for (auto [c, cnt] : types_.back().counts) colours_.push_back(c);
      if (detail::find_mono<Mask>(types, parts, colours_)) return false;
    }
    if (bounds_.alpha > 2 || bounds_.beta < inst_.r()) {
      EdgeSearch<Mask> search(types, parts);
      if (bounds_.alpha > 2) {
        auto low = search.min_distinct(bounds_.alpha - 1, newest);
        if (low && low->distinct < bounds_.alpha) return false;
      }
      if (bounds_.beta < inst_.r()) {
        auto high = search.max_distinct(bounds_.beta + 1, newest);
        if (high && high->distinct > bounds_.beta) return false;
      }
    }
    return true;
  }

  // Pads to n classes by repeating a run that already has s copies.
  Colouring expand() const {
    std::vector<int> flat;
    int placed = 0;
    for (const auto& run : runs_) placed += run.count;
    bool padded = placed == inst_.n();
    for (const auto& run : runs_) {
      int copies = run.count;
      if (!padded && run.count == cap_) {
        copies += inst_.n() - placed;
        padded = true;
      }
      for (int i = 0; i < copies; ++i) flat.insert(flat.end(), run.tuple.begin(), run.tuple.end());
    }
    return Colouring::exact(inst_.n(), inst_.q(), std::move(flat));
  }

  const SigmaInstance& inst_;
  int k_;
  ColourBounds bounds_;
  std::uint64_t budget_;
  int cap_;
  std::vector<TypeEntry<Mask>> types_;
  std::vector<Run> runs_;
  std::vector<std::vector<int>> tuples_;
  std::vector<int> colours_;
  int capped_runs_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

template <class Mask>
KVerdict search_with(const SigmaInstance& inst, int k, const ColourBounds& bounds,
                     std::uint64_t budget) {
  ClassSequenceSearch<Mask> search(inst, k, bounds, budget);
  auto witness = search.run();
  KVerdict v;
  v.k = k;
  v.source = "search";
  v.nodes_explored = search.nodes();
  v.budget_exhausted = search.exhausted();
  if (witness) {
    v.status = KStatus::yes;
    v.witness = std::move(witness);
  } else {
    v.status = search.exhausted() ? KStatus::unknown : KStatus::no;
  }
  return v;
}

Colouring degenerate_witness(const SigmaInstance& inst, int k) {
  std::vector<int> flat;
  for (int v = 0; v < inst.vertex_count(); ++v) flat.push_back(std::min(v + 1, k));
  return Colouring::exact(inst.n(), inst.q(), std::move(flat));
}

void require_witness(const SigmaInstance& inst, const KVerdict& v, const ColourBounds& bounds) {
  if (v.status != KStatus::yes) return;
  if (!v.witness || v.witness->colours_used() != v.k || !is_valid(inst, *v.witness, bounds)) {
    throw Error(ErrorCode::internal, "witness for k=" + std::to_string(v.k) + " on " +
                                         inst.to_string() + " failed its check");
  }
}

}  // namespace

const char* to_string(KStatus s) {
  switch (s) {
    case KStatus::yes: return "yes";
    case KStatus::no: return "no";
    case KStatus::unknown: return "unknown";
  }
  return "?";
}

const KVerdict* SpectrumReport::at(int k) const {
  for (const auto& v : verdicts)
    if (v.k == k) return &v;
  return nullptr;
}

std::vector<int> SpectrumReport::members() const {
  std::vector<int> out;
  for (const auto& v : verdicts)
    if (v.status == KStatus::yes) out.push_back(v.k);
  return out;
}

std::optional<KInterval> monochromatic_zone(const SigmaInstance& inst) {
  const auto st = inst.sigma().stats();
  if (st.delta_max <= 1 || st.s < 2) return std::nullopt;
  return KInterval{(inst.n() + st.s - 2) / (st.s - 1), inst.n()};
}

KVerdict decide_k(const SigmaInstance& inst, int k, const ColourBounds& bounds,
                  std::uint64_t budget) {
  bounds.validate(inst.r());
  if (k < 1 || k > inst.vertex_count()) {
    throw Error(ErrorCode::validation, "k must satisfy 1 <= k <= nq = " +
                                           std::to_string(inst.vertex_count()) +
                                           ", got k=" + std::to_string(k));
  }
  KVerdict v;
  if (inst.degenerate()) {
    v.k = k;
    v.status = KStatus::yes;
    v.witness = degenerate_witness(inst, k);
    v.source = "degenerate";
  } else if (k <= MaskOps<detail::NarrowMask>::capacity) {
    v = search_with<detail::NarrowMask>(inst, k, bounds, budget);
  } else if (k <= detail::kWideColours) {
    v = search_with<detail::WideMask>(inst, k, bounds, budget);
  } else {
    throw Error(ErrorCode::validation, "k above " + std::to_string(detail::kWideColours) +
                                           " is not supported");
  }
  require_witness(inst, v, bounds);
  return v;
}

void summarise(SpectrumReport& report) {
  report.chi.reset();
  report.chi_bar.reset();
  report.gaps.clear();
  report.complete = true;
  for (const auto& v : report.verdicts) {
    if (v.status == KStatus::unknown) report.complete = false;
    if (v.status == KStatus::yes) {
      if (!report.chi) report.chi = v.k;
      report.chi_bar = v.k;
    }
  }
  if (!report.chi) return;
  // Maximal NO runs with a YES immediately on both sides; a run touching an
  // UNKNOWN might be longer, so it is not reported.
  int run_start = -1;
  KStatus before = KStatus::yes;
  for (const auto& v : report.verdicts) {
    if (v.k <= *report.chi || v.k > *report.chi_bar) continue;
    if (v.status == KStatus::no) {
      if (run_start < 0) run_start = v.k;
      continue;
    }
    if (v.status == KStatus::yes && run_start >= 0 && before == KStatus::yes) {
      report.gaps.emplace_back(run_start, v.k - 1);
    }
    run_start = -1;
    before = v.status;
  }
}

KVerdict resolve_k(const SigmaInstance& inst, int k, const ColourBounds& bounds,
                   std::uint64_t budget) {
  bounds.validate(inst.r());
  // Construction colourings first; each is accepted only if it passes the
  // checker under the requested bounds.
  if (!inst.degenerate() && k >= 1 && k <= inst.vertex_count()) {
    for (const auto& id : applicable_constructions(inst)) {
      if (advertised_colours(inst, id) != k) continue;
      Colouring col = construct(inst, id);
      if (!is_valid(inst, col, bounds)) continue;
      KVerdict v;
      v.k = k;
      v.status = KStatus::yes;
      v.witness = std::move(col);
      v.source = to_string(id);
      return v;
    }
  }
  return decide_k(inst, k, bounds, budget);
}

SpectrumReport compute_spectrum(const SigmaInstance& inst, const ColourBounds& bounds, int k_max,
                                std::uint64_t budget_per_k) {
  bounds.validate(inst.r());
  if (k_max < 1 || k_max > inst.vertex_count()) {
    throw Error(ErrorCode::validation, "k_max must satisfy 1 <= k_max <= nq = " +
                                           std::to_string(inst.vertex_count()));
  }
  SpectrumReport report{inst, bounds, 1, k_max, {}, std::nullopt, std::nullopt, {}, false};
  for (int k = 1; k <= k_max; ++k) report.verdicts.push_back(resolve_k(inst, k, bounds, budget_per_k));
  summarise(report);
  return report;
}

}  // namespace sigmahg
