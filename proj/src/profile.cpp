// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/profile.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "edge_search.hpp"
#include "sigmahg/error.hpp"

namespace sigmahg {

namespace {

using detail::EdgeSearch;
using detail::TypeEntry;

// Classes grouped by identical colour multiset, in order of first
// appearance; multiplicities capped at s.
template <class Mask>
struct TypeTable {
  std::vector<TypeEntry<Mask>> types;
  std::vector<std::vector<int>> members;
};

template <class Mask>
TypeTable<Mask> group_classes(const ClassProfile& profile, int cap) {
  TypeTable<Mask> table;
  std::map<ClassProfile::Row, std::size_t> index;
  for (int i = 0; i < profile.class_count(); ++i) {
    const auto& row = profile.rows[static_cast<std::size_t>(i)];
    auto [it, inserted] = index.try_emplace(row, table.types.size());
    if (inserted) {
      table.types.push_back(detail::make_type<Mask>(row, 0));
      table.members.emplace_back();
    }
    table.members[it->second].push_back(i);
  }
  for (std::size_t t = 0; t < table.types.size(); ++t) {
    table.types[t].multiplicity = std::min(static_cast<int>(table.members[t].size()), cap);
  }
  return table;
}

bool admits_edges(const ClassProfile& profile, const Partition& sigma) {
  return sigma.size() <= profile.class_count() && sigma.largest() <= profile.class_size();
}

int max_colour(const ClassProfile& profile) {
  return profile.palette.empty() ? 0 : profile.palette.back();
}

// Lowest slots of class `cls` whose colours satisfy the choice.
template <class Mask>
void pick_slots(const Colouring& col, int cls, int part, const Mask& must, const Mask& allowed,
                Edge& edge) {
  using Ops = detail::MaskOps<Mask>;
  std::vector<bool> taken(static_cast<std::size_t>(col.q()), false);
  int picked = 0;
  Mask covered{};
  for (int slot = 0; slot < col.q() && picked < part; ++slot) {
    const int c = col.at(cls, slot);
    if (Ops::test(must, c) && !Ops::test(covered, c)) {
      Ops::set(covered, c);
      taken[static_cast<std::size_t>(slot)] = true;
      ++picked;
    }
  }
  for (int slot = 0; slot < col.q() && picked < part; ++slot) {
    if (taken[static_cast<std::size_t>(slot)]) continue;
    if (Ops::test(allowed, col.at(cls, slot))) {
      taken[static_cast<std::size_t>(slot)] = true;
      ++picked;
    }
  }
  if (picked != part) throw Error(ErrorCode::internal, "witness reconstruction failed");
  for (int slot = 0; slot < col.q(); ++slot)
    if (taken[static_cast<std::size_t>(slot)]) edge.push_back({cls, slot});
}

EdgeWitness finish_witness(Edge edge, const Colouring& col) {
  std::sort(edge.begin(), edge.end());
  std::set<int> colours;
  for (const auto& v : edge) colours.insert(col.at(v));
  return EdgeWitness{std::move(edge), static_cast<int>(colours.size())};
}

template <class Mask>
EdgeWitness witness_from_choices(const TypeTable<Mask>& table, const Partition& sigma,
                                 const typename EdgeSearch<Mask>::Result& result,
                                 const Colouring& col) {
  std::vector<int> next(table.types.size(), 0);
  Edge edge;
  for (int j = 0; j < sigma.size(); ++j) {
    const auto& choice = result.choices[static_cast<std::size_t>(j)];
    const auto t = static_cast<std::size_t>(choice.type);
    const int cls = table.members[t][static_cast<std::size_t>(next[t]++)];
    pick_slots(col, cls, sigma[j], choice.must, choice.allowed, edge);
  }
  return finish_witness(std::move(edge), col);
}

template <class Mask>
EdgeWitness witness_from_mono(const TypeTable<Mask>& table, const Partition& sigma,
                              const detail::MonoHit& hit, const Colouring& col) {
  std::vector<int> next(table.types.size(), 0);
  Edge edge;
  Mask only{};
  detail::MaskOps<Mask>::set(only, hit.colour);
  for (int j = 0; j < sigma.size(); ++j) {
    const auto t = static_cast<std::size_t>(hit.types[static_cast<std::size_t>(j)]);
    const int cls = table.members[t][static_cast<std::size_t>(next[t]++)];
    pick_slots(col, cls, sigma[j], Mask{}, only, edge);
  }
  return finish_witness(std::move(edge), col);
}

template <class Mask>
Verdict check_with(const SigmaInstance& inst, const Colouring& col, const ColourBounds& bounds,
                   const ClassProfile& profile) {
  const auto& sigma = inst.sigma();
  auto table = group_classes<Mask>(profile, sigma.size());
  std::span<const TypeEntry<Mask>> types(table.types);
  Verdict verdict;

  if (bounds.alpha >= 2) {
    if (auto hit = detail::find_mono<Mask>(types, sigma.parts(), profile.palette)) {
      verdict.status = VerdictStatus::monochromatic_edge;
      verdict.witness = witness_from_mono(table, sigma, *hit, col);
      return verdict;
    }
  }
  EdgeSearch<Mask> search(types, sigma.parts());
  if (bounds.alpha > 2) {
    if (auto low = search.min_distinct(bounds.alpha - 1); low && low->distinct < bounds.alpha) {
      verdict.status = VerdictStatus::bounds_violation;
      verdict.witness = witness_from_choices(table, sigma, *low, col);
      return verdict;
    }
  }
  if (bounds.beta < inst.r()) {
    if (auto high = search.max_distinct(bounds.beta + 1); high && high->distinct > bounds.beta) {
      EdgeWitness w = witness_from_choices(table, sigma, *high, col);
      verdict.status = classify_violation(w.distinct, inst.r(), bounds);
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

template <class Mask>
DistinctRange range_with(const ClassProfile& profile, const Partition& sigma) {
  auto table = group_classes<Mask>(profile, sigma.size());
  std::span<const TypeEntry<Mask>> types(table.types);
  EdgeSearch<Mask> search(types, sigma.parts());
  DistinctRange out;
  if (auto lo = search.min_distinct(1)) out.min_distinct = lo->distinct;
  if (auto hi = search.max_distinct(sigma.r())) out.max_distinct = hi->distinct;
  return out;
}

}  // namespace

int ClassProfile::class_size() const {
  if (rows.empty()) return 0;
  int total = 0;
  for (auto [c, k] : rows.front()) total += k;
  return total;
}

int ClassProfile::count(int class_index, int colour) const {
  for (auto [c, k] : rows.at(static_cast<std::size_t>(class_index)))
    if (c == colour) return k;
  return 0;
}

void ClassProfile::validate() const {
  const int q = class_size();
  std::set<int> support;
  for (const auto& row : rows) {
    int total = 0;
    int prev = 0;
    for (auto [c, k] : row) {
      if (c <= prev || k < 1) throw Error(ErrorCode::validation, "malformed profile row");
      prev = c;
      total += k;
      support.insert(c);
    }
    if (total != q) throw Error(ErrorCode::validation, "profile rows must all sum to q");
  }
  if (std::vector<int>(support.begin(), support.end()) != palette) {
    throw Error(ErrorCode::validation, "profile palette must be the union of row supports");
  }
}

ClassProfile ClassProfile::from_rows(std::vector<Row> rows) {
  ClassProfile p;
  std::set<int> support;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    for (auto [c, k] : row) support.insert(c);
  }
  p.rows = std::move(rows);
  p.palette.assign(support.begin(), support.end());
  p.validate();
  return p;
}

ClassProfile build_profile(const SigmaInstance& inst, const Colouring& col) {
  col.require_shape(inst);
  ClassProfile p;
  std::set<int> support;
  for (int i = 0; i < inst.n(); ++i) {
    std::map<int, int> tally;
    for (int c : col.class_colours(i)) ++tally[c];
    p.rows.emplace_back(tally.begin(), tally.end());
    for (auto [c, k] : tally) support.insert(c);
  }
  p.palette.assign(support.begin(), support.end());
  return p;
}

std::optional<MonochromaticWitness> has_monochromatic_edge(const ClassProfile& profile,
                                                           const Partition& sigma) {
  if (!admits_edges(profile, sigma)) return std::nullopt;
  auto run = [&]<class Mask>() -> std::optional<MonochromaticWitness> {
    auto table = group_classes<Mask>(profile, sigma.size());
    auto hit = detail::find_mono<Mask>(std::span<const TypeEntry<Mask>>(table.types),
                                       sigma.parts(), profile.palette);
    if (!hit) return std::nullopt;
    MonochromaticWitness w;
    w.colour = hit->colour;
    std::vector<int> next(table.types.size(), 0);
    for (int t : hit->types) {
      const auto ti = static_cast<std::size_t>(t);
      w.classes.push_back(table.members[ti][static_cast<std::size_t>(next[ti]++)]);
    }
    return w;
  };
  // Only supports matter here, so any colour label fits the wide mask path.
  if (max_colour(profile) <= detail::MaskOps<detail::NarrowMask>::capacity) {
    return run.template operator()<detail::NarrowMask>();
  }
  if (max_colour(profile) <= detail::kWideColours) return run.template operator()<detail::WideMask>();
  throw Error(ErrorCode::validation, "colour labels above " + std::to_string(detail::kWideColours) +
                                         " are not supported");
}

DistinctRange distinct_colour_range(const ClassProfile& profile, const Partition& sigma) {
  if (!admits_edges(profile, sigma)) return {};
  const int top = max_colour(profile);
  if (top <= detail::MaskOps<detail::NarrowMask>::capacity) {
    return range_with<detail::NarrowMask>(profile, sigma);
  }
  if (top <= detail::kWideColours) return range_with<detail::WideMask>(profile, sigma);
  throw Error(ErrorCode::validation, "colour labels above " + std::to_string(detail::kWideColours) +
                                         " are not supported");
}

Verdict check_fast(const SigmaInstance& inst, const Colouring& col, const ColourBounds& bounds) {
  col.require_shape(inst);
  bounds.validate(inst.r());
  if (inst.degenerate()) {
    Verdict v;
    v.degenerate = true;
    return v;
  }
  const auto profile = build_profile(inst, col);
  const int k = col.colours_used();
  if (k <= detail::MaskOps<detail::NarrowMask>::capacity) {
    return check_with<detail::NarrowMask>(inst, col, bounds, profile);
  }
  if (k <= detail::kWideColours) return check_with<detail::WideMask>(inst, col, bounds, profile);
  throw Error(ErrorCode::validation, "colourings with more than " +
                                         std::to_string(detail::kWideColours) +
                                         " colours are not supported by the fast checker");
}

}  // namespace sigmahg
