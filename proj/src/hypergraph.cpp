// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "sigmahg/error.hpp"

namespace sigmahg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

// Every r-combination of slots 0..q-1 of size `size`, lexicographic.
std::vector<std::vector<int>> slot_combinations(int q, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int s = start; s <= q - (size - static_cast<int>(cur.size())); ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

SigmaInstance SigmaInstance::create(int n, int r, int q, const Partition& sigma) {
  auto res = validate_instance(n, r, q, sigma);
  if (!res.ok()) throw Error(ErrorCode::validation, res.message());
  SigmaInstance inst;
  inst.n_ = n;
  inst.r_ = r;
  inst.q_ = q;
  inst.sigma_ = sigma;
  inst.degenerate_ = res.degenerate;
  return inst;
}

SigmaInstance SigmaInstance::h2n(int n, int r) {
  if (r < 3) throw Error(ErrorCode::validation, "H(2n,r) needs r >= 3");
  std::vector<int> parts(static_cast<std::size_t>(r - 2), 1);
  parts.push_back(2);
  return create(n, r, 2, Partition::normalize(std::move(parts)));
}

bool SigmaInstance::is_h2n() const {
  if (q_ != 2 || sigma_.size() != r_ - 1) return false;
  return sigma_.largest() == 2 && (r_ == 3 || sigma_[1] == 1);
}

std::string SigmaInstance::to_string() const {
  std::ostringstream os;
  os << "H(" << n_ << ',' << r_ << ',' << q_ << '|' << sigma_.to_string() << ')';
  return os.str();
}

void ColourBounds::validate(int r) const {
  if (alpha < 1 || beta < alpha || beta > r) {
    throw Error(ErrorCode::validation,
                "colour bounds must satisfy 1 <= alpha <= beta <= r; got alpha=" +
                    std::to_string(alpha) + " beta=" + std::to_string(beta) +
                    " r=" + std::to_string(r));
  }
}

Colouring Colouring::exact(int n, int q, std::vector<int> assignment) {
  if (n < 1 || q < 1 || assignment.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(q)) {
    throw Error(ErrorCode::colouring, "colouring must assign exactly n*q vertices");
  }
  int k = 0;
  for (int c : assignment) {
    if (c < 1) throw Error(ErrorCode::colouring, "colours must be positive integers");
    k = std::max(k, c);
  }
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int c : assignment) seen[static_cast<std::size_t>(c)] = true;
  for (int c = 1; c <= k; ++c) {
    if (!seen[static_cast<std::size_t>(c)]) {
      throw Error(ErrorCode::colouring,
                  "colouring is not surjective onto 1.." + std::to_string(k) +
                      ": colour " + std::to_string(c) + " is unused");
    }
  }
  Colouring col;
  col.n_ = n;
  col.q_ = q;
  col.colours_used_ = k;
  col.assignment_ = std::move(assignment);
  return col;
}

Colouring Colouring::normalized(int n, int q, std::span<const int> raw) {
  std::set<int> values(raw.begin(), raw.end());
  std::map<int, int> relabel;
  int next = 1;
  for (int v : values) {
    if (v < 1) throw Error(ErrorCode::colouring, "colours must be positive integers");
    relabel[v] = next++;
  }
  std::vector<int> assignment;
  assignment.reserve(raw.size());
  for (int v : raw) assignment.push_back(relabel[v]);
  return exact(n, q, std::move(assignment));
}

Colouring Colouring::from_classes(const std::vector<std::vector<int>>& classes) {
  if (classes.empty()) throw Error(ErrorCode::colouring, "colouring has no classes");
  const std::size_t q = classes.front().size();
  std::vector<int> flat;
  for (const auto& cls : classes) {
    if (cls.size() != q || q == 0) {
      throw Error(ErrorCode::colouring, "every class must list the same number (q >= 1) of colours");
    }
    flat.insert(flat.end(), cls.begin(), cls.end());
  }
  return normalized(static_cast<int>(classes.size()), static_cast<int>(q), flat);
}

std::vector<std::vector<int>> Colouring::classes() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n_; ++i) {
    auto cls = class_colours(i);
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

void Colouring::require_shape(const SigmaInstance& inst) const {
  if (n_ != inst.n() || q_ != inst.q()) {
    throw Error(ErrorCode::colouring,
                "colouring shape " + std::to_string(n_) + "x" + std::to_string(q_) +
                    " does not match instance " + inst.to_string());
  }
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::valid: return "VALID";
    case VerdictStatus::monochromatic_edge: return "MONOCHROMATIC_EDGE";
    case VerdictStatus::rainbow_edge: return "RAINBOW_EDGE";
    case VerdictStatus::bounds_violation: return "BOUNDS_VIOLATION";
  }
  return "?";
}

VerdictStatus classify_violation(int distinct, int r, const ColourBounds& bounds) {
  if (distinct < bounds.alpha) {
    return distinct == 1 ? VerdictStatus::monochromatic_edge : VerdictStatus::bounds_violation;
  }
  if (distinct > bounds.beta) {
    return bounds.is_nmnr(r) && distinct == r ? VerdictStatus::rainbow_edge
                                              : VerdictStatus::bounds_violation;
  }
  return VerdictStatus::valid;
}

std::uint64_t count_edges(const SigmaInstance& inst) {
  if (inst.degenerate()) return 0;
  const auto& sigma = inst.sigma();
  std::uint64_t total = 1;
  // falling factorial n (n-1) ... (n-s+1) over the multiplicity factorials
  int next_class = inst.n();
  for (auto [value, mult] : sigma.grouped()) {
    total = sat_mul(total, binomial(next_class, mult));
    next_class -= mult;
    for (int i = 0; i < mult; ++i) total = sat_mul(total, binomial(inst.q(), value));
  }
  return total;
}

void for_each_edge(const SigmaInstance& inst, std::uint64_t cap,
                   const std::function<bool(const Edge&)>& visit) {
  const std::uint64_t total = count_edges(inst);
  if (total > cap) {
    throw Error(ErrorCode::cap_exceeded, inst.to_string() + " has " + std::to_string(total) +
                                             " edges, more than the cap of " +
                                             std::to_string(cap));
  }
  if (total == 0) return;

  const int n = inst.n();
  const int q = inst.q();
  auto grouped = inst.sigma().grouped();
  std::map<int, std::vector<std::vector<int>>> combos;
  for (auto [value, mult] : grouped) combos[value] = slot_combinations(q, value);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total));
  std::vector<int> remaining;
  for (auto [value, mult] : grouped) remaining.push_back(mult);
  std::vector<int> size_of(static_cast<std::size_t>(n), 0);
  int parts_left = inst.sigma().size();

  auto emit = [&]() {
    // Cartesian product of slot choices over the participating classes.
    std::vector<int> used;
    for (int i = 0; i < n; ++i)
      if (size_of[static_cast<std::size_t>(i)] > 0) used.push_back(i);
    std::vector<std::size_t> pick(used.size(), 0);
    while (true) {
      Edge e;
      for (std::size_t u = 0; u < used.size(); ++u) {
        const auto& combo = combos[size_of[static_cast<std::size_t>(used[u])]][pick[u]];
        for (int slot : combo) e.push_back({used[u], slot});
      }
      edges.push_back(std::move(e));
      std::size_t u = used.size();
      while (u > 0) {
        --u;
        const auto limit = combos[size_of[static_cast<std::size_t>(used[u])]].size();
        if (++pick[u] < limit) break;
        pick[u] = 0;
        if (u == 0) return;
      }
      if (used.empty()) return;
    }
  };

  auto rec = [&](auto&& self, int cls) -> void {
    if (parts_left == 0) {
      emit();
      return;
    }
    if (n - cls < parts_left) return;
    self(self, cls + 1);
    for (std::size_t g = 0; g < grouped.size(); ++g) {
      if (remaining[g] == 0) continue;
      --remaining[g];
      --parts_left;
      size_of[static_cast<std::size_t>(cls)] = grouped[g].first;
      self(self, cls + 1);
      size_of[static_cast<std::size_t>(cls)] = 0;
      ++parts_left;
      ++remaining[g];
    }
  };
  rec(rec, 0);

  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    if (!visit(e)) return;
  }
}

std::vector<Edge> enumerate_edges(const SigmaInstance& inst, std::uint64_t cap) {
  std::vector<Edge> out;
  for_each_edge(inst, cap, [&](const Edge& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

EdgeProfile edge_profile(const SigmaInstance& inst, std::span<const VertexRef> subset) {
  if (static_cast<int>(subset.size()) != inst.r()) {
    throw Error(ErrorCode::size, "subset has " + std::to_string(subset.size()) +
                                     " vertices, expected r=" + std::to_string(inst.r()));
  }
  std::set<VertexRef> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size()) {
    throw Error(ErrorCode::size, "subset contains a repeated vertex");
  }
  std::map<int, int> per_class;
  for (const auto& v : subset) {
    if (v.class_index < 0 || v.class_index >= inst.n() || v.slot < 0 || v.slot >= inst.q()) {
      throw Error(ErrorCode::size, "vertex out of range");
    }
    ++per_class[v.class_index];
  }
  std::vector<int> sizes;
  for (auto [cls, count] : per_class) sizes.push_back(count);
  EdgeProfile out;
  out.profile = Partition::normalize(std::move(sizes));
  out.is_edge = out.profile == inst.sigma();
  return out;
}

Verdict check_explicit(const SigmaInstance& inst, const Colouring& col,
                       const ColourBounds& bounds, std::uint64_t cap) {
  col.require_shape(inst);
  bounds.validate(inst.r());
  Verdict verdict;
  verdict.degenerate = inst.degenerate();

  std::optional<EdgeWitness> first_low, first_mono, first_high, first_rainbow;
  const bool nmnr = bounds.is_nmnr(inst.r());
  std::vector<int> seen;
  for_each_edge(inst, cap, [&](const Edge& e) {
    seen.clear();
    for (const auto& v : e) seen.push_back(col.at(v));
    std::sort(seen.begin(), seen.end());
    const int d = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    if (d < bounds.alpha) {
      if (!first_low) first_low = EdgeWitness{e, d};
      if (d == 1 && !first_mono) first_mono = EdgeWitness{e, d};
    } else if (d > bounds.beta) {
      if (!first_high) first_high = EdgeWitness{e, d};
      if (nmnr && d == inst.r() && !first_rainbow) first_rainbow = EdgeWitness{e, d};
    }
    return !first_mono;  // nothing outranks a monochromatic edge
  });

  if (first_mono) {
    verdict.status = VerdictStatus::monochromatic_edge;
    verdict.witness = first_mono;
  } else if (first_low) {
    verdict.status = VerdictStatus::bounds_violation;
    verdict.witness = first_low;
  } else if (first_rainbow) {
    verdict.status = VerdictStatus::rainbow_edge;
    verdict.witness = first_rainbow;
  } else if (first_high) {
    verdict.status = VerdictStatus::bounds_violation;
    verdict.witness = first_high;
  }
  return verdict;
}

}  // namespace sigmahg
