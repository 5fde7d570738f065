// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sigmahg/hypergraph.hpp"

namespace oracle {

using sigmahg::Colouring;
using sigmahg::ColourBounds;
using sigmahg::SigmaInstance;

// Parts of the multiset of nonzero class intersections of a vertex subset
// (vertex v lives in class v / q), sorted non-increasing.
inline std::vector<int> intersection_profile(const std::vector<int>& subset, int q) {
  std::map<int, int> per_class;
  for (int v : subset) ++per_class[v / q];
  std::vector<int> out;
  for (const auto& [cls, cnt] : per_class) out.push_back(cnt);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Every r-subset of the nq vertices, in lexicographic order of vertex ids.
inline void for_each_r_subset(int nq, int r, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (r > nq) return;
  while (true) {
    f(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == nq - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Edges as sorted vertex-id lists, by scanning all r-subsets.
inline std::vector<std::vector<int>> edges_by_scan(const SigmaInstance& inst) {
  const std::vector<int> sigma(inst.sigma().parts().begin(), inst.sigma().parts().end());
  std::vector<std::vector<int>> out;
  for_each_r_subset(inst.vertex_count(), inst.r(), [&](const std::vector<int>& s) {
    if (intersection_profile(s, inst.q()) == sigma) out.push_back(s);
  });
  return out;
}

inline int distinct_on(const std::vector<int>& edge, const std::vector<int>& colours) {
  std::set<int> seen;
  for (int v : edge) seen.insert(colours[static_cast<std::size_t>(v)]);
  return static_cast<int>(seen.size());
}

// Min and max distinct-colour counts over the given edges; {0,0} if none.
inline std::pair<int, int> distinct_range(const std::vector<std::vector<int>>& edges,
                                          const std::vector<int>& colours) {
  if (edges.empty()) return {0, 0};
  int lo = 1 << 30;
  int hi = 0;
  for (const auto& e : edges) {
    const int d = distinct_on(e, colours);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

inline bool valid(const std::vector<std::vector<int>>& edges, const std::vector<int>& colours,
                  const ColourBounds& b) {
  for (const auto& e : edges) {
    const int d = distinct_on(e, colours);
    if (d < b.alpha || d > b.beta) return false;
  }
  return true;
}

// Calls f on every restricted-growth string of length len with at most
// max_blocks blocks (colours 1..), i.e. every surjective colouring up to
// colour relabelling.
inline void for_each_rgs(int len, int max_blocks, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == len) {
      f(a);
      return;
    }
    for (int c = 1; c <= std::min(used + 1, max_blocks); ++c) {
      a[static_cast<std::size_t>(pos)] = c;
      rec(pos + 1, std::max(used, c));
    }
  };
  rec(0, 0);
}

inline int colours_in(const std::vector<int>& a) { return *std::max_element(a.begin(), a.end()); }

// Naive exact-k decision: tries every colouring with exactly k colours (one
// representative per relabelling class).
inline bool k_colourable(const SigmaInstance& inst, int k, const ColourBounds& b) {
  const auto edges = edges_by_scan(inst);
  bool found = false;
  for_each_rgs(inst.vertex_count(), k, [&](const std::vector<int>& a) {
    if (found || colours_in(a) != k) return;
    if (valid(edges, a, b)) found = true;
  });
  return found;
}

// Set of k with a valid colouring, k = 1..k_max.
inline std::vector<int> spectrum(const SigmaInstance& inst, const ColourBounds& b, int k_max) {
  const auto edges = edges_by_scan(inst);
  std::vector<bool> yes(static_cast<std::size_t>(k_max) + 1, false);
  for_each_rgs(inst.vertex_count(), k_max, [&](const std::vector<int>& a) {
    const int k = colours_in(a);
    if (!yes[static_cast<std::size_t>(k)] && valid(edges, a, b)) yes[static_cast<std::size_t>(k)] = true;
  });
  std::vector<int> out;
  for (int k = 1; k <= k_max; ++k)
    if (yes[static_cast<std::size_t>(k)]) out.push_back(k);
  return out;
}

// Uniform colours 1..palette, then relabelled to 1..k.
inline Colouring random_colouring(const SigmaInstance& inst, int palette, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, palette);
  std::vector<int> raw(static_cast<std::size_t>(inst.vertex_count()));
  for (auto& c : raw) c = pick(rng);
  return Colouring::normalized(inst.n(), inst.q(), raw);
}

// Every valid (n, r, q, sigma) with n*q <= max_nq and r <= max_r; sigma
// ranges over all partitions of r with at least two parts.
inline std::vector<SigmaInstance> small_instances(int max_nq, int max_r, bool include_degenerate) {
  std::vector<SigmaInstance> out;
  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> parts =
      [&](int rest, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
        if (rest == 0) {
          if (cur.size() >= 2) acc.push_back(cur);
          return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
          cur.push_back(p);
          parts(rest - p, p, cur, acc);
          cur.pop_back();
        }
      };
  for (int r = 3; r <= max_r; ++r) {
    std::vector<std::vector<int>> sigmas;
    std::vector<int> cur;
    parts(r, r, cur, sigmas);
    for (const auto& s : sigmas) {
      for (int q = 1; q <= max_nq; ++q) {
        for (int n = 1; n * q <= max_nq; ++n) {
          if (n * q < r) continue;
          auto inst = SigmaInstance::create(n, r, q, sigmahg::Partition::normalize(s));
          if (!include_degenerate && inst.degenerate()) continue;
          out.push_back(inst);
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
