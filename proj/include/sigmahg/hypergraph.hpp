// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigmahg/partition.hpp"

namespace sigmahg {

/// H(n,r,q|sigma): n classes of q vertices; an r-subset is an edge when its
/// nonzero class-intersection sizes form sigma.
class SigmaInstance {
 public:
  /// Throws Error(validation) listing every violated condition.
  static SigmaInstance create(int n, int r, int q, const Partition& sigma);

  /// H(2n,r) = H(n,r,2|(2,1^{r-2})).
  static SigmaInstance h2n(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int q() const { return q_; }
  const Partition& sigma() const { return sigma_; }
  int vertex_count() const { return n_ * q_; }
  bool degenerate() const { return degenerate_; }

  /// True for H(n,r,2|(2,1^{r-2})).
  bool is_h2n() const;

  std::string to_string() const;

  bool operator==(const SigmaInstance&) const = default;

 private:
  int n_ = 0;
  int r_ = 0;
  int q_ = 0;
  Partition sigma_;
  bool degenerate_ = false;
};

struct VertexRef {
  int class_index = 0;
  int slot = 0;

  auto operator<=>(const VertexRef&) const = default;
};

using Edge = std::vector<VertexRef>;

struct ColourBounds {
  int alpha = 2;
  int beta = 2;

  static ColourBounds nmnr(int r) { return {2, r - 1}; }
  static ColourBounds classical(int r) { return {2, r}; }
  bool is_nmnr(int r) const { return alpha == 2 && beta == r - 1; }

  /// Throws Error(validation) unless 1 <= alpha <= beta <= r.
  void validate(int r) const;

  bool operator==(const ColourBounds&) const = default;
};

/// A surjective colouring of the nq vertices with colours 1..colours_used.
/// Vertex (i, j) is stored at index i*q + j.
class Colouring {
 public:
  Colouring() = default;

  /// Requires every colour of 1..k to appear, k = max entry. Throws
  /// Error(colouring) otherwise.
  static Colouring exact(int n, int q, std::vector<int> assignment);

  /// Relabels arbitrary positive colours onto 1..k preserving their order.
  static Colouring normalized(int n, int q, std::span<const int> raw);

  /// Per-class lists, outer size n, inner size q; normalised.
  static Colouring from_classes(const std::vector<std::vector<int>>& classes);

  int n() const { return n_; }
  int q() const { return q_; }
  int colours_used() const { return colours_used_; }
  int at(int class_index, int slot) const {
    return assignment_[static_cast<std::size_t>(class_index * q_ + slot)];
  }
  int at(VertexRef v) const { return at(v.class_index, v.slot); }
  std::span<const int> assignment() const { return assignment_; }
  std::span<const int> class_colours(int class_index) const {
    return std::span<const int>(assignment_).subspan(
        static_cast<std::size_t>(class_index * q_), static_cast<std::size_t>(q_));
  }
  std::vector<std::vector<int>> classes() const;

  /// Throws Error(colouring) if the shape does not match the instance.
  void require_shape(const SigmaInstance& inst) const;

  bool operator==(const Colouring&) const = default;

 private:
  int n_ = 0;
  int q_ = 0;
  int colours_used_ = 0;
  std::vector<int> assignment_;
};

enum class VerdictStatus { valid, monochromatic_edge, rainbow_edge, bounds_violation };

const char* to_string(VerdictStatus s);

struct EdgeWitness {
  Edge edge;
  int distinct = 0;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::valid;
  std::optional<EdgeWitness> witness;
  bool degenerate = false;
};

/// Status for an edge with `distinct` colours that violates `bounds`.
VerdictStatus classify_violation(int distinct, int r, const ColourBounds& bounds);

/// Closed-form edge count: ordered choice of classes for the parts, divided
/// by part multiplicities, times per-class binomials.
std::uint64_t count_edges(const SigmaInstance& inst);

/// Calls `visit` for every edge in lexicographic vertex order until it
/// returns false. Throws Error(cap_exceeded) when more than `cap` edges exist.
void for_each_edge(const SigmaInstance& inst, std::uint64_t cap,
                   const std::function<bool(const Edge&)>& visit);

/// All edges, sorted lexicographically by (class, slot).
std::vector<Edge> enumerate_edges(const SigmaInstance& inst, std::uint64_t cap = 1'000'000);

struct EdgeProfile {
  Partition profile;  // nonzero class-intersection sizes, normalised
  bool is_edge = false;
};

/// Throws Error(size) unless the subset has exactly r distinct in-range
/// vertices.
EdgeProfile edge_profile(const SigmaInstance& inst, std::span<const VertexRef> subset);

/// Ground-truth checker: scans every edge. If some edge has fewer than alpha
/// colours the first such edge is reported, otherwise the first edge with more
/// than beta colours.
Verdict check_explicit(const SigmaInstance& inst, const Colouring& col,
                       const ColourBounds& bounds, std::uint64_t cap = 1'000'000);

}  // namespace sigmahg
