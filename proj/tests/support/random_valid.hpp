// SPDX-License-Identifier: Apache-2.0
// Random NMNR-valid colourings: start at search witnesses and take random
// single-vertex recolourings that keep the colouring valid.
#pragma once

#include <random>
#include <vector>

#include "sigmahg/profile.hpp"
#include "sigmahg/spectrum.hpp"

namespace support {

inline std::vector<sigmahg::Colouring> seed_witnesses(const sigmahg::SigmaInstance& inst,
                                                      const sigmahg::ColourBounds& b) {
  std::vector<sigmahg::Colouring> out;
  for (int k = 1; k <= inst.vertex_count(); ++k) {
    const auto v = sigmahg::resolve_k(inst, k, b);
    if (v.witness) out.push_back(*v.witness);
  }
  return out;
}

// `steps` attempted moves from `start`; returns the colouring reached.
inline sigmahg::Colouring perturb(const sigmahg::SigmaInstance& inst, sigmahg::Colouring start,
                                  const sigmahg::ColourBounds& b, int steps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vertex(0, inst.vertex_count() - 1);
  for (int i = 0; i < steps; ++i) {
    std::vector<int> raw(start.assignment().begin(), start.assignment().end());
    std::uniform_int_distribution<int> colour(1, start.colours_used() + 1);
    raw[static_cast<std::size_t>(vertex(rng))] = colour(rng);
    auto next = sigmahg::Colouring::normalized(inst.n(), inst.q(), raw);
    if (sigmahg::is_valid(inst, next, b)) start = std::move(next);
  }
  return start;
}

}  // namespace support
