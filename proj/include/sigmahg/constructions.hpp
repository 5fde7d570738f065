// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigmahg/hypergraph.hpp"

namespace sigmahg {

enum class Scheme {
  zone,
  block,
  two_zone,
  small_r4_k3,
  small_r5_k3,
  small_r5_k4,
  two_two_low,
  two_two_high,
};

const char* to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct SchemeId {
  Scheme scheme = Scheme::zone;
  int param = 0;  // k for zone, t for two_zone, unused otherwise

  bool operator==(const SchemeId&) const = default;
};

std::string to_string(const SchemeId& id);

// Every function below throws Error(precondition) when the instance or
// parameter is outside the scheme's hypotheses, and guarantees its output
// passes check_fast under scheme_bounds().

/// Monochromatic classes, colours in contiguous balanced blocks of at most
/// s-1 classes. Needs largest part > 1 and ceil(n/(s-1)) <= k <= n.
Colouring zone_colouring(const SigmaInstance& inst, int k);

/// Every class holds colours 1..r-1, each delta_max-1 times. Needs
/// smallest part 1 < largest part and q = (r-1)(delta_max-1).
Colouring block_colouring(const SigmaInstance& inst);

/// H(2n,r), r >= 6: classes 0..t-1 get two fresh colours each, the rest
/// {1,2}; 2+2t colours for 0 <= t <= r-4 < n.
Colouring two_zone_colouring(const SigmaInstance& inst, int t);

/// H(2n,4) / H(2n,5) small-k colourings: all classes {1,2} except the last
/// one (or two) which are monochromatic in fresh colours.
Colouring small_r_colouring(const SigmaInstance& inst, Scheme scheme);

/// H(n,4,2|(2,2)), n >= 4: LOW colours every class {1,2}, HIGH gives each
/// class its own colour. Valid (2,2)-colourings.
Colouring two_two_colouring(const SigmaInstance& inst, Scheme scheme);

Colouring construct(const SigmaInstance& inst, const SchemeId& id);

/// Bounds the scheme is contracted against: (2,2) for the two_two schemes,
/// NMNR otherwise.
ColourBounds scheme_bounds(const SigmaInstance& inst, const SchemeId& id);

/// Number of colours the scheme uses on this instance.
int advertised_colours(const SigmaInstance& inst, const SchemeId& id);

/// Every scheme (with parameter) whose preconditions hold on `inst`.
std::vector<SchemeId> applicable_constructions(const SigmaInstance& inst);

}  // namespace sigmahg
