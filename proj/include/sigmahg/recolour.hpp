// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "sigmahg/hypergraph.hpp"

namespace sigmahg {

// Re-colouring moves for instances whose smallest part is at least 2. Both
// refuse (Error(precondition)) when that hypothesis fails or the input is not
// NMNR-valid, and both return colourings renormalised to 1..k'.

/// Gives every vertex of the class one fresh colour.
/// Resulting k = old k - (colours private to the class) + 1.
Colouring collapse_class(const SigmaInstance& inst, const Colouring& col, int class_index);

/// Replaces colours x and y, which must both occur in the class and nowhere
/// else, by one fresh colour.
Colouring merge_private_colours(const SigmaInstance& inst, const Colouring& col, int class_index,
                                int x, int y);

/// Colours of `class_index` that occur in no other class, ascending.
std::vector<int> private_colours(const Colouring& col, int class_index);

enum class WalkDirection { down, up };
enum class WalkTransform { collapse, merge };
enum class WalkTerminal { target_reached, no_rule_applies, limit };

const char* to_string(WalkDirection d);
const char* to_string(WalkTransform t);
const char* to_string(WalkTerminal t);

struct WalkStep {
  WalkTransform transform = WalkTransform::collapse;
  int class_index = 0;
  std::vector<int> colours;  // colours rewritten, in the pre-step labelling
  int k = 0;                 // colours used after the step
  Colouring colouring;       // state after the step
};

struct WalkTrace {
  WalkDirection direction = WalkDirection::down;
  int start_k = 0;
  int target_k = 0;
  std::vector<WalkStep> steps;
  WalkTerminal terminal = WalkTerminal::no_rule_applies;
  Colouring final_colouring;
};

/// Heuristic walk: on the lowest-index non-monochromatic class, collapse it
/// if it has at most one private colour, otherwise merge its two smallest
/// private colours. Stops at target_k, when every class is monochromatic, or
/// after step_limit steps. Every step changes k by at most one, so a target
/// between the start and any visited k is hit exactly. A failure to reach the
/// target says nothing about colourability.
WalkTrace spectrum_walk(const SigmaInstance& inst, const Colouring& col, WalkDirection direction,
                        int target_k, int step_limit = 1000);

}  // namespace sigmahg
