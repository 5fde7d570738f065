// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/recolour.hpp"

#include <algorithm>
#include <set>

#include "sigmahg/error.hpp"
#include "sigmahg/profile.hpp"

namespace sigmahg {

namespace {

void require_hypotheses(const SigmaInstance& inst, const Colouring& col) {
  col.require_shape(inst);
  const auto st = inst.sigma().stats();
  if (st.delta_min < 2) {
    throw Error(ErrorCode::precondition, "re-colouring needs smallest part >= 2, " +
                                             inst.to_string() + " has " +
                                             std::to_string(st.delta_min));
  }
  const auto verdict = check_fast(inst, col, ColourBounds::nmnr(inst.r()));
  if (verdict.status != VerdictStatus::valid) {
    throw Error(ErrorCode::precondition, std::string("input colouring is not NMNR-valid: ") +
                                             to_string(verdict.status));
  }
}

void require_class(const SigmaInstance& inst, int class_index) {
  if (class_index < 0 || class_index >= inst.n()) {
    throw Error(ErrorCode::precondition, "class index " + std::to_string(class_index) +
                                             " out of range");
  }
}

Colouring finish(const SigmaInstance& inst, std::vector<int> raw) {
  auto out = Colouring::normalized(inst.n(), inst.q(), raw);
  const auto verdict = check_fast(inst, out, ColourBounds::nmnr(inst.r()));
  if (verdict.status != VerdictStatus::valid) {
    throw Error(ErrorCode::internal, std::string("re-colouring broke NMNR validity: ") +
                                         to_string(verdict.status));
  }
  return out;
}

bool monochromatic(const Colouring& col, int class_index) {
  auto cls = col.class_colours(class_index);
  return std::all_of(cls.begin(), cls.end(), [&](int c) { return c == cls.front(); });
}

}  // namespace

std::vector<int> private_colours(const Colouring& col, int class_index) {
  std::set<int> elsewhere;
  for (int i = 0; i < col.n(); ++i) {
    if (i == class_index) continue;
    for (int c : col.class_colours(i)) elsewhere.insert(c);
  }
  std::set<int> out;
  for (int c : col.class_colours(class_index))
    if (!elsewhere.count(c)) out.insert(c);
  return {out.begin(), out.end()};
}

Colouring collapse_class(const SigmaInstance& inst, const Colouring& col, int class_index) {
  require_class(inst, class_index);
  require_hypotheses(inst, col);
  std::vector<int> raw(col.assignment().begin(), col.assignment().end());
  const int fresh = col.colours_used() + 1;
  for (int slot = 0; slot < inst.q(); ++slot) raw[static_cast<std::size_t>(class_index * inst.q() + slot)] = fresh;
  return finish(inst, std::move(raw));
}

Colouring merge_private_colours(const SigmaInstance& inst, const Colouring& col, int class_index,
                                int x, int y) {
  require_class(inst, class_index);
  if (x == y) throw Error(ErrorCode::precondition, "merge needs two different colours");
  require_hypotheses(inst, col);
  auto cls = col.class_colours(class_index);
  for (int c : {x, y}) {
    if (std::find(cls.begin(), cls.end(), c) == cls.end()) {
      throw Error(ErrorCode::precondition, "colour " + std::to_string(c) + " does not occur in class " +
                                               std::to_string(class_index));
    }
  }
  std::vector<int> offending;
  for (int i = 0; i < inst.n(); ++i) {
    if (i == class_index) continue;
    for (int c : col.class_colours(i)) {
      if (c == x || c == y) {
        offending.push_back(i);
        break;
      }
    }
  }
  if (!offending.empty()) {
    std::string list;
    for (int i : offending) list += (list.empty() ? "" : ",") + std::to_string(i);
    throw Error(ErrorCode::precondition, "colours must be private to class " +
                                             std::to_string(class_index) +
                                             "; also found in classes " + list);
  }
  std::vector<int> raw(col.assignment().begin(), col.assignment().end());
  const int fresh = col.colours_used() + 1;
  for (int slot = 0; slot < inst.q(); ++slot) {
    auto& v = raw[static_cast<std::size_t>(class_index * inst.q() + slot)];
    if (v == x || v == y) v = fresh;
  }
  return finish(inst, std::move(raw));
}

const char* to_string(WalkDirection d) { return d == WalkDirection::down ? "down" : "up"; }
const char* to_string(WalkTransform t) { return t == WalkTransform::collapse ? "collapse" : "merge"; }
const char* to_string(WalkTerminal t) {
  switch (t) {
    case WalkTerminal::target_reached: return "TARGET_REACHED";
    case WalkTerminal::no_rule_applies: return "NO_RULE_APPLIES";
    case WalkTerminal::limit: return "LIMIT";
  }
  return "?";
}

WalkTrace spectrum_walk(const SigmaInstance& inst, const Colouring& col, WalkDirection direction,
                        int target_k, int step_limit) {
  require_hypotheses(inst, col);
  const int start = col.colours_used();
  if ((direction == WalkDirection::down && target_k > start) ||
      (direction == WalkDirection::up && target_k < start)) {
    throw Error(ErrorCode::precondition, "target k=" + std::to_string(target_k) + " lies " +
                                             (direction == WalkDirection::down ? "above" : "below") +
                                             " the starting k=" + std::to_string(start));
  }
  WalkTrace trace;
  trace.direction = direction;
  trace.start_k = start;
  trace.target_k = target_k;
  Colouring current = col;
  while (true) {
    if (current.colours_used() == target_k) {
      trace.terminal = WalkTerminal::target_reached;
      break;
    }
    if (static_cast<int>(trace.steps.size()) >= step_limit) {
      trace.terminal = WalkTerminal::limit;
      break;
    }
    int cls = -1;
    for (int i = 0; i < inst.n() && cls < 0; ++i)
      if (!monochromatic(current, i)) cls = i;
    if (cls < 0) {
      trace.terminal = WalkTerminal::no_rule_applies;
      break;
    }
    const auto priv = private_colours(current, cls);
    WalkStep step;
    step.class_index = cls;
    if (priv.size() >= 2) {
      step.transform = WalkTransform::merge;
      step.colours = {priv[0], priv[1]};
      current = merge_private_colours(inst, current, cls, priv[0], priv[1]);
    } else {
      step.transform = WalkTransform::collapse;
      std::set<int> colours(current.class_colours(cls).begin(), current.class_colours(cls).end());
      step.colours.assign(colours.begin(), colours.end());
      current = collapse_class(inst, current, cls);
    }
    step.k = current.colours_used();
    step.colouring = current;
    trace.steps.push_back(std::move(step));
  }
  trace.final_colouring = current;
  return trace;
}

}  // namespace sigmahg
