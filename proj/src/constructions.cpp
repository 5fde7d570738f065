// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/constructions.hpp"

#include <cctype>

#include "sigmahg/error.hpp"
#include "sigmahg/profile.hpp"

namespace sigmahg {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

[[noreturn]] void refuse(const std::string& what) { throw Error(ErrorCode::precondition, what); }

bool is_partition(const SigmaInstance& inst, std::initializer_list<int> parts) {
  return inst.sigma() == Partition::normalize(std::vector<int>(parts));
}

// H(2n,r) small-r family requirement n >= 2(r-2)(r-1)+1.
int small_r_min_n(int r) { return 2 * (r - 2) * (r - 1) + 1; }

Colouring checked(const SigmaInstance& inst, const SchemeId& id, Colouring col) {
  const auto bounds = scheme_bounds(inst, id);
  const auto verdict = check_fast(inst, col, bounds);
  if (verdict.status != VerdictStatus::valid) {
    throw Error(ErrorCode::internal, to_string(id) + " produced an invalid colouring on " +
                                         inst.to_string() + ": " + to_string(verdict.status));
  }
  if (col.colours_used() != advertised_colours(inst, id)) {
    throw Error(ErrorCode::internal, to_string(id) + " used the wrong number of colours");
  }
  return col;
}

Colouring from_class_colours(const SigmaInstance& inst, const std::vector<std::vector<int>>& cls) {
  std::vector<int> flat;
  for (const auto& c : cls) flat.insert(flat.end(), c.begin(), c.end());
  return Colouring::exact(inst.n(), inst.q(), std::move(flat));
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::zone: return "ZONE";
    case Scheme::block: return "BLOCK";
    case Scheme::two_zone: return "TWO_ZONE";
    case Scheme::small_r4_k3: return "SMALL_R4_K3";
    case Scheme::small_r5_k3: return "SMALL_R5_K3";
    case Scheme::small_r5_k4: return "SMALL_R5_K4";
    case Scheme::two_two_low: return "TWO_TWO_LOW";
    case Scheme::two_two_high: return "TWO_TWO_HIGH";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  std::string upper;
  for (char ch : name) upper.push_back(ch == '-' ? '_' : static_cast<char>(std::toupper(ch)));
  for (Scheme s : {Scheme::zone, Scheme::block, Scheme::two_zone, Scheme::small_r4_k3,
                   Scheme::small_r5_k3, Scheme::small_r5_k4, Scheme::two_two_low,
                   Scheme::two_two_high}) {
    if (upper == to_string(s)) return s;
  }
  return std::nullopt;
}

std::string to_string(const SchemeId& id) {
  std::string out = to_string(id.scheme);
  if (id.scheme == Scheme::zone) out += "(k=" + std::to_string(id.param) + ")";
  if (id.scheme == Scheme::two_zone) out += "(t=" + std::to_string(id.param) + ")";
  return out;
}

Colouring zone_colouring(const SigmaInstance& inst, int k) {
  const auto st = inst.sigma().stats();
  if (st.delta_max <= 1) refuse("ZONE needs delta_max(sigma) > 1");
  const int lo = ceil_div(inst.n(), st.s - 1);
  if (k < lo || k > inst.n()) {
    refuse("ZONE needs " + std::to_string(lo) + " <= k <= " + std::to_string(inst.n()) +
           ", got k=" + std::to_string(k));
  }
  const int base = inst.n() / k;
  const int extra = inst.n() % k;
  std::vector<int> flat;
  for (int colour = 1; colour <= k; ++colour) {
    const int classes = base + (colour <= extra ? 1 : 0);
    for (int i = 0; i < classes * inst.q(); ++i) flat.push_back(colour);
  }
  return checked(inst, {Scheme::zone, k}, Colouring::exact(inst.n(), inst.q(), std::move(flat)));
}

Colouring block_colouring(const SigmaInstance& inst) {
  const auto st = inst.sigma().stats();
  if (st.delta_min != 1 || st.delta_max <= 1) refuse("BLOCK needs delta_min = 1 < delta_max");
  const int rep = st.delta_max - 1;
  if (inst.q() != (inst.r() - 1) * rep) {
    refuse("BLOCK needs q = (r-1)(delta_max-1) = " + std::to_string((inst.r() - 1) * rep) +
           ", got q=" + std::to_string(inst.q()));
  }
  std::vector<int> cls;
  for (int slot = 0; slot < inst.q(); ++slot) cls.push_back(slot / rep + 1);
  return checked(inst, {Scheme::block, 0},
                 from_class_colours(inst, std::vector<std::vector<int>>(
                                              static_cast<std::size_t>(inst.n()), cls)));
}

Colouring two_zone_colouring(const SigmaInstance& inst, int t) {
  if (!inst.is_h2n() || inst.r() < 6) refuse("TWO_ZONE needs H(2n,r) with r >= 6");
  if (t < 0 || t > inst.r() - 4) {
    refuse("TWO_ZONE needs 0 <= t <= r-4 = " + std::to_string(inst.r() - 4) +
           ", got t=" + std::to_string(t));
  }
  if (inst.n() <= t) refuse("TWO_ZONE needs n > t");
  std::vector<std::vector<int>> cls;
  for (int i = 0; i < inst.n(); ++i) {
    if (i < t) {
      cls.push_back({3 + 2 * i, 4 + 2 * i});
    } else {
      cls.push_back({1, 2});
    }
  }
  return checked(inst, {Scheme::two_zone, t}, from_class_colours(inst, cls));
}

Colouring small_r_colouring(const SigmaInstance& inst, Scheme scheme) {
  int r = 0;
  if (scheme == Scheme::small_r4_k3) {
    r = 4;
  } else if (scheme == Scheme::small_r5_k3 || scheme == Scheme::small_r5_k4) {
    r = 5;
  } else {
    refuse(std::string(to_string(scheme)) + " is not a small-r scheme");
  }
  if (!inst.is_h2n() || inst.r() != r) {
    refuse(std::string(to_string(scheme)) + " needs H(2n," + std::to_string(r) + "), got " +
           inst.to_string());
  }
  if (inst.n() < small_r_min_n(r)) {
    refuse(std::string(to_string(scheme)) + " needs n >= " + std::to_string(small_r_min_n(r)));
  }
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(inst.n()), std::vector<int>{1, 2});
  if (scheme == Scheme::small_r5_k4) {
    cls[static_cast<std::size_t>(inst.n() - 2)] = {3, 3};
    cls[static_cast<std::size_t>(inst.n() - 1)] = {4, 4};
  } else {
    cls.back() = {3, 3};
  }
  return checked(inst, {scheme, 0}, from_class_colours(inst, cls));
}

Colouring two_two_colouring(const SigmaInstance& inst, Scheme scheme) {
  if (scheme != Scheme::two_two_low && scheme != Scheme::two_two_high) {
    refuse(std::string(to_string(scheme)) + " is not a (2,2) scheme");
  }
  if (inst.q() != 2 || !is_partition(inst, {2, 2}) || inst.n() < 4) {
    refuse(std::string(to_string(scheme)) + " needs H(n,4,2|(2,2)) with n >= 4, got " +
           inst.to_string());
  }
  std::vector<std::vector<int>> cls;
  for (int i = 0; i < inst.n(); ++i) {
    if (scheme == Scheme::two_two_low) {
      cls.push_back({1, 2});
    } else {
      cls.push_back({i + 1, i + 1});
    }
  }
  return checked(inst, {scheme, 0}, from_class_colours(inst, cls));
}

Colouring construct(const SigmaInstance& inst, const SchemeId& id) {
  switch (id.scheme) {
    case Scheme::zone: return zone_colouring(inst, id.param);
    case Scheme::block: return block_colouring(inst);
    case Scheme::two_zone: return two_zone_colouring(inst, id.param);
    case Scheme::small_r4_k3:
    case Scheme::small_r5_k3:
    case Scheme::small_r5_k4: return small_r_colouring(inst, id.scheme);
    case Scheme::two_two_low:
    case Scheme::two_two_high: return two_two_colouring(inst, id.scheme);
  }
  refuse("unknown scheme");
}

ColourBounds scheme_bounds(const SigmaInstance& inst, const SchemeId& id) {
  if (id.scheme == Scheme::two_two_low || id.scheme == Scheme::two_two_high) return {2, 2};
  return ColourBounds::nmnr(inst.r());
}

int advertised_colours(const SigmaInstance& inst, const SchemeId& id) {
  switch (id.scheme) {
    case Scheme::zone: return id.param;
    case Scheme::block: return inst.r() - 1;
    case Scheme::two_zone: return 2 + 2 * id.param;
    case Scheme::small_r4_k3:
    case Scheme::small_r5_k3: return 3;
    case Scheme::small_r5_k4: return 4;
    case Scheme::two_two_low: return 2;
    case Scheme::two_two_high: return inst.n();
  }
  return 0;
}

std::vector<SchemeId> applicable_constructions(const SigmaInstance& inst) {
  std::vector<SchemeId> out;
  const auto st = inst.sigma().stats();
  if (st.delta_max > 1) {
    for (int k = ceil_div(inst.n(), st.s - 1); k <= inst.n(); ++k) out.push_back({Scheme::zone, k});
  }
  if (st.delta_min == 1 && st.delta_max > 1 && inst.q() == (inst.r() - 1) * (st.delta_max - 1)) {
    out.push_back({Scheme::block, 0});
  }
  if (inst.is_h2n()) {
    if (inst.r() >= 6) {
      for (int t = 0; t <= inst.r() - 4 && t < inst.n(); ++t) out.push_back({Scheme::two_zone, t});
    }
    if (inst.r() == 4 && inst.n() >= small_r_min_n(4)) out.push_back({Scheme::small_r4_k3, 0});
    if (inst.r() == 5 && inst.n() >= small_r_min_n(5)) {
      out.push_back({Scheme::small_r5_k3, 0});
      out.push_back({Scheme::small_r5_k4, 0});
    }
  }
  if (inst.q() == 2 && is_partition(inst, {2, 2}) && inst.n() >= 4) {
    out.push_back({Scheme::two_two_low, 0});
    out.push_back({Scheme::two_two_high, 0});
  }
  return out;
}

}  // namespace sigmahg
