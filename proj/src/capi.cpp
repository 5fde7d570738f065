// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/sigmahg.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>

#include "sigmahg/constructions.hpp"
#include "sigmahg/error.hpp"
#include "sigmahg/hypergraph.hpp"
#include "sigmahg/profile.hpp"
#include "sigmahg/recolour.hpp"
#include "sigmahg/serialize.hpp"
#include "sigmahg/spectrum.hpp"
#include "sigmahg/verifier.hpp"

struct sh_instance {
  sigmahg::SigmaInstance value;
};

struct sh_colouring {
  sigmahg::Colouring value;
};

namespace {

using namespace sigmahg;

thread_local std::string g_last_error;

sh_status map(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation: return SH_ERR_VALIDATION;
    case ErrorCode::precondition: return SH_ERR_PRECONDITION;
    case ErrorCode::cap_exceeded: return SH_ERR_CAP_EXCEEDED;
    case ErrorCode::colouring: return SH_ERR_COLOURING;
    case ErrorCode::size: return SH_ERR_SIZE;
    case ErrorCode::parse: return SH_ERR_PARSE;
    case ErrorCode::internal: return SH_ERR_INTERNAL;
  }
  return SH_ERR_INTERNAL;
}

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
sh_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SH_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map(e.code());
  } catch (const ArgumentError& e) {
    g_last_error = e.what();
    return SH_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SH_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (!p) throw ArgumentError(std::string(name) + " must not be null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out, "out");
  *out = duplicate(s);
}

std::uint64_t budget_or_default(std::uint64_t b) { return b == 0 ? kDefaultBudget : b; }

std::string check_text(const Verdict& v) {
  std::ostringstream out;
  out << to_string(v.status);
  if (v.degenerate) out << " (degenerate instance)";
  if (v.witness) {
    out << " edge";
    for (const auto& x : v.witness->edge) out << " (" << x.class_index << "," << x.slot << ")";
    out << " distinct=" << v.witness->distinct;
  }
  return out.str();
}

std::string classes_text(const Colouring& col) {
  std::string out;
  for (const auto& cls : col.classes()) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + std::to_string(cls[i]);
    out += "}";
  }
  return out;
}

}  // namespace

extern "C" {

const char* sh_version(void) { return "0.1.0"; }

const char* sh_status_name(sh_status status) {
  switch (status) {
    case SH_OK: return "ok";
    case SH_ERR_VALIDATION: return "validation";
    case SH_ERR_PRECONDITION: return "precondition";
    case SH_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case SH_ERR_COLOURING: return "colouring";
    case SH_ERR_SIZE: return "size";
    case SH_ERR_PARSE: return "parse";
    case SH_ERR_INTERNAL: return "internal";
    case SH_ERR_ARGUMENT: return "argument";
  }
  return "unknown";
}

const char* sh_last_error(void) { return g_last_error.c_str(); }

void sh_string_free(char* text) { std::free(text); }

sh_status sh_instance_create(int n, int r, int q, const int* sigma, size_t parts,
                             sh_instance** out) {
  return guarded([&] {
    require(out, "out");
    if (parts > 0) require(sigma, "sigma");
    const auto p = Partition::normalize(std::vector<int>(sigma, sigma + parts));
    *out = new sh_instance{SigmaInstance::create(n, r, q, p)};
  });
}

sh_status sh_instance_from_json(const char* json, sh_instance** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sh_instance{instance_from_json(json)};
  });
}

void sh_instance_destroy(sh_instance* inst) { delete inst; }
int sh_instance_n(const sh_instance* inst) { return inst ? inst->value.n() : 0; }
int sh_instance_r(const sh_instance* inst) { return inst ? inst->value.r() : 0; }
int sh_instance_q(const sh_instance* inst) { return inst ? inst->value.q() : 0; }
int sh_instance_degenerate(const sh_instance* inst) {
  return inst && inst->value.degenerate() ? 1 : 0;
}

sh_status sh_instance_to_json(const sh_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "inst");
    emit(out, instance_to_json(inst->value));
  });
}

sh_status sh_colouring_create(int n, int q, const int* colours, sh_colouring** out) {
  return guarded([&] {
    require(colours, "colours");
    require(out, "out");
    if (n < 1 || q < 1) throw ArgumentError("n and q must be positive");
    std::vector<int> raw(colours, colours + static_cast<std::ptrdiff_t>(n) * q);
    *out = new sh_colouring{Colouring::normalized(n, q, raw)};
  });
}

sh_status sh_colouring_from_json(const char* json, sh_colouring** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sh_colouring{colouring_from_json(json)};
  });
}

void sh_colouring_destroy(sh_colouring* col) { delete col; }
int sh_colouring_k(const sh_colouring* col) { return col ? col->value.colours_used() : 0; }

sh_status sh_colouring_to_json(const sh_colouring* col, char** out) {
  return guarded([&] {
    require(col, "col");
    emit(out, colouring_to_json(col->value));
  });
}

sh_status sh_check(const sh_instance* inst, const sh_colouring* col, int alpha, int beta,
                   int cross_check, sh_format format, char** out, int* out_valid) {
  return guarded([&] {
    require(inst, "inst");
    require(col, "col");
    const ColourBounds bounds{alpha, beta};
    bounds.validate(inst->value.r());
    const Verdict fast = check_fast(inst->value, col->value, bounds);
    std::optional<Verdict> slow;
    if (cross_check) slow = check_explicit(inst->value, col->value, bounds);
    if (out_valid) *out_valid = fast.status == VerdictStatus::valid ? 1 : 0;
    if (format == SH_FORMAT_TEXT) {
      std::string text = check_text(fast) + "\n";
      if (slow) {
        text += "explicit: " + check_text(*slow) +
                (slow->status == fast.status ? " (agree)\n" : " (MISMATCH)\n");
      }
      emit(out, text);
    } else {
      emit(out, verdict_to_json(inst->value, bounds, fast, slow ? &*slow : nullptr));
    }
  });
}

sh_status sh_random_check(const sh_instance* inst, int alpha, int beta, int count,
                          uint64_t seed, int max_colours, char** out, int* out_mismatches) {
  return guarded([&] {
    require(inst, "inst");
    if (count < 0) throw ArgumentError("count must be non-negative");
    if (max_colours < 1) throw ArgumentError("max_colours must be positive");
    const auto& h = inst->value;
    const ColourBounds bounds{alpha, beta};
    bounds.validate(h.r());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, max_colours);
    int mismatches = 0;
    int valid = 0;
    std::string first_mismatch;
    for (int i = 0; i < count; ++i) {
      std::vector<int> raw(static_cast<std::size_t>(h.vertex_count()));
      for (auto& c : raw) c = pick(rng);
      const auto col = Colouring::normalized(h.n(), h.q(), raw);
      const auto fast = check_fast(h, col, bounds);
      const auto slow = check_explicit(h, col, bounds);
      if (fast.status == VerdictStatus::valid) ++valid;
      if (fast.status != slow.status) {
        if (mismatches == 0) first_mismatch = colouring_to_json(col);
        ++mismatches;
      }
    }
    if (out_mismatches) *out_mismatches = mismatches;
    std::ostringstream text;
    text << "{\"schema\":\"" << kSchema << "\",\"samples\":" << count << ",\"seed\":" << seed
         << ",\"valid\":" << valid << ",\"mismatches\":" << mismatches;
    if (!first_mismatch.empty()) text << ",\"first_mismatch\":" << first_mismatch;
    text << "}";
    emit(out, text.str());
  });
}

sh_status sh_spectrum(const sh_instance* inst, int alpha, int beta, int k_max, uint64_t budget,
                      sh_format format, char** out) {
  return guarded([&] {
    require(inst, "inst");
    const int top = k_max == 0 ? inst->value.vertex_count() : k_max;
    const auto report =
        compute_spectrum(inst->value, ColourBounds{alpha, beta}, top, budget_or_default(budget));
    emit(out, format == SH_FORMAT_TEXT ? spectrum_to_text(report) : spectrum_to_json(report));
  });
}

sh_status sh_construct(const sh_instance* inst, const char* scheme, int param, sh_format format,
                       char** out) {
  return guarded([&] {
    require(inst, "inst");
    require(scheme, "scheme");
    const auto parsed = parse_scheme(scheme);
    if (!parsed) throw ArgumentError(std::string("unknown scheme '") + scheme + "'");
    const SchemeId id{*parsed, param};
    const auto col = construct(inst->value, id);
    const auto verdict = check_fast(inst->value, col, scheme_bounds(inst->value, id));
    if (format == SH_FORMAT_TEXT) {
      emit(out, to_string(id) + " k=" + std::to_string(col.colours_used()) + " " +
                    classes_text(col) + "\nself-check: " + check_text(verdict) + "\n");
    } else {
      emit(out, construction_to_json(inst->value, id, col, verdict));
    }
  });
}

sh_status sh_list_constructions(const sh_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "inst");
    std::string text;
    for (const auto& id : applicable_constructions(inst->value)) text += to_string(id) + "\n";
    emit(out, text);
  });
}

sh_status sh_walk(const sh_instance* inst, const sh_colouring* col, sh_direction direction,
                  int target_k, int step_limit, char** out) {
  return guarded([&] {
    require(inst, "inst");
    require(col, "col");
    if (step_limit < 0) throw ArgumentError("step limit must be non-negative");
    const auto dir = direction == SH_WALK_UP ? WalkDirection::up : WalkDirection::down;
    emit(out, walk_to_jsonl(spectrum_walk(inst->value, col->value, dir, target_k, step_limit)));
  });
}

sh_status sh_verify(const sh_instance* inst, int alpha, int beta, uint64_t budget, int k_max,
                    sh_format format, char** out, int* out_refuted) {
  return guarded([&] {
    require(inst, "inst");
    std::optional<int> top;
    if (k_max != 0) top = k_max;
    const auto report =
        verify_instance(inst->value, ColourBounds{alpha, beta}, budget_or_default(budget), top);
    if (out_refuted) *out_refuted = report.count(ClaimStatus::refuted);
    emit(out, format == SH_FORMAT_TEXT ? verification_to_text(report)
                                       : verification_to_json(report));
  });
}

sh_status sh_sweep(int n, int r, int q, int alpha, int beta, uint64_t budget, sh_format format,
                   char** out, int* out_refuted) {
  return guarded([&] {
    if (r < 3) throw Error(ErrorCode::validation, "sweep needs r >= 3");
    int refuted = 0;
    std::string text = format == SH_FORMAT_TEXT
                           ? std::string()
                           : "{\"schema\":\"" + std::string(kSchema) + "\",\"reports\":[";
    bool first = true;
    for (const auto& sigma : enumerate_partitions(r, 2)) {
      const auto inst = SigmaInstance::create(n, r, q, sigma);
      const ColourBounds bounds =
          alpha == 0 && beta == 0 ? ColourBounds::nmnr(r) : ColourBounds{alpha, beta};
      const auto report = verify_instance(inst, bounds, budget_or_default(budget));
      refuted += report.count(ClaimStatus::refuted);
      if (format == SH_FORMAT_TEXT) {
        text += verification_to_text(report);
      } else {
        text += (first ? "" : ",") + verification_to_json(report);
      }
      first = false;
    }
    if (format != SH_FORMAT_TEXT) text += "],\"refuted\":" + std::to_string(refuted) + "}";
    if (out_refuted) *out_refuted = refuted;
    emit(out, text);
  });
}

}  // extern "C"
