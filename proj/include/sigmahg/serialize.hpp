// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "sigmahg/constructions.hpp"
#include "sigmahg/hypergraph.hpp"
#include "sigmahg/profile.hpp"
#include "sigmahg/recolour.hpp"
#include "sigmahg/spectrum.hpp"
#include "sigmahg/verifier.hpp"

namespace sigmahg {

inline constexpr const char* kSchema = "sigma-spectra/1";

// Readers throw Error(parse) on malformed JSON or wrong field types, and the
// usual validation / colouring errors on semantically bad content.

/// {"n":5,"r":3,"q":2,"sigma":[2,1]}; r may be omitted (sum of sigma).
SigmaInstance instance_from_json(std::string_view text);
std::string instance_to_json(const SigmaInstance& inst);

/// {"classes":[[1,2],...]}; colours are relabelled onto 1..k in order.
Colouring colouring_from_json(std::string_view text);
std::string colouring_to_json(const Colouring& col);

/// {"counts":[{"1":1,"2":1},...]}
std::string profile_to_json(const ClassProfile& profile);

/// `explicit_check`, when given, is reported next to the fast verdict along
/// with whether the two statuses agree.
std::string verdict_to_json(const SigmaInstance& inst, const ColourBounds& bounds,
                            const Verdict& verdict, const Verdict* explicit_check = nullptr);

/// {"schema":..., "k_results":[{"k":2,"status":"yes",...}], "chi":2,
/// "chi_bar":5, "gaps":[[3,4]], "complete":true, ...}
std::string spectrum_to_json(const SpectrumReport& report);
/// Spectrum in set notation ("{2} ∪ [7,13]") followed by per-k lines.
std::string spectrum_to_text(const SpectrumReport& report);
/// Members of the spectrum as a KSet.
KSet spectrum_set(const SpectrumReport& report);

std::string construction_to_json(const SigmaInstance& inst, const SchemeId& id,
                                 const Colouring& col, const Verdict& self_check);

/// One JSON object per line: each step, then a terminal line.
std::string walk_to_jsonl(const WalkTrace& trace);

std::string verification_to_json(const VerificationReport& report);
std::string verification_to_text(const VerificationReport& report);

}  // namespace sigmahg
