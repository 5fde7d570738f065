// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/verifier.hpp"

#include <algorithm>
#include <map>

#include "sigmahg/error.hpp"

namespace sigmahg {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Claim make(std::string source, ClaimKind kind, KSet ks, std::vector<Precondition> pre) {
  return Claim{std::move(source), kind, std::move(ks), std::move(pre)};
}

// Adds the claim only when its k-set is non-empty after clipping to 1..nq.
void push(std::vector<Claim>& out, const SigmaInstance& inst, Claim c) {
  if (c.kind == ClaimKind::colourable || c.kind == ClaimKind::not_colourable) {
    KSet clipped;
    for (const auto& iv : c.ks.intervals()) {
      const int lo = std::max(iv.lo, 1);
      const int hi = std::min(iv.hi, inst.vertex_count());
      if (lo <= hi) clipped.add(lo, hi);
    }
    if (clipped.empty()) return;
    c.ks = std::move(clipped);
  }
  out.push_back(std::move(c));
}

// Complement of `yes` within 1..nq.
KSet complement(const KSet& yes, int nq) {
  KSet out;
  int next = 1;
  for (const auto& iv : yes.intervals()) {
    if (iv.lo > next) out.add(next, iv.lo - 1);
    next = std::max(next, iv.hi + 1);
  }
  if (next <= nq) out.add(next, nq);
  return out;
}

void nmnr_claims(const SigmaInstance& inst, std::vector<Claim>& out) {
  const int n = inst.n();
  const int r = inst.r();
  const int q = inst.q();
  const int nq = inst.vertex_count();
  const auto st = inst.sigma().stats();
  const int s = st.s;

  if (st.delta_max == 1) {
    push(out, inst,
         make("sigma-noncolourable", ClaimKind::empty_spectrum, {},
              {{"n >= (r-1)^2+1", n >= (r - 1) * (r - 1) + 1}}));
  }

  std::optional<KSet> zone;
  if (st.delta_max > 1) {
    zone = KSet::interval(ceil_div(n, s - 1), n);
    push(out, inst, make("monochromatic-zone", ClaimKind::colourable, *zone, {}));
  }

  if (st.delta_min == 1 && st.delta_max > 1) {
    std::vector<Precondition> pre = {{"n > r(s-1)+s", n > r * (s - 1) + s},
                                     {"q = (r-1)(delta_max-1)", q == (r - 1) * (st.delta_max - 1)}};
    push(out, inst, make("gap-delta-one", ClaimKind::not_colourable, KSet::interval(1, r - 2), pre));
    push(out, inst, make("gap-delta-one", ClaimKind::colourable, KSet::single(r - 1), pre));
    push(out, inst, make("gap-delta-one", ClaimKind::not_colourable, KSet::single(r), pre));
    push(out, inst, make("gap-delta-one", ClaimKind::colourable, *zone, pre));
  }

  if (inst.is_h2n()) {
    std::vector<Precondition> pre = {
        {"n >= 2(r-2)(r-1)+1", n >= 2 * (r - 2) * (r - 1) + 1}};
    if (r >= 6) {
      const int zone_lo = ceil_div(n, r - 2);
      push(out, inst, make("h2n-large-r", ClaimKind::not_colourable, KSet::interval(n + 1, nq), pre));
      push(out, inst, make("h2n-large-r", ClaimKind::colourable, KSet::interval(zone_lo, n), pre));
      push(out, inst,
           make("h2n-large-r", ClaimKind::not_colourable, KSet::interval(2 * r - 5, zone_lo - 1), pre));
      push(out, inst, make("h2n-large-r", ClaimKind::colourable, KSet::interval(2, 2 * r - 6), pre));
    } else {
      // Colourable exactly for 2..r-1 and the zone [ceil(n/(r-2)), n].
      KSet yes = KSet::interval(2, r - 1);
      yes.add(ceil_div(n, r - 2), n);
      push(out, inst, make("h2n-small-r", ClaimKind::colourable, yes, pre));
      push(out, inst, make("h2n-small-r", ClaimKind::not_colourable, complement(yes, nq), pre));
    }
  }

  if (st.delta_min >= 2) push(out, inst, make("no-gap", ClaimKind::no_gap, {}, {}));
}

void two_two_claims(const SigmaInstance& inst, std::vector<Claim>& out) {
  if (inst.q() != 2 || inst.sigma() != Partition::normalize({2, 2})) return;
  const int n = inst.n();
  std::vector<Precondition> pre = {{"n >= 4", n >= 4}};
  push(out, inst, make("two-two-gap", ClaimKind::colourable, KSet::single(2), pre));
  push(out, inst, make("two-two-gap", ClaimKind::colourable, KSet::single(n), pre));
  push(out, inst, make("two-two-gap", ClaimKind::not_colourable, KSet::interval(3, n - 1), pre));
}

int furthest_k(const Claim& c, int nq) {
  if (c.kind == ClaimKind::no_gap || c.kind == ClaimKind::empty_spectrum) return nq;
  return c.ks.max().value_or(0);
}

ClaimResult evaluate(const Claim& claim, const SpectrumReport& sp) {
  ClaimResult res{claim, ClaimStatus::confirmed, std::nullopt, {}};
  const int nq = sp.instance.vertex_count();
  auto verdict_at = [&](int k) -> KStatus {
    const auto* v = sp.at(k);
    return v ? v->status : KStatus::unknown;
  };

  if (claim.kind == ClaimKind::no_gap) {
    // A gap is an exhausted NO with witnesses on both sides.
    std::optional<int> first_yes;
    std::optional<int> pending_no;
    bool unknown = false;
    for (int k = 1; k <= nq; ++k) {
      const auto st = verdict_at(k);
      if (st == KStatus::unknown) unknown = true;
      if (st == KStatus::yes) {
        if (first_yes && pending_no) {
          res.status = ClaimStatus::refuted;
          res.counterexample_k = pending_no;
          res.evidence = "k=" + std::to_string(*pending_no) + " exhausted between witnesses at k=" +
                         std::to_string(*first_yes) + " and k=" + std::to_string(k);
          return res;
        }
        first_yes = k;
        pending_no.reset();
      } else if (st == KStatus::no && first_yes && !pending_no) {
        pending_no = k;
      }
    }
    if (unknown) {
      res.status = ClaimStatus::undecided;
      res.evidence = "spectrum incomplete";
    } else {
      res.evidence = "complete contiguous spectrum";
    }
    return res;
  }

  const bool want_yes = claim.kind == ClaimKind::colourable;
  std::vector<int> ks;
  if (claim.kind == ClaimKind::empty_spectrum) {
    for (int k = 1; k <= nq; ++k) ks.push_back(k);
  } else {
    ks = claim.ks.members();
  }
  std::vector<int> unknown;
  std::map<std::string, int> sources;
  for (int k : ks) {
    const auto st = verdict_at(k);
    if (st == KStatus::unknown) {
      unknown.push_back(k);
      continue;
    }
    if ((st == KStatus::yes) != want_yes) {
      res.status = ClaimStatus::refuted;
      res.counterexample_k = k;
      res.evidence = want_yes ? "exhausted search at k=" + std::to_string(k)
                              : "witness colouring at k=" + std::to_string(k) + " (" +
                                    sp.at(k)->source + ")";
      return res;
    }
    ++sources[sp.at(k)->source];
  }
  if (!unknown.empty()) {
    res.status = ClaimStatus::undecided;
    res.evidence = "budget exhausted at k=" + std::to_string(unknown.front());
    if (unknown.size() > 1) res.evidence += " and " + std::to_string(unknown.size() - 1) + " more";
    return res;
  }
  for (const auto& [src, cnt] : sources) {
    if (!res.evidence.empty()) res.evidence += ", ";
    res.evidence += src + " x" + std::to_string(cnt);
  }
  return res;
}

}  // namespace

const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::colourable: return "COLOURABLE";
    case ClaimKind::not_colourable: return "NOT_COLOURABLE";
    case ClaimKind::no_gap: return "NO_GAP";
    case ClaimKind::empty_spectrum: return "EMPTY_SPECTRUM";
  }
  return "?";
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "CONFIRMED";
    case ClaimStatus::refuted: return "REFUTED";
    case ClaimStatus::undecided: return "UNDECIDED";
    case ClaimStatus::inactive: return "INACTIVE";
  }
  return "?";
}

KSet KSet::interval(int lo, int hi) {
  KSet out;
  if (lo <= hi) out.add(lo, hi);
  return out;
}

KSet& KSet::add(int lo, int hi) {
  if (lo > hi) return *this;
  parts_.push_back({lo, hi});
  std::sort(parts_.begin(), parts_.end(),
            [](const KInterval& a, const KInterval& b) { return a.lo < b.lo; });
  std::vector<KInterval> merged;
  for (const auto& iv : parts_) {
    if (!merged.empty() && iv.lo <= merged.back().hi + 1) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  parts_ = std::move(merged);
  return *this;
}

bool KSet::contains(int k) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const KInterval& iv) { return iv.contains(k); });
}

std::optional<int> KSet::max() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.back().hi;
}

std::vector<int> KSet::members() const {
  std::vector<int> out;
  for (const auto& iv : parts_)
    for (int k = iv.lo; k <= iv.hi; ++k) out.push_back(k);
  return out;
}

std::string KSet::to_string() const {
  if (parts_.empty()) return "∅";
  std::string out;
  for (const auto& iv : parts_) {
    if (!out.empty()) out += " ∪ ";
    if (iv.lo == iv.hi) {
      out += "{" + std::to_string(iv.lo) + "}";
    } else {
      out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    }
  }
  return out;
}

bool Claim::active() const {
  return std::all_of(preconditions.begin(), preconditions.end(),
                     [](const Precondition& p) { return p.satisfied; });
}

std::vector<std::string> Claim::failed_preconditions() const {
  std::vector<std::string> out;
  for (const auto& p : preconditions)
    if (!p.satisfied) out.push_back(p.name);
  return out;
}

std::string Claim::describe() const {
  switch (kind) {
    case ClaimKind::colourable: return "colourable on " + ks.to_string();
    case ClaimKind::not_colourable: return "not colourable on " + ks.to_string();
    case ClaimKind::no_gap: return "no gap in the spectrum";
    case ClaimKind::empty_spectrum: return "empty spectrum";
  }
  return "?";
}

bool VerificationReport::any_refuted() const { return count(ClaimStatus::refuted) > 0; }

int VerificationReport::count(ClaimStatus s) const {
  return static_cast<int>(std::count_if(results.begin(), results.end(),
                                        [&](const ClaimResult& r) { return r.status == s; }));
}

std::vector<Claim> predict_claims(const SigmaInstance& inst, const ColourBounds& bounds) {
  std::vector<Claim> out;
  if (bounds.is_nmnr(inst.r())) nmnr_claims(inst, out);
  if (bounds == ColourBounds{2, 2}) two_two_claims(inst, out);
  return out;
}

VerificationReport verify_instance(const SigmaInstance& inst, const ColourBounds& bounds,
                                   std::uint64_t budget, std::optional<int> k_max) {
  bounds.validate(inst.r());
  VerificationReport report{inst, bounds, {}, std::nullopt, std::nullopt};
  const auto claims = predict_claims(inst, bounds);
  const int nq = inst.vertex_count();

  int reach = 0;
  for (const auto& c : claims)
    if (c.active()) reach = std::max(reach, furthest_k(c, nq));
  if (k_max) reach = *k_max;
  if (reach > 0) report.spectrum = compute_spectrum(inst, bounds, std::min(reach, nq), budget);

  for (const auto& c : claims) {
    if (!c.active()) {
      report.results.push_back({c, ClaimStatus::inactive, std::nullopt,
                                "failed: " + [&] {
                                  std::string s;
                                  for (const auto& f : c.failed_preconditions())
                                    s += (s.empty() ? "" : "; ") + f;
                                  return s;
                                }()});
      continue;
    }
    report.results.push_back(evaluate(c, *report.spectrum));
  }

  const bool gap_theorem_active = std::any_of(claims.begin(), claims.end(), [](const Claim& c) {
    return c.source == "gap-delta-one" && c.active();
  });
  if (gap_theorem_active) {
    const int s = inst.sigma().size();
    const int lo = inst.r() + 1;
    const int hi = ceil_div(inst.n(), s - 1) - 1;
    if (lo <= hi) report.theorem_silent = KInterval{lo, hi};
  }
  return report;
}

}  // namespace sigmahg
