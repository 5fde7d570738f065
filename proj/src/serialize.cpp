// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sigmahg/error.hpp"

namespace sigmahg {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

int get_int(const Json& obj, const char* key, const char* what) {
  if (!obj.contains(key)) throw Error(ErrorCode::parse, std::string(what) + " is missing \"" + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::parse, std::string(what) + " field \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> get_int_array(const Json& v, const std::string& what) {
  if (!v.is_array()) throw Error(ErrorCode::parse, what + " must be an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw Error(ErrorCode::parse, what + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Json instance_json(const SigmaInstance& inst) {
  Json sigma = Json::array();
  for (int p : inst.sigma().parts()) sigma.push_back(p);
  return Json{{"n", inst.n()}, {"r", inst.r()}, {"q", inst.q()}, {"sigma", sigma}};
}

Json bounds_json(const ColourBounds& b) { return Json{{"alpha", b.alpha}, {"beta", b.beta}}; }

Json colouring_json(const Colouring& col) { return Json{{"classes", col.classes()}}; }

Json witness_json(const std::optional<EdgeWitness>& w) {
  if (!w) return nullptr;
  Json edge = Json::array();
  for (const auto& v : w->edge) edge.push_back(Json::array({v.class_index, v.slot}));
  return Json{{"edge", edge}, {"distinct", w->distinct}};
}

Json verdict_json(const Verdict& v) {
  return Json{{"status", to_string(v.status)},
              {"degenerate", v.degenerate},
              {"witness", witness_json(v.witness)}};
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json kset_json(const KSet& ks) {
  Json out = Json::array();
  for (const auto& iv : ks.intervals()) out.push_back(Json::array({iv.lo, iv.hi}));
  return out;
}

Json spectrum_json(const SpectrumReport& report) {
  Json ks = Json::array();
  for (const auto& v : report.verdicts) {
    Json e{{"k", v.k},
           {"status", to_string(v.status)},
           {"source", v.source},
           {"nodes", v.nodes_explored},
           {"budget_exhausted", v.budget_exhausted}};
    if (v.witness) e["witness"] = colouring_json(*v.witness);
    ks.push_back(std::move(e));
  }
  Json gaps = Json::array();
  for (const auto& [lo, hi] : report.gaps) gaps.push_back(Json::array({lo, hi}));
  return Json{{"schema", kSchema},
              {"instance", instance_json(report.instance)},
              {"bounds", bounds_json(report.bounds)},
              {"k_min", report.k_min},
              {"k_max", report.k_max},
              {"k_results", ks},
              {"spectrum", spectrum_set(report).to_string()},
              {"chi", opt(report.chi)},
              {"chi_bar", opt(report.chi_bar)},
              {"gaps", gaps},
              {"complete", report.complete}};
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

SigmaInstance instance_from_json(std::string_view text) {
  const Json j = parse(text, "instance");
  if (!j.is_object()) throw Error(ErrorCode::parse, "instance JSON must be an object");
  const int n = get_int(j, "n", "instance");
  const int q = get_int(j, "q", "instance");
  if (!j.contains("sigma")) throw Error(ErrorCode::parse, "instance is missing \"sigma\"");
  const Partition sigma = Partition::normalize(get_int_array(j.at("sigma"), "instance sigma"));
  const int r = j.contains("r") ? get_int(j, "r", "instance") : sigma.r();
  return SigmaInstance::create(n, r, q, sigma);
}

std::string instance_to_json(const SigmaInstance& inst) {
  Json j = instance_json(inst);
  j["schema"] = kSchema;
  return dump(j);
}

Colouring colouring_from_json(std::string_view text) {
  const Json j = parse(text, "colouring");
  if (!j.is_object() || !j.contains("classes")) {
    throw Error(ErrorCode::parse, "colouring JSON must be an object with \"classes\"");
  }
  const auto& classes = j.at("classes");
  if (!classes.is_array() || classes.empty()) {
    throw Error(ErrorCode::parse, "colouring \"classes\" must be a non-empty array");
  }
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.push_back(get_int_array(classes[i], "colouring class " + std::to_string(i)));
  }
  return Colouring::from_classes(out);
}

std::string colouring_to_json(const Colouring& col) {
  Json j = colouring_json(col);
  j["schema"] = kSchema;
  return dump(j);
}

std::string profile_to_json(const ClassProfile& profile) {
  Json counts = Json::array();
  for (const auto& row : profile.rows) {
    Json cls = Json::object();
    for (const auto& [colour, count] : row) cls[std::to_string(colour)] = count;
    counts.push_back(std::move(cls));
  }
  return dump(Json{{"schema", kSchema}, {"counts", counts}});
}

std::string verdict_to_json(const SigmaInstance& inst, const ColourBounds& bounds,
                            const Verdict& verdict, const Verdict* explicit_check) {
  Json j{{"schema", kSchema}, {"instance", instance_json(inst)}, {"bounds", bounds_json(bounds)}};
  const Json body = verdict_json(verdict);
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (explicit_check) {
    j["explicit"] = verdict_json(*explicit_check);
    j["agree"] = explicit_check->status == verdict.status;
  }
  return dump(j);
}

KSet spectrum_set(const SpectrumReport& report) {
  KSet out;
  for (int k : report.members()) out.add(k, k);
  return out;
}

std::string spectrum_to_json(const SpectrumReport& report) { return dump(spectrum_json(report)); }

std::string spectrum_to_text(const SpectrumReport& report) {
  std::ostringstream out;
  out << report.instance.to_string() << " bounds (" << report.bounds.alpha << ","
      << report.bounds.beta << ") k=" << report.k_min << ".." << report.k_max << "\n";
  out << "spectrum: " << spectrum_set(report).to_string();
  if (!report.complete) out << " (incomplete)";
  out << "\n";
  if (report.chi) out << "chi = " << *report.chi << ", chi_bar = " << *report.chi_bar << "\n";
  for (const auto& [lo, hi] : report.gaps) out << "gap [" << lo << "," << hi << "]\n";
  for (const auto& v : report.verdicts) {
    out << "  k=" << std::setw(3) << v.k << "  " << std::setw(7) << std::left << to_string(v.status)
        << std::right << "  " << v.source << "  nodes=" << v.nodes_explored << "\n";
  }
  return out.str();
}

std::string construction_to_json(const SigmaInstance& inst, const SchemeId& id,
                                 const Colouring& col, const Verdict& self_check) {
  return dump(Json{{"schema", kSchema},
                   {"instance", instance_json(inst)},
                   {"scheme", to_string(id)},
                   {"bounds", bounds_json(scheme_bounds(inst, id))},
                   {"k", col.colours_used()},
                   {"classes", col.classes()},
                   {"self_check", verdict_json(self_check)}});
}

std::string walk_to_jsonl(const WalkTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    out += dump(Json{{"schema", kSchema},
                     {"step", i + 1},
                     {"transform", to_string(st.transform)},
                     {"class", st.class_index},
                     {"colours", st.colours},
                     {"k", st.k},
                     {"classes", st.colouring.classes()}}) +
           "\n";
  }
  out += dump(Json{{"schema", kSchema},
                   {"direction", to_string(trace.direction)},
                   {"start_k", trace.start_k},
                   {"target_k", trace.target_k},
                   {"steps", trace.steps.size()},
                   {"terminal", to_string(trace.terminal)},
                   {"final_k", trace.final_colouring.colours_used()},
                   {"classes", trace.final_colouring.classes()}}) +
         "\n";
  return out;
}

std::string verification_to_json(const VerificationReport& report) {
  Json claims = Json::array();
  for (const auto& r : report.results) {
    Json pre = Json::array();
    for (const auto& p : r.claim.preconditions) pre.push_back(Json{{"name", p.name}, {"satisfied", p.satisfied}});
    claims.push_back(Json{{"source", r.claim.source},
                          {"kind", to_string(r.claim.kind)},
                          {"ks", kset_json(r.claim.ks)},
                          {"claim", r.claim.describe()},
                          {"preconditions", pre},
                          {"status", to_string(r.status)},
                          {"counterexample_k", opt(r.counterexample_k)},
                          {"evidence", r.evidence}});
  }
  Json j{{"schema", kSchema},
         {"instance", instance_json(report.instance)},
         {"bounds", bounds_json(report.bounds)},
         {"claims", claims},
         {"refuted", report.count(ClaimStatus::refuted)},
         {"undecided", report.count(ClaimStatus::undecided)}};
  j["theorem_silent"] = report.theorem_silent
                            ? Json::array({report.theorem_silent->lo, report.theorem_silent->hi})
                            : Json(nullptr);
  j["spectrum"] = report.spectrum ? spectrum_json(*report.spectrum) : Json(nullptr);
  return dump(j);
}

std::string verification_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.instance.to_string() << " bounds (" << report.bounds.alpha << ","
      << report.bounds.beta << ")\n";
  for (const auto& r : report.results) {
    out << "  " << std::setw(10) << std::left << to_string(r.status) << std::setw(20)
        << r.claim.source << r.claim.describe();
    if (!r.evidence.empty()) out << "  [" << r.evidence << "]";
    out << std::right << "\n";
  }
  if (report.theorem_silent) {
    out << "  [" << report.theorem_silent->lo << "," << report.theorem_silent->hi
        << "] theorem-silent, computed only\n";
  }
  if (report.spectrum) {
    out << "computed spectrum: " << spectrum_set(*report.spectrum).to_string();
    if (!report.spectrum->complete) out << " (incomplete)";
    out << "\n";
  }
  return out.str();
}

}  // namespace sigmahg
