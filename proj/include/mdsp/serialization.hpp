// Copyright 2026 The mdsp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mdsp/dominance.hpp"

namespace mdsp {

// Canonical JSON uses insertion-ordered objects and serializes every rational
// as its exact "p/q" string; decimal renderings are convenience companions.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rationals and bundles
// ---------------------------------------------------------------------------

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number())
    throw Error(errc::parse_error,
                "non-integer numeric literal; use a string like \"13.5\" or \"27/2\"");
  throw Error(errc::parse_error, "expected a rational literal");
}

inline Json bundle_json(const Bundle& b) {
  Json out = Json::array();
  for (const Rational& r : b) out.push_back(to_fraction_string(r));
  return out;
}

inline Json bundle_decimal_json(const Bundle& b) {
  Json out = Json::array();
  for (const Rational& r : b) out.push_back(to_decimal_string(r));
  return out;
}

inline Bundle bundle_from_json(const Json& j) {
  if (!j.is_array()) throw Error(errc::parse_error, "expected an array of rationals");
  Bundle b;
  b.reserve(j.size());
  for (const Json& v : j) b.push_back(rational_from_json(v));
  return b;
}

inline Json bundles_json(const std::vector<Bundle>& rows) {
  Json out = Json::array();
  for (const Bundle& b : rows) out.push_back(bundle_json(b));
  return out;
}

inline Json bundles_decimal_json(const std::vector<Bundle>& rows) {
  Json out = Json::array();
  for (const Bundle& b : rows) out.push_back(bundle_decimal_json(b));
  return out;
}

inline std::vector<Bundle> bundles_from_json(const Json& j) {
  if (!j.is_array()) throw Error(errc::parse_error, "expected an array of bundles");
  std::vector<Bundle> rows;
  rows.reserve(j.size());
  for (const Json& row : j) rows.push_back(bundle_from_json(row));
  return rows;
}

// ---------------------------------------------------------------------------
// Economy and rule specs (agents are 1-indexed in files, 0-indexed internally)
// ---------------------------------------------------------------------------

inline Economy economy_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("omega") || !j.contains("agents"))
    throw Error(errc::parse_error, "economy needs 'omega' and 'agents'");
  Bundle omega = bundle_from_json(j.at("omega"));
  const std::size_t agents = j.at("agents").get<std::size_t>();
  const std::size_t commodities = omega.size();
  return make_economy(commodities, std::move(omega), agents);
}

inline Json economy_json(const Economy& econ) {
  Json out;
  out["omega"] = bundle_json(econ.omega);
  out["agents"] = econ.agents;
  return out;
}

inline RuleSpec rule_spec_from_json(const Json& j, const Economy& econ) {
  if (!j.is_object() || !j.contains("rule"))
    throw Error(errc::parse_error, "rule spec needs a 'rule' field");
  const std::string kind = j.at("rule").get<std::string>();
  RuleSpec spec;
  if (kind == "uniform") {
    spec = UniformRule{};
  } else if (kind == "proportional") {
    spec = ProportionalRule{};
  } else if (kind == "sequential") {
    if (!j.contains("reference"))
      throw Error(errc::parse_error, "sequential rule needs a 'reference' matrix");
    spec = SequentialRule{bundles_from_json(j.at("reference"))};
  } else if (kind == "serial") {
    if (!j.contains("orders"))
      throw Error(errc::parse_error, "serial rule needs per-commodity 'orders'");
    std::vector<std::vector<std::size_t>> orders;
    for (const Json& row : j.at("orders")) {
      std::vector<std::size_t> order;
      for (const Json& v : row) {
        const long long a = v.get<long long>();
        if (a < 1) throw Error(errc::parse_error, "agents are 1-indexed in files");
        order.push_back(static_cast<std::size_t>(a - 1));
      }
      orders.push_back(std::move(order));
    }
    spec = SerialRule{std::move(orders)};
  } else if (kind == "constant") {
    if (!j.contains("allocation"))
      throw Error(errc::parse_error, "constant rule needs an 'allocation'");
    spec = ConstantRule{Allocation{bundles_from_json(j.at("allocation"))}};
  } else {
    throw Error(errc::parse_error, "unknown rule kind '" + kind + "'");
  }
  validate_rule(spec, econ);
  return spec;
}

inline Json rule_spec_json(const RuleSpec& spec) {
  Json out;
  out["rule"] = rule_spec_name(spec);
  if (const auto* seq = std::get_if<SequentialRule>(&spec)) {
    out["reference"] = bundles_json(seq->reference);
  } else if (const auto* ser = std::get_if<SerialRule>(&spec)) {
    Json orders = Json::array();
    for (const auto& order : ser->orders) {
      Json row = Json::array();
      for (std::size_t a : order) row.push_back(a + 1);
      orders.push_back(row);
    }
    out["orders"] = orders;
  } else if (const auto* cst = std::get_if<ConstantRule>(&spec)) {
    out["allocation"] = bundles_json(cst->allocation.shares);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json witness_json(const Witness& w) {
  Json out;
  if (w.profile) out["profile"] = bundles_json(w.profile->peaks);
  if (w.agent) out["agent"] = *w.agent + 1;
  if (w.partner) out["partner"] = *w.partner + 1;
  if (w.commodity) out["commodity"] = *w.commodity + 1;
  if (w.misreport) out["misreport"] = bundle_json(*w.misreport);
  if (w.truthful) {
    out["allotments"] = bundles_json(w.truthful->shares);
    out["allotments_decimal"] = bundles_decimal_json(w.truthful->shares);
  }
  if (w.deviated) {
    out["deviated_allotments"] = bundles_json(w.deviated->shares);
    out["deviated_allotments_decimal"] = bundles_decimal_json(w.deviated->shares);
  }
  if (w.preference) {
    Json pref;
    pref["peak"] = bundle_json(w.preference->peak);
    pref["weights"] = bundle_json(w.preference->weights);
    out["preference"] = pref;
  }
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

inline Json axiom_report_json(const AxiomReport& r, bool timing = false) {
  Json out;
  out["axiom"] = r.axiom;
  out["rule"] = r.rule;
  out["verdict"] = verdict_name(r.verdict);
  if (r.witness) out["witness"] = witness_json(*r.witness);
  out["profiles_checked"] = r.profiles_checked;
  out["cases_checked"] = r.cases_checked;
  out["axis_points"] = r.axis_points;
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

inline Json lambda_json(const LambdaSolution& sol) {
  Json out;
  out["lambda"] = to_fraction_string(sol.lambda);
  out["lambda_decimal"] = to_decimal_string(sol.lambda);
  out["mode"] = fill_mode_name(sol.mode);
  return out;
}

inline Json option_box_json(const OptionBox& box) {
  Json out;
  Json intervals = Json::array();
  for (const auto& [lo, hi] : box.intervals) {
    intervals.push_back(Json::array({to_fraction_string(lo), to_fraction_string(hi)}));
  }
  out["intervals"] = intervals;
  Json decimals = Json::array();
  for (const auto& [lo, hi] : box.intervals) {
    decimals.push_back(Json::array({to_decimal_string(lo), to_decimal_string(hi)}));
  }
  out["intervals_decimal"] = decimals;
  out["swept_points"] = bundles_json(box.swept);
  out["box_structure_valid"] = box.box_structure_valid;
  if (!box.validation_note.empty()) out["validation_note"] = box.validation_note;
  return out;
}

inline Json domination_json(const DominationVerdict& v) {
  Json out;
  out["rule_a"] = v.rule_a;
  out["rule_b"] = v.rule_b;
  out["relation"] = domination_relation_name(v.relation);
  Json evidence = Json::array();
  for (const DominationEvidence& e : v.evidence) {
    Json item;
    item["direction"] = e.direction;
    item["agent"] = e.agent + 1;
    item["others_peaks"] = bundles_json(e.others_peaks);
    item["offending_point"] = bundle_json(e.offending);
    evidence.push_back(item);
  }
  out["evidence"] = evidence;
  out["boxes_compared"] = v.boxes_compared;
  out["conditioning_profiles"] = v.conditioning_profiles;
  return out;
}

inline Json theorem3_json(const Theorem3Report& r) {
  Json out;
  out["survivors"] = r.survivors;
  Json eliminations = Json::array();
  for (const EliminationRecord& e : r.eliminations) {
    Json item;
    item["rule"] = e.rule;
    item["axiom"] = e.axiom;
    if (!e.detail.empty()) item["detail"] = e.detail;
    eliminations.push_back(item);
  }
  out["eliminations"] = eliminations;
  out["survivors_all_equal_uniform"] = r.survivors_all_equal_uniform;
  out["uniform_unique"] = r.uniform_unique;
  if (!r.substituted_axiom.empty()) out["substituted_axiom"] = r.substituted_axiom;
  return out;
}

}  // namespace mdsp
