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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mdsp/serialization.hpp"

namespace mdsp {

inline constexpr const char* kToolName = "mdsp";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Command { Allocate, Check, OptionBox, Dominate, Pusp, Theorem3, Builtin };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::Allocate: return "allocate";
    case Command::Check: return "check";
    case Command::OptionBox: return "option-box";
    case Command::Dominate: return "dominate";
    case Command::Pusp: return "pusp";
    case Command::Theorem3: return "theorem3";
    case Command::Builtin: return "builtin";
  }
  return "unknown";
}

inline Command command_from_string(const std::string& s) {
  if (s == "allocate") return Command::Allocate;
  if (s == "check") return Command::Check;
  if (s == "option-box") return Command::OptionBox;
  if (s == "dominate") return Command::Dominate;
  if (s == "pusp") return Command::Pusp;
  if (s == "theorem3") return Command::Theorem3;
  if (s == "builtin") return Command::Builtin;
  throw Error(errc::parse_error, "unknown command '" + s + "'");
}

struct Scenario {
  Command command = Command::Allocate;
  std::optional<Economy> econ;
  std::vector<RuleSpec> rules;
  std::size_t grid_points = 5;
  std::optional<PeakProfile> peaks;
  std::vector<std::string> axioms;
  bool axioms_given = false;
  std::size_t agent = 0;  // 0-based internally; files use 1-based
  std::vector<Bundle> others_peaks;
  std::uint64_t conditioning_sample = 0;
  std::size_t perturbation_budget = 1;
  bool substitute_non_bossiness = false;
  std::string builtin_case;
};

struct RunOptions {
  unsigned workers = 1;
  bool timing = false;
};

struct RunReport {
  Json doc;
  int exit_code = 0;
};

// ---------------------------------------------------------------------------
// Scenario parsing
// ---------------------------------------------------------------------------

inline Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw Error(errc::parse_error, "scenario must be a JSON object");
  Scenario s;
  if (j.contains("command")) s.command = command_from_string(j.at("command").get<std::string>());

  if (j.contains("economy")) s.econ = economy_from_json(j.at("economy"));

  auto need_econ = [&]() -> const Economy& {
    if (!s.econ) throw Error(errc::parse_error, "scenario needs an 'economy'");
    return *s.econ;
  };

  if (j.contains("rule")) s.rules.push_back(rule_spec_from_json(j.at("rule"), need_econ()));
  if (j.contains("rules")) {
    for (const Json& r : j.at("rules"))
      s.rules.push_back(rule_spec_from_json(r, need_econ()));
  }

  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (g.contains("points_per_axis"))
      s.grid_points = g.at("points_per_axis").get<std::size_t>();
  }
  if (j.contains("grid_points")) s.grid_points = j.at("grid_points").get<std::size_t>();

  if (j.contains("peaks")) {
    PeakProfile profile{bundles_from_json(j.at("peaks"))};
    validate_peaks(profile, need_econ());
    s.peaks = std::move(profile);
  }
  if (j.contains("axioms")) {
    s.axioms_given = true;
    for (const Json& a : j.at("axioms")) s.axioms.push_back(a.get<std::string>());
  }
  if (j.contains("agent")) {
    const long long a = j.at("agent").get<long long>();
    if (a < 1) throw Error(errc::parse_error, "agents are 1-indexed in files");
    s.agent = static_cast<std::size_t>(a - 1);
  }
  if (j.contains("others_peaks")) {
    s.others_peaks = bundles_from_json(j.at("others_peaks"));
    for (const Bundle& b : s.others_peaks) {
      if (!in_consumption_set(b, need_econ()))
        throw Error(errc::invalid_peak, "others' peak outside the consumption box");
    }
  }
  if (j.contains("conditioning_sample"))
    s.conditioning_sample = j.at("conditioning_sample").get<std::uint64_t>();
  if (j.contains("perturbation_budget"))
    s.perturbation_budget = j.at("perturbation_budget").get<std::size_t>();
  if (j.contains("substitute_non_bossiness"))
    s.substitute_non_bossiness = j.at("substitute_non_bossiness").get<bool>();
  if (j.contains("case")) s.builtin_case = j.at("case").get<std::string>();

  // Per-command shape validation.
  switch (s.command) {
    case Command::Allocate:
      need_econ();
      if (s.rules.size() != 1) throw Error(errc::parse_error, "allocate needs one rule");
      if (!s.peaks) throw Error(errc::parse_error, "allocate needs 'peaks'");
      break;
    case Command::Check:
      need_econ();
      if (s.rules.size() != 1) throw Error(errc::parse_error, "check needs one rule");
      break;
    case Command::OptionBox:
      need_econ();
      if (s.rules.size() != 1) throw Error(errc::parse_error, "option-box needs one rule");
      if (s.agent >= s.econ->agents)
        throw Error(errc::parse_error, "agent index out of range");
      if (s.others_peaks.size() + 1 != s.econ->agents)
        throw Error(errc::parse_error, "option-box needs one peak per other agent");
      break;
    case Command::Dominate:
      need_econ();
      if (s.rules.size() != 2)
        throw Error(errc::parse_error, "dominate needs exactly two rules");
      break;
    case Command::Pusp:
      need_econ();
      if (s.rules.size() != 1) throw Error(errc::parse_error, "pusp needs one rule");
      break;
    case Command::Theorem3:
      need_econ();
      break;
    case Command::Builtin:
      if (s.builtin_case.empty()) throw Error(errc::parse_error, "builtin needs a 'case'");
      break;
  }
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open scenario file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(errc::parse_error, "scenario '" + path + "': " + e.what());
  }
  return scenario_from_json(j);
}

inline Json scenario_echo(const Scenario& s) {
  Json out;
  out["command"] = command_name(s.command);
  if (s.econ) out["economy"] = economy_json(*s.econ);
  if (s.rules.size() == 1) out["rule"] = rule_spec_json(s.rules[0]);
  if (s.rules.size() > 1) {
    Json rules = Json::array();
    for (const RuleSpec& r : s.rules) rules.push_back(rule_spec_json(r));
    out["rules"] = rules;
  }
  switch (s.command) {
    case Command::Allocate:
      if (s.peaks) out["peaks"] = bundles_json(s.peaks->peaks);
      break;
    case Command::Check:
      out["grid_points"] = s.grid_points;
      if (s.axioms_given) out["axioms"] = s.axioms;
      break;
    case Command::OptionBox:
      out["grid_points"] = s.grid_points;
      out["agent"] = s.agent + 1;
      out["others_peaks"] = bundles_json(s.others_peaks);
      break;
    case Command::Dominate:
      out["grid_points"] = s.grid_points;
      if (s.conditioning_sample) out["conditioning_sample"] = s.conditioning_sample;
      break;
    case Command::Pusp:
      out["grid_points"] = s.grid_points;
      out["perturbation_budget"] = s.perturbation_budget;
      if (s.conditioning_sample) out["conditioning_sample"] = s.conditioning_sample;
      break;
    case Command::Theorem3:
      out["grid_points"] = s.grid_points;
      out["perturbation_budget"] = s.perturbation_budget;
      if (s.substitute_non_bossiness) out["substitute_non_bossiness"] = true;
      break;
    case Command::Builtin:
      out["case"] = s.builtin_case;
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------------

namespace detail {

inline AxiomReport run_axiom_check(const std::string& name, const Rule& rule,
                                   const Economy& econ, const PeakGrid& grid,
                                   const SweepOptions& sweep) {
  if (name == axiom::same_sidedness) return check_same_sided(rule, econ, grid, sweep);
  if (name == axiom::unanimity) return check_unanimity(rule, econ, grid, sweep);
  if (name == axiom::strategy_proofness)
    return check_strategy_proof(rule, econ, grid, sweep);
  if (name == axiom::replacement_monotonicity)
    return check_replacement_monotone(rule, econ, grid, sweep);
  if (name == axiom::non_bossiness) return check_non_bossy(rule, econ, grid, sweep);
  if (name == axiom::equal_treatment) return check_equal_treatment(rule, econ, grid, sweep);
  if (name == axiom::egalitarian_lower_bound)
    return check_egalitarian_bound(rule, econ, grid, sweep);
  if (name == axiom::uncompromisingness_1d)
    return check_uncompromising_1d(rule, econ, grid, sweep);
  throw Error(errc::parse_error, "unknown axiom '" + name + "'");
}

inline std::vector<std::string> default_axioms(const Economy& econ) {
  std::vector<std::string> names = {
      axiom::same_sidedness,       axiom::unanimity,
      axiom::strategy_proofness,   axiom::replacement_monotonicity,
      axiom::non_bossiness,        axiom::equal_treatment,
      axiom::egalitarian_lower_bound};
  if (econ.commodities() == 1) names.push_back(axiom::uncompromisingness_1d);
  return names;
}

inline std::vector<Rule> materialize_catalog(const Scenario& s) {
  if (s.rules.empty()) return default_rule_catalog(*s.econ);
  std::vector<Rule> catalog;
  for (std::size_t i = 0; i < s.rules.size(); ++i) {
    Rule r = as_rule(s.rules[i], *s.econ);
    for (const Rule& prev : catalog) {
      if (prev.name == r.name) {
        r.name += "#" + std::to_string(i + 1);
        break;
      }
    }
    catalog.push_back(std::move(r));
  }
  return catalog;
}

}  // namespace detail

inline RunReport reproduce_builtin(const std::string& case_id, const RunOptions& options);

inline RunReport run_scenario(const Scenario& s, const RunOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  Json& doc = report.doc;
  doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}, {"schema", kSchemaVersion}};
  doc["scenario"] = scenario_echo(s);
  doc["results"] = Json::array();

  const SweepOptions sweep{options.workers};

  switch (s.command) {
    case Command::Allocate: {
      const Economy& econ = *s.econ;
      Json result;
      result["type"] = "allocation";
      result["rule"] = rule_spec_name(s.rules[0]);
      if (std::holds_alternative<UniformRule>(s.rules[0])) {
        const auto [alloc, lambdas] = uniform_allocate_with_lambdas(econ, *s.peaks);
        result["shares"] = bundles_json(alloc.shares);
        result["shares_decimal"] = bundles_decimal_json(alloc.shares);
        Json bounds = Json::array();
        for (const LambdaSolution& sol : lambdas) bounds.push_back(lambda_json(sol));
        result["bounds"] = bounds;
        result["feasible"] = is_feasible(alloc, econ);
      } else {
        const Allocation alloc = evaluate_rule(s.rules[0], econ, *s.peaks);
        result["shares"] = bundles_json(alloc.shares);
        result["shares_decimal"] = bundles_decimal_json(alloc.shares);
        result["feasible"] = is_feasible(alloc, econ);
      }
      doc["results"].push_back(result);
      break;
    }
    case Command::Check: {
      const Economy& econ = *s.econ;
      const PeakGrid grid = make_grid(econ, s.grid_points);
      const Rule rule = as_rule(s.rules[0], econ);
      const std::vector<std::string> names =
          s.axioms_given ? s.axioms : detail::default_axioms(econ);
      std::vector<AxiomReport> reports;
      for (const std::string& name : names) {
        reports.push_back(detail::run_axiom_check(name, rule, econ, grid, sweep));
        doc["results"].push_back(axiom_report_json(reports.back(), options.timing));
      }
      if (!reports.empty()) {
        const std::vector<ImplicationViolation> violations = check_implications(reports);
        Json impl;
        impl["type"] = "implication-check";
        Json items = Json::array();
        for (const ImplicationViolation& v : violations) {
          Json item;
          item["antecedents"] = v.antecedents;
          item["consequent"] = v.consequent;
          items.push_back(item);
        }
        impl["violations"] = items;
        impl["consistent"] = violations.empty();
        doc["results"].push_back(impl);
        if (!violations.empty()) report.exit_code = 3;
      }
      break;
    }
    case Command::OptionBox: {
      const Economy& econ = *s.econ;
      const PeakGrid grid = make_grid(econ, s.grid_points);
      const Rule rule = as_rule(s.rules[0], econ);
      const OptionBox box = option_box(rule, econ, s.agent, s.others_peaks, grid);
      Json result = option_box_json(box);
      result["type"] = "option-box";
      result["rule"] = rule.name;
      result["agent"] = s.agent + 1;
      doc["results"].push_back(result);
      break;
    }
    case Command::Dominate: {
      const Economy& econ = *s.econ;
      const PeakGrid grid = make_grid(econ, s.grid_points);
      const Rule a = as_rule(s.rules[0], econ);
      Rule b = as_rule(s.rules[1], econ);
      if (b.name == a.name) b.name += "#2";
      const DominationVerdict verdict =
          check_domination(a, b, econ, grid, s.conditioning_sample, sweep);
      Json result = domination_json(verdict);
      result["type"] = "domination";
      doc["results"].push_back(result);
      break;
    }
    case Command::Pusp: {
      const Economy& econ = *s.econ;
      const PeakGrid grid = make_grid(econ, s.grid_points);
      const Rule rule = as_rule(s.rules[0], econ);
      PuspOptions popts;
      popts.perturbation_budget = s.perturbation_budget;
      popts.conditioning_sample = s.conditioning_sample;
      popts.workers = options.workers;
      const AxiomReport probe = pusp_probe(rule, econ, grid, popts);
      doc["results"].push_back(axiom_report_json(probe, options.timing));
      break;
    }
    case Command::Theorem3: {
      const Economy& econ = *s.econ;
      const PeakGrid grid = make_grid(econ, s.grid_points);
      const std::vector<Rule> catalog = detail::materialize_catalog(s);
      PuspOptions popts;
      popts.perturbation_budget = s.perturbation_budget;
      popts.conditioning_sample = s.conditioning_sample;
      popts.workers = options.workers;
      const Theorem3Report t3 =
          theorem3_spotcheck(econ, grid, catalog, popts, s.substitute_non_bossiness);
      Json result = theorem3_json(t3);
      result["type"] = "theorem3";
      doc["results"].push_back(result);
      break;
    }
    case Command::Builtin:
      return reproduce_builtin(s.builtin_case, options);
  }

  if (options.timing) {
    doc["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Built-in reproductions with embedded golden values
// ---------------------------------------------------------------------------

namespace detail {

inline Json golden_case_header(const std::string& id, const std::string& what) {
  Json out;
  out["type"] = "builtin";
  out["case"] = id;
  out["what"] = what;
  return out;
}

inline RunReport builtin_figure1(const RunOptions&) {
  const Economy econ = make_economy(2, {Rational(12), Rational(15)}, 3);
  const PeakProfile peaks{{{Rational(2), Rational(2)},
                           {Rational(4), Rational(7)},
                           {Rational(8), Rational(4)}}};
  const auto [alloc, lambdas] = uniform_allocate_with_lambdas(econ, peaks);

  const Allocation expected{{{Rational(2), Rational(4)},
                             {Rational(4), Rational(7)},
                             {Rational(6), Rational(4)}}};
  const bool shares_ok = alloc == expected;
  const bool lambda_ok = lambdas.size() == 2 && lambdas[0].lambda == 6 &&
                         lambdas[0].mode == FillMode::ExcessDemand &&
                         lambdas[1].lambda == 4 &&
                         lambdas[1].mode == FillMode::ExcessSupply;

  Json result = golden_case_header(
      "figure1", "uniform allocation on a 3-agent, 2-commodity economy");
  result["economy"] = economy_json(econ);
  result["peaks"] = bundles_json(peaks.peaks);
  result["shares"] = bundles_json(alloc.shares);
  result["shares_decimal"] = bundles_decimal_json(alloc.shares);
  Json bounds = Json::array();
  for (const LambdaSolution& sol : lambdas) bounds.push_back(lambda_json(sol));
  result["bounds"] = bounds;
  result["expected_shares"] = bundles_json(expected.shares);
  result["pass"] = shares_ok && lambda_ok;

  RunReport report;
  report.doc["results"].push_back(result);
  if (!(shares_ok && lambda_ok)) report.exit_code = 3;
  return report;
}

inline RunReport builtin_example1(const RunOptions&) {
  const Economy econ = make_economy(2, {Rational(18), Rational(12)}, 2);
  const PeakProfile peaks{{{Rational(27, 2), Rational(9)},
                           {Rational(12), Rational(21, 2)}}};
  const Allocation alloc = uniform_allocate(econ, peaks);
  const Allocation expected{{{Rational(9), Rational(6)}, {Rational(9), Rational(6)}}};

  const std::vector<QuadraticPreference> prefs = {
      make_quadratic(peaks.peaks[0], {Rational(1), Rational(3)}),
      make_quadratic(peaks.peaks[1], {Rational(3), Rational(1)})};

  const PeakGrid search = make_grid_step(econ, Rational(1, 2));
  const std::optional<Allocation> improvement =
      find_pareto_improvement(alloc, prefs, econ, search);

  const Allocation specific{{{Rational(15, 2), Rational(15, 2)},
                             {Rational(21, 2), Rational(9, 2)}}};
  const bool specific_improves =
      is_feasible(specific, econ) &&
      quad_strictly_prefers(prefs[0], specific.shares[0], alloc.shares[0]) &&
      quad_strictly_prefers(prefs[1], specific.shares[1], alloc.shares[1]);

  const bool pass = alloc == expected && improvement.has_value() && specific_improves;

  Json result = golden_case_header(
      "example1", "uniform allocation is dominated by a feasible alternative");
  result["economy"] = economy_json(econ);
  result["peaks"] = bundles_json(peaks.peaks);
  result["shares"] = bundles_json(alloc.shares);
  result["expected_shares"] = bundles_json(expected.shares);
  if (improvement) {
    result["improvement"] = bundles_json(improvement->shares);
    result["improvement_decimal"] = bundles_decimal_json(improvement->shares);
  }
  result["specific_improvement"] = bundles_json(specific.shares);
  result["specific_improves_both"] = specific_improves;
  result["pass"] = pass;

  RunReport report;
  report.doc["results"].push_back(result);
  if (!pass) report.exit_code = 3;
  return report;
}

inline RunReport builtin_serial_et(const RunOptions& options) {
  const Economy econ = make_economy(1, {Rational(10)}, 2);
  const PeakGrid grid = make_grid(econ, 5);
  const Rule serial = as_rule(SerialRule{identity_orders(econ)}, econ, "serial");

  const AxiomReport et =
      check_equal_treatment(serial, econ, grid, SweepOptions{options.workers});

  const PeakProfile fixture{{{Rational(6)}, {Rational(6)}}};
  const Allocation fixture_alloc = serial_allocate(econ, identity_orders(econ), fixture);
  const Allocation fixture_expected{{{Rational(6)}, {Rational(4)}}};

  const bool pass =
      et.verdict == Verdict::Refuted && fixture_alloc == fixture_expected;

  Json result = golden_case_header(
      "serial-et", "the serial rule treats agents with equal peaks unequally");
  result["report"] = axiom_report_json(et, options.timing);
  result["fixture_peaks"] = bundles_json(fixture.peaks);
  result["fixture_shares"] = bundles_json(fixture_alloc.shares);
  result["fixture_expected"] = bundles_json(fixture_expected.shares);
  result["pass"] = pass;

  RunReport report;
  report.doc["results"].push_back(result);
  if (!pass) report.exit_code = 3;
  return report;
}

inline RunReport builtin_domination_serial_uniform(const RunOptions& options) {
  const Economy econ = make_economy(1, {Rational(10)}, 2);
  const PeakGrid grid = make_grid(econ, 11);
  const Rule serial = as_rule(SerialRule{identity_orders(econ)}, econ, "serial");
  const Rule uniform = as_rule(UniformRule{}, econ);

  const DominationVerdict verdict = check_domination(
      serial, uniform, econ, grid, 0, SweepOptions{options.workers});

  const OptionBox hand =
      option_box(uniform, econ, 0, {{Rational(4)}}, grid);
  const bool hand_ok = hand.intervals.size() == 1 && hand.intervals[0].first == 5 &&
                       hand.intervals[0].second == 6 && hand.box_structure_valid;

  const bool pass =
      verdict.relation == DominationRelation::Incomparable && hand_ok;

  Json result = golden_case_header(
      "domination-serial-uniform",
      "serial and uniform option sets do not nest in either direction");
  result["verdict"] = domination_json(verdict);
  result["uniform_box_vs_peak_4"] = option_box_json(hand);
  result["expected_interval"] = Json::array({"5/1", "6/1"});
  result["pass"] = pass;

  RunReport report;
  report.doc["results"].push_back(result);
  if (!pass) report.exit_code = 3;
  return report;
}

inline RunReport builtin_theorem3(const RunOptions& options) {
  const Economy econ = make_economy(2, {Rational(12), Rational(15)}, 3);
  const PeakGrid grid = make_grid(econ, 5);
  PuspOptions popts;
  popts.workers = options.workers;
  const Theorem3Report t3 =
      theorem3_spotcheck(econ, grid, default_rule_catalog(econ), popts);

  auto eliminated_by = [&](const std::string& rule, const std::string& ax) {
    for (const EliminationRecord& e : t3.eliminations)
      if (e.rule == rule && e.axiom == ax) return true;
    return false;
  };
  const bool pass = t3.uniform_unique &&
                    eliminated_by("serial", axiom::equal_treatment) &&
                    eliminated_by("proportional", axiom::strategy_proofness) &&
                    eliminated_by("constant", axiom::unanimity) &&
                    eliminated_by("sequential(skewed)", axiom::equal_treatment);

  Json result = golden_case_header(
      "theorem3", "the uniform rule is the unique survivor of the elimination");
  result["report"] = theorem3_json(t3);
  result["pass"] = pass;

  RunReport report;
  report.doc["results"].push_back(result);
  if (!pass) report.exit_code = 3;
  return report;
}

}  // namespace detail

inline RunReport reproduce_builtin(const std::string& case_id, const RunOptions& options) {
  RunReport report;
  if (case_id == "figure1") {
    report = detail::builtin_figure1(options);
  } else if (case_id == "example1") {
    report = detail::builtin_example1(options);
  } else if (case_id == "serial-et") {
    report = detail::builtin_serial_et(options);
  } else if (case_id == "domination-serial-uniform") {
    report = detail::builtin_domination_serial_uniform(options);
  } else if (case_id == "theorem3") {
    report = detail::builtin_theorem3(options);
  } else {
    throw Error(errc::unknown_case, "unknown builtin case '" + case_id + "'");
  }

  Json doc;
  doc["tool"] =
      Json{{"name", kToolName}, {"version", kToolVersion}, {"schema", kSchemaVersion}};
  Json scenario;
  scenario["command"] = "builtin";
  scenario["case"] = case_id;
  doc["scenario"] = scenario;
  doc["results"] = report.doc["results"];
  report.doc = std::move(doc);
  return report;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

namespace detail {

inline std::string cell(const Json& frac, const Json* dec = nullptr) {
  std::string s = frac.is_string() ? frac.get<std::string>() : frac.dump();
  if (dec != nullptr && dec->is_string()) s += " (" + dec->get<std::string>() + ")";
  return s;
}

inline void render_matrix(std::ostream& os, const std::string& label, const Json& rows,
                          const Json* decimals = nullptr) {
  os << "  " << label << ":\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << "    agent " << i + 1 << ":";
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      const Json* dec = decimals != nullptr ? &(*decimals)[i][c] : nullptr;
      os << "  " << cell(rows[i][c], dec);
    }
    os << "\n";
  }
}

inline void render_result_table(std::ostream& os, const Json& r) {
  const std::string type = r.value("type", std::string("result"));
  os << "== " << type;
  if (r.contains("case")) os << " " << r.at("case").get<std::string>();
  if (r.contains("axiom")) os << " " << r.at("axiom").get<std::string>();
  if (r.contains("rule") && r.at("rule").is_string())
    os << " [" << r.at("rule").get<std::string>() << "]";
  os << " ==\n";

  if (r.contains("verdict")) os << "  verdict: " << r.at("verdict").get<std::string>() << "\n";
  if (r.contains("relation"))
    os << "  relation: " << r.at("relation").get<std::string>() << "\n";
  if (r.contains("pass"))
    os << "  pass: " << (r.at("pass").get<bool>() ? "yes" : "no") << "\n";

  if (r.contains("peaks")) render_matrix(os, "peaks", r.at("peaks"));
  if (r.contains("shares")) {
    const Json* dec = r.contains("shares_decimal") ? &r.at("shares_decimal") : nullptr;
    render_matrix(os, "shares", r.at("shares"), dec);
  }
  if (r.contains("bounds")) {
    os << "  bounds:\n";
    for (std::size_t c = 0; c < r.at("bounds").size(); ++c) {
      const Json& b = r.at("bounds")[c];
      os << "    commodity " << c + 1 << ": lambda=" << b.at("lambda").get<std::string>()
         << " (" << b.at("lambda_decimal").get<std::string>() << "), "
         << b.at("mode").get<std::string>() << "\n";
    }
  }
  if (r.contains("intervals")) {
    os << "  intervals:";
    const Json& ivs = r.at("intervals");
    const Json& dec = r.at("intervals_decimal");
    for (std::size_t c = 0; c < ivs.size(); ++c) {
      os << "  [" << cell(ivs[c][0], &dec[c][0]) << ", " << cell(ivs[c][1], &dec[c][1])
         << "]";
    }
    os << "\n";
  }
  if (r.contains("witness")) {
    const Json& w = r.at("witness");
    os << "  witness:\n";
    if (w.contains("profile")) render_matrix(os, "  profile", w.at("profile"));
    if (w.contains("agent")) os << "    agent: " << w.at("agent").dump() << "\n";
    if (w.contains("partner")) os << "    partner: " << w.at("partner").dump() << "\n";
    if (w.contains("commodity")) os << "    commodity: " << w.at("commodity").dump() << "\n";
    if (w.contains("misreport")) {
      os << "    misreport:";
      for (const Json& v : w.at("misreport")) os << "  " << cell(v);
      os << "\n";
    }
    if (w.contains("allotments")) render_matrix(os, "  allotments", w.at("allotments"));
    if (w.contains("deviated_allotments"))
      render_matrix(os, "  deviated allotments", w.at("deviated_allotments"));
    if (w.contains("note")) os << "    note: " << w.at("note").get<std::string>() << "\n";
  }
  if (r.contains("evidence")) {
    for (const Json& e : r.at("evidence")) {
      os << "  evidence: agent " << e.at("agent").dump() << ", "
         << e.at("direction").get<std::string>() << ", point";
      for (const Json& v : e.at("offending_point")) os << " " << cell(v);
      os << "\n";
    }
  }
  if (r.contains("survivors")) {
    os << "  survivors:";
    for (const Json& s : r.at("survivors")) os << " " << s.get<std::string>();
    os << "\n";
    for (const Json& e : r.at("eliminations")) {
      os << "  eliminated: " << e.at("rule").get<std::string>() << " by "
         << e.at("axiom").get<std::string>();
      if (e.contains("detail")) os << " (" << e.at("detail").get<std::string>() << ")";
      os << "\n";
    }
    os << "  uniform unique: " << (r.at("uniform_unique").get<bool>() ? "yes" : "no")
       << "\n";
  }
  if (r.contains("violations")) {
    os << "  consistent: " << (r.at("consistent").get<bool>() ? "yes" : "no") << "\n";
    for (const Json& v : r.at("violations")) {
      os << "  violated implication:";
      for (const Json& a : v.at("antecedents")) os << " " << a.get<std::string>();
      os << " => " << v.at("consequent").get<std::string>() << "\n";
    }
  }
  if (r.contains("profiles_checked"))
    os << "  profiles checked: " << r.at("profiles_checked").dump() << "\n";
}

}  // namespace detail

inline std::string render_table(const RunReport& report) {
  std::ostringstream os;
  const Json& doc = report.doc;
  os << kToolName << " " << kToolVersion << ": "
     << doc.at("scenario").at("command").get<std::string>() << "\n";
  for (const Json& r : doc.at("results")) detail::render_result_table(os, r);
  if (doc.contains("elapsed_ms")) os << "elapsed ms: " << doc.at("elapsed_ms").dump() << "\n";
  return os.str();
}

inline void emit_report(const RunReport& report, const std::string& format,
                        std::ostream& os) {
  if (format == "json") {
    os << report.doc.dump(2) << "\n";
  } else if (format == "table") {
    os << render_table(report);
  } else {
    throw Error(errc::parse_error, "unknown format '" + format + "'");
  }
}

inline void emit_report_to_file(const RunReport& report, const std::string& format,
                                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(errc::io_error, "cannot open output path '" + path + "'");
  emit_report(report, format, out);
  out.flush();
  if (!out) throw Error(errc::io_error, "failed writing to '" + path + "'");
}

}  // namespace mdsp
