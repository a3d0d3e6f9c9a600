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

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdsp/axioms.hpp"

namespace mdsp {

// ---------------------------------------------------------------------------
// Option sets
// ---------------------------------------------------------------------------

/// What an agent can attain by varying her own report while the others' peaks
/// stay fixed, swept over a finite grid of reports. For strategy-proof
/// own-peak-only rules the true option set is a product of intervals; the
/// validation flag records whether the finite sweep is consistent with that
/// structure (the attained set must be the box corners plus the grid points
/// inside, in every commodity, combined freely across commodities).
struct OptionBox {
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Bundle> swept;  // deduplicated, lexicographically sorted
  bool box_structure_valid = true;
  std::string validation_note;
};

namespace detail {

inline bool bundle_less(const Bundle& a, const Bundle& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::vector<Bundle> others_from_conditioning(const ProfileSpace& space,
                                                    std::size_t agent,
                                                    std::uint64_t cidx) {
  std::vector<std::uint32_t> idx;
  space.conditioning_at(cidx, agent, idx);
  std::vector<Bundle> others;
  others.reserve(space.agents() - 1);
  for (std::size_t i = 0; i < space.agents(); ++i) {
    if (i != agent) others.push_back(space.choice(idx[i]));
  }
  return others;
}

inline PeakProfile profile_with_agent(const std::vector<Bundle>& others,
                                      std::size_t agent, const Bundle& own) {
  PeakProfile profile;
  profile.peaks.reserve(others.size() + 1);
  std::size_t o = 0;
  for (std::size_t i = 0; i <= others.size(); ++i) {
    if (i == agent) {
      profile.peaks.push_back(own);
    } else {
      profile.peaks.push_back(others[o++]);
    }
  }
  return profile;
}

}  // namespace detail

inline OptionBox option_box(const Rule& rule, const Economy& econ, std::size_t agent,
                            const std::vector<Bundle>& others_peaks,
                            const PeakGrid& sweep) {
  if (agent >= econ.agents) throw Error(errc::shape_error, "agent index out of range");
  if (others_peaks.size() + 1 != econ.agents)
    throw Error(errc::shape_error, "need exactly one peak per other agent");

  OptionBox box;
  const std::vector<Bundle> reports = grid_peak_choices(sweep);
  box.swept.reserve(reports.size());
  for (const Bundle& own : reports) {
    const PeakProfile profile = detail::profile_with_agent(others_peaks, agent, own);
    box.swept.push_back(rule(econ, profile).shares[agent]);
  }
  std::sort(box.swept.begin(), box.swept.end(), detail::bundle_less);
  box.swept.erase(std::unique(box.swept.begin(), box.swept.end()), box.swept.end());

  const std::size_t l = econ.commodities();
  box.intervals.resize(l);
  std::vector<std::vector<Rational>> attained(l);
  for (std::size_t c = 0; c < l; ++c) {
    for (const Bundle& x : box.swept) attained[c].push_back(x[c]);
    std::sort(attained[c].begin(), attained[c].end());
    attained[c].erase(std::unique(attained[c].begin(), attained[c].end()),
                      attained[c].end());
    box.intervals[c] = {attained[c].front(), attained[c].back()};
  }

  // Finite rendering of the product-of-intervals structure.
  std::size_t expected_size = 1;
  for (std::size_t c = 0; c < l; ++c) {
    std::vector<Rational> expected = {box.intervals[c].first};
    for (const Rational& g : sweep.axes[c]) {
      if (g > box.intervals[c].first && g < box.intervals[c].second) expected.push_back(g);
    }
    if (box.intervals[c].second != box.intervals[c].first)
      expected.push_back(box.intervals[c].second);
    if (attained[c] != expected) {
      box.box_structure_valid = false;
      box.validation_note = "commodity " + std::to_string(c) +
                            " attains values outside the clamped grid pattern";
    }
    expected_size *= attained[c].size();
  }
  if (box.box_structure_valid && box.swept.size() != expected_size) {
    box.box_structure_valid = false;
    box.validation_note = "attained set is not the product of its projections";
  }
  return box;
}

// ---------------------------------------------------------------------------
// Domination via option-set nesting
// ---------------------------------------------------------------------------

enum class DominationRelation { ADominatesB, BDominatesA, Equivalent, Incomparable };

inline const char* domination_relation_name(DominationRelation r) {
  switch (r) {
    case DominationRelation::ADominatesB: return "a-dominates-b";
    case DominationRelation::BDominatesA: return "b-dominates-a";
    case DominationRelation::Equivalent: return "equivalent";
    case DominationRelation::Incomparable: return "incomparable";
  }
  return "unknown";
}

struct DominationEvidence {
  std::string direction;  // which nesting failed, e.g. "option set of b not within a"
  std::size_t agent = 0;
  std::vector<Bundle> others_peaks;
  Bundle offending;  // an attainable point of the uncovered rule outside the other's box
};

struct DominationVerdict {
  DominationRelation relation = DominationRelation::Incomparable;
  std::string rule_a;
  std::string rule_b;
  std::vector<DominationEvidence> evidence;
  std::uint64_t boxes_compared = 0;
  std::uint64_t conditioning_profiles = 0;
};

namespace detail {

inline std::vector<std::pair<Rational, Rational>> option_intervals(
    const Rule& rule, const Economy& econ, const ProfileSpace& space, std::size_t agent,
    const std::vector<Bundle>& others) {
  const std::size_t l = econ.commodities();
  std::vector<std::pair<Rational, Rational>> intervals(l);
  bool first = true;
  for (std::size_t t = 0; t < space.choice_count(); ++t) {
    const PeakProfile profile = profile_with_agent(others, agent, space.choice(t));
    const Bundle share = rule(econ, profile).shares[agent];
    for (std::size_t c = 0; c < l; ++c) {
      if (first || share[c] < intervals[c].first) intervals[c].first = share[c];
      if (first || share[c] > intervals[c].second) intervals[c].second = share[c];
    }
    first = false;
  }
  return intervals;
}

inline bool intervals_within(const std::vector<std::pair<Rational, Rational>>& inner,
                             const std::vector<std::pair<Rational, Rational>>& outer) {
  for (std::size_t c = 0; c < inner.size(); ++c) {
    if (inner[c].first < outer[c].first || inner[c].second > outer[c].second) return false;
  }
  return true;
}

inline Bundle outside_corner(const std::vector<std::pair<Rational, Rational>>& inner,
                             const std::vector<std::pair<Rational, Rational>>& outer) {
  Bundle corner(inner.size());
  for (std::size_t c = 0; c < inner.size(); ++c) {
    if (inner[c].first < outer[c].first) {
      corner[c] = inner[c].first;
    } else if (inner[c].second > outer[c].second) {
      corner[c] = inner[c].second;
    } else {
      corner[c] = inner[c].first;
    }
  }
  return corner;
}

inline std::vector<std::uint64_t> sampled_conditionings(std::uint64_t total,
                                                        std::uint64_t sample) {
  std::vector<std::uint64_t> picks;
  if (sample == 0 || sample >= total) {
    picks.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) picks[i] = i;
  } else {
    picks.reserve(sample);
    for (std::uint64_t k = 0; k < sample; ++k) {
      const std::uint64_t idx = (k * total) / sample;
      if (picks.empty() || picks.back() != idx) picks.push_back(idx);
    }
  }
  return picks;
}

}  // namespace detail

/// Verdict on the welfare preorder between two grid-certified strategy-proof
/// rules: rule A dominates rule B exactly when B's option set nests inside A's
/// for every agent and every report of the others.
inline DominationVerdict check_domination(const Rule& rule_a, const Rule& rule_b,
                                          const Economy& econ, const PeakGrid& grid,
                                          std::uint64_t conditioning_sample = 0,
                                          const SweepOptions& options = {}) {
  for (const Rule* r : {&rule_a, &rule_b}) {
    const AxiomReport sp = check_strategy_proof(*r, econ, grid, options);
    if (sp.verdict != Verdict::CertifiedOnGrid)
      throw Error(errc::not_strategy_proof,
                  "rule '" + r->name + "' is not strategy-proof on the grid");
  }

  const ProfileSpace space(econ, grid);
  const std::vector<std::uint64_t> picks =
      detail::sampled_conditionings(space.conditioning_count(), conditioning_sample);
  const std::uint64_t domain = picks.size() * econ.agents;

  struct Failure {
    std::uint64_t key;
    DominationEvidence evidence;
  };
  struct Local {
    std::vector<Failure> a_gaps;  // places where b's option set escapes a's
    std::vector<Failure> b_gaps;
  };
  std::vector<Local> locals(std::max(1u, options.workers));

  detail::run_chunked(
      domain, options.workers,
      [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        Local& local = locals[worker];
        for (std::uint64_t k = begin; k < end; ++k) {
          const std::size_t agent = static_cast<std::size_t>(k / picks.size());
          const std::uint64_t cond = picks[k % picks.size()];
          const std::vector<Bundle> others =
              detail::others_from_conditioning(space, agent, cond);
          const auto box_a = detail::option_intervals(rule_a, econ, space, agent, others);
          const auto box_b = detail::option_intervals(rule_b, econ, space, agent, others);
          if (!detail::intervals_within(box_b, box_a)) {
            local.a_gaps.push_back(
                {k, {"option set of " + rule_b.name + " not within " + rule_a.name, agent,
                     others, detail::outside_corner(box_b, box_a)}});
          }
          if (!detail::intervals_within(box_a, box_b)) {
            local.b_gaps.push_back(
                {k, {"option set of " + rule_a.name + " not within " + rule_b.name, agent,
                     others, detail::outside_corner(box_a, box_b)}});
          }
        }
      });

  std::vector<Failure> a_gaps, b_gaps;
  for (Local& l : locals) {
    a_gaps.insert(a_gaps.end(), l.a_gaps.begin(), l.a_gaps.end());
    b_gaps.insert(b_gaps.end(), l.b_gaps.begin(), l.b_gaps.end());
  }
  auto by_key = [](const Failure& x, const Failure& y) { return x.key < y.key; };
  std::sort(a_gaps.begin(), a_gaps.end(), by_key);
  std::sort(b_gaps.begin(), b_gaps.end(), by_key);

  DominationVerdict verdict;
  verdict.rule_a = rule_a.name;
  verdict.rule_b = rule_b.name;
  verdict.boxes_compared = domain;
  verdict.conditioning_profiles = picks.size();
  const bool a_covers = a_gaps.empty();
  const bool b_covers = b_gaps.empty();
  if (a_covers && b_covers) {
    verdict.relation = DominationRelation::Equivalent;
  } else if (a_covers) {
    verdict.relation = DominationRelation::ADominatesB;
  } else if (b_covers) {
    verdict.relation = DominationRelation::BDominatesA;
  } else {
    verdict.relation = DominationRelation::Incomparable;
  }
  constexpr std::size_t kMaxEvidence = 4;
  for (std::size_t i = 0; i < a_gaps.size() && i < kMaxEvidence; ++i)
    verdict.evidence.push_back(a_gaps[i].evidence);
  for (std::size_t i = 0; i < b_gaps.size() && i < kMaxEvidence; ++i)
    verdict.evidence.push_back(b_gaps[i].evidence);
  return verdict;
}

/// Exact agreement of two rules on every grid profile.
inline bool extensionally_equal(const Rule& a, const Rule& b, const Economy& econ,
                                const PeakGrid& grid) {
  const ProfileSpace space(econ, grid);
  std::vector<std::uint32_t> idx;
  for (std::uint64_t p = 0; p < space.profile_count(); ++p) {
    space.indices_at(p, idx);
    const PeakProfile profile = space.profile_from(idx);
    if (a(econ, profile) != b(econ, profile)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Candidate rules for the probe
// ---------------------------------------------------------------------------

enum class BoxEditDirection { Lower, Upper };

/// Re-materializes an option-box endpoint edit as a rule: when the base rule
/// clamps the chosen agent away from her reported peak on the chosen
/// commodity, she is released by up to delta, and the difference is absorbed
/// by the other agents in index order within the box. Feasible and peaks-only
/// by construction; generically not strategy-proof.
inline Rule box_edit_rule(const Rule& base, const Economy& econ, std::size_t agent,
                          std::size_t commodity, BoxEditDirection dir,
                          const Rational& delta) {
  const std::string name = base.name + "+edit(a" + std::to_string(agent + 1) + ",c" +
                           std::to_string(commodity + 1) + "," +
                           (dir == BoxEditDirection::Upper ? "up" : "down") + "," +
                           to_decimal_string(delta) + ")";
  return Rule{name, [base, agent, commodity, dir, delta](const Economy& e,
                                                         const PeakProfile& peaks) {
                Allocation x = base(e, peaks);
                const Rational& t = peaks.peaks[agent][commodity];
                Rational& own = x.shares[agent][commodity];
                if (dir == BoxEditDirection::Upper && own < t) {
                  const Rational target = std::min(t, own + delta);
                  Rational need = target - own;
                  for (std::size_t j = 0; j < e.agents && need > 0; ++j) {
                    if (j == agent) continue;
                    const Rational take = std::min(need, x.shares[j][commodity]);
                    x.shares[j][commodity] -= take;
                    need -= take;
                  }
                  own = target - need;
                } else if (dir == BoxEditDirection::Lower && own > t) {
                  const Rational target = std::max(t, own - delta);
                  Rational give = own - target;
                  for (std::size_t j = 0; j < e.agents && give > 0; ++j) {
                    if (j == agent) continue;
                    const Rational room = e.omega[commodity] - x.shares[j][commodity];
                    const Rational put = std::min(give, room);
                    x.shares[j][commodity] += put;
                    give -= put;
                  }
                  own = target + give;
                }
                return x;
              }};
}

/// The stock catalog: the uniform rule, the serial rule in agent order, the
/// proportional rule, the constant equal-division rule, and a sequential rule
/// with an unequal reference.
inline std::vector<Rule> default_rule_catalog(const Economy& econ) {
  std::vector<Rule> catalog;
  catalog.push_back(as_rule(UniformRule{}, econ));
  catalog.push_back(as_rule(SerialRule{identity_orders(econ)}, econ, "serial"));
  catalog.push_back(as_rule(ProportionalRule{}, econ));
  catalog.push_back(
      as_rule(ConstantRule{equal_division_allocation(econ)}, econ, "constant"));
  if (econ.agents >= 2)
    catalog.push_back(
        as_rule(SequentialRule{skewed_reference(econ)}, econ, "sequential(skewed)"));
  return catalog;
}

namespace detail {

inline Rational grid_step(const PeakGrid& grid, std::size_t commodity) {
  const auto& axis = grid.axes[commodity];
  return axis.size() > 1 ? axis[1] - axis[0] : Rational(0);
}

inline std::vector<Rule> pusp_candidates(const Rule& base, const Economy& econ,
                                         const PeakGrid& grid, std::size_t budget) {
  std::vector<Rule> candidates = default_rule_catalog(econ);
  candidates.push_back(
      as_rule(SequentialRule{std::vector<Bundle>(econ.agents, equal_division(econ))}, econ,
              "sequential(equal)"));
  if (econ.agents >= 2)
    candidates.push_back(as_rule(SerialRule{reversed_orders(econ)}, econ, "serial(reversed)"));

  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    const Rational step = grid_step(grid, c);
    if (step == 0) continue;
    for (std::size_t k = 1; k <= budget; ++k) {
      const Rational delta = step * static_cast<int>(k);
      // Guarantee transfers between agent pairs, re-materialized as
      // sequential rules.
      for (std::size_t i = 0; i < econ.agents; ++i) {
        for (std::size_t j = 0; j < econ.agents; ++j) {
          if (i == j) continue;
          std::vector<Bundle> reference(econ.agents, equal_division(econ));
          reference[i][c] += delta;
          reference[j][c] -= delta;
          if (reference[j][c] < 0 || reference[i][c] > econ.omega[c]) continue;
          candidates.push_back(as_rule(
              SequentialRule{reference}, econ,
              "sequential(equal; a" + std::to_string(i + 1) + "+=" +
                  to_decimal_string(delta) + " on c" + std::to_string(c + 1) + " from a" +
                  std::to_string(j + 1) + ")"));
        }
      }
      // Direct option-box endpoint enlargements of the probed rule.
      if (econ.agents >= 2) {
        for (std::size_t a = 0; a < econ.agents; ++a) {
          candidates.push_back(
              box_edit_rule(base, econ, a, c, BoxEditDirection::Upper, delta));
          candidates.push_back(
              box_edit_rule(base, econ, a, c, BoxEditDirection::Lower, delta));
        }
      }
    }
  }
  return candidates;
}

}  // namespace detail

struct PuspOptions {
  std::size_t perturbation_budget = 1;
  std::uint64_t conditioning_sample = 0;
  unsigned workers = 1;
};

/// Searches a finite family of candidate rules for a strategy-proof dominator
/// of the probed rule. CertifiedOnGrid means no candidate both certifies
/// strategy-proofness and strictly expands the rule's option sets everywhere;
/// evidence, not proof. Requires the probed rule to certify strategy-proofness,
/// unanimity, and replacement monotonicity first.
inline AxiomReport pusp_probe(const Rule& rule, const Economy& econ, const PeakGrid& grid,
                              const PuspOptions& options = {}) {
  const SweepOptions sweep{options.workers};

  std::vector<std::string> failed;
  if (check_strategy_proof(rule, econ, grid, sweep).verdict != Verdict::CertifiedOnGrid)
    failed.push_back(axiom::strategy_proofness);
  if (check_unanimity(rule, econ, grid, sweep).verdict != Verdict::CertifiedOnGrid)
    failed.push_back(axiom::unanimity);
  if (check_replacement_monotone(rule, econ, grid, sweep).verdict !=
      Verdict::CertifiedOnGrid)
    failed.push_back(axiom::replacement_monotonicity);
  if (!failed.empty()) {
    std::string msg = "probe refused; hypotheses not certified for '" + rule.name + "':";
    for (const auto& f : failed) msg += " " + f;
    throw HypothesesError(std::move(failed), msg);
  }

  const auto start = std::chrono::steady_clock::now();
  const ProfileSpace space(econ, grid);
  const std::vector<std::uint64_t> picks =
      detail::sampled_conditionings(space.conditioning_count(), options.conditioning_sample);

  // Option intervals of the probed rule, per (agent, conditioning profile).
  std::vector<std::vector<std::pair<Rational, Rational>>> base_boxes;
  base_boxes.reserve(econ.agents * picks.size());
  for (std::size_t agent = 0; agent < econ.agents; ++agent) {
    for (std::uint64_t cond : picks) {
      base_boxes.push_back(detail::option_intervals(
          rule, econ, space, agent, detail::others_from_conditioning(space, agent, cond)));
    }
  }

  const std::vector<Rule> candidates =
      detail::pusp_candidates(rule, econ, grid, options.perturbation_budget);

  std::uint64_t sp_rejected = 0, non_dominating = 0, equivalent = 0;
  std::optional<Witness> dominator;

  for (const Rule& candidate : candidates) {
    if (check_strategy_proof(candidate, econ, grid, sweep).verdict !=
        Verdict::CertifiedOnGrid) {
      ++sp_rejected;
      continue;
    }
    bool nests = true;
    std::size_t slot = 0;
    for (std::size_t agent = 0; agent < econ.agents && nests; ++agent) {
      for (std::uint64_t cond : picks) {
        const auto cand_box = detail::option_intervals(
            candidate, econ, space, agent,
            detail::others_from_conditioning(space, agent, cond));
        if (!detail::intervals_within(base_boxes[slot], cand_box)) {
          nests = false;
          break;
        }
        ++slot;
      }
    }
    if (!nests) {
      ++non_dominating;
      continue;
    }
    if (extensionally_equal(rule, candidate, econ, grid)) {
      ++equivalent;
      continue;
    }
    Witness w;
    w.note = "strategy-proof dominator found: " + candidate.name;
    dominator = std::move(w);
    break;
  }

  AxiomReport report;
  report.axiom = axiom::pusp;
  report.rule = rule.name;
  report.verdict = dominator ? Verdict::Refuted : Verdict::CertifiedOnGrid;
  report.witness = std::move(dominator);
  report.profiles_checked = space.profile_count();
  report.cases_checked = candidates.size();
  for (const auto& axis : grid.axes) report.axis_points.push_back(axis.size());
  if (report.verdict == Verdict::CertifiedOnGrid) {
    Witness summary;
    summary.note = "no dominator among " + std::to_string(candidates.size()) +
                   " candidates (" + std::to_string(sp_rejected) +
                   " not strategy-proof, " + std::to_string(non_dominating) +
                   " not dominating, " + std::to_string(equivalent) +
                   " welfare-equivalent on the grid)";
    report.witness = std::move(summary);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// ---------------------------------------------------------------------------
// Uniqueness spot-check
// ---------------------------------------------------------------------------

struct EliminationRecord {
  std::string rule;
  std::string axiom;
  std::string detail;
};

struct Theorem3Report {
  std::vector<std::string> survivors;
  std::vector<EliminationRecord> eliminations;
  bool survivors_all_equal_uniform = false;
  bool uniform_unique = false;
  std::string substituted_axiom;  // set when non-bossiness replaces replacement monotonicity
};

/// Runs the four-property elimination over a rule catalog: strategy-proofness,
/// equal treatment, replacement monotonicity (optionally non-bossiness
/// instead), and the dominator probe. Survivors are then compared
/// extensionally against the uniform rule.
inline Theorem3Report theorem3_spotcheck(const Economy& econ, const PeakGrid& grid,
                                         const std::vector<Rule>& catalog,
                                         const PuspOptions& options = {},
                                         bool substitute_non_bossiness = false) {
  const SweepOptions sweep{options.workers};
  const Rule uniform = as_rule(UniformRule{}, econ);

  Theorem3Report report;
  if (substitute_non_bossiness) report.substituted_axiom = axiom::non_bossiness;

  std::vector<const Rule*> survivors;
  for (const Rule& rule : catalog) {
    if (check_strategy_proof(rule, econ, grid, sweep).verdict != Verdict::CertifiedOnGrid) {
      report.eliminations.push_back({rule.name, axiom::strategy_proofness, ""});
      continue;
    }
    if (check_equal_treatment(rule, econ, grid, sweep).verdict !=
        Verdict::CertifiedOnGrid) {
      report.eliminations.push_back({rule.name, axiom::equal_treatment, ""});
      continue;
    }
    const AxiomReport third =
        substitute_non_bossiness ? check_non_bossy(rule, econ, grid, sweep)
                                 : check_replacement_monotone(rule, econ, grid, sweep);
    if (third.verdict != Verdict::CertifiedOnGrid) {
      report.eliminations.push_back({rule.name, third.axiom, ""});
      continue;
    }
    try {
      const AxiomReport probe = pusp_probe(rule, econ, grid, options);
      if (probe.verdict != Verdict::CertifiedOnGrid) {
        report.eliminations.push_back(
            {rule.name, axiom::pusp, probe.witness ? probe.witness->note : ""});
        continue;
      }
    } catch (const HypothesesError& e) {
      std::string detail = "probe hypotheses not certified";
      const DominationVerdict vs_uniform =
          check_domination(uniform, rule, econ, grid, options.conditioning_sample, sweep);
      if (vs_uniform.relation == DominationRelation::ADominatesB)
        detail += "; dominated by the uniform rule on the grid";
      report.eliminations.push_back(
          {rule.name, e.failed().empty() ? axiom::pusp : e.failed().front(), detail});
      continue;
    }
    survivors.push_back(&rule);
  }

  report.survivors_all_equal_uniform = true;
  for (const Rule* s : survivors) {
    report.survivors.push_back(s->name);
    if (!extensionally_equal(*s, uniform, econ, grid))
      report.survivors_all_equal_uniform = false;
  }
  report.uniform_unique = !survivors.empty() && report.survivors_all_equal_uniform;
  return report;
}

}  // namespace mdsp
