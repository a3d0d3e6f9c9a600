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

#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mdsp/grid.hpp"
#include "mdsp/preferences.hpp"
#include "mdsp/rules.hpp"

namespace mdsp {

enum class Verdict { CertifiedOnGrid, Refuted };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::CertifiedOnGrid ? "certified-on-grid" : "refuted";
}

/// A complete, re-runnable counterexample. Which fields are present depends on
/// the axiom; the profile plus the deviating report always suffice to replay
/// the violation through the rule.
struct Witness {
  std::optional<PeakProfile> profile;
  std::optional<std::size_t> agent;
  std::optional<std::size_t> partner;
  std::optional<std::size_t> commodity;
  std::optional<Bundle> misreport;
  std::optional<Allocation> truthful;
  std::optional<Allocation> deviated;
  std::optional<QuadraticPreference> preference;
  std::string note;
};

/// Grid verdicts are evidence, not continuum proofs: CertifiedOnGrid means no
/// violation among the enumerated profiles at the recorded resolution.
struct AxiomReport {
  std::string axiom;
  std::string rule;
  Verdict verdict = Verdict::CertifiedOnGrid;
  std::optional<Witness> witness;
  std::uint64_t profiles_checked = 0;
  std::uint64_t cases_checked = 0;
  std::vector<std::size_t> axis_points;
  double elapsed_ms = 0.0;
};

struct SweepOptions {
  unsigned workers = 1;
};

// Axiom names used in reports, scenario files, and implication checks.
namespace axiom {
inline constexpr const char* same_sidedness = "same-sidedness";
inline constexpr const char* unanimity = "unanimity";
inline constexpr const char* strategy_proofness = "strategy-proofness";
inline constexpr const char* replacement_monotonicity = "replacement-monotonicity";
inline constexpr const char* non_bossiness = "non-bossiness";
inline constexpr const char* equal_treatment = "equal-treatment";
inline constexpr const char* egalitarian_lower_bound = "egalitarian-lower-bound";
inline constexpr const char* uncompromisingness_1d = "uncompromisingness-1d";
inline constexpr const char* pusp = "pusp";
}  // namespace axiom

// ---------------------------------------------------------------------------
// Sweep machinery
// ---------------------------------------------------------------------------

namespace detail {

using WitnessKey = std::array<std::uint64_t, 4>;

/// Per-worker fold state. Violations are merged by smallest key, so the
/// reported witness is the same for any worker count: the first violation in
/// (profile index, agent, deviation, clause) order over the full domain.
struct SweepLocal {
  bool found = false;
  WitnessKey key{};
  Witness witness;
  std::uint64_t cases = 0;

  template <class MakeWitness>
  void offer(const WitnessKey& k, MakeWitness make) {
    if (found && !(k < key)) return;
    found = true;
    key = k;
    witness = make();
  }
};

inline void merge(SweepLocal& into, SweepLocal&& other) {
  into.cases += other.cases;
  if (other.found && (!into.found || other.key < into.key)) {
    into.found = true;
    into.key = other.key;
    into.witness = std::move(other.witness);
  }
}

/// Splits [0, total) into contiguous chunks, one worker thread per chunk.
/// Fn signature: (worker index, begin, end).
template <class Fn>
void run_chunked(std::uint64_t total, unsigned workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total && total > 0)
    workers = static_cast<unsigned>(total);
  if (total == 0) return;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t rest = total % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < rest ? 1 : 0);
    auto task = [&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (w + 1 == workers) {
      task();
    } else {
      threads.emplace_back(task);
    }
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class Fn>
void run_partitioned(std::uint64_t total, unsigned workers, std::vector<SweepLocal>& locals,
                     Fn&& fn) {
  if (workers < 1) workers = 1;
  locals.assign(workers, SweepLocal{});
  run_chunked(total, workers,
              [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                fn(begin, end, locals[w]);
              });
}

/// Visits every profile once, in index order. Visitor signature:
/// (profile_index, profile, allocation, local).
template <class Visit>
AxiomReport sweep_profiles(const Rule& rule, const Economy& econ, const PeakGrid& grid,
                           const SweepOptions& options, const char* axiom_name,
                           Visit&& visit) {
  const auto start = std::chrono::steady_clock::now();
  const ProfileSpace space(econ, grid);

  std::vector<SweepLocal> locals;
  run_partitioned(space.profile_count(), options.workers, locals,
                  [&](std::uint64_t begin, std::uint64_t end, SweepLocal& local) {
                    std::vector<std::uint32_t> idx;
                    for (std::uint64_t p = begin; p < end; ++p) {
                      space.indices_at(p, idx);
                      const PeakProfile profile = space.profile_from(idx);
                      const Allocation alloc = rule(econ, profile);
                      visit(p, profile, alloc, local);
                    }
                  });

  SweepLocal best;
  for (auto& l : locals) merge(best, std::move(l));

  AxiomReport report;
  report.axiom = axiom_name;
  report.rule = rule.name;
  report.verdict = best.found ? Verdict::Refuted : Verdict::CertifiedOnGrid;
  if (best.found) report.witness = std::move(best.witness);
  report.profiles_checked = space.profile_count();
  report.cases_checked = best.cases;
  for (const auto& axis : grid.axes) report.axis_points.push_back(axis.size());
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

/// Visits every (agent, others-report) block once; inside a block the agent's
/// own report ranges over all grid peaks, so every unilateral deviation is a
/// pair of entries. Visitor signature:
/// (agent, full index vector with the agent slot varying, profile indices per
///  own choice, allocations per own choice, local).
template <class Visit>
AxiomReport sweep_deviations(const Rule& rule, const Economy& econ, const PeakGrid& grid,
                             const SweepOptions& options, const char* axiom_name,
                             Visit&& visit) {
  const auto start = std::chrono::steady_clock::now();
  const ProfileSpace space(econ, grid);
  const std::uint64_t conditioning = space.conditioning_count();
  const std::uint64_t blocks = conditioning * econ.agents;
  const std::size_t choices = space.choice_count();

  std::vector<SweepLocal> locals;
  run_partitioned(blocks, options.workers, locals,
                  [&](std::uint64_t begin, std::uint64_t end, SweepLocal& local) {
                    std::vector<std::uint32_t> idx;
                    std::vector<Allocation> allocs(choices);
                    std::vector<std::uint64_t> pidx(choices);
                    for (std::uint64_t b = begin; b < end; ++b) {
                      const std::size_t agent =
                          static_cast<std::size_t>(b / conditioning);
                      const std::uint64_t cond = b % conditioning;
                      space.conditioning_at(cond, agent, idx);
                      for (std::size_t t = 0; t < choices; ++t) {
                        idx[agent] = static_cast<std::uint32_t>(t);
                        pidx[t] = space.index_of(idx);
                        allocs[t] = rule(econ, space.profile_from(idx));
                      }
                      visit(agent, idx, pidx, allocs, space, local);
                    }
                  });

  SweepLocal best;
  for (auto& l : locals) merge(best, std::move(l));

  AxiomReport report;
  report.axiom = axiom_name;
  report.rule = rule.name;
  report.verdict = best.found ? Verdict::Refuted : Verdict::CertifiedOnGrid;
  if (best.found) report.witness = std::move(best.witness);
  report.profiles_checked = space.profile_count();
  report.cases_checked = best.cases;
  for (const auto& axis : grid.axes) report.axis_points.push_back(axis.size());
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Profile-level axioms
// ---------------------------------------------------------------------------

inline AxiomReport check_same_sided(const Rule& rule, const Economy& econ,
                                    const PeakGrid& grid, const SweepOptions& options = {}) {
  return detail::sweep_profiles(
      rule, econ, grid, options, axiom::same_sidedness,
      [&](std::uint64_t p, const PeakProfile& profile, const Allocation& alloc,
          detail::SweepLocal& local) {
        for (std::size_t c = 0; c < econ.commodities(); ++c) {
          Rational sum = 0;
          for (const Bundle& pk : profile.peaks) sum += pk[c];
          const bool demand = sum >= econ.omega[c];
          const bool supply = sum <= econ.omega[c];
          for (std::size_t i = 0; i < econ.agents; ++i) {
            ++local.cases;
            const bool high = demand && alloc.shares[i][c] > profile.peaks[i][c];
            const bool low = supply && alloc.shares[i][c] < profile.peaks[i][c];
            if (high || low) {
              local.offer({p, i, c, 0}, [&] {
                Witness w;
                w.profile = profile;
                w.agent = i;
                w.commodity = c;
                w.truthful = alloc;
                w.note = high ? "excess demand but allotment exceeds the peak"
                              : "excess supply but allotment falls below the peak";
                return w;
              });
            }
          }
        }
      });
}

inline AxiomReport check_unanimity(const Rule& rule, const Economy& econ,
                                   const PeakGrid& grid, const SweepOptions& options = {}) {
  return detail::sweep_profiles(
      rule, econ, grid, options, axiom::unanimity,
      [&](std::uint64_t p, const PeakProfile& profile, const Allocation& alloc,
          detail::SweepLocal& local) {
        for (std::size_t c = 0; c < econ.commodities(); ++c) {
          Rational sum = 0;
          for (const Bundle& pk : profile.peaks) sum += pk[c];
          if (sum != econ.omega[c]) return;
        }
        for (std::size_t i = 0; i < econ.agents; ++i) {
          ++local.cases;
          if (alloc.shares[i] != profile.peaks[i]) {
            local.offer({p, i, 0, 0}, [&] {
              Witness w;
              w.profile = profile;
              w.agent = i;
              w.truthful = alloc;
              w.note = "peaks sum to the endowment but the agent does not get her peak";
              return w;
            });
          }
        }
      });
}

inline AxiomReport check_equal_treatment(const Rule& rule, const Economy& econ,
                                         const PeakGrid& grid,
                                         const SweepOptions& options = {}) {
  return detail::sweep_profiles(
      rule, econ, grid, options, axiom::equal_treatment,
      [&](std::uint64_t p, const PeakProfile& profile, const Allocation& alloc,
          detail::SweepLocal& local) {
        for (std::size_t i = 0; i < econ.agents; ++i) {
          for (std::size_t j = i + 1; j < econ.agents; ++j) {
            if (profile.peaks[i] != profile.peaks[j]) continue;
            ++local.cases;
            if (alloc.shares[i] != alloc.shares[j]) {
              local.offer({p, i, j, 0}, [&] {
                Witness w;
                w.profile = profile;
                w.agent = i;
                w.partner = j;
                w.truthful = alloc;
                w.note = "identical peaks but different bundles";
                return w;
              });
            }
          }
        }
      });
}

/// Egalitarian lower bound in betweenness form: every preference with the
/// reported peak weakly prefers the allotment to equal division exactly when
/// the allotment equals equal division or lies componentwise between the peak
/// and equal division.
inline AxiomReport check_egalitarian_bound(const Rule& rule, const Economy& econ,
                                           const PeakGrid& grid,
                                           const SweepOptions& options = {}) {
  const Bundle egal = equal_division(econ);
  return detail::sweep_profiles(
      rule, econ, grid, options, axiom::egalitarian_lower_bound,
      [&, egal](std::uint64_t p, const PeakProfile& profile, const Allocation& alloc,
                detail::SweepLocal& local) {
        for (std::size_t i = 0; i < econ.agents; ++i) {
          ++local.cases;
          const Bundle& x = alloc.shares[i];
          if (x == egal || between(x, profile.peaks[i], egal)) continue;
          local.offer({p, i, 0, 0}, [&] {
            Witness w;
            w.profile = profile;
            w.agent = i;
            w.truthful = alloc;
            w.note = "allotment is not between the peak and equal division";
            return w;
          });
        }
      });
}

// ---------------------------------------------------------------------------
// Unilateral-deviation axioms
// ---------------------------------------------------------------------------

/// Strategy-proofness for peaks-only rules, reduced to the betweenness test:
/// for every profile, agent, and misreported peak, the truthful allotment must
/// equal the misreport allotment or lie componentwise between the true peak
/// and the misreport allotment. When refuted, a quadratic preference realizing
/// the gain is attached if the weight ladder finds one.
inline AxiomReport check_strategy_proof(const Rule& rule, const Economy& econ,
                                        const PeakGrid& grid,
                                        const SweepOptions& options = {}) {
  AxiomReport report = detail::sweep_deviations(
      rule, econ, grid, options, axiom::strategy_proofness,
      [&](std::size_t agent, const std::vector<std::uint32_t>&,
          const std::vector<std::uint64_t>& pidx, const std::vector<Allocation>& allocs,
          const ProfileSpace& space, detail::SweepLocal& local) {
        const std::size_t choices = allocs.size();
        for (std::size_t t = 0; t < choices; ++t) {
          const Bundle& truth = allocs[t].shares[agent];
          const Bundle& peak = space.choice(t);
          for (std::size_t d = 0; d < choices; ++d) {
            ++local.cases;  // the identical report counts as a (trivial) triple
            if (d == t) continue;
            const Bundle& dev = allocs[d].shares[agent];
            if (dev == truth || between(truth, peak, dev)) continue;
            local.offer({pidx[t], agent, d, 0}, [&] {
              Witness w;
              w.profile = space.profile_at(pidx[t]);
              w.agent = agent;
              w.misreport = space.choice(d);
              w.truthful = allocs[t];
              w.deviated = allocs[d];
              return w;
            });
          }
        }
      });

  if (report.witness) {
    Witness& w = *report.witness;
    const Bundle& peak = w.profile->peaks[*w.agent];
    const Bundle& worse = w.truthful->shares[*w.agent];
    const Bundle& better = w.deviated->shares[*w.agent];
    if (auto pref = sp_witness_preference(peak, better, worse)) {
      w.preference = *pref;
      w.note = "quadratic preference strictly gains from the misreport";
    } else {
      w.note =
          "betweenness violated; no quadratic witness on the weight ladder (a "
          "single-peaked witness exists outside the quadratic family)";
    }
  }
  return report;
}

inline AxiomReport check_replacement_monotone(const Rule& rule, const Economy& econ,
                                              const PeakGrid& grid,
                                              const SweepOptions& options = {}) {
  return detail::sweep_deviations(
      rule, econ, grid, options, axiom::replacement_monotonicity,
      [&](std::size_t agent, const std::vector<std::uint32_t>&,
          const std::vector<std::uint64_t>& pidx, const std::vector<Allocation>& allocs,
          const ProfileSpace& space, detail::SweepLocal& local) {
        const std::size_t choices = allocs.size();
        const std::size_t n = econ.agents;
        for (std::size_t t = 0; t < choices; ++t) {
          for (std::size_t d = 0; d < choices; ++d) {
            if (d == t) continue;
            for (std::size_t c = 0; c < econ.commodities(); ++c) {
              const Rational& xi = allocs[t].shares[agent][c];
              const Rational& yi = allocs[d].shares[agent][c];
              for (std::size_t j = 0; j < n; ++j) {
                if (j == agent) continue;
                ++local.cases;
                const Rational& xj = allocs[t].shares[j][c];
                const Rational& yj = allocs[d].shares[j][c];
                const bool up_violated = xi <= yi && xj < yj;
                const bool down_violated = xi >= yi && xj > yj;
                if (up_violated || down_violated) {
                  local.offer({pidx[t], agent, d, c * n + j}, [&] {
                    Witness w;
                    w.profile = space.profile_at(pidx[t]);
                    w.agent = agent;
                    w.partner = j;
                    w.commodity = c;
                    w.misreport = space.choice(d);
                    w.truthful = allocs[t];
                    w.deviated = allocs[d];
                    w.note = "another agent's allotment moved in the same direction";
                    return w;
                  });
                }
              }
            }
          }
        }
      });
}

inline AxiomReport check_non_bossy(const Rule& rule, const Economy& econ,
                                   const PeakGrid& grid, const SweepOptions& options = {}) {
  return detail::sweep_deviations(
      rule, econ, grid, options, axiom::non_bossiness,
      [&](std::size_t agent, const std::vector<std::uint32_t>&,
          const std::vector<std::uint64_t>& pidx, const std::vector<Allocation>& allocs,
          const ProfileSpace& space, detail::SweepLocal& local) {
        const std::size_t choices = allocs.size();
        for (std::size_t t = 0; t < choices; ++t) {
          for (std::size_t d = 0; d < choices; ++d) {
            if (d == t) continue;
            ++local.cases;
            if (allocs[t].shares[agent] != allocs[d].shares[agent]) continue;
            if (allocs[t] == allocs[d]) continue;
            std::size_t moved = 0;
            while (moved < econ.agents && allocs[t].shares[moved] == allocs[d].shares[moved])
              ++moved;
            local.offer({pidx[t], agent, d, moved}, [&] {
              Witness w;
              w.profile = space.profile_at(pidx[t]);
              w.agent = agent;
              w.partner = moved;
              w.misreport = space.choice(d);
              w.truthful = allocs[t];
              w.deviated = allocs[d];
              w.note = "own bundle unchanged but the allocation changed";
              return w;
            });
          }
        }
      });
}

/// One-dimensional uncompromisingness: once the rule holds an agent strictly
/// away from her peak, any report on the same side leaves her allotment
/// untouched. Stated for single-commodity economies only.
inline AxiomReport check_uncompromising_1d(const Rule& rule, const Economy& econ,
                                           const PeakGrid& grid,
                                           const SweepOptions& options = {}) {
  if (econ.commodities() != 1)
    throw Error(errc::multi_commodity,
                "uncompromisingness is checked on one-commodity economies");
  return detail::sweep_deviations(
      rule, econ, grid, options, axiom::uncompromisingness_1d,
      [&](std::size_t agent, const std::vector<std::uint32_t>&,
          const std::vector<std::uint64_t>& pidx, const std::vector<Allocation>& allocs,
          const ProfileSpace& space, detail::SweepLocal& local) {
        const std::size_t choices = allocs.size();
        for (std::size_t t = 0; t < choices; ++t) {
          const Rational& peak = space.choice(t)[0];
          const Rational& x = allocs[t].shares[agent][0];
          for (std::size_t d = 0; d < choices; ++d) {
            if (d == t) continue;
            ++local.cases;
            const Rational& alt = space.choice(d)[0];
            const Rational& moved = allocs[d].shares[agent][0];
            const bool below = peak < x && alt <= x && moved != x;
            const bool above = peak > x && alt >= x && moved != x;
            if (below || above) {
              local.offer({pidx[t], agent, d, 0}, [&] {
                Witness w;
                w.profile = space.profile_at(pidx[t]);
                w.agent = agent;
                w.misreport = space.choice(d);
                w.truthful = allocs[t];
                w.deviated = allocs[d];
                w.note = "same-side report moved a clamped allotment";
                return w;
              });
            }
          }
        }
      });
}

// ---------------------------------------------------------------------------
// Pareto improvement search
// ---------------------------------------------------------------------------

/// Exhaustive search over grid-valued allocations for one that weakly improves
/// every agent and strictly improves at least one, under the given quadratic
/// preferences. Returns the first hit in lexicographic order, or nothing.
inline std::optional<Allocation> find_pareto_improvement(
    const Allocation& alloc, const std::vector<QuadraticPreference>& prefs,
    const Economy& econ, const PeakGrid& search) {
  if (prefs.size() != econ.agents)
    throw Error(errc::shape_error, "need one preference per agent");
  if (!is_feasible(alloc, econ))
    throw Error(errc::shape_error, "baseline allocation is infeasible");

  std::vector<Rational> base_loss(econ.agents);
  for (std::size_t i = 0; i < econ.agents; ++i)
    base_loss[i] = quad_loss(prefs[i], alloc.shares[i]);

  const std::vector<Bundle> choices = grid_peak_choices(search);
  const std::size_t free_agents = econ.agents - 1;

  std::vector<std::size_t> pick(free_agents, 0);
  Allocation candidate{std::vector<Bundle>(econ.agents, Bundle(econ.commodities()))};
  while (true) {
    for (std::size_t i = 0; i < free_agents; ++i) candidate.shares[i] = choices[pick[i]];
    bool ok = true;
    for (std::size_t c = 0; c < econ.commodities() && ok; ++c) {
      Rational rest = econ.omega[c];
      for (std::size_t i = 0; i < free_agents; ++i) rest -= candidate.shares[i][c];
      if (rest < 0 || rest > econ.omega[c]) ok = false;
      candidate.shares[free_agents][c] = rest;
    }
    if (ok && candidate != alloc) {
      bool weak = true, strict = false;
      for (std::size_t i = 0; i < econ.agents && weak; ++i) {
        const Rational loss = quad_loss(prefs[i], candidate.shares[i]);
        if (loss > base_loss[i]) weak = false;
        if (loss < base_loss[i]) strict = true;
      }
      if (weak && strict) return candidate;
    }

    if (free_agents == 0) return std::nullopt;
    std::size_t i = free_agents;
    bool done = false;
    while (i > 0) {
      --i;
      if (++pick[i] < choices.size()) break;
      pick[i] = 0;
      if (i == 0) done = true;
    }
    if (done) return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Implication consistency
// ---------------------------------------------------------------------------

struct ImplicationViolation {
  std::vector<std::string> antecedents;
  std::string consequent;
};

/// Cross-checks certified/refuted verdicts against the structural
/// implications between the axioms. An antecedent-certified,
/// consequent-refuted pair is an internal inconsistency of the sweeps, never a
/// property of the rule.
inline std::vector<ImplicationViolation> check_implications(
    const std::vector<AxiomReport>& reports) {
  auto verdict_of = [&](const char* name) -> const AxiomReport* {
    for (const AxiomReport& r : reports)
      if (r.axiom == name) return &r;
    return nullptr;
  };
  auto certified = [&](const AxiomReport* r) {
    return r != nullptr && r->verdict == Verdict::CertifiedOnGrid;
  };
  auto refuted = [&](const AxiomReport* r) {
    return r != nullptr && r->verdict == Verdict::Refuted;
  };

  std::vector<ImplicationViolation> out;
  const AxiomReport* rm = verdict_of(axiom::replacement_monotonicity);
  const AxiomReport* nb = verdict_of(axiom::non_bossiness);
  const AxiomReport* sp = verdict_of(axiom::strategy_proofness);
  const AxiomReport* un = verdict_of(axiom::unanimity);
  const AxiomReport* ss = verdict_of(axiom::same_sidedness);

  if (certified(rm) && refuted(nb))
    out.push_back({{axiom::replacement_monotonicity}, axiom::non_bossiness});
  if (certified(sp) && certified(un) && certified(nb) && refuted(ss))
    out.push_back({{axiom::strategy_proofness, axiom::unanimity, axiom::non_bossiness},
                   axiom::same_sidedness});
  if (certified(ss) && refuted(un))
    out.push_back({{axiom::same_sidedness}, axiom::unanimity});
  return out;
}

}  // namespace mdsp
