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
#include <vector>

#include "mdsp/rational.hpp"

namespace mdsp {

enum class FillMode { ExcessDemand, ExcessSupply, Balanced };

inline const char* fill_mode_name(FillMode m) {
  switch (m) {
    case FillMode::ExcessDemand: return "excess-demand";
    case FillMode::ExcessSupply: return "excess-supply";
    case FillMode::Balanced: return "balanced";
  }
  return "unknown";
}

/// The common bound of the uniform formula for one commodity. In excess demand
/// lambda satisfies sum_i min(p_i, lambda) = omega exactly; in excess supply
/// sum_i max(p_i, lambda) = omega. In the balanced case every agent gets her
/// peak and lambda is pinned to max(p) (the smallest value closing the
/// demand-side equation).
struct LambdaSolution {
  Rational lambda;
  FillMode mode = FillMode::Balanced;
};

namespace detail {

// The solvers only need nonnegative peaks; membership of peaks in the
// consumption box is enforced at the rule level.
inline void require_peaks_nonnegative(const std::vector<Rational>& peaks) {
  for (const Rational& p : peaks) {
    if (p < 0)
      throw Error(errc::invalid_peak, "negative peak " + to_fraction_string(p));
  }
}

}  // namespace detail

/// Exact solve of the uniform rule's per-commodity equation by walking the
/// sorted peak breakpoints of the piecewise-linear map. Demand and supply
/// crossings are unique; only the balanced case has a solution interval.
inline LambdaSolution solve_lambda(const std::vector<Rational>& peaks,
                                   const Rational& omega) {
  if (peaks.empty()) throw Error(errc::invalid_dimensions, "no peaks");
  detail::require_peaks_nonnegative(peaks);

  std::vector<Rational> sorted = peaks;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  Rational total = 0;
  for (const Rational& p : sorted) total += p;

  if (total == omega)
    return LambdaSolution{sorted.back(), FillMode::Balanced};

  if (total > omega) {
    // f(lambda) = sum min(p_i, lambda); on [s_k, s_{k+1}] it equals
    // prefix_k + (n - k) * lambda.
    Rational prefix = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Rational at_break = prefix + sorted[k] * static_cast<int>(n - k);
      if (at_break >= omega) {
        const Rational lambda = (omega - prefix) / static_cast<int>(n - k);
        return LambdaSolution{lambda, FillMode::ExcessDemand};
      }
      prefix += sorted[k];
    }
    // Unreachable: f(max peak) = total > omega.
    throw Error(errc::inconsistency, "demand-side lambda solve fell through");
  }

  // Supply: g(lambda) = sum max(p_i, lambda) = k * lambda + suffix_k on
  // [s_k, s_{k+1}], increasing once any peak is passed.
  Rational suffix = total;
  for (std::size_t k = 0; k < n; ++k) {
    suffix -= sorted[k];
    // Segment [s_k, s_{k+1}] with k+1 agents below lambda.
    const Rational upper = (k + 1 < n) ? sorted[k + 1] : omega;
    const Rational at_upper = upper * static_cast<int>(k + 1) + suffix;
    if (at_upper >= omega) {
      const Rational lambda = (omega - suffix) / static_cast<int>(k + 1);
      return LambdaSolution{lambda, FillMode::ExcessSupply};
    }
  }
  throw Error(errc::inconsistency, "supply-side lambda solve fell through");
}

/// Water-filling against a reference row g (one commodity): in excess demand
/// each agent gets min(p_i, g_i + lambda), in excess supply max(p_i,
/// g_i - lambda), with the smallest lambda >= 0 that restores the column sum.
/// Requires sum(g) = omega and 0 <= g_i <= omega.
inline std::vector<Rational> reference_fill(const std::vector<Rational>& peaks,
                                            const std::vector<Rational>& reference,
                                            const Rational& omega) {
  if (peaks.size() != reference.size())
    throw Error(errc::shape_error, "peaks and reference of unequal length");
  detail::require_peaks_nonnegative(peaks);

  Rational ref_sum = 0;
  for (const Rational& g : reference) {
    if (g < 0 || g > omega)
      throw Error(errc::invalid_reference,
                  "reference entry " + to_fraction_string(g) + " outside [0, " +
                      to_fraction_string(omega) + "]");
    ref_sum += g;
  }
  if (ref_sum != omega)
    throw Error(errc::invalid_reference, "reference column does not sum to omega");

  const std::size_t n = peaks.size();
  Rational peak_sum = 0;
  for (const Rational& p : peaks) peak_sum += p;

  std::vector<Rational> shares(n);

  if (peak_sum >= omega) {
    // Gaps d_i = p_i - g_i; agents with d_i <= 0 are capped at their peak for
    // every lambda >= 0.
    std::vector<Rational> gaps;
    Rational base = 0;  // sum of contributions at lambda = 0
    for (std::size_t i = 0; i < n; ++i) {
      const Rational d = peaks[i] - reference[i];
      base += d > 0 ? reference[i] : peaks[i];
      if (d > 0) gaps.push_back(d);
    }
    std::sort(gaps.begin(), gaps.end());

    Rational lambda = 0;
    Rational value = base;
    Rational prev = 0;
    std::size_t active = gaps.size();
    for (std::size_t k = 0; k <= gaps.size(); ++k) {
      const bool last = k == gaps.size();
      const Rational next = last ? prev : gaps[k];
      const Rational at_next = value + (next - prev) * static_cast<int>(active);
      if (last || at_next >= omega) {
        if (active == 0) {
          lambda = prev;  // flat tail: peak sum equals omega
        } else {
          lambda = prev + (omega - value) / static_cast<int>(active);
        }
        break;
      }
      value = at_next;
      prev = next;
      --active;
    }
    for (std::size_t i = 0; i < n; ++i)
      shares[i] = std::min(peaks[i], reference[i] + lambda);
  } else {
    std::vector<Rational> gaps;  // e_i = g_i - p_i where positive
    Rational base = 0;           // sum at lambda = 0: max(p_i, g_i)
    for (std::size_t i = 0; i < n; ++i) {
      const Rational e = reference[i] - peaks[i];
      base += e > 0 ? reference[i] : peaks[i];
      if (e > 0) gaps.push_back(e);
    }
    std::sort(gaps.begin(), gaps.end());

    Rational lambda = 0;
    Rational value = base;
    Rational prev = 0;
    std::size_t active = gaps.size();
    for (std::size_t k = 0; k <= gaps.size(); ++k) {
      const bool last = k == gaps.size();
      const Rational next = last ? prev : gaps[k];
      const Rational at_next = value - (next - prev) * static_cast<int>(active);
      if (last || at_next <= omega) {
        if (active == 0) {
          lambda = prev;
        } else {
          lambda = prev + (value - omega) / static_cast<int>(active);
        }
        break;
      }
      value = at_next;
      prev = next;
      --active;
    }
    for (std::size_t i = 0; i < n; ++i)
      shares[i] = std::max(peaks[i], reference[i] - lambda);
  }

  return shares;
}

}  // namespace mdsp
