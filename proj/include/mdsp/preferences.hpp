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

#include <optional>
#include <vector>

#include "mdsp/economy.hpp"

namespace mdsp {

/// A concrete multidimensional single-peaked preference: lower weighted
/// squared deviation from the peak is better. Used wherever a full preference
/// (not just a peak) is needed, e.g. manipulation witnesses and the Pareto
/// improvement search.
struct QuadraticPreference {
  Bundle peak;
  std::vector<Rational> weights;

  bool operator==(const QuadraticPreference&) const = default;
};

inline QuadraticPreference make_quadratic(Bundle peak, std::vector<Rational> weights) {
  if (peak.size() != weights.size())
    throw Error(errc::shape_error, "peak and weight vectors of unequal length");
  for (const Rational& w : weights) {
    if (w <= 0)
      throw Error(errc::invalid_preference,
                  "nonpositive weight " + to_fraction_string(w));
  }
  return QuadraticPreference{std::move(peak), std::move(weights)};
}

/// sum_l w_l (x_l - p_l)^2, exact.
inline Rational quad_loss(const QuadraticPreference& pref, const Bundle& x) {
  if (x.size() != pref.peak.size())
    throw Error(errc::shape_error, "bundle length does not match preference");
  Rational total = 0;
  for (std::size_t c = 0; c < x.size(); ++c) {
    const Rational d = x[c] - pref.peak[c];
    total += pref.weights[c] * d * d;
  }
  return total;
}

inline bool quad_strictly_prefers(const QuadraticPreference& pref, const Bundle& x,
                                  const Bundle& y) {
  return quad_loss(pref, x) < quad_loss(pref, y);
}

/// Weight search ladder for witness construction: powers of two with exponents
/// in [min_exponent, max_exponent], tried in zig-zag order 0, 1, -1, 2, -2, ...
struct WeightLadder {
  int min_exponent = -8;
  int max_exponent = 8;
};

namespace detail {

inline std::vector<Rational> ladder_values(const WeightLadder& ladder) {
  std::vector<Rational> values;
  values.push_back(1);
  for (int k = 1; k <= ladder.max_exponent || -k >= ladder.min_exponent; ++k) {
    if (k <= ladder.max_exponent) {
      Rational v = 1;
      for (int i = 0; i < k; ++i) v *= 2;
      values.push_back(v);
    }
    if (-k >= ladder.min_exponent) {
      Rational v = 1;
      for (int i = 0; i < k; ++i) v /= 2;
      values.push_back(v);
    }
  }
  return values;
}

}  // namespace detail

/// Best-effort constructive witness: searches the quadratic family for a
/// preference with the given peak that strictly prefers `better` to `worse`.
/// Precondition: `worse` is not between `peak` and `better` (otherwise every
/// multidimensional single-peaked preference ranks `worse` above `better` and
/// the call is an error). Returns the first ladder hit, or nullopt when the
/// quadratic family cannot express the required asymmetry; absence is not
/// evidence that no single-peaked witness exists.
inline std::optional<QuadraticPreference> sp_witness_preference(
    const Bundle& peak, const Bundle& better, const Bundle& worse,
    const WeightLadder& ladder = {}) {
  if (peak.size() != better.size() || peak.size() != worse.size())
    throw Error(errc::shape_error, "witness bundles of unequal length");
  if (between(worse, peak, better))
    throw Error(errc::betweenness_holds,
                "the allegedly worse bundle is between the peak and the better one");

  const std::vector<Rational> values = detail::ladder_values(ladder);
  const std::size_t l = peak.size();
  std::vector<std::size_t> pick(l, 0);
  while (true) {
    std::vector<Rational> weights(l);
    for (std::size_t c = 0; c < l; ++c) weights[c] = values[pick[c]];
    QuadraticPreference candidate{peak, weights};
    if (quad_strictly_prefers(candidate, better, worse)) return candidate;

    std::size_t c = l;
    while (c > 0) {
      --c;
      if (++pick[c] < values.size()) break;
      pick[c] = 0;
      if (c == 0) return std::nullopt;
    }
  }
}

}  // namespace mdsp
