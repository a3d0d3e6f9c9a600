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

#include <cstddef>
#include <string>
#include <vector>

#include "mdsp/rational.hpp"

namespace mdsp {

/// A point of the consumption box X = prod_l [0, omega_l].
using Bundle = std::vector<Rational>;

/// The fixed arena: l commodities with nonnegative endowment omega, n agents.
struct Economy {
  std::vector<Rational> omega;
  std::size_t agents = 0;

  std::size_t commodities() const { return omega.size(); }
};

inline Economy make_economy(std::size_t commodities, std::vector<Rational> omega,
                            std::size_t agents) {
  if (commodities < 1 || agents < 1)
    throw Error(errc::invalid_dimensions,
                "need at least one commodity and one agent");
  if (omega.size() != commodities)
    throw Error(errc::invalid_dimensions,
                "endowment vector length " + std::to_string(omega.size()) +
                    " does not match commodity count " + std::to_string(commodities));
  for (const Rational& w : omega) {
    if (w < 0)
      throw Error(errc::invalid_endowment,
                  "negative endowment " + to_fraction_string(w));
  }
  return Economy{std::move(omega), agents};
}

/// One reported peak bundle per agent.
struct PeakProfile {
  std::vector<Bundle> peaks;

  bool operator==(const PeakProfile&) const = default;
};

/// One share bundle per agent; feasible when columns sum exactly to omega.
struct Allocation {
  std::vector<Bundle> shares;

  bool operator==(const Allocation&) const = default;
};

inline bool in_consumption_set(const Bundle& x, const Economy& econ) {
  if (x.size() != econ.commodities())
    throw Error(errc::shape_error, "bundle length does not match commodity count");
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] < 0 || x[c] > econ.omega[c]) return false;
  }
  return true;
}

inline void validate_peaks(const PeakProfile& profile, const Economy& econ) {
  if (profile.peaks.size() != econ.agents)
    throw Error(errc::shape_error, "profile has " +
                                       std::to_string(profile.peaks.size()) +
                                       " peaks for " + std::to_string(econ.agents) +
                                       " agents");
  for (const Bundle& p : profile.peaks) {
    if (!in_consumption_set(p, econ))
      throw Error(errc::invalid_peak, "peak outside the consumption box");
  }
}

/// Exact feasibility: every column sums to omega and every coordinate stays in
/// the box.
inline bool is_feasible(const Allocation& alloc, const Economy& econ) {
  if (alloc.shares.size() != econ.agents)
    throw Error(errc::shape_error, "allocation has wrong number of agents");
  for (const Bundle& s : alloc.shares) {
    if (s.size() != econ.commodities())
      throw Error(errc::shape_error, "allocation bundle has wrong length");
  }
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    Rational column = 0;
    for (const Bundle& s : alloc.shares) {
      if (s[c] < 0 || s[c] > econ.omega[c]) return false;
      column += s[c];
    }
    if (column != econ.omega[c]) return false;
  }
  return true;
}

/// Componentwise betweenness: x lies in the closed interval spanned by a and b
/// in every coordinate. Symmetric in a and b; both endpoints are between.
inline bool between(const Bundle& x, const Bundle& a, const Bundle& b) {
  if (x.size() != a.size() || x.size() != b.size())
    throw Error(errc::shape_error, "betweenness over bundles of unequal length");
  for (std::size_t c = 0; c < x.size(); ++c) {
    const bool up = a[c] <= x[c] && x[c] <= b[c];
    const bool down = a[c] >= x[c] && x[c] >= b[c];
    if (!up && !down) return false;
  }
  return true;
}

inline Bundle equal_division(const Economy& econ) {
  Bundle e(econ.commodities());
  for (std::size_t c = 0; c < econ.commodities(); ++c)
    e[c] = econ.omega[c] / static_cast<int>(econ.agents);
  return e;
}

inline Allocation equal_division_allocation(const Economy& econ) {
  return Allocation{std::vector<Bundle>(econ.agents, equal_division(econ))};
}

}  // namespace mdsp
