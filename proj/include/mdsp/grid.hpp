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

#include <cstdint>
#include <vector>

#include "mdsp/economy.hpp"

namespace mdsp {

/// Finite stand-in for the continuum of peaks: per-commodity sorted grid
/// values in [0, omega_l]. Certification sweeps enumerate the cartesian
/// product over agents and commodities.
struct PeakGrid {
  std::vector<std::vector<Rational>> axes;
};

/// Evenly spaced grid with the endpoints included: points_per_axis values
/// 0, omega/(k-1), ..., omega. A zero-endowment axis collapses to {0}.
inline PeakGrid make_grid(const Economy& econ, std::size_t points_per_axis) {
  if (points_per_axis < 2)
    throw Error(errc::invalid_grid, "need at least two grid points per axis");
  PeakGrid grid;
  grid.axes.resize(econ.commodities());
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    if (econ.omega[c] == 0) {
      grid.axes[c] = {Rational(0)};
      continue;
    }
    const int segments = static_cast<int>(points_per_axis) - 1;
    for (std::size_t k = 0; k < points_per_axis; ++k)
      grid.axes[c].push_back(econ.omega[c] * static_cast<int>(k) / segments);
  }
  return grid;
}

/// Fixed-step grid 0, step, 2*step, ..., always including omega itself.
inline PeakGrid make_grid_step(const Economy& econ, const Rational& step) {
  if (step <= 0) throw Error(errc::invalid_grid, "grid step must be positive");
  PeakGrid grid;
  grid.axes.resize(econ.commodities());
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    Rational v = 0;
    while (v < econ.omega[c]) {
      grid.axes[c].push_back(v);
      v += step;
    }
    grid.axes[c].push_back(econ.omega[c]);
  }
  return grid;
}

namespace detail {

inline std::vector<Bundle> cartesian_bundles(const std::vector<std::vector<Rational>>& axes) {
  std::vector<Bundle> out;
  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.size();
  out.reserve(total);
  std::vector<std::size_t> pick(axes.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    Bundle b(axes.size());
    for (std::size_t c = 0; c < axes.size(); ++c) b[c] = axes[c][pick[c]];
    out.push_back(std::move(b));
    // odometer, last axis fastest
    std::size_t c = axes.size();
    while (c > 0) {
      --c;
      if (++pick[c] < axes[c].size()) break;
      pick[c] = 0;
    }
  }
  return out;
}

}  // namespace detail

/// All peak bundles on the grid, in lexicographic axis order (last commodity
/// fastest). This ordering fixes profile indices and therefore canonical
/// witnesses.
inline std::vector<Bundle> grid_peak_choices(const PeakGrid& grid) {
  return detail::cartesian_bundles(grid.axes);
}

/// Index arithmetic over profiles (one grid peak choice per agent). Agent 0 is
/// the most significant digit, so ascending indices enumerate profiles in
/// lexicographic order.
class ProfileSpace {
 public:
  ProfileSpace(const Economy& econ, const PeakGrid& grid)
      : econ_(&econ), choices_(grid_peak_choices(grid)) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < econ.agents; ++i) {
      if (choices_.empty() || count > (UINT64_C(1) << 62) / choices_.size())
        throw Error(errc::invalid_grid, "profile space too large to enumerate");
      count *= choices_.size();
    }
    profile_count_ = count;
  }

  const Economy& economy() const { return *econ_; }
  std::size_t agents() const { return econ_->agents; }
  std::size_t choice_count() const { return choices_.size(); }
  std::uint64_t profile_count() const { return profile_count_; }
  const std::vector<Bundle>& choices() const { return choices_; }
  const Bundle& choice(std::size_t k) const { return choices_[k]; }

  void indices_at(std::uint64_t index, std::vector<std::uint32_t>& out) const {
    out.resize(econ_->agents);
    const std::uint64_t base = choices_.size();
    for (std::size_t i = econ_->agents; i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(index % base);
      index /= base;
    }
  }

  std::uint64_t index_of(const std::vector<std::uint32_t>& agent_choices) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < econ_->agents; ++i)
      index = index * choices_.size() + agent_choices[i];
    return index;
  }

  PeakProfile profile_from(const std::vector<std::uint32_t>& agent_choices) const {
    PeakProfile profile;
    profile.peaks.reserve(econ_->agents);
    for (std::size_t i = 0; i < econ_->agents; ++i)
      profile.peaks.push_back(choices_[agent_choices[i]]);
    return profile;
  }

  PeakProfile profile_at(std::uint64_t index) const {
    std::vector<std::uint32_t> idx;
    indices_at(index, idx);
    return profile_from(idx);
  }

  /// Number of reports the other agents can jointly make.
  std::uint64_t conditioning_count() const {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i + 1 < econ_->agents; ++i) count *= choices_.size();
    return count;
  }

  /// Expands a conditioning index into a full per-agent choice vector, leaving
  /// slot `agent` untouched for the caller to fill.
  void conditioning_at(std::uint64_t cidx, std::size_t agent,
                       std::vector<std::uint32_t>& out) const {
    out.resize(econ_->agents);
    const std::uint64_t base = choices_.size();
    for (std::size_t i = econ_->agents; i-- > 0;) {
      if (i == agent) continue;
      out[i] = static_cast<std::uint32_t>(cidx % base);
      cidx /= base;
    }
  }

 private:
  const Economy* econ_;
  std::vector<Bundle> choices_;
  std::uint64_t profile_count_ = 0;
};

}  // namespace mdsp
