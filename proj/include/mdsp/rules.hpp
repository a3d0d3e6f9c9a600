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
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mdsp/economy.hpp"
#include "mdsp/lambda.hpp"

namespace mdsp {

// ---------------------------------------------------------------------------
// Rule specifications
// ---------------------------------------------------------------------------

struct UniformRule {
  bool operator==(const UniformRule&) const = default;
};

/// Reference-point water-filling: per commodity, agents move from the
/// reference row toward their peaks under a common shift. With the equal
/// division as reference this is exactly the uniform rule.
struct SequentialRule {
  std::vector<Bundle> reference;  // n rows of l entries, columns sum to omega

  bool operator==(const SequentialRule&) const = default;
};

/// Priority serving: per commodity, agents in order are capped at their peaks
/// and the last in line absorbs the remainder.
struct SerialRule {
  std::vector<std::vector<std::size_t>> orders;  // one permutation per commodity

  bool operator==(const SerialRule&) const = default;
};

struct ProportionalRule {
  bool operator==(const ProportionalRule&) const = default;
};

/// Ignores the reports entirely; a unanimity-failing fixture.
struct ConstantRule {
  Allocation allocation;

  bool operator==(const ConstantRule&) const = default;
};

using RuleSpec =
    std::variant<UniformRule, SequentialRule, SerialRule, ProportionalRule, ConstantRule>;

inline void validate_rule(const RuleSpec& spec, const Economy& econ) {
  if (const auto* seq = std::get_if<SequentialRule>(&spec)) {
    if (seq->reference.size() != econ.agents)
      throw Error(errc::invalid_reference, "reference row count != agent count");
    for (const Bundle& row : seq->reference) {
      if (row.size() != econ.commodities())
        throw Error(errc::invalid_reference, "reference row length != commodity count");
    }
    for (std::size_t c = 0; c < econ.commodities(); ++c) {
      Rational column = 0;
      for (const Bundle& row : seq->reference) {
        if (row[c] < 0 || row[c] > econ.omega[c])
          throw Error(errc::invalid_reference, "reference entry outside the box");
        column += row[c];
      }
      if (column != econ.omega[c])
        throw Error(errc::invalid_reference, "reference column does not sum to omega");
    }
  } else if (const auto* ser = std::get_if<SerialRule>(&spec)) {
    if (ser->orders.size() != econ.commodities())
      throw Error(errc::invalid_order, "need one order per commodity");
    for (const auto& order : ser->orders) {
      if (order.size() != econ.agents)
        throw Error(errc::invalid_order, "order length != agent count");
      std::vector<bool> seen(econ.agents, false);
      for (std::size_t a : order) {
        if (a >= econ.agents || seen[a])
          throw Error(errc::invalid_order, "order is not a permutation of the agents");
        seen[a] = true;
      }
    }
  } else if (const auto* cst = std::get_if<ConstantRule>(&spec)) {
    if (!is_feasible(cst->allocation, econ))
      throw Error(errc::invalid_constant, "constant allocation is infeasible");
  }
}

// ---------------------------------------------------------------------------
// Allocation rules
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Rational> column_peaks(const PeakProfile& profile, std::size_t c) {
  std::vector<Rational> column(profile.peaks.size());
  for (std::size_t i = 0; i < profile.peaks.size(); ++i) column[i] = profile.peaks[i][c];
  return column;
}

inline Allocation empty_allocation(const Economy& econ) {
  return Allocation{std::vector<Bundle>(econ.agents, Bundle(econ.commodities()))};
}

}  // namespace detail

/// Uniform rule plus the per-commodity bounds it used, for reporting.
inline std::pair<Allocation, std::vector<LambdaSolution>> uniform_allocate_with_lambdas(
    const Economy& econ, const PeakProfile& peaks) {
  validate_peaks(peaks, econ);
  Allocation alloc = detail::empty_allocation(econ);
  std::vector<LambdaSolution> lambdas(econ.commodities());
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    const std::vector<Rational> column = detail::column_peaks(peaks, c);
    const LambdaSolution sol = solve_lambda(column, econ.omega[c]);
    lambdas[c] = sol;
    for (std::size_t i = 0; i < econ.agents; ++i) {
      switch (sol.mode) {
        case FillMode::ExcessDemand:
          alloc.shares[i][c] = std::min(column[i], sol.lambda);
          break;
        case FillMode::ExcessSupply:
          alloc.shares[i][c] = std::max(column[i], sol.lambda);
          break;
        case FillMode::Balanced:
          alloc.shares[i][c] = column[i];
          break;
      }
    }
  }
  return {std::move(alloc), std::move(lambdas)};
}

inline Allocation uniform_allocate(const Economy& econ, const PeakProfile& peaks) {
  return uniform_allocate_with_lambdas(econ, peaks).first;
}

inline Allocation sequential_allocate(const Economy& econ,
                                      const std::vector<Bundle>& reference,
                                      const PeakProfile& peaks) {
  validate_rule(RuleSpec{SequentialRule{reference}}, econ);
  validate_peaks(peaks, econ);
  Allocation alloc = detail::empty_allocation(econ);
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    std::vector<Rational> ref_column(econ.agents);
    for (std::size_t i = 0; i < econ.agents; ++i) ref_column[i] = reference[i][c];
    const std::vector<Rational> shares =
        reference_fill(detail::column_peaks(peaks, c), ref_column, econ.omega[c]);
    for (std::size_t i = 0; i < econ.agents; ++i) alloc.shares[i][c] = shares[i];
  }
  return alloc;
}

inline Allocation serial_allocate(const Economy& econ,
                                  const std::vector<std::vector<std::size_t>>& orders,
                                  const PeakProfile& peaks) {
  validate_rule(RuleSpec{SerialRule{orders}}, econ);
  validate_peaks(peaks, econ);
  Allocation alloc = detail::empty_allocation(econ);
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    Rational remaining = econ.omega[c];
    const auto& order = orders[c];
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t agent = order[k];
      if (k + 1 == order.size()) {
        alloc.shares[agent][c] = remaining;
      } else {
        const Rational share = std::min(peaks.peaks[agent][c], remaining);
        alloc.shares[agent][c] = share;
        remaining -= share;
      }
    }
  }
  return alloc;
}

inline Allocation proportional_allocate(const Economy& econ, const PeakProfile& peaks) {
  validate_peaks(peaks, econ);
  Allocation alloc = detail::empty_allocation(econ);
  for (std::size_t c = 0; c < econ.commodities(); ++c) {
    Rational total = 0;
    for (std::size_t i = 0; i < econ.agents; ++i) total += peaks.peaks[i][c];
    for (std::size_t i = 0; i < econ.agents; ++i) {
      alloc.shares[i][c] = total > 0
                               ? peaks.peaks[i][c] * econ.omega[c] / total
                               : econ.omega[c] / static_cast<int>(econ.agents);
    }
  }
  return alloc;
}

inline Allocation evaluate_rule(const RuleSpec& spec, const Economy& econ,
                                const PeakProfile& peaks) {
  return std::visit(
      [&](const auto& r) -> Allocation {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, UniformRule>) {
          return uniform_allocate(econ, peaks);
        } else if constexpr (std::is_same_v<T, SequentialRule>) {
          return sequential_allocate(econ, r.reference, peaks);
        } else if constexpr (std::is_same_v<T, SerialRule>) {
          return serial_allocate(econ, r.orders, peaks);
        } else if constexpr (std::is_same_v<T, ProportionalRule>) {
          return proportional_allocate(econ, peaks);
        } else {
          validate_peaks(peaks, econ);
          validate_rule(spec, econ);
          return r.allocation;
        }
      },
      spec);
}

inline std::string rule_spec_name(const RuleSpec& spec) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, UniformRule>) return "uniform";
        else if constexpr (std::is_same_v<T, SequentialRule>) return "sequential";
        else if constexpr (std::is_same_v<T, SerialRule>) return "serial";
        else if constexpr (std::is_same_v<T, ProportionalRule>) return "proportional";
        else return "constant";
      },
      spec);
}

// ---------------------------------------------------------------------------
// Rules as first-class callables (the sweeps treat every rule, including
// test fixtures and probe candidates, as a pure peaks-to-allocation map).
// ---------------------------------------------------------------------------

struct Rule {
  std::string name;
  std::function<Allocation(const Economy&, const PeakProfile&)> fn;

  Allocation operator()(const Economy& econ, const PeakProfile& peaks) const {
    return fn(econ, peaks);
  }
};

inline Rule as_rule(const RuleSpec& spec, const Economy& econ, std::string name = {}) {
  validate_rule(spec, econ);
  if (name.empty()) name = rule_spec_name(spec);
  return Rule{std::move(name), [spec](const Economy& e, const PeakProfile& p) {
                return evaluate_rule(spec, e, p);
              }};
}

inline std::vector<std::vector<std::size_t>> identity_orders(const Economy& econ) {
  std::vector<std::size_t> order(econ.agents);
  std::iota(order.begin(), order.end(), 0);
  return std::vector<std::vector<std::size_t>>(econ.commodities(), order);
}

inline std::vector<std::vector<std::size_t>> reversed_orders(const Economy& econ) {
  std::vector<std::size_t> order(econ.agents);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  return std::vector<std::vector<std::size_t>>(econ.commodities(), order);
}

/// A deterministic reference with unequal rows (guarantee weights 1..n), used
/// as the stock asymmetric sequential rule.
inline std::vector<Bundle> skewed_reference(const Economy& econ) {
  const int n = static_cast<int>(econ.agents);
  const int total = n * (n + 1) / 2;
  std::vector<Bundle> reference(econ.agents, Bundle(econ.commodities()));
  for (std::size_t i = 0; i < econ.agents; ++i) {
    for (std::size_t c = 0; c < econ.commodities(); ++c) {
      reference[i][c] = econ.omega[c] * static_cast<int>(i + 1) / total;
    }
  }
  return reference;
}

}  // namespace mdsp
