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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdsp {

enum class errc {
  parse_error,
  invalid_endowment,
  invalid_dimensions,
  shape_error,
  invalid_preference,
  betweenness_holds,
  invalid_peak,
  invalid_reference,
  invalid_order,
  invalid_constant,
  invalid_grid,
  multi_commodity,
  not_strategy_proof,
  hypotheses_not_certified,
  unknown_case,
  golden_mismatch,
  inconsistency,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "parse_error";
    case errc::invalid_endowment: return "invalid_endowment";
    case errc::invalid_dimensions: return "invalid_dimensions";
    case errc::shape_error: return "shape_error";
    case errc::invalid_preference: return "invalid_preference";
    case errc::betweenness_holds: return "betweenness_holds";
    case errc::invalid_peak: return "invalid_peak";
    case errc::invalid_reference: return "invalid_reference";
    case errc::invalid_order: return "invalid_order";
    case errc::invalid_constant: return "invalid_constant";
    case errc::invalid_grid: return "invalid_grid";
    case errc::multi_commodity: return "multi_commodity";
    case errc::not_strategy_proof: return "not_strategy_proof";
    case errc::hypotheses_not_certified: return "hypotheses_not_certified";
    case errc::unknown_case: return "unknown_case";
    case errc::golden_mismatch: return "golden_mismatch";
    case errc::inconsistency: return "inconsistency";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

/// Raised when a probe's preconditions are not certified on the grid; carries
/// the names of the failed hypotheses.
class HypothesesError : public Error {
 public:
  HypothesesError(std::vector<std::string> failed, const std::string& message)
      : Error(errc::hypotheses_not_certified, message),
        failed_(std::move(failed)) {}

  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace mdsp
