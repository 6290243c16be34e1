// Copyright 2026 The fockwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include <variant>

#include "fockwitness/entangle.hpp"
#include "fockwitness/state.hpp"
#include "fockwitness/unitary.hpp"
#include "fockwitness/witness.hpp"

namespace fockwitness {

// JSON wire formats. Complex numbers are [re, im] pairs; matrices are
// row-major arrays of such pairs; state dumps carry their basis
// descriptors so files are self-describing.

nlohmann::json basis_descriptor(const FockBasis& basis);

/// {"type": "joint" | "local", bases, flat amplitude array}.
nlohmann::json state_to_json(const PureState& state);

/// {"type": "stratified", per-stratum sparse terms keyed by pattern text}.
nlohmann::json state_to_json(const StratifiedState& state);

std::variant<PureState, StratifiedState> state_from_json(const nlohmann::json& j);

/// Witness report with exact-rational string fields alongside the doubles
/// wherever a small fraction reproduces the double within 1e-9.
nlohmann::json report_to_json(const WitnessReport& report);

/// {"modes": M, "matrix": row-major [re, im] pairs}.
nlohmann::json mode_unitary_to_json(const ModeUnitary& u);

}  // namespace fockwitness
