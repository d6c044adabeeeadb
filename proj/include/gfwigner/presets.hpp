// Copyright 2026 The gfwigner Authors
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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfwigner/stabilizer.hpp"

namespace gfw {

/// "+-+" -> mask with bit k set where character k is '-'.
SignMask parse_sign_string(const std::string &text, int n);
std::string sign_string(SignMask mask, int n);

/// GFWIGNER_PRESET_DIR if set, otherwise the directory shipped with the sources.
std::string preset_directory();
nlohmann::json load_json_file(const std::string &path);

std::vector<std::string> net_preset_names();
QuantumNet net_from_json(const nlohmann::json &j, const PhaseSpace &space);
nlohmann::json net_to_json(const QuantumNet &net, bool include_f = true);
/// A preset name ("default", "covariant", "qec", "meanking") or a JSON file path.
QuantumNet resolve_net(const std::string &name_or_path, const PhaseSpace &space);

struct StateSpec {
    std::string name;
    std::optional<StabilizerGroup> stabilizer;  // set for stabilizer states
    Matrix rho;                                 // dense, n <= kMaxDenseQubits
};

std::vector<std::string> state_preset_names();
/// Presets: basis_<bits> (qubit 0 first), bell_{phi,psi}_{plus,minus}, qec_logical_{0,1},
/// meanking_phi1, maximally_mixed. Otherwise a JSON file with "type" stabilizer, vector or density.
StateSpec resolve_state(const std::string &name_or_path, int n);
StateSpec state_from_json(const nlohmann::json &j, int n);

}  // namespace gfw
