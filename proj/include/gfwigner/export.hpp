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

#include <string>
#include <vector>

#include <json.hpp>

#include "gfwigner/wigner.hpp"

namespace gfw {

enum class GridFormat { Csv, Json, Ascii };

GridFormat parse_grid_format(const std::string &text);

/// "0", "1", "w", "w^2", ... in axis order.
std::vector<std::string> axis_labels(const Field &field);

/// N rows (p descending) of N values (q ascending); exact fractions for exact grids,
/// 12 significant digits otherwise.
std::string export_csv(const WignerGrid &grid, const PhaseSpace &space);
nlohmann::json export_json(const WignerGrid &grid, const QuantumNet &net);
/// '#' positive, '-' negative, '.' zero; same orientation as the CSV.
std::string export_ascii(const WignerGrid &grid, const PhaseSpace &space);
std::string export_grid(const WignerGrid &grid, const QuantumNet &net, GridFormat format);

/// Inverse of export_json.
WignerGrid import_json(const nlohmann::json &j);

/// Cell text used by the CSV and JSON writers.
std::string format_value(const WignerGrid &grid, Bits q, Bits p);

}  // namespace gfw
