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

#include <iosfwd>
#include <optional>
#include <string>

#include "gfwigner/galois.hpp"

namespace gfw {

/// Runs one `gfwigner` command line. Returns 0 on success, 2 on invalid input
/// and 1 on internal failures (including a failed verification).
int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Field for n: an explicit polynomial, else GFWIGNER_POLY_TABLE, else the built-in table.
Field make_field(int n, const std::optional<std::string> &poly = std::nullopt);

/// Table-I style listing of the orderings generated by M and its transpose from 1.
std::string field_table(const Field &field, bool csv);

}  // namespace gfw
