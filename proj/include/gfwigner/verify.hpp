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

namespace gfw {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Module invariants for one field size; dense checks run for n <= 4.
std::vector<Check> verify_invariants(int n);
std::vector<Check> verify_bell();
std::vector<Check> verify_qec();
std::vector<Check> verify_meanking();

bool all_passed(const std::vector<Check> &checks);

}  // namespace gfw
