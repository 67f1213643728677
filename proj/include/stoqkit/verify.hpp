// Copyright 2026 The stoqkit Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace stoq {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    nlohmann::json detail;
};

/// Outcome of one invariant suite. The JSON holds no timings, so two runs
/// with the same seed serialize identically.
struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<SuiteCheck> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

constexpr uint64_t kDefaultVerifySeed = 20260417;

/// Suite names in run order, excluding "all".
const std::vector<std::string> &suite_names();

/// Runs one suite. Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string &name, uint64_t seed = kDefaultVerifySeed);

/// Runs every suite in suite_names() order.
std::vector<SuiteReport> run_all_suites(uint64_t seed = kDefaultVerifySeed);

}  // namespace stoq
