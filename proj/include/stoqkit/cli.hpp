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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace stoq {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitUndecided = 2,
    kExitUsage = 64,
    kExitParse = 65,
    kExitIo = 66,
};

struct InputRecord {
    std::string path;
    std::string sha256;
    std::size_t bytes = 0;
};

/// Machine-readable summary of one command. Field names are stable.
struct CommandReport {
    std::string command;
    std::string version;
    std::vector<InputRecord> inputs;
    /// "yes", "no", "undecided", "success" or "error".
    std::string verdict;
    nlohmann::json result = nlohmann::json::object();
    int exit_code = 0;
    double seconds = 0;

    nlohmann::json to_json() const;
};

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(const std::string &data);

const char *version();

/// Parses argv and runs the command, writing human-readable text (or the
/// CommandReport with --json) to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace stoq
