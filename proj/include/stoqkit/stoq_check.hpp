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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stoqkit/flip_group.hpp"

namespace stoq {

constexpr std::size_t kDefaultGlobalBudget = 24;

/// Maximum of a parity polynomial over {0,1}^width and the lexicographically
/// smallest maximizer (position 0 most significant). Exact.
struct PolyMax {
    Rational value;
    uint64_t argmax = 0;
};
PolyMax maximize(const ParityPoly &p);

enum class GlobalStatus { Stoquastic, NotStoquastic, Undecided };
std::string to_string(GlobalStatus s);

struct GlobalVerdict {
    GlobalStatus status = GlobalStatus::Stoquastic;
    /// (x, y) with <x|H|y> > 0 when NotStoquastic; x carries the canonical
    /// representative on S.
    std::optional<std::pair<BitVec, BitVec>> witness;
    Rational witness_value;
    /// First flip set (sorted order) whose relevant support exceeded the budget.
    std::optional<BitVec> undecided_flip;
    /// Number of (S, a, y) evaluations performed.
    uint64_t budget_used = 0;
    std::size_t budget = kDefaultGlobalBudget;

    nlohmann::json to_json() const;
};

GlobalVerdict check_global(const Hamiltonian &h, std::size_t budget = kDefaultGlobalBudget);

/// Extremal m-local stoquastic term -p (|a~><a| + |a><a~|)_S (x) |z><z|_T.
struct TermwiseGenerator {
    BitVec flip;
    /// Full-length string holding the canonical representative on S.
    BitVec representative;
    BitVec support;
    /// Full-length string holding z on T.
    BitVec assignment;
    Rational weight;
    /// Set when one generator stands for every pair of the flip group, i.e. the
    /// term -X_S times the subcube projector. representative is then all-zero.
    bool all_pairs = false;

    Hamiltonian to_hamiltonian() const;
};

struct TermwiseCertificate {
    bool yes = false;
    std::size_t m = 0;
    std::vector<TermwiseGenerator> generators;
    /// Diagonal part of H including the identity offset.
    Hamiltonian diagonal;

    std::optional<BitVec> failing_flip;
    std::optional<BitVec> failing_representative;
    std::string reason;
    /// y with y^T A >= 0, y^T b < 0 for the failing cone-membership system.
    std::vector<Rational> farkas;

    /// Sum of all generators plus the diagonal remainder.
    Hamiltonian reconstruct(std::size_t num_qubits) const;
    nlohmann::json to_json() const;
};

struct TermwiseOptions {
    /// Solve the linear system even when the cone is the full orthant.
    bool force_lp = false;
};

TermwiseCertificate check_termwise(const Hamiltonian &h, std::size_t m, const TermwiseOptions &options = {});

}  // namespace stoq
