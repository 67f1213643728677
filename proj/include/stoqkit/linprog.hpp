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

#include <vector>

#include "stoqkit/rational.hpp"

namespace stoq {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct FeasibilityResult {
    bool feasible = false;
    /// x >= 0 with A x = b when feasible.
    std::vector<Rational> solution;
    /// y with y^T A >= 0 and y^T b < 0 when infeasible.
    std::vector<Rational> farkas;
};

/// Decides {x >= 0 : A x = b} != {} exactly with phase-one simplex and
/// Bland's rule. A is row-major with every row of equal length.
FeasibilityResult solve_feasibility(const RationalMatrix &a, const std::vector<Rational> &b);

bool check_solution(const RationalMatrix &a, const std::vector<Rational> &b, const std::vector<Rational> &x);
bool check_farkas(const RationalMatrix &a, const std::vector<Rational> &b, const std::vector<Rational> &y);

}  // namespace stoq
