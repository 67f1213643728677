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

#include "stoqkit/linprog.hpp"

#include <stdexcept>

namespace stoq {

FeasibilityResult solve_feasibility(const RationalMatrix &a, const std::vector<Rational> &b) {
    std::size_t m = a.size();
    if (b.size() != m) {
        throw std::invalid_argument("row count mismatch between A and b");
    }
    std::size_t n = m ? a[0].size() : 0;
    for (const auto &row : a) {
        if (row.size() != n) {
            throw std::invalid_argument("ragged constraint matrix");
        }
    }
    FeasibilityResult result;
    if (m == 0) {
        result.feasible = true;
        result.solution.assign(n, Rational(0));
        return result;
    }

    // Columns: x_0..x_{n-1}, artificial s_0..s_{m-1}, rhs.
    std::size_t cols = n + m;
    std::size_t rhs = cols;
    std::vector<int> flip(m, 1);
    RationalMatrix t(m, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < m; ++i) {
        flip[i] = sgn(b[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = flip[i] < 0 ? Rational(-a[i][j]) : a[i][j];
        }
        t[i][n + i] = 1;
        t[i][rhs] = flip[i] < 0 ? Rational(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = n + i;
    }
    // Reduced costs of min sum(s), and the objective value in the rhs slot.
    std::vector<Rational> d(cols + 1);
    for (std::size_t j = 0; j <= cols; ++j) {
        if (j >= n && j < cols) {
            continue;
        }
        for (std::size_t i = 0; i < m; ++i) {
            d[j] -= t[i][j];
        }
    }

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(d[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) {
            break;
        }
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) {
                continue;
            }
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            // Phase one is bounded below by zero, so this cannot happen.
            throw std::logic_error("unbounded phase-one simplex");
        }
        Rational piv = t[leave][enter];
        for (auto &v : t[leave]) {
            if (sgn(v) != 0) {
                v /= piv;
            }
        }
        const auto &prow = t[leave];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) {
                continue;
            }
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) {
                if (sgn(prow[j]) != 0) {
                    t[i][j] -= f * prow[j];
                }
            }
        }
        if (sgn(d[enter]) != 0) {
            Rational f = d[enter];
            for (std::size_t j = 0; j <= cols; ++j) {
                if (sgn(prow[j]) != 0) {
                    d[j] -= f * prow[j];
                }
            }
        }
        basis[leave] = enter;
    }

    // d[rhs] holds -(objective value).
    if (sgn(d[rhs]) == 0) {
        result.feasible = true;
        result.solution.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n) {
                result.solution[basis[i]] = t[i][rhs];
            }
        }
        if (!check_solution(a, b, result.solution)) {
            throw std::logic_error("simplex produced an invalid feasible point");
        }
        return result;
    }

    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            if (basis[r] >= n) {
                y[i] += t[r][n + i];
            }
        }
        y[i] = flip[i] < 0 ? y[i] : Rational(-y[i]);
    }
    if (check_farkas(a, b, y)) {
        result.farkas = std::move(y);
    }
    return result;
}

bool check_solution(const RationalMatrix &a, const std::vector<Rational> &b, const std::vector<Rational> &x) {
    for (const auto &v : x) {
        if (sgn(v) < 0) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sgn(a[i][j]) != 0 && sgn(x[j]) != 0) {
                s += a[i][j] * x[j];
            }
        }
        if (s != b[i]) {
            return false;
        }
    }
    return true;
}

bool check_farkas(const RationalMatrix &a, const std::vector<Rational> &b, const std::vector<Rational> &y) {
    if (y.size() != a.size()) {
        return false;
    }
    std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += y[i] * a[i][j];
        }
        if (sgn(s) < 0) {
            return false;
        }
    }
    Rational yb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        yb += y[i] * b[i];
    }
    return sgn(yb) < 0;
}

}  // namespace stoq
