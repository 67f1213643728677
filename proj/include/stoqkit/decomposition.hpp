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

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "json.hpp"
#include "stoqkit/hamiltonian.hpp"

namespace stoq {

struct Gate {
    enum class Kind { X, CNOT };
    Kind kind = Kind::X;
    std::size_t control = 0;
    std::size_t target = 0;

    /// "X t" or "CNOT c t".
    std::string to_string() const;
};

/// Applies the gates in order to a basis string.
void apply_gates(const std::vector<Gate> &gates, BitVec &x);
/// Applies the inverse circuit (reverse order; every gate is self-inverse).
void apply_gates_inverse(const std::vector<Gate> &gates, BitVec &x);

/// One off-diagonal piece U_j (-X (x) H_j) U_j^dagger with U_j = C^dagger.
struct DecompositionTerm {
    BitVec flip;
    /// Canonical representative on S (full length, zero outside S).
    BitVec representative;
    /// C maps |x> to |0..0> and |x~> to |1 0..0> on S.
    std::vector<Gate> circuit;
    std::size_t flip_qubit = 0;
    /// Qubits of S other than flip_qubit; H_j carries |0><0| on them.
    std::vector<std::size_t> projector_qubits;
    /// H_{S,x}(y) = -<x~ y|H|x y> as a diagonal Hamiltonian on qubits outside S.
    Hamiltonian classical;
    /// max_y H_{S,x}(y).
    Rational norm;

    /// H_j(v) = [v = 0 on projector_qubits] * H_{S,x}(v).
    Rational eval_hj(const BitVec &v) const;
};

struct StoqDecomposition {
    std::size_t num_qubits = 0;
    Rational beta;
    /// -diag(H) - beta I.
    Hamiltonian h0;
    Rational h0_norm;
    std::vector<DecompositionTerm> terms;
    /// 2 * sum of |coefficients| including the identity offset.
    Rational norm_bound;
    std::size_t source_terms = 0;
    std::size_t locality = 0;

    nlohmann::json to_json() const;
};

struct NotGloballyStoquastic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Writes H + beta I = -H_0 + sum_j U_j(-X (x) H_j)U_j^dagger. The result is
/// checked column by column before returning (all columns for n <= 12,
/// seeded random columns above).
StoqDecomposition decompose_global(const Hamiltonian &h);

/// Exact column comparison of the decomposition against H + beta I on the
/// given basis columns.
bool decomposition_matches(const Hamiltonian &h, const StoqDecomposition &d, const std::vector<BitVec> &columns);

/// Value of a diagonal Hamiltonian on a basis string.
Rational eval_diagonal(const Hamiltonian &diag, const BitVec &x);

// Acceptance probabilities. States use the dense index convention.

/// Average over j = 0..m' of <psi|(I + G_j)/2|psi>, computed by applying each
/// G_j directly to psi.
double stoqma_acceptance(const Hamiltonian &h, const StoqDecomposition &d, const Eigen::VectorXcd &psi);

/// 1/2 (1 - <psi|H + beta I|psi> / ((m'+1) M)).
double stoqma_acceptance_closed_form(const Hamiltonian &h, const StoqDecomposition &d, const Eigen::VectorXcd &psi);

/// Same average assembled from the elementary measurements: rotate by C_j,
/// then measure X (x) H_j/M through its layer-cake split into threshold
/// projectors.
double stoqma_acceptance_elementary(const StoqDecomposition &d, const Eigen::VectorXcd &psi);

/// <psi|(I + G)/2|psi> with G = |0><0|_q, optionally tensored with X_x.
double accept_zero_projector(const Eigen::VectorXcd &psi, std::size_t qubit, std::optional<std::size_t> x_qubit = {});
/// G = Pi_{>= alpha} of a diagonal operator given by its values per basis index.
double accept_threshold(const Eigen::VectorXcd &psi, const std::vector<Rational> &values, const Rational &alpha,
                        std::optional<std::size_t> x_qubit = {});
/// G = D / M, evaluated as sum_i (lambda_i - lambda_{i-1})/M Pi_{>= lambda_i}.
double accept_scaled(const Eigen::VectorXcd &psi, const std::vector<Rational> &values, const Rational &m,
                     std::optional<std::size_t> x_qubit = {});

/// Checks sum_i (lambda_i - lambda_{i-1}) Pi_{>= lambda_i} = D exactly and
/// max D <= M for a nonnegative diagonal operator.
bool threshold_average_identity(const std::vector<Rational> &values, const Rational &m);

/// Values of a diagonal Hamiltonian on every dense basis index.
std::vector<Rational> diagonal_values(const Hamiltonian &diag);

}  // namespace stoq
