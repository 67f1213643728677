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

#include "stoqkit/hamiltonian.hpp"

namespace stoq {

constexpr std::size_t kDefaultDenseQubits = 14;

// Dense basis index i holds the string whose qubit q equals bit q of i.

Eigen::MatrixXd dense_matrix(const Hamiltonian &h, std::size_t max_qubits = kDefaultDenseQubits);

/// Eigenvalues in ascending order.
Eigen::VectorXd spectrum(const Hamiltonian &h, std::size_t max_qubits = kDefaultDenseQubits);

struct Eigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
Eigensystem eigensystem(const Hamiltonian &h, std::size_t max_qubits = kDefaultDenseQubits);

/// H|psi> without materializing H.
Eigen::VectorXcd apply_hamiltonian(const Hamiltonian &h, const Eigen::VectorXcd &psi);

}  // namespace stoq
