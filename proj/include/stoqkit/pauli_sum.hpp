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

#include <map>

#include "stoqkit/hamiltonian.hpp"

namespace stoq {

/// Operator algebra over Pauli strings with Gaussian-rational coefficients.
/// The coefficient multiplies the bare letter product, so iY is stored as
/// coefficient i on the string Y.
class PauliSum {
   public:
    explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {
    }
    static PauliSum from_hamiltonian(const Hamiltonian &h);
    static PauliSum scalar(std::size_t num_qubits, const GaussianRational &c);
    static PauliSum letter(std::size_t num_qubits, std::size_t qubit, Letter l, const GaussianRational &c = Rational(1));
    /// |bit><bit| on one qubit.
    static PauliSum projector(std::size_t num_qubits, std::size_t qubit, bool bit);
    /// |to><from| on one qubit.
    static PauliSum transition(std::size_t num_qubits, std::size_t qubit, bool to, bool from);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::map<PauliString, GaussianRational> &terms() const {
        return terms_;
    }

    void add(const GaussianRational &c, const PauliString &s);
    PauliSum &operator+=(const PauliSum &o);
    PauliSum &operator-=(const PauliSum &o);
    PauliSum scaled(const GaussianRational &c) const;
    PauliSum adjoint() const;

    friend PauliSum operator+(PauliSum a, const PauliSum &b) {
        return a += b;
    }
    friend PauliSum operator-(PauliSum a, const PauliSum &b) {
        return a -= b;
    }
    friend PauliSum operator*(const PauliSum &a, const PauliSum &b);
    bool operator==(const PauliSum &o) const {
        return num_qubits_ == o.num_qubits_ && terms_ == o.terms_;
    }

    /// Throws std::domain_error unless every coefficient is real.
    Hamiltonian to_hamiltonian() const;

   private:
    std::size_t num_qubits_;
    std::map<PauliString, GaussianRational> terms_;
};

}  // namespace stoq
