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

#include "json.hpp"
#include "stoqkit/hamiltonian.hpp"

namespace stoq {

/// Hermitian Pauli operator +-P.
struct SignedPauli {
    PauliString string;
    bool negative = false;

    PhasedPauli phased() const {
        return {string, negative ? 2u : 0u};
    }
    /// "+X0 Z1" style.
    std::string to_string() const;
    bool operator==(const SignedPauli &other) const = default;
};

/// Converts i^k P with k even into +-P. Throws std::domain_error for odd k.
SignedPauli to_signed(const PhasedPauli &p);

struct InvalidTableau : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Clifford map given by the images of every X_q and Z_q.
class CliffordTableau {
   public:
    CliffordTableau() = default;
    /// Identity map.
    explicit CliffordTableau(std::size_t num_qubits);
    /// Product of Hadamards on the masked qubits.
    static CliffordTableau hadamards(const BitVec &mask);

    std::size_t num_qubits() const {
        return x_images_.size();
    }
    const SignedPauli &x_image(std::size_t q) const {
        return x_images_[q];
    }
    const SignedPauli &z_image(std::size_t q) const {
        return z_images_[q];
    }
    void set_x_image(std::size_t q, SignedPauli p);
    void set_z_image(std::size_t q, SignedPauli p);

    /// Empty string when the images satisfy the symplectic relations,
    /// otherwise a description of the first violation.
    std::string validation_error() const;
    bool is_valid() const {
        return validation_error().empty();
    }

    /// Image of the bare letter product `p` (phase exact).
    PhasedPauli apply(const PauliString &p) const;
    PhasedPauli apply(const PhasedPauli &p) const;

    nlohmann::json to_json() const;
    bool operator==(const CliffordTableau &other) const = default;

   private:
    std::vector<SignedPauli> x_images_;
    std::vector<SignedPauli> z_images_;
};

/// Maps every term through the tableau. Throws InvalidTableau if the tableau
/// is not symplectic.
Hamiltonian conjugate_clifford(const Hamiltonian &h, const CliffordTableau &c);

}  // namespace stoq
