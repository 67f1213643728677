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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stoqkit/pauli.hpp"

namespace stoq {

/// Thrown by deciders that require every term to have an even number of Y letters.
struct NonRealHamiltonian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an exhaustive operation would exceed its configured size limit.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    enum class Kind { Malformed, MissingHeader, QubitOutOfRange, RepeatedIndex, NonRealCoefficient };
    ParseError(Kind kind, std::size_t line, const std::string &what);
    Kind kind;
    std::size_t line;
};

/// Real linear combination of Pauli strings on a fixed qubit count.
///
/// Terms are kept sorted with distinct strings and nonzero coefficients. The
/// identity term lives in offset() rather than in terms().
class Hamiltonian {
   public:
    Hamiltonian() = default;
    explicit Hamiltonian(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    const Rational &offset() const {
        return offset_;
    }

    /// Adds coeff * string, merging with an existing equal string.
    void add(const Rational &coeff, const PauliString &string);
    void add(const Hamiltonian &other, const Rational &scale = 1);
    Hamiltonian scaled(const Rational &factor) const;

    /// Coefficient of `string` (offset for the identity).
    Rational coefficient(const PauliString &string) const;

    /// Maximum support size over non-identity terms.
    std::size_t locality() const;
    /// Maximum number of non-identity terms acting on any single qubit.
    std::size_t max_degree() const;
    bool is_real() const;
    bool is_diagonal() const;
    bool is_zero() const {
        return terms_.empty() && sgn(offset_) == 0;
    }

    /// Throws NonRealHamiltonian unless is_real().
    void require_real() const;

    std::string name;
    std::string provenance;

    bool operator==(const Hamiltonian &other) const {
        return num_qubits_ == other.num_qubits_ && offset_ == other.offset_ && terms_ == other.terms_;
    }
    friend Hamiltonian operator+(const Hamiltonian &a, const Hamiltonian &b);
    friend Hamiltonian operator-(const Hamiltonian &a, const Hamiltonian &b);

   private:
    std::size_t num_qubits_ = 0;
    Rational offset_;
    std::vector<PauliTerm> terms_;
};

/// Parses the HSUM text format.
Hamiltonian parse_hsum(std::string_view text);
std::string serialize_hsum(const Hamiltonian &h);
nlohmann::json to_json(const Hamiltonian &h);

/// Exact <x|H|y>. Throws NonRealHamiltonian if the entry is not real.
Rational matrix_entry(const Hamiltonian &h, const BitVec &x, const BitVec &y);

/// Hadamard on every qubit where mask is 1: X<->Z, Y -> -Y.
Hamiltonian conjugate_hadamard(const Hamiltonian &h, const BitVec &mask);

/// Places `h` on qubits [offset, offset + h.num_qubits()) of a larger register.
Hamiltonian embed(const Hamiltonian &h, std::size_t num_qubits, std::size_t offset);

}  // namespace stoq
