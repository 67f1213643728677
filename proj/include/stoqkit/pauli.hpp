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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "stoqkit/bitvec.hpp"
#include "stoqkit/rational.hpp"

namespace stoq {

/// Single-qubit letter encoded as (x bit) | (z bit) << 1.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

/// Product of single-qubit X/Y/Z letters in symplectic form. No phase.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);
    PauliString(BitVec x, BitVec z);

    /// One character per qubit from "IXYZ_", qubit 0 first.
    static PauliString from_dense(std::string_view letters);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, Letter letter);

    std::size_t num_qubits() const {
        return x_.size();
    }
    const BitVec &x() const {
        return x_;
    }
    const BitVec &z() const {
        return z_;
    }
    Letter letter(std::size_t q) const {
        return static_cast<Letter>(uint8_t{x_.get(q)} | (uint8_t{z_.get(q)} << 1));
    }
    void set_letter(std::size_t q, Letter l);

    std::size_t y_count() const;
    bool is_real() const {
        return y_count() % 2 == 0;
    }
    BitVec support() const {
        return x_ | z_;
    }
    std::size_t weight() const {
        return support().popcount();
    }
    bool is_identity() const {
        return x_.none() && z_.none();
    }
    bool is_diagonal() const {
        return x_.none();
    }

    /// "XIZY" form.
    std::string to_dense_string() const;
    /// "X0 Z2" form; "I" for the identity.
    std::string to_sparse_string() const;

    bool operator==(const PauliString &other) const = default;
    std::strong_ordering operator<=>(const PauliString &other) const;

   private:
    BitVec x_;
    BitVec z_;
};

struct PauliStringHash {
    std::size_t operator()(const PauliString &p) const;
};

/// i^phase times a Pauli string.
struct PhasedPauli {
    PauliString string;
    unsigned phase = 0;

    bool operator==(const PhasedPauli &other) const = default;
};

/// Exact product of the letter sequences: P * Q = i^phase * R.
PhasedPauli multiply(const PauliString &p, const PauliString &q);
PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q);

bool commutes(const PauliString &p, const PauliString &q);

/// Real coefficient times a Pauli string.
struct PauliTerm {
    Rational coeff;
    PauliString string;

    bool operator==(const PauliTerm &other) const = default;
};

/// Nonzero column entry of a term on a basis state: magnitude * i^phase at row `target`.
struct BasisAction {
    BitVec target;
    Rational magnitude;
    unsigned phase = 0;

    bool is_real() const {
        return phase % 2 == 0;
    }
    /// Exact real value; requires is_real().
    Rational real() const;
    std::complex<double> value() const;
};

/// Letters of `p` acting on |x>: returns (y, k) with P|x> = i^k |y>.
std::pair<BitVec, unsigned> apply_letters(const PauliString &p, const BitVec &x);
BasisAction apply_to_basis(const PauliTerm &term, const BitVec &x);

}  // namespace stoq
