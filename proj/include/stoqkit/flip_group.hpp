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
#include <vector>

#include "stoqkit/hamiltonian.hpp"

namespace stoq {

/// Real function on {0,1}^width written as sum_U c_U (-1)^{popcount(U & y)}.
struct ParityPoly {
    std::size_t width = 0;
    std::map<uint64_t, Rational> coeffs;

    Rational eval(uint64_t y) const;
    /// Largest popcount of a mask with nonzero coefficient; 0 for the zero polynomial.
    std::size_t degree() const;
    /// Union of masks with nonzero coefficient.
    uint64_t support() const;
    bool is_zero() const {
        return coeffs.empty();
    }
};

/// One term of a flip group in local coordinates.
struct FlipMember {
    /// Z/Y positions inside S, bit j for flip_qubits[j].
    uint64_t z_flip = 0;
    /// Z/Y positions outside S, bit j for free_qubits[j].
    uint64_t z_free = 0;
    /// coeff * (-1)^{y_count/2}.
    Rational coeff;
};

/// All terms whose X/Y pattern equals a fixed subset S.
///
/// Local encodings: a representative `a` is a word over flip_qubits and an
/// assignment `y` is a word over free_qubits (the relevant support minus S).
/// The canonical representative has 0 on flip_qubits[0].
class FlipGroup {
   public:
    BitVec flip;
    BitVec relevant;
    std::vector<std::size_t> flip_qubits;
    std::vector<std::size_t> free_qubits;
    std::vector<FlipMember> members;

    bool is_diagonal() const {
        return flip_qubits.empty();
    }
    /// 2^{|S|-1} canonical representatives (1 for the diagonal group).
    uint64_t num_representatives() const;
    /// k-th canonical representative in lexicographic order.
    uint64_t representative(uint64_t k) const;
    uint64_t complement(uint64_t a) const;

    /// f_S(a, .) = <a~ y|H|a y> as a parity polynomial over free_qubits.
    ParityPoly entry_poly(uint64_t a) const;
    Rational entry(uint64_t a, uint64_t y) const;
    /// Full-length string carrying a on S, y on free_qubits and 0 elsewhere.
    BitVec embed(uint64_t a, uint64_t y) const;
};

/// Partitions the terms of a real Hamiltonian by X/Y pattern. The identity
/// offset is included in the diagonal group.
std::map<BitVec, FlipGroup> flip_groups(const Hamiltonian &h);

}  // namespace stoq
