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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stoq {

/// Fixed-length bit vector packed into 64-bit words. Bit i is qubit i.
///
/// Ordering is lexicographic on the string form, i.e. qubit 0 is the most
/// significant position. All "lexicographically smallest" tie-breaks in the
/// library use this order.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t num_bits);

    /// Parses a string of '0'/'1' characters, qubit 0 first.
    static BitVec from_string(std::string_view bits);
    /// Bit i of the result is bit i of `value`.
    static BitVec from_u64(std::size_t num_bits, uint64_t value);
    /// Sets bit i for every index in `indices`.
    static BitVec from_indices(std::size_t num_bits, const std::vector<std::size_t> &indices);

    std::size_t size() const {
        return num_bits_;
    }
    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    std::size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Indices of set bits in increasing order.
    std::vector<std::size_t> ones() const;
    /// Index of the lowest set bit, or size() when none is set.
    std::size_t first_one() const;

    /// Packs bit i into bit i of the result. Requires size() <= 64.
    uint64_t to_u64() const;
    std::string to_string() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        return a &= b;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        return a |= b;
    }

    /// Parity of popcount(a & b).
    friend bool dot(const BitVec &a, const BitVec &b);

    bool operator==(const BitVec &other) const = default;
    std::strong_ordering operator<=>(const BitVec &other) const;

   private:
    void check_same_size(const BitVec &other) const;

    std::size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec &b) const;
};

/// Sub-vector bits[indices[0]], bits[indices[1]], ... packed into a word.
uint64_t gather_bits(const BitVec &bits, const std::vector<std::size_t> &indices);
/// Writes the low bits of `value` into positions `indices` of `bits`.
void scatter_bits(BitVec &bits, const std::vector<std::size_t> &indices, uint64_t value);

/// Maps the k-th string of {0,1}^w in lexicographic order (position 0 most
/// significant) to its packed form where position j is bit j.
inline uint64_t lex_rank_to_bits(uint64_t rank, std::size_t width) {
    uint64_t out = 0;
    for (std::size_t j = 0; j < width; ++j) {
        out |= ((rank >> (width - 1 - j)) & 1) << j;
    }
    return out;
}

}  // namespace stoq
