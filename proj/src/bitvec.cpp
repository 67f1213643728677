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

#include "stoqkit/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace stoq {

BitVec::BitVec(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return out;
}

BitVec BitVec::from_u64(std::size_t num_bits, uint64_t value) {
    if (num_bits < 64 && (value >> num_bits) != 0) {
        throw std::invalid_argument("value does not fit in the requested bit count");
    }
    BitVec out(num_bits);
    if (!out.words_.empty()) {
        out.words_[0] = value;
    }
    return out;
}

BitVec BitVec::from_indices(std::size_t num_bits, const std::vector<std::size_t> &indices) {
    BitVec out(num_bits);
    for (auto i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("bit index out of range");
        }
        out.set(i, true);
    }
    return out;
}

void BitVec::set(std::size_t i, bool value) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= m;
    } else {
        words_[i >> 6] &= ~m;
    }
}

std::size_t BitVec::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(64 * k + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t BitVec::first_one() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) {
            return 64 * k + std::countr_zero(words_[k]);
        }
    }
    return num_bits_;
}

uint64_t BitVec::to_u64() const {
    if (num_bits_ > 64) {
        throw std::length_error("bit vector longer than 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitVec::to_string() const {
    std::string out(num_bits_, '0');
    for (std::size_t i = 0; i < num_bits_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

void BitVec::check_same_size(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

bool dot(const BitVec &a, const BitVec &b) {
    a.check_same_size(b);
    uint64_t acc = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
        acc ^= a.words_[k] & b.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ <=> other.num_bits_;
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        uint64_t d = words_[k] ^ other.words_[k];
        if (d) {
            // Lowest differing index decides; the side holding 0 there is smaller.
            uint64_t low = d & (~d + 1);
            return (words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t BitVecHash::operator()(const BitVec &b) const {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ b.size();
    for (auto w : b.words()) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

uint64_t gather_bits(const BitVec &bits, const std::vector<std::size_t> &indices) {
    uint64_t out = 0;
    for (std::size_t j = 0; j < indices.size(); ++j) {
        out |= uint64_t{bits.get(indices[j])} << j;
    }
    return out;
}

void scatter_bits(BitVec &bits, const std::vector<std::size_t> &indices, uint64_t value) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
        bits.set(indices[j], (value >> j) & 1);
    }
}

}  // namespace stoq
