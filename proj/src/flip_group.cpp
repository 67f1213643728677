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

#include "stoqkit/flip_group.hpp"

#include <bit>

namespace stoq {

Rational ParityPoly::eval(uint64_t y) const {
    Rational out;
    for (const auto &[u, c] : coeffs) {
        if (std::popcount(u & y) & 1) {
            out -= c;
        } else {
            out += c;
        }
    }
    return out;
}

std::size_t ParityPoly::degree() const {
    std::size_t d = 0;
    for (const auto &[u, c] : coeffs) {
        d = std::max<std::size_t>(d, std::popcount(u));
    }
    return d;
}

uint64_t ParityPoly::support() const {
    uint64_t s = 0;
    for (const auto &[u, c] : coeffs) {
        s |= u;
    }
    return s;
}

uint64_t FlipGroup::num_representatives() const {
    return flip_qubits.empty() ? 1 : uint64_t{1} << (flip_qubits.size() - 1);
}

uint64_t FlipGroup::representative(uint64_t k) const {
    if (flip_qubits.empty()) {
        return 0;
    }
    // Position 0 is pinned to 0; the remaining positions follow lex order.
    return lex_rank_to_bits(k, flip_qubits.size());
}

uint64_t FlipGroup::complement(uint64_t a) const {
    std::size_t s = flip_qubits.size();
    return s == 64 ? ~a : a ^ ((uint64_t{1} << s) - 1);
}

ParityPoly FlipGroup::entry_poly(uint64_t a) const {
    ParityPoly p;
    p.width = free_qubits.size();
    for (const auto &m : members) {
        auto [it, inserted] = p.coeffs.emplace(m.z_free, Rational(0));
        if (std::popcount(m.z_flip & a) & 1) {
            it->second -= m.coeff;
        } else {
            it->second += m.coeff;
        }
        if (sgn(it->second) == 0) {
            p.coeffs.erase(it);
        }
    }
    return p;
}

Rational FlipGroup::entry(uint64_t a, uint64_t y) const {
    Rational out;
    for (const auto &m : members) {
        if ((std::popcount(m.z_flip & a) + std::popcount(m.z_free & y)) & 1) {
            out -= m.coeff;
        } else {
            out += m.coeff;
        }
    }
    return out;
}

BitVec FlipGroup::embed(uint64_t a, uint64_t y) const {
    BitVec out(flip.size());
    scatter_bits(out, flip_qubits, a);
    scatter_bits(out, free_qubits, y);
    return out;
}

std::map<BitVec, FlipGroup> flip_groups(const Hamiltonian &h) {
    h.require_real();
    std::size_t n = h.num_qubits();
    std::map<BitVec, std::vector<const PauliTerm *>> buckets;
    for (const auto &t : h.terms()) {
        buckets[t.string.x()].push_back(&t);
    }
    if (sgn(h.offset()) != 0) {
        buckets[BitVec(n)];
    }
    std::map<BitVec, FlipGroup> out;
    for (auto &[s, terms] : buckets) {
        FlipGroup g;
        g.flip = s;
        g.relevant = s;
        for (auto *t : terms) {
            g.relevant |= t->string.z();
        }
        g.flip_qubits = s.ones();
        g.free_qubits = (g.relevant ^ s).ones();
        if (g.flip_qubits.size() > 63 || g.free_qubits.size() > 63) {
            throw BudgetExceeded("flip group " + s.to_string() + " has more than 63 flip or free qubits");
        }
        for (auto *t : terms) {
            FlipMember m;
            m.z_flip = gather_bits(t->string.z(), g.flip_qubits);
            m.z_free = gather_bits(t->string.z(), g.free_qubits);
            m.coeff = (t->string.y_count() / 2) % 2 ? Rational(-t->coeff) : t->coeff;
            g.members.push_back(std::move(m));
        }
        if (s.none() && sgn(h.offset()) != 0) {
            g.members.push_back(FlipMember{0, 0, h.offset()});
        }
        out.emplace(s, std::move(g));
    }
    return out;
}

}  // namespace stoq
