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

#include "stoqkit/pauli_sum.hpp"

namespace stoq {

PauliSum PauliSum::from_hamiltonian(const Hamiltonian &h) {
    PauliSum out(h.num_qubits());
    out.add(GaussianRational(h.offset()), PauliString(h.num_qubits()));
    for (const auto &t : h.terms()) {
        out.add(GaussianRational(t.coeff), t.string);
    }
    return out;
}

PauliSum PauliSum::scalar(std::size_t num_qubits, const GaussianRational &c) {
    PauliSum out(num_qubits);
    out.add(c, PauliString(num_qubits));
    return out;
}

PauliSum PauliSum::letter(std::size_t num_qubits, std::size_t qubit, Letter l, const GaussianRational &c) {
    PauliSum out(num_qubits);
    out.add(c, PauliString::single(num_qubits, qubit, l));
    return out;
}

PauliSum PauliSum::projector(std::size_t num_qubits, std::size_t qubit, bool bit) {
    Rational half(1, 2);
    PauliSum out = scalar(num_qubits, half);
    out.add(GaussianRational(bit ? Rational(-half) : half), PauliString::single(num_qubits, qubit, Letter::Z));
    return out;
}

PauliSum PauliSum::transition(std::size_t num_qubits, std::size_t qubit, bool to, bool from) {
    if (to == from) {
        return projector(num_qubits, qubit, to);
    }
    // |0><1| = (X + iY)/2, |1><0| = (X - iY)/2.
    Rational half(1, 2);
    PauliSum out = letter(num_qubits, qubit, Letter::X, half);
    out.add(GaussianRational(0, to ? Rational(-half) : half), PauliString::single(num_qubits, qubit, Letter::Y));
    return out;
}

void PauliSum::add(const GaussianRational &c, const PauliString &s) {
    if (s.num_qubits() != num_qubits_) {
        throw std::invalid_argument("qubit count mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

PauliSum &PauliSum::operator+=(const PauliSum &o) {
    for (const auto &[s, c] : o.terms_) {
        add(c, s);
    }
    return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &o) {
    for (const auto &[s, c] : o.terms_) {
        add(GaussianRational(-c.re, -c.im), s);
    }
    return *this;
}

PauliSum PauliSum::scaled(const GaussianRational &c) const {
    PauliSum out(num_qubits_);
    for (const auto &[s, v] : terms_) {
        out.add(v * c, s);
    }
    return out;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(num_qubits_);
    for (const auto &[s, v] : terms_) {
        out.add(v.conj(), s);
    }
    return out;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits_ != b.num_qubits_) {
        throw std::invalid_argument("qubit count mismatch");
    }
    PauliSum out(a.num_qubits_);
    for (const auto &[sa, ca] : a.terms_) {
        for (const auto &[sb, cb] : b.terms_) {
            auto p = multiply(sa, sb);
            out.add((ca * cb).times_i_pow(p.phase), p.string);
        }
    }
    return out;
}

Hamiltonian PauliSum::to_hamiltonian() const {
    Hamiltonian out(num_qubits_);
    for (const auto &[s, c] : terms_) {
        if (sgn(c.im) != 0) {
            throw std::domain_error("Pauli sum has a non-real coefficient on " + s.to_sparse_string());
        }
        out.add(c.re, s);
    }
    return out;
}

}  // namespace stoq
