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

#include "stoqkit/pauli.hpp"

#include <stdexcept>

namespace stoq {

char letter_char(Letter l) {
    switch (l) {
        case Letter::I:
            return 'I';
        case Letter::X:
            return 'X';
        case Letter::Z:
            return 'Z';
        default:
            return 'Y';
    }
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Letter::I;
        case 'X':
            return Letter::X;
        case 'Y':
            return Letter::Y;
        case 'Z':
            return Letter::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
    }
}

PauliString::PauliString(std::size_t num_qubits) : x_(num_qubits), z_(num_qubits) {
}

PauliString::PauliString(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("x and z masks differ in length");
    }
}

PauliString PauliString::from_dense(std::string_view letters) {
    PauliString out(letters.size());
    for (std::size_t q = 0; q < letters.size(); ++q) {
        out.set_letter(q, letter_from_char(letters[q]));
    }
    return out;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, Letter letter) {
    PauliString out(num_qubits);
    out.set_letter(qubit, letter);
    return out;
}

void PauliString::set_letter(std::size_t q, Letter l) {
    auto v = static_cast<uint8_t>(l);
    x_.set(q, v & 1);
    z_.set(q, v & 2);
}

std::size_t PauliString::y_count() const {
    return (x_ & z_).popcount();
}

std::string PauliString::to_dense_string() const {
    std::string out(num_qubits(), 'I');
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        out[q] = letter_char(letter(q));
    }
    return out;
}

std::string PauliString::to_sparse_string() const {
    std::string out;
    for (auto q : support().ones()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += letter_char(letter(q));
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

std::strong_ordering PauliString::operator<=>(const PauliString &other) const {
    if (auto c = x_ <=> other.x_; c != 0) {
        return c;
    }
    return z_ <=> other.z_;
}

std::size_t PauliStringHash::operator()(const PauliString &p) const {
    BitVecHash h;
    return h(p.x()) * 31 + h(p.z());
}

PhasedPauli multiply(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli string length mismatch");
    }
    // Sum of the per-qubit exponents g(p_q, q_q) with sigma_a sigma_b = i^g sigma_c.
    int total = 0;
    for (auto k : (p.support() & q.support()).ones()) {
        int x1 = p.x().get(k), z1 = p.z().get(k);
        int x2 = q.x().get(k), z2 = q.z().get(k);
        if (x1 && z1) {
            total += z2 - x2;
        } else if (x1) {
            total += z2 * (2 * x2 - 1);
        } else {
            total += x2 * (1 - 2 * z2);
        }
    }
    PhasedPauli out{PauliString(p.x() ^ q.x(), p.z() ^ q.z()), 0};
    out.phase = static_cast<unsigned>(((total % 4) + 4) % 4);
    return out;
}

PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q) {
    auto out = multiply(p.string, q.string);
    out.phase = (out.phase + p.phase + q.phase) & 3;
    return out;
}

bool commutes(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli string length mismatch");
    }
    return dot(p.x(), q.z()) == dot(p.z(), q.x());
}

Rational BasisAction::real() const {
    if (!is_real()) {
        throw std::logic_error("basis action value is imaginary");
    }
    return phase == 0 ? magnitude : Rational(-magnitude);
}

std::complex<double> BasisAction::value() const {
    double m = to_double(magnitude);
    switch (phase & 3) {
        case 0:
            return {m, 0};
        case 1:
            return {0, m};
        case 2:
            return {-m, 0};
        default:
            return {0, -m};
    }
}

std::pair<BitVec, unsigned> apply_letters(const PauliString &p, const BitVec &x) {
    if (x.size() != p.num_qubits()) {
        throw std::invalid_argument("basis state length mismatch");
    }
    // Y|b> = i(-1)^b |~b>, Z|b> = (-1)^b |b>.
    unsigned k = static_cast<unsigned>(p.y_count() + 2 * static_cast<unsigned>(dot(p.z(), x)));
    return {x ^ p.x(), k & 3};
}

BasisAction apply_to_basis(const PauliTerm &term, const BitVec &x) {
    auto [y, k] = apply_letters(term.string, x);
    return {std::move(y), term.coeff, k};
}

}  // namespace stoq
