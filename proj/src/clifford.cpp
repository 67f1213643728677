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

#include "stoqkit/clifford.hpp"

namespace stoq {

std::string SignedPauli::to_string() const {
    return (negative ? "-" : "+") + string.to_sparse_string();
}

SignedPauli to_signed(const PhasedPauli &p) {
    if (p.phase & 1) {
        throw std::domain_error("operator " + p.string.to_sparse_string() + " carries an imaginary phase");
    }
    return {p.string, p.phase == 2};
}

CliffordTableau::CliffordTableau(std::size_t num_qubits) {
    for (std::size_t q = 0; q < num_qubits; ++q) {
        x_images_.push_back({PauliString::single(num_qubits, q, Letter::X), false});
        z_images_.push_back({PauliString::single(num_qubits, q, Letter::Z), false});
    }
}

CliffordTableau CliffordTableau::hadamards(const BitVec &mask) {
    CliffordTableau t(mask.size());
    for (auto q : mask.ones()) {
        std::swap(t.x_images_[q], t.z_images_[q]);
    }
    return t;
}

void CliffordTableau::set_x_image(std::size_t q, SignedPauli p) {
    if (p.string.num_qubits() != num_qubits()) {
        throw std::invalid_argument("image qubit count mismatch");
    }
    x_images_[q] = std::move(p);
}

void CliffordTableau::set_z_image(std::size_t q, SignedPauli p) {
    if (p.string.num_qubits() != num_qubits()) {
        throw std::invalid_argument("image qubit count mismatch");
    }
    z_images_[q] = std::move(p);
}

std::string CliffordTableau::validation_error() const {
    std::size_t n = num_qubits();
    auto image = [&](std::size_t k) -> const PauliString & {
        return k < n ? x_images_[k].string : z_images_[k - n].string;
    };
    auto label = [&](std::size_t k) {
        return std::string(k < n ? "X" : "Z") + std::to_string(k % n);
    };
    for (std::size_t a = 0; a < 2 * n; ++a) {
        if (image(a).is_identity()) {
            return "image of " + label(a) + " is the identity";
        }
        for (std::size_t b = a + 1; b < 2 * n; ++b) {
            bool should_anticommute = b == a + n;
            if (commutes(image(a), image(b)) == should_anticommute) {
                return "images of " + label(a) + " and " + label(b) + " break the symplectic form";
            }
        }
    }
    return {};
}

PhasedPauli CliffordTableau::apply(const PauliString &p) const {
    if (p.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli string qubit count mismatch");
    }
    // Letters = i^{y} prod_q X_q^{x_q} Z_q^{z_q}.
    PhasedPauli out{PauliString(num_qubits()), static_cast<unsigned>(p.y_count() & 3)};
    for (auto q : p.support().ones()) {
        if (p.x().get(q)) {
            out = multiply(out, x_images_[q].phased());
        }
        if (p.z().get(q)) {
            out = multiply(out, z_images_[q].phased());
        }
    }
    return out;
}

PhasedPauli CliffordTableau::apply(const PhasedPauli &p) const {
    auto out = apply(p.string);
    out.phase = (out.phase + p.phase) & 3;
    return out;
}

nlohmann::json CliffordTableau::to_json() const {
    nlohmann::json xs = nlohmann::json::array();
    nlohmann::json zs = nlohmann::json::array();
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        xs.push_back(x_images_[q].to_string());
        zs.push_back(z_images_[q].to_string());
    }
    return {{"qubits", num_qubits()}, {"x_images", xs}, {"z_images", zs}};
}

Hamiltonian conjugate_clifford(const Hamiltonian &h, const CliffordTableau &c) {
    if (c.num_qubits() != h.num_qubits()) {
        throw InvalidTableau("tableau qubit count does not match the Hamiltonian");
    }
    if (auto err = c.validation_error(); !err.empty()) {
        throw InvalidTableau(err);
    }
    Hamiltonian out(h.num_qubits());
    out.add(h.offset(), PauliString(h.num_qubits()));
    for (const auto &t : h.terms()) {
        auto img = c.apply(t.string);
        // Hermitian letters map to Hermitian letters up to a sign; an odd
        // phase here means the input term itself was not Hermitian-real.
        auto s = to_signed(img);
        out.add(s.negative ? Rational(-t.coeff) : t.coeff, s.string);
    }
    out.name = h.name;
    out.provenance = h.provenance;
    return out;
}

}  // namespace stoq
