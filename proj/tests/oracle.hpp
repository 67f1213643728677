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


// Reference computations for the tests. Everything here is built from
// first principles (Kronecker products, explicit enumeration) and does not
// call the library routines it is used to check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <vector>

#include "stoqkit/clifford.hpp"
#include "stoqkit/hamiltonian.hpp"
#include "stoqkit/random.hpp"

namespace stoq::oracle {

using Complex = std::complex<double>;

inline Eigen::Matrix2cd letter_matrix(Letter l) {
    Eigen::Matrix2cd m;
    switch (l) {
        case Letter::I:
            m << 1, 0, 0, 1;
            break;
        case Letter::X:
            m << 0, 1, 1, 0;
            break;
        case Letter::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case Letter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

/// Kronecker product with qubit n-1 as the most significant factor, so bit q
/// of a basis index is qubit q.
inline Eigen::MatrixXcd pauli_matrix(const PauliString &p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        Eigen::Matrix2cd f = letter_matrix(p.letter(q));
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = f(a, b) * m;
            }
        }
        m = next;
    }
    return m;
}

inline Eigen::MatrixXcd matrix(const Hamiltonian &h) {
    std::size_t dim = std::size_t{1} << h.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) * to_double(h.offset());
    for (const auto &t : h.terms()) {
        m += to_double(t.coeff) * pauli_matrix(t.string);
    }
    return m;
}

/// Exact entry <row|P|col> of a Pauli string as i^k (k in 0..3), or -1 when
/// the entry is zero. Computed factor by factor.
inline int pauli_entry_phase(const PauliString &p, uint64_t row, uint64_t col) {
    int k = 0;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        int r = (row >> q) & 1;
        int c = (col >> q) & 1;
        switch (p.letter(q)) {
            case Letter::I:
                if (r != c) return -1;
                break;
            case Letter::X:
                if (r == c) return -1;
                break;
            case Letter::Z:
                if (r != c) return -1;
                k += 2 * r;
                break;
            case Letter::Y:
                if (r == c) return -1;
                k += r ? 1 : 3;
                break;
        }
    }
    return k % 4;
}

/// Exact real matrix entry; the imaginary part must vanish.
inline Rational exact_entry(const Hamiltonian &h, uint64_t row, uint64_t col) {
    Rational re = row == col ? h.offset() : Rational(0);
    Rational im = 0;
    for (const auto &t : h.terms()) {
        int k = pauli_entry_phase(t.string, row, col);
        if (k < 0) continue;
        if (k == 0) re += t.coeff;
        if (k == 2) re -= t.coeff;
        if (k == 1) im += t.coeff;
        if (k == 3) im -= t.coeff;
    }
    if (sgn(im) != 0) {
        throw std::logic_error("imaginary entry in oracle");
    }
    return re;
}

/// Largest off-diagonal entry, exact.
inline Rational max_offdiag(const Hamiltonian &h) {
    uint64_t dim = uint64_t{1} << h.num_qubits();
    Rational best;
    bool first = true;
    for (uint64_t r = 0; r < dim; ++r) {
        for (uint64_t c = 0; c < dim; ++c) {
            if (r == c) continue;
            Rational v = exact_entry(h, r, c);
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
    }
    return best;
}

inline bool stoquastic(const Hamiltonian &h) {
    return h.num_qubits() == 0 || sgn(max_offdiag(h)) <= 0;
}

inline std::vector<double> sorted_spectrum(const Hamiltonian &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix(h), Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

inline double spectrum_distance(const Hamiltonian &a, const Hamiltonian &b) {
    auto sa = sorted_spectrum(a);
    auto sb = sorted_spectrum(b);
    if (sa.size() != sb.size()) return 1e300;
    double d = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) d = std::max(d, std::abs(sa[i] - sb[i]));
    return d;
}

inline Rational small_rational(SplitMix64 &rng, int range, int denom = 1) {
    Rational r(static_cast<long>(rng.below(2 * range + 1)) - range, denom);
    r.canonicalize();
    return r;
}

/// Random real Hamiltonian with `terms` distinct Pauli strings of weight at
/// most `locality` and integer coefficients in [-range, range].
inline Hamiltonian random_hamiltonian(std::size_t n, std::size_t terms, std::size_t locality, SplitMix64 &rng,
                                      int range = 3) {
    Hamiltonian h(n);
    std::size_t attempts = 0;
    while (h.terms().size() < terms && attempts++ < 50 * terms + 50) {
        PauliString p(n);
        std::size_t w = 1 + rng.below(std::min(locality, n));
        for (std::size_t k = 0; k < w; ++k) {
            p.set_letter(rng.below(n), static_cast<Letter>(1 + rng.below(3)));
        }
        if (!p.is_real() || p.is_identity()) continue;
        Rational c = small_rational(rng, range);
        if (sgn(c) == 0) c = 1;
        h.add(c, p);
    }
    return h;
}

// Tableau conjugation by elementary gates, written directly on the images.

inline void gate_h(SignedPauli &p, std::size_t q) {
    Letter l = p.string.letter(q);
    if (l == Letter::X) p.string.set_letter(q, Letter::Z);
    if (l == Letter::Z) p.string.set_letter(q, Letter::X);
    if (l == Letter::Y) p.negative = !p.negative;
}

inline void gate_s(SignedPauli &p, std::size_t q) {
    // S X S^dag = Y, S Y S^dag = -X.
    Letter l = p.string.letter(q);
    if (l == Letter::X) p.string.set_letter(q, Letter::Y);
    if (l == Letter::Y) {
        p.string.set_letter(q, Letter::X);
        p.negative = !p.negative;
    }
}

inline void gate_cnot(SignedPauli &p, std::size_t c, std::size_t t) {
    // Phase rule for CNOT conjugation in the binary representation.
    bool xc = p.string.x().get(c), zc = p.string.z().get(c);
    bool xt = p.string.x().get(t), zt = p.string.z().get(t);
    if (xc && zt && (xt == zc)) p.negative = !p.negative;
    BitVec x = p.string.x();
    BitVec z = p.string.z();
    x.set(t, xt ^ xc);
    z.set(c, zc ^ zt);
    p.string = PauliString(x, z);
}

/// Random Clifford obtained by pushing the identity tableau through random
/// H, S and CNOT gates.
inline CliffordTableau random_clifford(std::size_t n, SplitMix64 &rng, std::size_t gates = 0) {
    std::vector<SignedPauli> xs, zs;
    for (std::size_t q = 0; q < n; ++q) {
        xs.push_back({PauliString::single(n, q, Letter::X), false});
        zs.push_back({PauliString::single(n, q, Letter::Z), false});
    }
    if (gates == 0) gates = 6 * n * n + 4;
    for (std::size_t g = 0; g < gates; ++g) {
        std::size_t kind = rng.below(n > 1 ? 3 : 2);
        std::size_t a = rng.below(n);
        std::size_t b = (a + 1 + rng.below(n > 1 ? n - 1 : 1)) % n;
        for (auto *set : {&xs, &zs}) {
            for (auto &p : *set) {
                if (kind == 0) gate_h(p, a);
                if (kind == 1) gate_s(p, a);
                if (kind == 2) gate_cnot(p, a, b);
            }
        }
    }
    CliffordTableau t(n);
    for (std::size_t q = 0; q < n; ++q) {
        t.set_x_image(q, xs[q]);
        t.set_z_image(q, zs[q]);
    }
    return t;
}

}  // namespace stoq::oracle
