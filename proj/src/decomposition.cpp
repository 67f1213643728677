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

#include "stoqkit/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "stoqkit/dense.hpp"
#include "stoqkit/flip_group.hpp"
#include "stoqkit/random.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {

std::string Gate::to_string() const {
    if (kind == Kind::X) {
        return "X " + std::to_string(target);
    }
    return "CNOT " + std::to_string(control) + " " + std::to_string(target);
}

void apply_gates(const std::vector<Gate> &gates, BitVec &x) {
    for (const auto &g : gates) {
        if (g.kind == Gate::Kind::X || x.get(g.control)) {
            x.flip(g.target);
        }
    }
}

void apply_gates_inverse(const std::vector<Gate> &gates, BitVec &x) {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->kind == Gate::Kind::X || x.get(it->control)) {
            x.flip(it->target);
        }
    }
}

namespace {

uint64_t apply_gates_u64(const std::vector<Gate> &gates, uint64_t x) {
    for (const auto &g : gates) {
        if (g.kind == Gate::Kind::X || ((x >> g.control) & 1)) {
            x ^= uint64_t{1} << g.target;
        }
    }
    return x;
}

uint64_t apply_gates_inverse_u64(const std::vector<Gate> &gates, uint64_t x) {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->kind == Gate::Kind::X || ((x >> it->control) & 1)) {
            x ^= uint64_t{1} << it->target;
        }
    }
    return x;
}

PauliString z_string(std::size_t n, const std::vector<std::size_t> &qubits, uint64_t local_mask) {
    PauliString s(n);
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if ((local_mask >> j) & 1) {
            s.set_letter(qubits[j], Letter::Z);
        }
    }
    return s;
}

ParityPoly negated(const ParityPoly &p) {
    ParityPoly out = p;
    for (auto &[u, c] : out.coeffs) {
        c = -c;
    }
    return out;
}

}  // namespace

Rational DecompositionTerm::eval_hj(const BitVec &v) const {
    for (auto q : projector_qubits) {
        if (v.get(q)) {
            return 0;
        }
    }
    return eval_diagonal(classical, v);
}

Rational eval_diagonal(const Hamiltonian &diag, const BitVec &x) {
    Rational out = diag.offset();
    for (const auto &t : diag.terms()) {
        if (!t.string.is_diagonal()) {
            throw std::invalid_argument("eval_diagonal requires a diagonal Hamiltonian");
        }
        if (dot(t.string.z(), x)) {
            out -= t.coeff;
        } else {
            out += t.coeff;
        }
    }
    return out;
}

nlohmann::json StoqDecomposition::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto &t : terms) {
        nlohmann::json gates = nlohmann::json::array();
        for (const auto &g : t.circuit) {
            gates.push_back(g.to_string());
        }
        ts.push_back({{"flip", t.flip.to_string()},
                      {"representative", t.representative.to_string()},
                      {"flip_qubit", t.flip_qubit},
                      {"projector_qubits", t.projector_qubits},
                      {"gates", gates},
                      {"classical", stoq::to_json(t.classical)},
                      {"norm", to_string(t.norm)}});
    }
    return {{"qubits", num_qubits},
            {"beta", to_string(beta)},
            {"h0", stoq::to_json(h0)},
            {"h0_norm", to_string(h0_norm)},
            {"norm_bound", to_string(norm_bound)},
            {"term_count", terms.size()},
            {"source_terms", source_terms},
            {"locality", locality},
            {"terms", ts}};
}

StoqDecomposition decompose_global(const Hamiltonian &h) {
    auto verdict = check_global(h);
    if (verdict.status != GlobalStatus::Stoquastic) {
        throw NotGloballyStoquastic("decompose_global requires a globally stoquastic input (check_global: " +
                                    to_string(verdict.status) + ")");
    }
    std::size_t n = h.num_qubits();
    auto groups = flip_groups(h);
    StoqDecomposition d;
    d.num_qubits = n;
    d.source_terms = h.terms().size() + (sgn(h.offset()) != 0 ? 1 : 0);
    d.locality = h.locality();

    Rational abs_sum = abs(h.offset());
    for (const auto &t : h.terms()) {
        abs_sum += abs(t.coeff);
    }
    d.norm_bound = 2 * abs_sum;

    d.h0 = Hamiltonian(n);
    d.beta = 0;
    auto diag_it = groups.find(BitVec(n));
    if (diag_it != groups.end()) {
        const FlipGroup &g = diag_it->second;
        for (const auto &m : g.members) {
            d.beta -= abs(m.coeff);
        }
        ParityPoly f = g.entry_poly(0);
        for (const auto &[u, c] : f.coeffs) {
            d.h0.add(-c, z_string(n, g.free_qubits, u));
        }
        d.h0.add(-d.beta, PauliString(n));
        if (g.free_qubits.size() <= kDefaultGlobalBudget) {
            d.h0_norm = maximize(negated(f)).value - d.beta;
        } else {
            d.h0_norm = -2 * d.beta;
        }
    }

    for (const auto &[s, g] : groups) {
        if (g.is_diagonal()) {
            continue;
        }
        for (uint64_t k = 0; k < g.num_representatives(); ++k) {
            uint64_t a = g.representative(k);
            ParityPoly f = g.entry_poly(a);
            if (f.is_zero()) {
                continue;
            }
            DecompositionTerm t;
            t.flip = g.flip;
            t.representative = g.embed(a, 0);
            t.flip_qubit = g.flip_qubits[0];
            for (std::size_t j = 0; j < g.flip_qubits.size(); ++j) {
                if ((a >> j) & 1) {
                    t.circuit.push_back({Gate::Kind::X, 0, g.flip_qubits[j]});
                }
            }
            for (std::size_t j = 1; j < g.flip_qubits.size(); ++j) {
                t.circuit.push_back({Gate::Kind::CNOT, t.flip_qubit, g.flip_qubits[j]});
                t.projector_qubits.push_back(g.flip_qubits[j]);
            }
            t.classical = Hamiltonian(n);
            for (const auto &[u, c] : f.coeffs) {
                t.classical.add(-c, z_string(n, g.free_qubits, u));
            }
            t.norm = maximize(negated(f)).value;
            d.terms.push_back(std::move(t));
        }
    }

    std::vector<BitVec> columns;
    if (n <= 12) {
        for (uint64_t u = 0; u < (uint64_t{1} << n); ++u) {
            columns.push_back(BitVec::from_u64(n, u));
        }
    } else {
        SplitMix64 rng(0x5EED0000ull + n);
        for (int i = 0; i < 256; ++i) {
            BitVec u(n);
            for (std::size_t q = 0; q < n; ++q) {
                u.set(q, rng.next() & 1);
            }
            columns.push_back(std::move(u));
        }
    }
    if (!decomposition_matches(h, d, columns)) {
        throw std::logic_error("decomposition failed its reconstruction check");
    }
    for (const auto &t : d.terms) {
        if (sgn(t.norm) < 0 || t.norm > d.norm_bound) {
            throw std::logic_error("decomposition term norm out of range");
        }
    }
    return d;
}

bool decomposition_matches(const Hamiltonian &h, const StoqDecomposition &d, const std::vector<BitVec> &columns) {
    auto groups = flip_groups(h);
    for (const auto &u : columns) {
        std::map<BitVec, Rational> expected, actual;
        for (const auto &[s, g] : groups) {
            Rational v = g.entry(gather_bits(u, g.flip_qubits), gather_bits(u, g.free_qubits));
            expected[u ^ s] += v;
        }
        expected[u] += d.beta;

        actual[u] -= eval_diagonal(d.h0, u);
        for (const auto &t : d.terms) {
            BitVec v = u;
            apply_gates(t.circuit, v);
            bool zeros = std::none_of(t.projector_qubits.begin(), t.projector_qubits.end(),
                                      [&](std::size_t q) { return v.get(q); });
            if (!zeros) {
                continue;
            }
            v.flip(t.flip_qubit);
            apply_gates_inverse(t.circuit, v);
            actual[v] -= eval_diagonal(t.classical, u);
        }
        auto strip = [](std::map<BitVec, Rational> &m) {
            std::erase_if(m, [](const auto &kv) { return sgn(kv.second) == 0; });
        };
        strip(expected);
        strip(actual);
        if (expected != actual) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> diagonal_values(const Hamiltonian &diag) {
    std::size_t n = diag.num_qubits();
    if (n > kDefaultDenseQubits) {
        throw BudgetExceeded("diagonal_values limited to the dense threshold");
    }
    std::vector<Rational> out;
    out.reserve(std::size_t{1} << n);
    for (uint64_t u = 0; u < (uint64_t{1} << n); ++u) {
        out.push_back(eval_diagonal(diag, BitVec::from_u64(n, u)));
    }
    return out;
}

namespace {

std::size_t check_state(const Eigen::VectorXcd &psi, std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    if (static_cast<std::size_t>(psi.size()) != dim) {
        throw std::invalid_argument("state dimension does not match the qubit count");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("state is not normalized");
    }
    return dim;
}

double expect_diag_x(const Eigen::VectorXcd &psi, const std::vector<double> &weights,
                     std::optional<std::size_t> x_qubit) {
    std::complex<double> acc = 0;
    uint64_t xm = x_qubit ? uint64_t{1} << *x_qubit : 0;
    for (std::size_t v = 0; v < weights.size(); ++v) {
        if (weights[v] != 0) {
            acc += std::conj(psi(v ^ xm)) * weights[v] * psi(v);
        }
    }
    return acc.real();
}

}  // namespace

double accept_zero_projector(const Eigen::VectorXcd &psi, std::size_t qubit, std::optional<std::size_t> x_qubit) {
    std::size_t n = static_cast<std::size_t>(std::countr_zero(static_cast<uint64_t>(psi.size())));
    std::size_t dim = check_state(psi, n);
    if (x_qubit && *x_qubit == qubit) {
        throw std::invalid_argument("projector and X act on the same qubit");
    }
    std::vector<double> w(dim);
    for (std::size_t v = 0; v < dim; ++v) {
        w[v] = ((v >> qubit) & 1) ? 0.0 : 1.0;
    }
    return 0.5 * (1.0 + expect_diag_x(psi, w, x_qubit));
}

double accept_threshold(const Eigen::VectorXcd &psi, const std::vector<Rational> &values, const Rational &alpha,
                        std::optional<std::size_t> x_qubit) {
    if (static_cast<std::size_t>(psi.size()) != values.size()) {
        throw std::invalid_argument("state dimension mismatch");
    }
    std::vector<double> w(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
        w[v] = values[v] >= alpha ? 1.0 : 0.0;
    }
    return 0.5 * (1.0 + expect_diag_x(psi, w, x_qubit));
}

double accept_scaled(const Eigen::VectorXcd &psi, const std::vector<Rational> &values, const Rational &m,
                     std::optional<std::size_t> x_qubit) {
    std::set<Rational> levels;
    for (const auto &v : values) {
        if (sgn(v) < 0) {
            throw std::invalid_argument("layer-cake split requires a nonnegative operator");
        }
        if (sgn(v) > 0) {
            levels.insert(v);
        }
    }
    double g = 0;
    Rational prev = 0;
    for (const auto &lam : levels) {
        double p = accept_threshold(psi, values, lam, x_qubit);
        g += to_double((lam - prev) / m) * (2 * p - 1);
        prev = lam;
    }
    return 0.5 * (1.0 + g);
}

bool threshold_average_identity(const std::vector<Rational> &values, const Rational &m) {
    std::set<Rational> levels;
    for (const auto &v : values) {
        if (sgn(v) < 0 || v > m) {
            return false;
        }
        if (sgn(v) > 0) {
            levels.insert(v);
        }
    }
    for (const auto &v : values) {
        Rational sum = 0, prev = 0;
        for (const auto &lam : levels) {
            if (v >= lam) {
                sum += lam - prev;
            }
            prev = lam;
        }
        if (sum != v) {
            return false;
        }
    }
    return true;
}

double stoqma_acceptance(const Hamiltonian &h, const StoqDecomposition &d, const Eigen::VectorXcd &psi) {
    if (h.num_qubits() != d.num_qubits) {
        throw std::invalid_argument("decomposition does not match the Hamiltonian");
    }
    std::size_t n = d.num_qubits;
    if (n > kDefaultDenseQubits) {
        throw BudgetExceeded("acceptance computation limited to the dense threshold");
    }
    std::size_t dim = check_state(psi, n);
    double m = to_double(d.norm_bound);
    double total = 0;

    auto h0 = diagonal_values(d.h0);
    double g0 = 0;
    for (std::size_t u = 0; u < dim; ++u) {
        g0 += std::norm(psi(u)) * to_double(h0[u]) / m;
    }
    total += 0.5 * (1 + g0);

    for (const auto &t : d.terms) {
        uint64_t proj_mask = 0;
        for (auto q : t.projector_qubits) {
            proj_mask |= uint64_t{1} << q;
        }
        auto hsx = diagonal_values(t.classical);
        std::complex<double> acc = 0;
        for (uint64_t u = 0; u < dim; ++u) {
            uint64_t v = apply_gates_u64(t.circuit, u);
            if (v & proj_mask) {
                continue;
            }
            uint64_t row = apply_gates_inverse_u64(t.circuit, v ^ (uint64_t{1} << t.flip_qubit));
            acc += std::conj(psi(row)) * (to_double(hsx[u]) / m) * psi(u);
        }
        total += 0.5 * (1 + acc.real());
    }
    return total / static_cast<double>(d.terms.size() + 1);
}

double stoqma_acceptance_closed_form(const Hamiltonian &h, const StoqDecomposition &d, const Eigen::VectorXcd &psi) {
    check_state(psi, d.num_qubits);
    std::complex<double> e = psi.dot(apply_hamiltonian(h, psi));
    double shifted = e.real() + to_double(d.beta);
    return 0.5 * (1 - shifted / (static_cast<double>(d.terms.size() + 1) * to_double(d.norm_bound)));
}

double stoqma_acceptance_elementary(const StoqDecomposition &d, const Eigen::VectorXcd &psi) {
    std::size_t n = d.num_qubits;
    std::size_t dim = check_state(psi, n);
    double total = accept_scaled(psi, diagonal_values(d.h0), d.norm_bound);
    for (const auto &t : d.terms) {
        Eigen::VectorXcd rotated(dim);
        for (uint64_t u = 0; u < dim; ++u) {
            rotated(apply_gates_u64(t.circuit, u)) = psi(u);
        }
        std::vector<Rational> values;
        values.reserve(dim);
        for (uint64_t v = 0; v < dim; ++v) {
            values.push_back(t.eval_hj(BitVec::from_u64(n, v)));
        }
        total += accept_scaled(rotated, values, d.norm_bound, t.flip_qubit);
    }
    return total / static_cast<double>(d.terms.size() + 1);
}

}  // namespace stoq
