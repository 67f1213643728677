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

#include "stoqkit/dense.hpp"

#include <bit>

namespace stoq {

namespace {

void check_size(const Hamiltonian &h, std::size_t max_qubits) {
    if (h.num_qubits() > max_qubits || h.num_qubits() > 30) {
        throw BudgetExceeded("dense materialization limited to " + std::to_string(max_qubits) + " qubits");
    }
}

struct CompiledTerm {
    uint64_t x;
    uint64_t z;
    unsigned y;
    double coeff;
};

std::vector<CompiledTerm> compile(const Hamiltonian &h) {
    std::vector<CompiledTerm> out;
    for (const auto &t : h.terms()) {
        out.push_back({t.string.x().to_u64(), t.string.z().to_u64(),
                       static_cast<unsigned>(t.string.y_count() & 3), to_double(t.coeff)});
    }
    return out;
}

}  // namespace

Eigen::MatrixXd dense_matrix(const Hamiltonian &h, std::size_t max_qubits) {
    check_size(h, max_qubits);
    h.require_real();
    std::size_t dim = std::size_t{1} << h.num_qubits();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    double offset = to_double(h.offset());
    auto terms = compile(h);
    for (std::size_t c = 0; c < dim; ++c) {
        m(c, c) += offset;
        for (const auto &t : terms) {
            double v = (t.y & 2) ? -t.coeff : t.coeff;
            if (std::popcount(t.z & c) & 1) {
                v = -v;
            }
            m(c ^ t.x, c) += v;
        }
    }
    return m;
}

Eigen::VectorXd spectrum(const Hamiltonian &h, std::size_t max_qubits) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix(h, max_qubits), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Eigensystem eigensystem(const Hamiltonian &h, std::size_t max_qubits) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix(h, max_qubits));
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXcd apply_hamiltonian(const Hamiltonian &h, const Eigen::VectorXcd &psi) {
    check_size(h, 30);
    std::size_t dim = std::size_t{1} << h.num_qubits();
    if (static_cast<std::size_t>(psi.size()) != dim) {
        throw std::invalid_argument("state dimension mismatch");
    }
    const std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Eigen::VectorXcd out = to_double(h.offset()) * psi;
    auto terms = compile(h);
    for (std::size_t c = 0; c < dim; ++c) {
        for (const auto &t : terms) {
            unsigned k = t.y + 2 * (std::popcount(t.z & c) & 1);
            out(c ^ t.x) += t.coeff * phases[k & 3] * psi(c);
        }
    }
    return out;
}

}  // namespace stoq
