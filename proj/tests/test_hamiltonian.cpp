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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "stoqkit/dense.hpp"
#include "stoqkit/flip_group.hpp"
#include "stoqkit/generators.hpp"
#include "stoqkit/hamiltonian.hpp"
#include "stoqkit/reductions.hpp"

namespace stoq {
namespace {

Hamiltonian hs(const std::string &text) {
    return parse_hsum(text);
}

ParseError::Kind parse_kind(const std::string &text) {
    try {
        parse_hsum(text);
    } catch (const ParseError &e) {
        return e.kind;
    }
    ADD_FAILURE() << "accepted: " << text;
    return ParseError::Kind::Malformed;
}

// ------------------------------------------------------------------- HSUM

TEST(Hsum, Examples) {
    Hamiltonian h = hs("qubits 2\n-1 X0 X1\n");
    ASSERT_EQ(h.terms().size(), 1u);
    EXPECT_EQ(h.coefficient(PauliString::from_dense("XX")), -1);
    Hamiltonian merged = hs("qubits 1\n1/3 Z0\n1/6 Z0\n");
    ASSERT_EQ(merged.terms().size(), 1u);
    EXPECT_EQ(merged.terms()[0].coeff, Rational(1, 2));
    EXPECT_EQ(parse_kind("qubits 2\n1 X0 X0\n"), ParseError::Kind::RepeatedIndex);
}

TEST(Hsum, Errors) {
    EXPECT_EQ(parse_kind("1 X0\n"), ParseError::Kind::MissingHeader);
    EXPECT_EQ(parse_kind("qubits 2\n1 X2\n"), ParseError::Kind::QubitOutOfRange);
    EXPECT_EQ(parse_kind("qubits 2\n1 W0\n"), ParseError::Kind::Malformed);
    EXPECT_EQ(parse_kind("qubits 2\n1/0 X0\n"), ParseError::Kind::Malformed);
    EXPECT_EQ(parse_kind("qubits 2\n1i X0\n"), ParseError::Kind::NonRealCoefficient);
    try {
        parse_hsum("# c\nqubits 2\n1 X0\n1 Q1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 4u);
    }
}

TEST(Hsum, IdentityCommentsAndCancellation) {
    Hamiltonian h = hs("# comment\nqubits 2\n3/2 I\n1 Z0\n-1 Z0\n0 X1\n");
    EXPECT_TRUE(h.terms().empty());
    EXPECT_EQ(h.offset(), Rational(3, 2));
    EXPECT_EQ(h.num_qubits(), 2u);
}

TEST(Hsum, RoundTripRandom) {
    SplitMix64 rng(5);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.below(8);
        Hamiltonian h = oracle::random_hamiltonian(n, 1 + rng.below(8), 3, rng);
        h.add(oracle::small_rational(rng, 5, 3), PauliString(n));
        Hamiltonian back = parse_hsum(serialize_hsum(h));
        EXPECT_EQ(back, h);
    }
}

TEST(Hamiltonian, LocalityDegreeAndReality) {
    Hamiltonian h = hs("qubits 4\n1 X0 Z1\n1 Z1 Z2 Z3\n2 Y0 Y3\n1 I\n");
    EXPECT_EQ(h.locality(), 3u);
    EXPECT_EQ(h.max_degree(), 2u);
    EXPECT_TRUE(h.is_real());
    EXPECT_FALSE(h.is_diagonal());
    Hamiltonian y(1);
    y.add(1, PauliString::from_dense("Y"));
    EXPECT_FALSE(y.is_real());
    EXPECT_THROW(y.require_real(), NonRealHamiltonian);
    EXPECT_THROW(matrix_entry(y, BitVec::from_string("0"), BitVec::from_string("1")), NonRealHamiltonian);
}

// ----------------------------------------------------------- flip groups

TEST(FlipGroups, Examples) {
    // -X1 (I + Z2) on three qubits; qubit 0 idle.
    auto groups = flip_groups(hs("qubits 3\n-1 X1\n-1 X1 Z2\n"));
    ASSERT_EQ(groups.size(), 1u);
    const FlipGroup &g = groups.begin()->second;
    EXPECT_EQ(g.flip, BitVec::from_indices(3, {1}));
    ASSERT_EQ(g.free_qubits, std::vector<std::size_t>{2});
    EXPECT_EQ(g.entry(0, 0), -2);
    EXPECT_EQ(g.entry(0, 1), 0);

    auto diag = flip_groups(hs("qubits 2\n1 Z0 Z1\n"));
    ASSERT_EQ(diag.size(), 1u);
    EXPECT_TRUE(diag.begin()->second.is_diagonal());

    IsingInstance tri;
    tri.num_vertices = 3;
    tri.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    auto prop1 = flip_groups(gen_prop1(tri).h);
    ASSERT_EQ(prop1.size(), 1u);
    const FlipGroup &p = prop1.begin()->second;
    EXPECT_EQ(p.flip, BitVec::from_indices(4, {0}));
    for (uint64_t y = 0; y < 8; ++y) {
        EXPECT_EQ(p.entry(0, y), -1 - tri.energy(y));
    }
}

TEST(FlipGroups, PartitionAndSymmetry) {
    SplitMix64 rng(6);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(6);
        Hamiltonian h = random_real_hamiltonian(n, 1 + rng.below(8), 3, rng);
        auto groups = flip_groups(h);
        EXPECT_LE(groups.size(), h.terms().size() + 1);
        std::size_t dim = std::size_t{1} << n;
        for (const auto &[mask, g] : groups) {
            for (uint64_t k = 0; k < g.num_representatives(); ++k) {
                uint64_t a = g.representative(k);
                ParityPoly f = g.entry_poly(a), fc = g.entry_poly(g.complement(a));
                for (uint64_t y = 0; y < (uint64_t{1} << g.free_qubits.size()); ++y) {
                    EXPECT_EQ(f.eval(y), fc.eval(y));
                    EXPECT_EQ(f.eval(y), g.entry(a, y));
                }
            }
        }
        // Every entry is owned by the group of x XOR y, read through entry().
        for (uint64_t r = 0; r < dim; ++r) {
            for (uint64_t c = 0; c < dim; ++c) {
                BitVec x = BitVec::from_u64(n, r), y = BitVec::from_u64(n, c);
                auto it = groups.find(x ^ y);
                Rational want = oracle::exact_entry(h, r, c);
                if (it == groups.end()) {
                    EXPECT_EQ(want, 0);
                    continue;
                }
                const FlipGroup &g = it->second;
                uint64_t a = gather_bits(y, g.flip_qubits);
                uint64_t free = gather_bits(y, g.free_qubits);
                EXPECT_EQ(g.entry(a, free), want) << serialize_hsum(h) << r << " " << c;
            }
        }
    }
}

// ---------------------------------------------------------- matrix_entry

TEST(MatrixEntry, ConpInstanceEntry) {
    // Entry between x'0 and x'1 is (K + eps) minus the Ising energy of x'.
    IsingInstance g;
    g.num_vertices = 3;
    g.edges = {{0, 1, 1}, {1, 2, -1}};
    g.unit_fields = true;
    Rational k = -1, eps(1, 2);
    Hamiltonian h = gen_conp(g, k, eps);
    for (uint64_t xp = 0; xp < 8; ++xp) {
        BitVec a = BitVec::from_u64(4, xp), b = BitVec::from_u64(4, xp | 8);
        EXPECT_EQ(matrix_entry(h, a, b), k + eps - g.energy(xp));
    }
}

TEST(MatrixEntry, DiagonalAndUnrelatedEntries) {
    Hamiltonian h = hs("qubits 3\n2 Z0\n-1 Z1 Z2\n1/2 I\n1 X0 X1\n");
    BitVec x = BitVec::from_string("101");
    EXPECT_EQ(matrix_entry(h, x, x), Rational(-2) + 1 + Rational(1, 2));
    EXPECT_EQ(matrix_entry(h, x, BitVec::from_string("100")), 0);
    EXPECT_EQ(matrix_entry(h, x, BitVec::from_string("011")), 1);
}

TEST(MatrixEntry, MatchesKroneckerOracle) {
    SplitMix64 rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(6);
        Hamiltonian h = random_real_hamiltonian(n, 1 + rng.below(10), 4, rng);
        Eigen::MatrixXcd m = oracle::matrix(h);
        Eigen::MatrixXd d = dense_matrix(h);
        for (int s = 0; s < 40; ++s) {
            uint64_t r = rng.below(uint64_t{1} << n), c = rng.below(uint64_t{1} << n);
            Rational e = matrix_entry(h, BitVec::from_u64(n, r), BitVec::from_u64(n, c));
            EXPECT_EQ(e, oracle::exact_entry(h, r, c));
            EXPECT_NEAR(to_double(e), m(r, c).real(), 1e-12);
            EXPECT_NEAR(to_double(e), d(r, c), 1e-12);
        }
    }
}

// ----------------------------------------------------------------- dense

TEST(Dense, Examples) {
    Eigen::VectorXd a = spectrum(hs("qubits 1\n-1 X0\n"));
    EXPECT_NEAR(a(0), -1, 1e-12);
    EXPECT_NEAR(a(1), 1, 1e-12);
    Eigen::VectorXd b = spectrum(hs("qubits 2\n1 Z0 Z1\n"));
    std::vector<double> want = {-1, -1, 1, 1};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(b(i), want[i], 1e-12);
    IsingInstance tri;
    tri.num_vertices = 3;
    tri.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    EXPECT_NEAR(spectrum(tri.hamiltonian(3))(0), -1, 1e-12);
    EXPECT_THROW(dense_matrix(Hamiltonian(15)), BudgetExceeded);
}

TEST(Dense, ApplyMatchesMatrix) {
    SplitMix64 rng(8);
    Hamiltonian h = random_real_hamiltonian(4, 8, 3, rng);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Random(16);
    Eigen::VectorXcd want = oracle::matrix(h) * psi;
    EXPECT_LT((apply_hamiltonian(h, psi) - want).norm(), 1e-12);
}

// ----------------------------------------------------------- conjugation

TEST(Hadamard, Examples) {
    Hamiltonian x = hs("qubits 1\n1 X0\n");
    EXPECT_EQ(conjugate_hadamard(x, BitVec::from_string("1")), hs("qubits 1\n1 Z0\n"));
    Hamiltonian h = hs("qubits 3\n1 X0 Y1\n-1 Y1 Y2\n2 Z2\n");
    EXPECT_EQ(conjugate_hadamard(h, BitVec(3)), h);
    EXPECT_EQ(conjugate_hadamard(hs("qubits 2\n1 Y0 Y1\n"), BitVec::from_string("10")),
              hs("qubits 2\n-1 Y0 Y1\n"));
}

TEST(Hadamard, ClauseOperatorOfTheExampleFormula) {
    // (X1 + I) |0><0|_4 under a Hadamard on qubit 1 becomes (Z1 + I) |0><0|_4.
    Hamiltonian h = hs("qubits 5\n1/2 X1\n1/2 X1 Z4\n1/2 I\n1/2 Z4\n");
    Hamiltonian want = hs("qubits 5\n1/2 Z1\n1/2 Z1 Z4\n1/2 I\n1/2 Z4\n");
    EXPECT_EQ(conjugate_hadamard(h, BitVec::from_indices(5, {1})), want);
}

TEST(Hadamard, InvolutionAndSpectrum) {
    SplitMix64 rng(9);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(7);
        Hamiltonian h = random_real_hamiltonian(n, 1 + rng.below(10), 3, rng);
        BitVec mask = BitVec::from_u64(n, rng.below(uint64_t{1} << n));
        Hamiltonian c = conjugate_hadamard(h, mask);
        EXPECT_EQ(conjugate_hadamard(c, mask), h);
        EXPECT_LT(oracle::spectrum_distance(h, c), 1e-9);
    }
}

TEST(Clifford, Examples) {
    CliffordTableau swap(1);
    swap.set_x_image(0, {PauliString::from_dense("Z"), false});
    swap.set_z_image(0, {PauliString::from_dense("X"), false});
    EXPECT_EQ(conjugate_clifford(hs("qubits 1\n-1 X0\n"), swap), hs("qubits 1\n-1 Z0\n"));
    Hamiltonian h = hs("qubits 3\n1 X0 Y1\n-1 Y1 Y2\n2 Z2\n1 I\n");
    EXPECT_EQ(conjugate_clifford(h, CliffordTableau(3)), h);
    CliffordTableau broken(1);
    broken.set_z_image(0, {PauliString::from_dense("X"), false});
    EXPECT_THROW(conjugate_clifford(hs("qubits 1\n1 X0\n"), broken), InvalidTableau);
}

TEST(Clifford, RandomTableauxPreserveSpectrumAndMatchDense) {
    SplitMix64 rng(10);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng.below(5);
        Hamiltonian h = random_real_hamiltonian(n, 1 + rng.below(8), 3, rng);
        CliffordTableau c = oracle::random_clifford(n, rng);
        ASSERT_TRUE(c.is_valid());
        Hamiltonian g = conjugate_clifford(h, c);
        EXPECT_LT(oracle::spectrum_distance(h, g), 1e-9);
    }
}

TEST(Embed, ShiftsQubits) {
    Hamiltonian h = hs("qubits 2\n1 X0 Z1\n1/2 I\n");
    Hamiltonian e = embed(h, 5, 2);
    EXPECT_EQ(e, hs("qubits 5\n1 X2 Z3\n1/2 I\n"));
    EXPECT_THROW(embed(h, 3, 2), std::invalid_argument);
}

TEST(Json, MirrorsHsum) {
    Hamiltonian h = hs("qubits 2\n-1/2 X0 X1\n1 I\n");
    h.name = "pair";
    nlohmann::json j = to_json(h);
    EXPECT_EQ(j["qubits"], 2);
    EXPECT_EQ(j["name"], "pair");
}

}  // namespace
}  // namespace stoq
