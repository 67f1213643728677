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
#include "stoqkit/pauli.hpp"
#include "stoqkit/pauli_sum.hpp"

namespace stoq {
namespace {

using oracle::Complex;

PauliString ps(std::string_view s) {
    return PauliString::from_dense(s);
}

PauliString random_string(std::size_t n, SplitMix64 &rng) {
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<Letter>(rng.below(4)));
    return p;
}

Complex i_pow(unsigned k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k % 4];
}

// ---------------------------------------------------------------- BitVec

TEST(BitVec, LexOrderHasQubitZeroMostSignificant) {
    BitVec a = BitVec::from_string("01"), b = BitVec::from_string("10");
    EXPECT_LT(a, b);
    EXPECT_TRUE(a.get(1));
    EXPECT_EQ(a.to_u64(), 2u);
    EXPECT_EQ(lex_rank_to_bits(1, 2), 2u);
    EXPECT_EQ(lex_rank_to_bits(2, 2), 1u);
}

TEST(BitVec, WideVectors) {
    BitVec v(130);
    v.set(0, true);
    v.set(129, true);
    EXPECT_EQ(v.popcount(), 2u);
    BitVec w = BitVec::from_indices(130, {129, 64});
    EXPECT_EQ((v & w).popcount(), 1u);
    EXPECT_EQ((v ^ w).popcount(), 2u);
    EXPECT_TRUE(dot(v, w));
}

TEST(BitVec, GatherScatter) {
    BitVec v(8);
    scatter_bits(v, {1, 4, 6}, 0b101);
    EXPECT_TRUE(v.get(1));
    EXPECT_FALSE(v.get(4));
    EXPECT_TRUE(v.get(6));
    EXPECT_EQ(gather_bits(v, {6, 1, 4}), 0b011u);
}

// -------------------------------------------------------------- Rational

TEST(Rational, ParseForms) {
    EXPECT_EQ(*parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(*parse_rational("1.25"), Rational(5, 4));
    EXPECT_EQ(*parse_rational("-2.5e-1"), Rational(-1, 4));
    EXPECT_EQ(*parse_rational("7"), Rational(7));
    EXPECT_FALSE(parse_rational("1/0"));
    EXPECT_FALSE(parse_rational("x"));
    EXPECT_FALSE(parse_rational(""));
    EXPECT_EQ(to_string(Rational(-6, 4) + 0), "-3/2");
    EXPECT_EQ(from_double(0.375), Rational(3, 8));
}

// ---------------------------------------------------------------- multiply

TEST(Multiply, Examples) {
    PhasedPauli xy = multiply(ps("X"), ps("Y"));
    EXPECT_EQ(xy.string, ps("Z"));
    EXPECT_EQ(xy.phase, 1u);
    PhasedPauli xxyy = multiply(ps("XX"), ps("YY"));
    EXPECT_EQ(xxyy.string, ps("ZZ"));
    EXPECT_EQ(xxyy.phase, 2u);
    PhasedPauli pi = multiply(ps("XYZI"), ps("IIII"));
    EXPECT_EQ(pi.string, ps("XYZI"));
    EXPECT_EQ(pi.phase, 0u);
}

TEST(Multiply, LengthMismatchThrows) {
    EXPECT_THROW(multiply(ps("X"), ps("XX")), std::invalid_argument);
    EXPECT_THROW(commutes(ps("X"), ps("XX")), std::invalid_argument);
}

TEST(Multiply, MatchesDenseProduct) {
    SplitMix64 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng.below(4);
        PauliString p = random_string(n, rng), q = random_string(n, rng);
        PhasedPauli r = multiply(p, q);
        Eigen::MatrixXcd lhs = oracle::pauli_matrix(p) * oracle::pauli_matrix(q);
        Eigen::MatrixXcd rhs = i_pow(r.phase) * oracle::pauli_matrix(r.string);
        EXPECT_LT((lhs - rhs).norm(), 1e-12) << p.to_dense_string() << " " << q.to_dense_string();
    }
}

TEST(Multiply, AssociativeOnBasisStates) {
    SplitMix64 rng(2);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng.below(10);
        PhasedPauli p{random_string(n, rng), 0}, q{random_string(n, rng), 0}, r{random_string(n, rng), 0};
        PhasedPauli a = multiply(multiply(p, q), r), b = multiply(p, multiply(q, r));
        ASSERT_EQ(a, b);
        BitVec x = BitVec::from_u64(n, rng.below(uint64_t{1} << n));
        auto [ya, ka] = apply_letters(a.string, x);
        // Apply r, then q, then p letter by letter.
        auto [y1, k1] = apply_letters(r.string, x);
        auto [y2, k2] = apply_letters(q.string, y1);
        auto [y3, k3] = apply_letters(p.string, y2);
        EXPECT_EQ(ya, y3);
        EXPECT_EQ((ka + a.phase) % 4, (k1 + k2 + k3) % 4);
    }
}

// ---------------------------------------------------------------- commutes

TEST(Commutes, Examples) {
    EXPECT_FALSE(commutes(ps("X"), ps("Z")));
    EXPECT_TRUE(commutes(ps("XX"), ps("ZZ")));
    EXPECT_FALSE(commutes(ps("XXI"), ps("IYY")));
    EXPECT_TRUE(commutes(ps("XXI"), ps("IXX")));
}

TEST(Commutes, MatchesBasisActionExhaustively) {
    SplitMix64 rng(3);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng.below(10);
        PauliString p = random_string(n, rng), q = random_string(n, rng);
        bool all_agree = true;
        for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
            BitVec x = BitVec::from_u64(n, v);
            auto [a1, ka1] = apply_letters(q, x);
            auto [a2, ka2] = apply_letters(p, a1);
            auto [b1, kb1] = apply_letters(p, x);
            auto [b2, kb2] = apply_letters(q, b1);
            all_agree &= a2 == b2 && (ka1 + ka2) % 4 == (kb1 + kb2) % 4;
        }
        EXPECT_EQ(commutes(p, q), all_agree);
    }
}

// ---------------------------------------------------------- apply_to_basis

TEST(ApplyToBasis, Examples) {
    BasisAction x = apply_to_basis({1, ps("X")}, BitVec::from_string("0"));
    EXPECT_EQ(x.target, BitVec::from_string("1"));
    EXPECT_EQ(x.value(), Complex(1, 0));
    BasisAction y = apply_to_basis({1, ps("Y")}, BitVec::from_string("0"));
    EXPECT_EQ(y.target, BitVec::from_string("1"));
    EXPECT_EQ(y.value(), Complex(0, 1));
    BasisAction z = apply_to_basis({1, ps("Z")}, BitVec::from_string("1"));
    EXPECT_EQ(z.target, BitVec::from_string("1"));
    EXPECT_EQ(z.value(), Complex(-1, 0));
}

TEST(ApplyToBasis, MatchesDenseColumn) {
    SplitMix64 rng(4);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng.below(4);
        PauliTerm term{oracle::small_rational(rng, 3, 2), random_string(n, rng)};
        Eigen::MatrixXcd m = oracle::pauli_matrix(term.string);
        uint64_t col = rng.below(uint64_t{1} << n);
        BasisAction a = apply_to_basis(term, BitVec::from_u64(n, col));
        Complex want = to_double(term.coeff) * m(a.target.to_u64(), col);
        EXPECT_LT(std::abs(a.value() - want), 1e-12);
        EXPECT_EQ(a.is_real(), term.string.is_real());
        if (a.is_real()) {
            EXPECT_EQ(to_double(a.real()), want.real());
        }
    }
}

TEST(PauliString, YCountDecidesReality) {
    EXPECT_TRUE(ps("YY").is_real());
    EXPECT_FALSE(ps("YX").is_real());
    EXPECT_EQ(ps("XYZY").y_count(), 2u);
    EXPECT_EQ(ps("XYZI").weight(), 3u);
    EXPECT_EQ(ps("XIZY").to_sparse_string(), "X0 Z2 Y3");
    EXPECT_EQ(PauliString(3).to_sparse_string(), "I");
}

// ---------------------------------------------------------------- PauliSum

TEST(PauliSum, ProjectorsAndTransitions) {
    PauliSum p0 = PauliSum::projector(1, 0, false), p1 = PauliSum::projector(1, 0, true);
    EXPECT_EQ(p0 + p1, PauliSum::scalar(1, Rational(1)));
    EXPECT_EQ(p0 * p0, p0);
    EXPECT_TRUE((p0 * p1).terms().empty());
    PauliSum up = PauliSum::transition(1, 0, true, false);
    EXPECT_EQ(up + up.adjoint(), PauliSum::letter(1, 0, Letter::X));
    EXPECT_EQ(up * up.adjoint(), p1);
    EXPECT_THROW((up - up.adjoint()).to_hamiltonian(), std::domain_error);
}

}  // namespace
}  // namespace stoq
