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

#include <bit>
#include <cstdlib>

#include "oracle.hpp"
#include "stoqkit/generators.hpp"
#include "stoqkit/linprog.hpp"
#include "stoqkit/reductions.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {
namespace {

Hamiltonian hs(std::size_t n, std::string terms) {
    std::replace(terms.begin(), terms.end(), ';', '\n');
    return parse_hsum("qubits " + std::to_string(n) + "\n" + terms);
}

Hamiltonian triangle_instance() {
    return hs(4, "-1 X0;-1 X0 Z1 Z2;-1 X0 Z2 Z3;-1 X0 Z1 Z3");
}

// m-termwise stoquasticity decided in the value basis over every qubit
// outside S (not just the relevant support): for each flip set S and pair
// representative a, -<a~ y|H|a y> must be a nonnegative combination of
// subcube indicators 1[y_T = z] with |T| <= m - |S|. Diagonal terms must be
// m-local.
bool termwise_oracle(const Hamiltonian &h, std::size_t m) {
    std::size_t n = h.num_qubits();
    for (const auto &t : h.terms()) {
        if (t.string.is_diagonal() && t.string.weight() > m) return false;
    }
    std::set<uint64_t> flips;
    for (const auto &t : h.terms()) {
        if (!t.string.is_diagonal()) flips.insert(t.string.x().to_u64());
    }
    for (uint64_t s : flips) {
        std::size_t size = std::popcount(s);
        if (size > m) return false;
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < n; ++q)
            if (!((s >> q) & 1)) rest.push_back(q);
        std::size_t w = rest.size(), budget = m - size;
        std::vector<std::pair<uint64_t, uint64_t>> gens;  // (T, z) over rest
        for (uint64_t t = 0; t < (uint64_t{1} << w); ++t) {
            if (static_cast<std::size_t>(std::popcount(t)) > budget) continue;
            for (uint64_t z = 0; z < (uint64_t{1} << w); ++z)
                if ((z & ~t) == 0) gens.push_back({t, z});
        }
        uint64_t low = s & (~s + 1);
        for (uint64_t a = 0; a < (uint64_t{1} << n); ++a) {
            if ((a & ~s) || (a & low)) continue;
            RationalMatrix mat(uint64_t{1} << w, std::vector<Rational>(gens.size()));
            std::vector<Rational> b;
            for (uint64_t y = 0; y < (uint64_t{1} << w); ++y) {
                uint64_t col = a;
                for (std::size_t j = 0; j < w; ++j) col |= ((y >> j) & 1) << rest[j];
                b.push_back(-oracle::exact_entry(h, col ^ s, col));
                for (std::size_t g = 0; g < gens.size(); ++g)
                    mat[y][g] = (y & gens[g].first) == gens[g].second ? 1 : 0;
            }
            if (!solve_feasibility(mat, b).feasible) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- linprog

TEST(Linprog, FeasibleAndInfeasible) {
    RationalMatrix a = {{1, 1, 0}, {0, 1, 1}};
    FeasibilityResult r = solve_feasibility(a, {2, 3});
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(check_solution(a, {2, 3}, r.solution));
    FeasibilityResult bad = solve_feasibility({{1, 1}}, {-1});
    ASSERT_FALSE(bad.feasible);
    EXPECT_TRUE(check_farkas({{1, 1}}, {-1}, bad.farkas));
}

TEST(Linprog, CertificatesOnRandomSystems) {
    SplitMix64 rng(11);
    int feasible = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
        RationalMatrix a(rows, std::vector<Rational>(cols));
        std::vector<Rational> b(rows);
        for (auto &row : a)
            for (auto &v : row) v = oracle::small_rational(rng, 2);
        for (auto &v : b) v = oracle::small_rational(rng, 3);
        FeasibilityResult r = solve_feasibility(a, b);
        if (r.feasible) {
            ++feasible;
            EXPECT_TRUE(check_solution(a, b, r.solution));
        } else {
            EXPECT_TRUE(check_farkas(a, b, r.farkas));
        }
    }
    EXPECT_GT(feasible, 20);
    EXPECT_LT(feasible, 180);
}

// --------------------------------------------------------------- maximize

TEST(Maximize, LexSmallestArgmax) {
    ParityPoly p;
    p.width = 3;
    p.coeffs[0b001] = 1;  // maximal when position 0 is 0; positions 1, 2 free
    PolyMax m = maximize(p);
    EXPECT_EQ(m.value, 1);
    EXPECT_EQ(m.argmax, 0u);
    ParityPoly q;
    q.width = 2;
    q.coeffs[0b01] = -1;  // position 0 must be 1
    q.coeffs[0b10] = Rational(1, 2);
    PolyMax n = maximize(q);
    EXPECT_EQ(n.value, Rational(3, 2));
    EXPECT_EQ(n.argmax, 0b01u);
}

// ------------------------------------------------------------ check_global

TEST(CheckGlobal, Examples) {
    EXPECT_EQ(check_global(hs(1, "-1 X0")).status, GlobalStatus::Stoquastic);
    GlobalVerdict v = check_global(hs(2, "1 X0 X1"));
    EXPECT_EQ(v.status, GlobalStatus::NotStoquastic);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->first, BitVec::from_string("00"));
    EXPECT_EQ(v.witness->second, BitVec::from_string("11"));
    EXPECT_EQ(v.witness_value, 1);
    EXPECT_EQ(check_global(triangle_instance()).status, GlobalStatus::Stoquastic);
}

TEST(CheckGlobal, NonRealRejected) {
    EXPECT_THROW(check_global(hs(2, "1 X0 Y1")), NonRealHamiltonian);
    EXPECT_THROW(check_termwise(hs(2, "1 X0 Y1"), 2), NonRealHamiltonian);
}

TEST(CheckGlobal, UndecidedAboveBudget) {
    Hamiltonian h = hs(4, "-1 X0 Z1 Z2 Z3");
    GlobalVerdict v = check_global(h, 2);
    EXPECT_EQ(v.status, GlobalStatus::Undecided);
    ASSERT_TRUE(v.undecided_flip);
    EXPECT_EQ(*v.undecided_flip, BitVec::from_indices(4, {0}));
    EXPECT_FALSE(v.witness);
    EXPECT_EQ(check_global(h).status, GlobalStatus::NotStoquastic);
}

TEST(CheckGlobal, SoundAndCompleteAgainstDense) {
    SplitMix64 rng(12);
    int yes = 0;
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + rng.below(7);
        Hamiltonian h = t % 2 ? random_real_hamiltonian(n, 1 + rng.below(6), 3, rng, 2)
                              : random_local_instance(n, random_supports(n, 3, 2, rng), rng);
        GlobalVerdict v = check_global(h);
        bool truth = oracle::stoquastic(h);
        EXPECT_EQ(v.status == GlobalStatus::Stoquastic, truth) << serialize_hsum(h);
        EXPECT_EQ(v.witness.has_value(), !truth);
        if (v.witness) {
            Rational e = oracle::exact_entry(h, v.witness->first.to_u64(), v.witness->second.to_u64());
            EXPECT_GT(e, 0);
            EXPECT_EQ(e, v.witness_value);
            EXPECT_LE(e, oracle::max_offdiag(h));
        }
        yes += truth;
    }
    EXPECT_GT(yes, 30);
    EXPECT_LT(yes, 120);
}

TEST(CheckGlobal, DeterministicAcrossThreadCounts) {
    SplitMix64 rng(13);
    Hamiltonian h = random_real_hamiltonian(8, 20, 3, rng, 2);
    setenv("STOQKIT_THREADS", "1", 1);
    std::string one = check_global(h).to_json().dump() + check_termwise(h, 4).to_json().dump();
    setenv("STOQKIT_THREADS", "4", 1);
    std::string four = check_global(h).to_json().dump() + check_termwise(h, 4).to_json().dump();
    unsetenv("STOQKIT_THREADS");
    EXPECT_EQ(one, four);
}

// ---------------------------------------------------------- check_termwise

TEST(CheckTermwise, Examples) {
    Hamiltonian chain = hs(4, "-1 X1 X2;-1 X2 X3");
    TermwiseCertificate c = check_termwise(chain, 2);
    ASSERT_TRUE(c.yes);
    ASSERT_EQ(c.generators.size(), 2u);
    for (const auto &g : c.generators) {
        EXPECT_TRUE(g.all_pairs);
        EXPECT_EQ(g.support.popcount(), 0u);
        std::string want = g.flip == BitVec::from_indices(4, {1, 2}) ? "-1 X1 X2" : "-1 X2 X3";
        EXPECT_EQ(serialize_hsum(g.to_hamiltonian()), serialize_hsum(hs(4, want)));
    }
    EXPECT_EQ(c.reconstruct(4), chain);

    TermwiseCertificate t3 = check_termwise(triangle_instance(), 3);
    EXPECT_FALSE(t3.yes);
    ASSERT_TRUE(t3.failing_flip);
    EXPECT_EQ(*t3.failing_flip, BitVec::from_indices(4, {0}));
    TermwiseCertificate t4 = check_termwise(triangle_instance(), 4);
    ASSERT_TRUE(t4.yes);
    EXPECT_EQ(t4.reconstruct(4), triangle_instance());
}

TEST(CheckTermwise, SmallMRejectsLargeFlips) {
    TermwiseCertificate c = check_termwise(hs(3, "-1 X0 X1 X2"), 2);
    EXPECT_FALSE(c.yes);
    EXPECT_EQ(c.reason, "flip set larger than m");
    EXPECT_TRUE(check_termwise(hs(3, "-1 X0 X1 X2"), 3).yes);
}

TEST(CheckTermwise, FarkasCertificateOnNo) {
    TermwiseCertificate c = check_termwise(triangle_instance(), 3, {.force_lp = true});
    EXPECT_FALSE(c.yes);
    EXPECT_FALSE(c.farkas.empty());
}

TEST(CheckTermwise, MatchesValueBasisOracle) {
    SplitMix64 rng(14);
    int yes = 0, total = 0;
    for (int t = 0; t < 80; ++t) {
        std::size_t n = 2 + rng.below(3);
        Hamiltonian h = t % 2 ? random_real_hamiltonian(n, 1 + rng.below(5), 3, rng, 2)
                              : random_local_instance(n, random_supports(n, 3, 2, rng), rng);
        for (std::size_t m = 1; m <= n; ++m) {
            TermwiseCertificate c = check_termwise(h, m);
            EXPECT_EQ(c.yes, termwise_oracle(h, m)) << serialize_hsum(h) << " m=" << m;
            EXPECT_EQ(check_termwise(h, m, {.force_lp = true}).yes, c.yes);
            yes += c.yes;
            ++total;
        }
    }
    EXPECT_GT(yes, 20);
    EXPECT_LT(yes, total - 20);
}

TEST(CheckTermwise, CertificateProperties) {
    SplitMix64 rng(15);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng.below(6);
        Hamiltonian h = random_local_instance(n, random_supports(n, 3, 2, rng), rng);
        bool prev = false;
        for (std::size_t m = 1; m <= 7; ++m) {
            TermwiseCertificate c = check_termwise(h, m);
            EXPECT_TRUE(!prev || c.yes) << "monotonicity at m=" << m;
            prev = c.yes;
            if (!c.yes) continue;
            EXPECT_EQ(check_global(h).status, GlobalStatus::Stoquastic);
            EXPECT_EQ(c.reconstruct(n), h);
            for (const auto &g : c.generators) {
                EXPECT_GE(g.weight, 0);
                Hamiltonian piece = g.to_hamiltonian();
                EXPECT_LE(piece.locality(), m);
                EXPECT_TRUE(oracle::stoquastic(piece));
            }
        }
    }
}

TEST(CheckTermwise, TwoLocalEquivalence) {
    SplitMix64 rng(16);
    int yes = 0;
    for (int t = 0; t < 120; ++t) {
        std::size_t n = 2 + rng.below(7);
        Hamiltonian h = random_local_instance(n, random_supports(n, 2, 1 + rng.below(n), rng), rng);
        bool global = check_global(h).status == GlobalStatus::Stoquastic;
        EXPECT_EQ(global, check_termwise(h, 2).yes) << serialize_hsum(h);
        yes += global;
    }
    EXPECT_GT(yes, 0);
    EXPECT_LT(yes, 120);
}

TEST(CheckTermwise, NonLocalDiagonalTermIsNo) {
    TermwiseCertificate c = check_termwise(hs(3, "1 Z0 Z1 Z2;-1 X0"), 2);
    EXPECT_FALSE(c.yes);
    EXPECT_TRUE(check_termwise(hs(3, "1 Z0 Z1 Z2;-1 X0"), 3).yes);
}

TEST(CheckTermwise, JsonShape) {
    nlohmann::json j = check_termwise(triangle_instance(), 4).to_json();
    EXPECT_EQ(j["verdict"], "YES");
    EXPECT_TRUE(j.contains("generators"));
    nlohmann::json g = check_global(hs(2, "1 X0 X1")).to_json();
    EXPECT_EQ(g["status"], "NotStoquastic");
}

}  // namespace
}  // namespace stoq
