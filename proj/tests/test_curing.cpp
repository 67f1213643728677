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

#include <array>
#include <set>

#include "oracle.hpp"
#include "stoqkit/curing.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {
namespace {

using Mat3 = std::array<std::array<int, 3>, 3>;

Mat3 to_mat(const SignedPermutation &s) {
    Mat3 m{};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            m[r][c] = s.entry(r, c);
        }
    }
    return m;
}

Mat3 mul(const Mat3 &a, const Mat3 &b) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

XyzChain chain_of(std::vector<XyzCoupling> couplings, Boundary b = Boundary::Open) {
    XyzChain c;
    c.boundary = b;
    c.n = b == Boundary::Open ? couplings.size() + 1 : couplings.size();
    c.couplings = std::move(couplings);
    return c;
}

XyzChain h123() {
    return chain_of({{2, 0, 1}, {1, 3, 2}});
}

XyzChain random_chain(std::size_t n, Boundary b, SplitMix64 &rng, int range = 2) {
    XyzChain c;
    c.n = n;
    c.boundary = b;
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
        c.couplings.push_back({oracle::small_rational(rng, range), oracle::small_rational(rng, range),
                               oracle::small_rational(rng, range)});
    }
    return c;
}

// Hadamard on the masked qubits as an explicit Kronecker product.
Eigen::MatrixXcd hadamard_layer(std::size_t n, uint64_t mask) {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
        Eigen::Matrix2cd f = ((mask >> q) & 1) ? h : Eigen::Matrix2cd::Identity();
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = f(a, b) * m;
        m = next;
    }
    return m;
}

bool dense_stoquastic(const Eigen::MatrixXcd &m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (r != c && m(r, c).real() > 1e-9) return false;
    return true;
}

// Smallest curing mask by explicit dense conjugation, in the lexicographic
// order with qubit 0 most significant.
std::optional<uint64_t> dense_mask_search(const Hamiltonian &h) {
    std::size_t n = h.num_qubits();
    Eigen::MatrixXcd m = oracle::matrix(h);
    for (uint64_t rank = 0; rank < (uint64_t{1} << n); ++rank) {
        uint64_t mask = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if ((rank >> (n - 1 - q)) & 1) mask |= uint64_t{1} << q;
        }
        Eigen::MatrixXcd u = hadamard_layer(n, mask);
        if (dense_stoquastic(u * m * u.adjoint())) return mask;
    }
    return std::nullopt;
}

TEST(SignedPermutation, GroupOfOrder24) {
    const auto &g = SignedPermutation::all();
    ASSERT_EQ(g.size(), 24u);
    EXPECT_EQ(to_mat(g[0]), (Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
    std::set<Mat3> seen;
    for (const auto &s : g) {
        Mat3 m = to_mat(s);
        int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        EXPECT_EQ(det, 1);
        EXPECT_EQ(s.determinant(), 1);
        seen.insert(m);
    }
    EXPECT_EQ(seen.size(), 24u);
    for (const auto &a : g)
        for (const auto &b : g) EXPECT_TRUE(seen.count(mul(to_mat(a), to_mat(b))));
}

TEST(SignedPermutation, TransformMatchesMatrixProduct) {
    SplitMix64 rng(11);
    const auto &g = SignedPermutation::all();
    for (int trial = 0; trial < 400; ++trial) {
        XyzCoupling c{oracle::small_rational(rng, 3), oracle::small_rational(rng, 3), oracle::small_rational(rng, 3)};
        const auto &l = g[rng.below(24)];
        const auto &r = g[rng.below(24)];
        Mat3 lm = to_mat(l), rm = to_mat(r);
        Rational d[3] = {c.xx, c.yy, c.zz};
        Rational out[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int a = 0; a < 3; ++a) out[i][j] += lm[i][a] * d[a] * rm[j][a];
        bool diagonal = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && sgn(out[i][j]) != 0) diagonal = false;
        auto t = transform_coupling(c, l, r);
        ASSERT_EQ(t.has_value(), diagonal);
        if (t) {
            EXPECT_EQ(t->xx, out[0][0]);
            EXPECT_EQ(t->yy, out[1][1]);
            EXPECT_EQ(t->zz, out[2][2]);
        }
    }
}

TEST(SignedPermutation, SiteCliffordRealizesTransform) {
    // Conjugating one edge term by the two site Cliffords gives the
    // transformed coupling.
    const auto &g = SignedPermutation::all();
    XyzChain c = chain_of({{2, -1, 3}});
    for (std::size_t p = 0; p < 24; ++p) {
        for (std::size_t q = 0; q < 24; ++q) {
            auto t = transform_coupling(c.couplings[0], g[p], g[q]);
            if (!t) continue;
            CliffordTableau tab(2);
            auto [x0, z0] = g[p].images(2, 0);
            auto [x1, z1] = g[q].images(2, 1);
            tab.set_x_image(0, x0);
            tab.set_z_image(0, z0);
            tab.set_x_image(1, x1);
            tab.set_z_image(1, z1);
            ASSERT_TRUE(tab.is_valid());
            EXPECT_EQ(conjugate_clifford(c.to_hamiltonian(), tab), chain_of({*t}).to_hamiltonian());
        }
    }
}

TEST(HadamardMask, AlreadyStoquasticGivesZeroMask) {
    Hamiltonian h(3);
    h.add(-1, PauliString::from_dense("XXI"));
    h.add(2, PauliString::from_dense("ZIZ"));
    auto m = search_hadamard_mask(h);
    ASSERT_TRUE(m);
    EXPECT_TRUE(m->none());
}

TEST(HadamardMask, XXPlusZZHasNoMask) {
    Hamiltonian h(2);
    h.add(1, PauliString::from_dense("XX"));
    h.add(1, PauliString::from_dense("ZZ"));
    EXPECT_FALSE(search_hadamard_mask(h));
    EXPECT_FALSE(dense_mask_search(h));
}

TEST(HadamardMask, ControlQubitHadamardCuresCoNPInstance) {
    // (K + 1/2) X_2 - Z_0 Z_1 X_2 - Z_0 X_2 - Z_1 X_2 with K = -1.
    Hamiltonian h(3);
    h.add(Rational(-1, 2), PauliString::from_dense("IIX"));
    h.add(-1, PauliString::from_dense("ZZX"));
    h.add(-1, PauliString::from_dense("ZIX"));
    h.add(-1, PauliString::from_dense("IZX"));
    ASSERT_EQ(check_global(h).status, GlobalStatus::NotStoquastic);
    auto m = search_hadamard_mask(h);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->to_string(), "001");
    EXPECT_TRUE(conjugate_hadamard(h, *m).is_diagonal());
}

TEST(HadamardMask, MatchesDenseSearch) {
    SplitMix64 rng(2024);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng.below(3);
        Hamiltonian h = oracle::random_hamiltonian(n, 2 + rng.below(4), 2, rng);
        auto got = search_hadamard_mask(h);
        auto want = dense_mask_search(h);
        ASSERT_EQ(got.has_value(), want.has_value()) << serialize_hsum(h);
        if (got) {
            ++found;
            EXPECT_EQ(got->to_u64(), *want) << serialize_hsum(h);
            EXPECT_EQ(check_global(conjugate_hadamard(h, *got)).status, GlobalStatus::Stoquastic);
        }
    }
    EXPECT_GT(found, 5);
}

TEST(HadamardMask, GroupedSearchAppliesWholeGroups) {
    Hamiltonian h(2);
    h.add(1, PauliString::from_dense("XX"));
    h.add(-1, PauliString::from_dense("ZI"));
    // Single-qubit masks: H on qubit 1 gives X0 Z1, still positive somewhere;
    // H on both turns XX into ZZ.
    auto m = search_hadamard_mask_grouped(h, {{0, 1}});
    ASSERT_TRUE(m);
    EXPECT_EQ(m->to_string(), "11");
}

TEST(HadamardMask, BudgetExceeded) {
    Hamiltonian h(5);
    EXPECT_THROW(search_hadamard_mask(h, 4), BudgetExceeded);
}

TEST(XyzSingleQubit, FerromagnetIdentity) {
    XyzChain c = chain_of({{-1, -1, -1}, {-1, -1, -1}, {-1, -1, -1}});
    auto cure = search_xyz_single_qubit(c);
    ASSERT_TRUE(cure);
    EXPECT_EQ(cure->assignment, std::vector<std::size_t>(4, 0));
    EXPECT_EQ(cure->transformed, c.to_hamiltonian());
}

TEST(XyzSingleQubit, AntiferromagnetAlternatingZFlips) {
    XyzChain c = chain_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    // diag(-1,-1,1) on odd sites, computed with explicit matrices.
    Mat3 flip{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
    Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (std::size_t e = 0; e + 1 < c.n; ++e) {
        Mat3 l = e % 2 ? flip : id;
        Mat3 r = e % 2 ? id : flip;
        Mat3 beta{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        Mat3 rt{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rt[i][j] = r[j][i];
        Mat3 t = mul(mul(l, beta), rt);
        EXPECT_EQ(t, (Mat3{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}));
        EXPECT_TRUE(satisfies_curing_criterion({t[0][0], t[1][1], t[2][2]}));
    }
    auto cure = search_xyz_single_qubit(c);
    ASSERT_TRUE(cure);
    for (const auto &t : cure->transformed_couplings) {
        EXPECT_TRUE(satisfies_curing_criterion(t));
    }
    EXPECT_TRUE(oracle::stoquastic(cure->transformed));
    EXPECT_LT(oracle::spectrum_distance(cure->transformed, c.to_hamiltonian()), 1e-9);
}

TEST(XyzSingleQubit, H123HasNoSignedPermutationCure) {
    XyzChain c = h123();
    EXPECT_FALSE(search_xyz_single_qubit(c));
    EXPECT_FALSE(brute_force_xyz_single_qubit(c));
    // Exhaustive over all 24^3 assignments without pruning.
    const auto &g = SignedPermutation::all();
    int cured = 0;
    for (std::size_t a = 0; a < 24; ++a)
        for (std::size_t b = 0; b < 24; ++b)
            for (std::size_t d = 0; d < 24; ++d) {
                auto t1 = transform_coupling(c.couplings[0], g[a], g[b]);
                auto t2 = transform_coupling(c.couplings[1], g[b], g[d]);
                cured += t1 && t2 && satisfies_curing_criterion(*t1) && satisfies_curing_criterion(*t2);
            }
    EXPECT_EQ(cured, 0);
}

TEST(XyzSingleQubit, DynamicProgramMatchesBruteForce) {
    SplitMix64 rng(77);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Boundary b = trial % 3 == 0 ? Boundary::Closed : Boundary::Open;
        std::size_t n = (b == Boundary::Closed ? 3 : 2) + rng.below(b == Boundary::Closed ? 6 : 7);
        XyzChain c = random_chain(n, b, rng);
        auto dp = search_xyz_single_qubit(c);
        auto bf = brute_force_xyz_single_qubit(c);
        ASSERT_EQ(dp.has_value(), bf.has_value()) << serialize_chain(c);
        if (dp) {
            ++yes;
            EXPECT_EQ(dp->assignment, *bf);
            EXPECT_EQ(check_global(dp->transformed).status, GlobalStatus::Stoquastic);
        } else {
            ++no;
        }
    }
    EXPECT_GT(yes, 10);
    EXPECT_GT(no, 10);
}

TEST(XyzSingleQubit, ClosedChainClosesConsistently) {
    // Odd antiferromagnetic ring: alternating flips cannot close, but a
    // different assignment may; whatever is returned must satisfy the
    // closing edge.
    XyzChain c = chain_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, Boundary::Closed);
    auto dp = search_xyz_single_qubit(c);
    auto bf = brute_force_xyz_single_qubit(c);
    ASSERT_EQ(dp.has_value(), bf.has_value());
    if (dp) {
        EXPECT_TRUE(oracle::stoquastic(dp->transformed));
    }
}

TEST(ValidateImages, IdentityMapValid) {
    GeneratorImageMap m{2, {}};
    for (std::size_t q = 0; q < 2; ++q) {
        for (Letter l : {Letter::X, Letter::Z}) {
            auto p = PauliString::single(2, q, l);
            m.entries.push_back({p, {p, false}});
        }
    }
    EXPECT_TRUE(validate_images(m));
    EXPECT_EQ(complete_tableau(m), CliffordTableau(2));
}

TEST(ValidateImages, CollapsingMapRejected) {
    GeneratorImageMap m{1, {}};
    m.entries.push_back({PauliString::from_dense("X"), {PauliString::from_dense("Z"), false}});
    m.entries.push_back({PauliString::from_dense("Z"), {PauliString::from_dense("Z"), false}});
    auto v = validate_images(m);
    EXPECT_FALSE(v);
    ASSERT_TRUE(v.violated);
    EXPECT_EQ(*v.violated, std::make_pair(std::size_t{0}, std::size_t{1}));
    EXPECT_THROW(complete_tableau(m), InvalidTableau);
}

TEST(ValidateImages, ProductSignChecked) {
    GeneratorImageMap m{2, {}};
    m.entries.push_back({PauliString::from_dense("XX"), {PauliString::from_dense("ZI"), false}});
    m.entries.push_back({PauliString::from_dense("YY"), {PauliString::from_dense("ZZ"), false}});
    // ZZ = -XX YY, so its image must be -(Z0)(Z0 Z1) = -Z1.
    m.entries.push_back({PauliString::from_dense("ZZ"), {PauliString::from_dense("IZ"), true}});
    EXPECT_TRUE(validate_images(m));
    m.entries.back().image.negative = false;
    auto v = validate_images(m);
    EXPECT_FALSE(v);
    EXPECT_EQ(v.violated->second, 2u);
}

TEST(ValidateImages, DependentImagesRejected) {
    GeneratorImageMap m{2, {}};
    m.entries.push_back({PauliString::from_dense("ZI"), {PauliString::from_dense("ZI"), false}});
    m.entries.push_back({PauliString::from_dense("IZ"), {PauliString::from_dense("ZI"), false}});
    EXPECT_FALSE(validate_images(m));
}

TEST(CompleteTableau, HadamardFromSwap) {
    GeneratorImageMap m{1, {}};
    m.entries.push_back({PauliString::from_dense("X"), {PauliString::from_dense("Z"), false}});
    m.entries.push_back({PauliString::from_dense("Z"), {PauliString::from_dense("X"), false}});
    EXPECT_EQ(complete_tableau(m), CliffordTableau::hadamards(BitVec::from_string("1")));
}

TEST(CompleteTableau, ReproducesRandomCliffordOnSubsets) {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + rng.below(5);
        CliffordTableau u = oracle::random_clifford(n, rng);
        ASSERT_TRUE(u.is_valid());
        GeneratorImageMap m{n, {}};
        std::size_t k = rng.below(2 * n + 3);
        for (std::size_t j = 0; j < k; ++j) {
            PauliString p(n);
            for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<Letter>(rng.below(4)));
            m.entries.push_back({p, to_signed(u.apply(p))});
        }
        ASSERT_TRUE(validate_images(m));
        CliffordTableau c = complete_tableau(m);
        EXPECT_TRUE(c.is_valid());
        for (const auto &e : m.entries) {
            EXPECT_EQ(c.apply(e.source), e.image.phased());
        }
    }
}

TEST(CompleteTableau, RandomCliffordMatchesDenseConjugation) {
    // The oracle's gate-by-gate tableau agrees with explicit matrices, which
    // makes the previous test meaningful.
    SplitMix64 rng(6);
    Eigen::Matrix2cd hm, sm;
    hm << 1, 1, 1, -1;
    hm /= std::sqrt(2.0);
    sm << 1, 0, 0, oracle::Complex(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 1 + rng.below(3);
        SplitMix64 copy = rng;
        CliffordTableau t = oracle::random_clifford(n, rng, 12);
        Hamiltonian h = oracle::random_hamiltonian(n, 3, n, copy);
        Hamiltonian ht = conjugate_clifford(h, t);
        EXPECT_LT(oracle::spectrum_distance(h, ht), 1e-9);
    }
}

TEST(CureXyzClifford, H123Succeeds) {
    XyzChain c = h123();
    CliffordCure cure = cure_xyz_clifford(c);
    EXPECT_TRUE(validate_images(cure.map));
    EXPECT_TRUE(cure.certificate.yes);
    EXPECT_EQ(check_termwise(cure.transformed, 4).yes, true);
    EXPECT_TRUE(oracle::stoquastic(cure.transformed));
    auto a = oracle::sorted_spectrum(c.to_hamiltonian());
    auto b = oracle::sorted_spectrum(cure.transformed);
    ASSERT_EQ(a.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
}

TEST(CureXyzClifford, IneligibleChainRejected) {
    XyzChain c = chain_of({{1, 1, -1}, {1, 1, -1}, {1, 1, 1}});
    EXPECT_THROW(cure_xyz_clifford(c), NotApplicable);
}

TEST(CureXyzClifford, ClosedChainRejected) {
    XyzChain c = chain_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, Boundary::Closed);
    EXPECT_THROW(cure_xyz_clifford(c), NotApplicable);
}

TEST(CureXyzClifford, DiagonalChainIdentity) {
    XyzChain c = chain_of({{0, 0, 1}, {0, 0, -2}, {0, 0, 3}});
    CliffordCure cure = cure_xyz_clifford(c);
    EXPECT_TRUE(cure.identity);
    EXPECT_EQ(cure.tableau, CliffordTableau(4));
    EXPECT_EQ(cure.transformed, c.to_hamiltonian());
}

TEST(CureXyzClifford, SixSiteTableValidates) {
    XyzChain c = chain_of({{1, 2, 3}, {2, 1, 1}, {1, 1, 1}, {-3, 1, -2}, {1, 2, -1}});
    CliffordCure cure = cure_xyz_clifford(c);
    EXPECT_FALSE(cure.identity);
    EXPECT_TRUE(validate_images(cure.map));
    // Every pair of images checked independently.
    for (std::size_t i = 0; i < cure.map.entries.size(); ++i) {
        for (std::size_t j = 0; j < cure.map.entries.size(); ++j) {
            const auto &a = cure.map.entries[i];
            const auto &b = cure.map.entries[j];
            EXPECT_EQ(commutes(a.source, b.source), commutes(a.image.string, b.image.string));
        }
    }
}

TEST(CureXyzClifford, FourSiteTableauMatchesMap) {
    XyzChain c = chain_of({{1, -2, 1}, {2, 1, 3}, {-1, 1, -1}});
    CliffordCure cure = cure_xyz_clifford(c);
    for (const auto &e : cure.map.entries) {
        EXPECT_EQ(cure.tableau.apply(e.source), e.image.phased());
        Hamiltonian term(4);
        term.add(1, e.source);
        Hamiltonian image(4);
        image.add(e.image.negative ? -1 : 1, e.image.string);
        EXPECT_EQ(conjugate_clifford(term, cure.tableau), image);
    }
}

TEST(CureXyzClifford, RelabelsWhenOnlyOddEdgesQualify) {
    // Even edge (label 2) has product -1, odd edges are fine.
    XyzChain c = chain_of({{1, 1, 1}, {1, 1, -1}, {1, 2, 1}});
    CliffordCure cure = cure_xyz_clifford(c);
    EXPECT_TRUE(cure.relabeled);
    EXPECT_TRUE(cure.certificate.yes);
    EXPECT_LT(oracle::spectrum_distance(c.to_hamiltonian(), cure.transformed), 1e-9);
}

TEST(CureXyzClifford, RandomEligibleChains) {
    SplitMix64 rng(99);
    int cured = 0, rejected = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng.below(6);
        XyzChain c = random_chain(n, Boundary::Open, rng, 3);
        bool even_ok = true, odd_ok = true;
        for (std::size_t e = 0; e + 1 < n; ++e) {
            bool ok = sgn(c.couplings[e].xx * c.couplings[e].yy * c.couplings[e].zz) >= 0;
            ((e + 1) % 2 == 0 ? even_ok : odd_ok) &= ok;
        }
        if (!even_ok && !odd_ok) {
            EXPECT_THROW(cure_xyz_clifford(c), NotApplicable);
            ++rejected;
            continue;
        }
        CliffordCure cure = cure_xyz_clifford(c);
        ++cured;
        EXPECT_TRUE(validate_images(cure.map));
        EXPECT_TRUE(check_termwise(cure.transformed, 4).yes);
        EXPECT_TRUE(oracle::stoquastic(cure.transformed));
        EXPECT_LT(oracle::spectrum_distance(c.to_hamiltonian(), cure.transformed), 1e-9);
    }
    EXPECT_GT(cured, 20);
    EXPECT_GT(rejected, 3);
}

TEST(CureCommuting, StabilizerSumBecomesDiagonal) {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.below(4);
        CliffordTableau u = oracle::random_clifford(n, rng);
        // Images of Z-strings under u commute pairwise.
        Hamiltonian h(n);
        for (int k = 0; k < 4; ++k) {
            PauliString z(n);
            for (std::size_t q = 0; q < n; ++q)
                if (rng.below(2)) z.set_letter(q, Letter::Z);
            if (z.is_identity()) continue;
            SignedPauli img = to_signed(u.apply(z));
            if (!img.string.is_real()) continue;
            h.add(Rational(1 + static_cast<long>(rng.below(3))) * (img.negative ? -1 : 1), img.string);
        }
        CliffordCure cure = cure_commuting(h);
        EXPECT_TRUE(cure.transformed.is_diagonal());
        EXPECT_TRUE(validate_images(cure.map));
        EXPECT_LT(oracle::spectrum_distance(h, cure.transformed), 1e-9);
    }
}

TEST(CureCommuting, AnticommutingRejected) {
    Hamiltonian h(1);
    h.add(1, PauliString::from_dense("X"));
    h.add(1, PauliString::from_dense("Z"));
    EXPECT_THROW(cure_commuting(h), NotApplicable);
}

TEST(ChainFile, RoundTrip) {
    XyzChain c = parse_chain("# comment\n0 2 0 1\n1 1 3 2\n");
    EXPECT_EQ(c.n, 3u);
    EXPECT_EQ(c.couplings, h123().couplings);
    XyzChain d = parse_chain(serialize_chain(c));
    EXPECT_EQ(d.couplings, c.couplings);
    EXPECT_EQ(d.n, c.n);
    XyzChain ring = parse_chain("sites 3\nboundary closed\n0 1 1 1\n2 1 0 1\n");
    EXPECT_EQ(ring.boundary, Boundary::Closed);
    EXPECT_EQ(ring.couplings.size(), 3u);
    EXPECT_EQ(ring.couplings[1], (XyzCoupling{0, 0, 0}));
    EXPECT_THROW(parse_chain("0 1 1\n"), ParseError);
    EXPECT_THROW(parse_chain("0 1 1 1\n0 1 1 1\n"), ParseError);
    EXPECT_THROW(parse_chain("sites 2\n3 1 1 1\n"), ParseError);
    EXPECT_THROW(parse_chain("0 1 2i 1\n"), ParseError);
}

}  // namespace
}  // namespace stoq
