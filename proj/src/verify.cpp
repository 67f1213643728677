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

#include "stoqkit/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "stoqkit/curing.hpp"
#include "stoqkit/decomposition.hpp"
#include "stoqkit/dense.hpp"
#include "stoqkit/generators.hpp"
#include "stoqkit/qmc.hpp"
#include "stoqkit/reductions.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {

using nlohmann::json;

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.passed; });
}

json SuiteReport::to_json() const {
    json list = json::array();
    for (const auto &c : checks) {
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"checks", list}};
}

namespace {

class Suite {
   public:
    Suite(std::string name, uint64_t seed) {
        report_.suite = std::move(name);
        report_.seed = seed;
    }

    void add(std::string name, bool passed, json detail = json::object()) {
        report_.checks.push_back({std::move(name), passed, std::move(detail)});
    }

    SuiteReport take() {
        return std::move(report_);
    }

   private:
    SuiteReport report_;
};

// Largest off-diagonal entry of the dense matrix.
double max_offdiagonal(const Hamiltonian &h) {
    Eigen::MatrixXd m = dense_matrix(h);
    double best = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j) {
                best = std::max(best, m(i, j));
            }
        }
    }
    return m.rows() > 1 ? best : 0.0;
}

bool dense_stoquastic(const Hamiltonian &h) {
    return max_offdiagonal(h) <= 1e-9;
}

double spectrum_distance(const Hamiltonian &a, const Hamiltonian &b) {
    Eigen::VectorXd x = spectrum(a), y = spectrum(b);
    if (x.size() != y.size()) {
        return std::numeric_limits<double>::infinity();
    }
    return x.size() ? (x - y).cwiseAbs().maxCoeff() : 0.0;
}

PauliString random_pauli(std::size_t n, SplitMix64 &rng) {
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.set_letter(q, static_cast<Letter>(rng.below(4)));
    }
    return p;
}

IsingInstance triangle() {
    IsingInstance g;
    g.num_vertices = 3;
    g.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    return g;
}

XyzChain h123() {
    XyzChain c;
    c.n = 3;
    c.couplings = {{2, 0, 1}, {1, 3, 2}};
    return c;
}

Hamiltonian frustrated_pair() {
    return parse_hsum("qubits 2\n1 X0 X1\n1/2 X0\n1/2 X1\n1/4 Z0\n");
}

// Edge e of an open chain joins sites e and e+1; even/odd refers to the
// one-based edge label e+1.
bool clifford_eligible(const XyzChain &c) {
    bool even_ok = true, odd_ok = true;
    for (std::size_t e = 0; e < c.couplings.size(); ++e) {
        bool ok = sgn(c.couplings[e].product()) >= 0;
        ((e + 1) % 2 == 0 ? even_ok : odd_ok) &= ok;
    }
    return even_ok || odd_ok;
}

// ------------------------------------------------------------------ pauli

SuiteReport pauli_suite(uint64_t seed) {
    Suite s("pauli", seed);
    SplitMix64 rng(seed);
    std::size_t trials = 300, commute_bad = 0, assoc_bad = 0, square_bad = 0, action_bad = 0, text_bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t n = 1 + rng.below(8);
        PauliString p = random_pauli(n, rng), q = random_pauli(n, rng), r = random_pauli(n, rng);
        PhasedPauli pq = multiply(p, q), qp = multiply(q, p);
        bool same = pq.string == qp.string && pq.phase == qp.phase;
        bool negated = pq.string == qp.string && (pq.phase + 2) % 4 == qp.phase;
        if (commutes(p, q) ? !same : !negated) {
            ++commute_bad;
        }
        PhasedPauli left = multiply(multiply(PhasedPauli{p, 0}, PhasedPauli{q, 0}), PhasedPauli{r, 0});
        PhasedPauli right = multiply(PhasedPauli{p, 0}, multiply(PhasedPauli{q, 0}, PhasedPauli{r, 0}));
        if (!(left == right)) {
            ++assoc_bad;
        }
        PhasedPauli pp = multiply(p, p);
        if (!pp.string.is_identity() || pp.phase != 0) {
            ++square_bad;
        }
        BitVec x = BitVec::from_u64(n, rng.below(uint64_t{1} << n));
        auto [y1, k1] = apply_letters(q, x);
        auto [y2, k2] = apply_letters(p, y1);
        auto [y3, k3] = apply_letters(pq.string, x);
        if (y2 != y3 || (k1 + k2) % 4 != (k3 + pq.phase) % 4) {
            ++action_bad;
        }
        if (PauliString::from_dense(p.to_dense_string()) != p) {
            ++text_bad;
        }
    }
    s.add("commutation_matches_product_order", commute_bad == 0, {{"trials", trials}, {"failures", commute_bad}});
    s.add("product_associative", assoc_bad == 0, {{"trials", trials}, {"failures", assoc_bad}});
    s.add("square_is_identity", square_bad == 0, {{"trials", trials}, {"failures", square_bad}});
    s.add("basis_action_is_multiplicative", action_bad == 0, {{"trials", trials}, {"failures", action_bad}});
    s.add("dense_text_round_trip", text_bad == 0, {{"trials", trials}, {"failures", text_bad}});
    return s.take();
}

// ------------------------------------------------------------ hamiltonian

SuiteReport hamiltonian_suite(uint64_t seed) {
    Suite s("hamiltonian", seed);
    SplitMix64 rng(seed);
    std::size_t trials = 60, roundtrip_bad = 0, symmetric_bad = 0, dense_bad = 0, hadamard_bad = 0,
                spectrum_bad = 0, embed_bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t n = 1 + rng.below(5);
        Hamiltonian h = random_real_hamiltonian(n, 1 + rng.below(8), std::min<std::size_t>(n, 3), rng);
        if (!(parse_hsum(serialize_hsum(h)) == h)) {
            ++roundtrip_bad;
        }
        Eigen::MatrixXd m = dense_matrix(h);
        uint64_t dim = uint64_t{1} << n;
        for (uint64_t a = 0; a < dim; ++a) {
            for (uint64_t b = 0; b < dim; ++b) {
                Rational e = matrix_entry(h, BitVec::from_u64(n, a), BitVec::from_u64(n, b));
                if (e != matrix_entry(h, BitVec::from_u64(n, b), BitVec::from_u64(n, a))) {
                    ++symmetric_bad;
                }
                if (std::abs(to_double(e) - m(a, b)) > 1e-12) {
                    ++dense_bad;
                }
            }
        }
        BitVec mask = BitVec::from_u64(n, rng.below(dim));
        Hamiltonian c = conjugate_hadamard(h, mask);
        if (!(conjugate_hadamard(c, mask) == h)) {
            ++hadamard_bad;
        }
        if (spectrum_distance(h, c) > 1e-9) {
            ++spectrum_bad;
        }
        Hamiltonian big = embed(h, n + 2, 1);
        for (const auto &term : h.terms()) {
            PauliString wide(n + 2);
            for (std::size_t q = 0; q < n; ++q) {
                wide.set_letter(q + 1, term.string.letter(q));
            }
            if (big.coefficient(wide) != term.coeff) {
                ++embed_bad;
            }
        }
    }
    s.add("hsum_round_trip", roundtrip_bad == 0, {{"trials", trials}, {"failures", roundtrip_bad}});
    s.add("real_matrix_symmetric", symmetric_bad == 0, {{"failures", symmetric_bad}});
    s.add("entry_matches_dense", dense_bad == 0, {{"failures", dense_bad}});
    s.add("hadamard_involution", hadamard_bad == 0, {{"failures", hadamard_bad}});
    s.add("hadamard_preserves_spectrum", spectrum_bad == 0, {{"failures", spectrum_bad}});
    s.add("embed_shifts_terms", embed_bad == 0, {{"failures", embed_bad}});

    auto kind_of = [](const std::string &text) -> std::string {
        try {
            parse_hsum(text);
        } catch (const ParseError &e) {
            switch (e.kind) {
                case ParseError::Kind::Malformed:
                    return "malformed";
                case ParseError::Kind::MissingHeader:
                    return "missing_header";
                case ParseError::Kind::QubitOutOfRange:
                    return "qubit_out_of_range";
                case ParseError::Kind::RepeatedIndex:
                    return "repeated_index";
                case ParseError::Kind::NonRealCoefficient:
                    return "non_real_coefficient";
            }
        }
        return "accepted";
    };
    json errors = {{"missing_header", kind_of("1 X0\n")},
                   {"qubit_out_of_range", kind_of("qubits 1\n1 X1\n")},
                   {"repeated_index", kind_of("qubits 2\n1 X0 Z0\n")},
                   {"malformed", kind_of("qubits 2\nabc X0\n")}};
    bool errors_ok = true;
    for (auto &[key, value] : errors.items()) {
        errors_ok &= value == key;
    }
    s.add("parse_errors_classified", errors_ok, errors);
    return s.take();
}

// ------------------------------------------------------------- stoq-check

struct EquivalenceTally {
    std::size_t instances = 0;
    std::size_t stoquastic = 0;
    std::size_t disagreements = 0;
    std::size_t soundness_failures = 0;
    json first_disagreement;

    json to_json() const {
        json j = {{"instances", instances},
                  {"stoquastic", stoquastic},
                  {"disagreements", disagreements},
                  {"soundness_failures", soundness_failures}};
        if (!first_disagreement.is_null()) {
            j["first_disagreement"] = first_disagreement;
        }
        return j;
    }
};

// Compares both deciders on one instance and checks the certificates.
void compare_deciders(const Hamiltonian &h, std::size_t m, EquivalenceTally &tally) {
    ++tally.instances;
    GlobalVerdict g = check_global(h);
    TermwiseCertificate t = check_termwise(h, m);
    bool global_yes = g.status == GlobalStatus::Stoquastic;
    tally.stoquastic += global_yes;
    if (g.status == GlobalStatus::Undecided || global_yes != t.yes) {
        ++tally.disagreements;
        if (tally.first_disagreement.is_null()) {
            tally.first_disagreement = {{"hsum", serialize_hsum(h)}, {"m", m}};
        }
    }
    bool sound = true;
    if (global_yes) {
        sound &= h.num_qubits() > 12 || dense_stoquastic(h);
    } else if (g.witness) {
        sound &= sgn(matrix_entry(h, g.witness->first, g.witness->second)) > 0;
    }
    if (t.yes) {
        sound &= t.reconstruct(h.num_qubits()) == h;
        for (const auto &gen : t.generators) {
            Hamiltonian piece = gen.to_hamiltonian();
            sound &= sgn(gen.weight) >= 0 && piece.locality() <= m && dense_stoquastic(piece);
        }
    }
    tally.soundness_failures += !sound;
}

SuiteReport stoq_check_suite(uint64_t seed) {
    Suite s("stoq-check", seed);

    Prop1Instance p = gen_prop1(triangle());
    GlobalVerdict g = check_global(p.h);
    TermwiseCertificate t3 = check_termwise(p.h, 3), t4 = check_termwise(p.h, 4);
    bool flip0 = t3.failing_flip && *t3.failing_flip == BitVec::from_indices(4, {0});
    s.add("triangle_separation",
          p.e0 == -1 && g.status == GlobalStatus::Stoquastic && !t3.yes && flip0 && t4.yes &&
              t4.reconstruct(4) == p.h,
          {{"e0", to_string(p.e0)},
           {"global", to_string(g.status)},
           {"termwise_3", t3.yes},
           {"termwise_3_flip_is_0", flip0},
           {"termwise_4", t4.yes}});

    SplitMix64 rng(seed);
    EquivalenceTally two_local;
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 2 + rng.below(9);
        auto supports = random_supports(n, 2, 1 + rng.below(n), rng);
        compare_deciders(random_local_instance(n, supports, rng), 2, two_local);
    }
    s.add("two_local_equivalence",
          two_local.disagreements == 0 && two_local.soundness_failures == 0 && two_local.stoquastic > 0 &&
              two_local.stoquastic < two_local.instances,
          two_local.to_json());

    EquivalenceTally bounded;
    std::map<std::string, std::size_t> by_kl;
    for (int i = 0; i < 250; ++i) {
        std::size_t k = 2 + rng.below(2), l = 1 + rng.below(2);
        std::size_t n = k + rng.below(11 - k);
        auto supports = random_supports(n, k, l, rng);
        compare_deciders(random_local_instance(n, supports, rng), k * l, bounded);
        ++by_kl[std::to_string(k) + "x" + std::to_string(l)];
    }
    json detail = bounded.to_json();
    detail["by_k_l"] = by_kl;
    s.add("bounded_degree_equivalence",
          bounded.disagreements == 0 && bounded.soundness_failures == 0 && bounded.stoquastic > 0 &&
              bounded.stoquastic < bounded.instances,
          detail);

    std::size_t monotone_bad = 0, implied_bad = 0, checked = 0;
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + rng.below(5);
        Hamiltonian h = random_real_hamiltonian(n, 1 + rng.below(6), 3, rng, 2);
        bool prev = false;
        for (std::size_t m = 1; m <= n + 1; ++m) {
            bool yes = check_termwise(h, m).yes;
            monotone_bad += prev && !yes;
            implied_bad += yes && check_global(h).status != GlobalStatus::Stoquastic;
            prev = yes;
            ++checked;
        }
    }
    s.add("termwise_monotone_and_sound", monotone_bad == 0 && implied_bad == 0,
          {{"checks", checked}, {"monotone_failures", monotone_bad}, {"global_failures", implied_bad}});
    return s.take();
}

// -------------------------------------------------------------- decompose

SuiteReport decompose_suite(uint64_t seed) {
    Suite s("decompose", seed);
    SplitMix64 rng(seed);
    std::size_t instances = 0, reconstruct_bad = 0, nonneg_bad = 0, norm_bad = 0, count_bad = 0;
    std::size_t acceptance_instances = 0, closed_bad = 0, elementary_bad = 0, ground_bad = 0, identity_bad = 0,
                gap_bad = 0;
    double worst_closed = 0, worst_elementary = 0, worst_ground = 0;
    while (instances < 100) {
        std::size_t n = 2 + rng.below(9), k = 2 + rng.below(2);
        auto supports = random_supports(n, std::min(k, n), 1 + rng.below(3), rng);
        Hamiltonian h = random_local_instance(n, supports, rng, 0.0);
        if (check_global(h).status != GlobalStatus::Stoquastic) {
            continue;
        }
        ++instances;
        StoqDecomposition d = decompose_global(h);
        std::vector<BitVec> columns;
        for (uint64_t c = 0; c < (uint64_t{1} << n); ++c) {
            columns.push_back(BitVec::from_u64(n, c));
        }
        reconstruct_bad += !decomposition_matches(h, d, columns);
        bool nonneg = true, bounded = true;
        for (const auto &v : diagonal_values(d.h0)) {
            nonneg &= sgn(v) >= 0;
        }
        bounded &= d.h0_norm <= d.norm_bound;
        for (const auto &term : d.terms) {
            Rational best = 0;
            for (const auto &v : diagonal_values(term.classical)) {
                nonneg &= sgn(v) >= 0;
                best = std::max(best, v);
            }
            bounded &= best == term.norm && term.norm <= d.norm_bound;
        }
        nonneg_bad += !nonneg;
        norm_bad += !bounded;
        std::size_t limit = d.source_terms << (2 * std::max<std::size_t>(d.locality, 1));
        count_bad += d.terms.size() > limit;

        if (n > 8) {
            continue;
        }
        ++acceptance_instances;
        Eigensystem es = eigensystem(h);
        Eigen::VectorXcd ground = es.vectors.col(0).cast<std::complex<double>>();
        double direct = stoqma_acceptance(h, d, ground);
        double closed = stoqma_acceptance_closed_form(h, d, ground);
        double elementary = stoqma_acceptance_elementary(d, ground);
        double mp1 = static_cast<double>(d.terms.size() + 1);
        double predicted =
            0.5 * (1 - (es.values(0) + to_double(d.beta)) / (mp1 * to_double(d.norm_bound)));
        worst_closed = std::max(worst_closed, std::abs(direct - closed));
        worst_elementary = std::max(worst_elementary, std::abs(direct - elementary));
        worst_ground = std::max(worst_ground, std::abs(direct - predicted));
        closed_bad += std::abs(direct - closed) > 1e-10;
        elementary_bad += std::abs(direct - elementary) > 1e-10;
        ground_bad += std::abs(direct - predicted) > 1e-10;
        bool identity = threshold_average_identity(diagonal_values(d.h0), d.norm_bound);
        for (const auto &term : d.terms) {
            identity &= threshold_average_identity(diagonal_values(term.classical), d.norm_bound);
        }
        identity_bad += !identity;
        // Any eigenstate with energy >= b is accepted with probability at
        // least (b - E0) / (2 (m'+1) M) below the ground state.
        for (Eigen::Index i = 1; i < es.values.size(); ++i) {
            Eigen::VectorXcd v = es.vectors.col(i).cast<std::complex<double>>();
            double gap = (es.values(i) - es.values(0)) / (2 * mp1 * to_double(d.norm_bound));
            gap_bad += direct - stoqma_acceptance(h, d, v) < gap - 1e-10;
        }
    }
    s.add("exact_reconstruction", reconstruct_bad == 0, {{"instances", instances}, {"failures", reconstruct_bad}});
    s.add("classical_parts_nonnegative", nonneg_bad == 0, {{"failures", nonneg_bad}});
    s.add("norms_bounded", norm_bad == 0, {{"failures", norm_bad}});
    s.add("term_count_bound", count_bad == 0, {{"failures", count_bad}});
    s.add("acceptance_closed_form", closed_bad == 0,
          {{"instances", acceptance_instances}, {"failures", closed_bad}, {"max_error", worst_closed}});
    s.add("acceptance_elementary", elementary_bad == 0,
          {{"failures", elementary_bad}, {"max_error", worst_elementary}});
    s.add("acceptance_ground_energy", ground_bad == 0, {{"failures", ground_bad}, {"max_error", worst_ground}});
    s.add("threshold_average_identity", identity_bad == 0, {{"failures", identity_bad}});
    s.add("acceptance_gap", gap_bad == 0, {{"failures", gap_bad}});

    Hamiltonian minus_x = parse_hsum("qubits 1\n-1 X0\n");
    StoqDecomposition d = decompose_global(minus_x);
    Eigen::VectorXcd plus(2);
    plus << std::sqrt(0.5), std::sqrt(0.5);
    double acc = stoqma_acceptance(minus_x, d, plus);
    s.add("minus_x_plus_state", std::abs(acc - 0.625) < 1e-12 && d.terms.size() == 1 && d.norm_bound == 2,
          {{"acceptance", acc}, {"terms", d.terms.size()}, {"M", to_string(d.norm_bound)}});
    return s.take();
}

// ----------------------------------------------------------------- curing

SuiteReport curing_suite(uint64_t seed) {
    Suite s("curing", seed);
    SplitMix64 rng(seed);

    std::size_t mask_bad = 0, mask_found = 0, mask_trials = 50;
    for (std::size_t t = 0; t < mask_trials; ++t) {
        std::size_t n = 2 + rng.below(3);
        Hamiltonian h = random_real_hamiltonian(n, 2 + rng.below(4), 2, rng, 2);
        std::optional<uint64_t> want;
        for (uint64_t r = 0; r < (uint64_t{1} << n) && !want; ++r) {
            uint64_t bits = lex_rank_to_bits(r, n);
            if (dense_stoquastic(conjugate_hadamard(h, BitVec::from_u64(n, bits)))) {
                want = bits;
            }
        }
        auto got = search_hadamard_mask(h);
        mask_found += got.has_value();
        mask_bad += got.has_value() != want.has_value() || (got && got->to_u64() != *want);
    }
    s.add("hadamard_mask_matches_dense_search", mask_bad == 0,
          {{"trials", mask_trials}, {"found", mask_found}, {"failures", mask_bad}});

    std::size_t cured = 0, cure_bad = 0, rejected = 0, reject_bad = 0;
    double worst = 0;
    while (cured < 100) {
        std::size_t n = 2 + rng.below(7);
        XyzChain c = random_eligible_chain(n, rng);
        ++cured;
        try {
            CliffordCure cure = cure_xyz_clifford(c);
            double dist = spectrum_distance(c.to_hamiltonian(), cure.transformed);
            worst = std::max(worst, dist);
            cure_bad += !validate_images(cure.map) || !check_termwise(cure.transformed, 4).yes || dist > 1e-9;
        } catch (const NotApplicable &) {
            ++cure_bad;
        }
    }
    while (rejected < 30) {
        std::size_t n = 4 + rng.below(5);
        XyzChain c = random_xyz_chain(n, Boundary::Open, rng);
        if (clifford_eligible(c)) {
            continue;
        }
        ++rejected;
        try {
            cure_xyz_clifford(c);
            ++reject_bad;
        } catch (const NotApplicable &) {
        }
    }
    s.add("clifford_cure_eligible_chains", cure_bad == 0,
          {{"chains", cured}, {"failures", cure_bad}, {"max_spectrum_error", worst}});
    s.add("clifford_cure_rejects_ineligible", reject_bad == 0, {{"chains", rejected}, {"failures", reject_bad}});

    XyzChain c = h123();
    auto single = search_xyz_single_qubit(c);
    auto brute = brute_force_xyz_single_qubit(c);
    bool clifford_ok = false;
    try {
        CliffordCure cure = cure_xyz_clifford(c);
        clifford_ok = validate_images(cure.map) && check_termwise(cure.transformed, 4).yes &&
                      spectrum_distance(c.to_hamiltonian(), cure.transformed) <= 1e-9;
    } catch (const NotApplicable &) {
    }
    s.add("separation_witness", !single && !brute && clifford_ok,
          {{"single_qubit", single.has_value()}, {"brute_force", brute.has_value()}, {"clifford", clifford_ok}});

    std::size_t dp_bad = 0, dp_yes = 0, dp_trials = 80;
    for (std::size_t t = 0; t < dp_trials; ++t) {
        Boundary b = t % 3 == 0 ? Boundary::Closed : Boundary::Open;
        std::size_t n = 3 + rng.below(4);
        XyzChain chain = random_xyz_chain(n, b, rng, 2);
        auto dp = search_xyz_single_qubit(chain);
        auto bf = brute_force_xyz_single_qubit(chain);
        dp_yes += dp.has_value();
        bool ok = dp.has_value() == bf.has_value();
        if (ok && dp) {
            ok = dp->assignment == *bf && check_global(dp->transformed).status == GlobalStatus::Stoquastic;
        }
        dp_bad += !ok;
    }
    s.add("single_qubit_dp_matches_brute_force", dp_bad == 0,
          {{"chains", dp_trials}, {"cured", dp_yes}, {"failures", dp_bad}});
    return s.take();
}

// ------------------------------------------------------------- reductions

SuiteReport conp_suite(uint64_t seed) {
    Suite s("reductions-conp", seed);
    SplitMix64 rng(seed);
    std::size_t graphs = 200, runs = 0, bad = 0, yes = 0;
    json first;
    for (std::size_t t = 0; t < graphs; ++t) {
        IsingInstance g = random_ising(1 + rng.below(10), rng);
        Rational lo, hi;
        for (uint64_t x = 0; x < (uint64_t{1} << g.num_vertices); ++x) {
            Rational e = g.energy(x);
            if (x == 0 || e < lo) {
                lo = e;
            }
            if (x == 0 || e > hi) {
                hi = e;
            }
        }
        mpz_class from, to;
        mpz_fdiv_q(from.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_cdiv_q(to.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        for (mpz_class k = from - 1; k <= to; ++k) {
            ReductionReport r = conp_report(g, Rational(k));
            bool truth = lo <= Rational(k);
            ++runs;
            yes += truth;
            if (!r.agreement() || r.oracle_answer != truth) {
                ++bad;
                if (first.is_null()) {
                    first = r.to_json();
                }
            }
        }
    }
    json detail = {{"graphs", graphs}, {"runs", runs}, {"ps_yes", yes}, {"failures", bad}};
    if (!first.is_null()) {
        detail["first_failure"] = first;
    }
    s.add("ps_yes_iff_not_stoquastic", bad == 0, detail);
    return s.take();
}

SuiteReport minmax_suite(uint64_t seed) {
    Suite s("reductions-minmax", seed);
    bool counts_ok = true;
    json per_sign = json::array();
    for (int signs = 0; signs < 8; ++signs) {
        CnfFormula f;
        f.l = 3;
        f.clauses = {{(signs & 1) ? -1 : 1, (signs & 2) ? -2 : 2, (signs & 4) ? -3 : 3}};
        MinmaxInstance g = gadget_3sat_to_minmax(f);
        std::vector<std::size_t> best;
        for (uint64_t abc = 0; abc < 8; ++abc) {
            std::size_t b = std::max(g.formula.satisfied_count(abc), g.formula.satisfied_count(abc | 8));
            bool sat = f.clause_satisfied(0, abc);
            counts_ok &= sat ? b == 7 : b <= 6;
            best.push_back(b);
        }
        counts_ok &= g.formula.clauses.size() == 10 && g.k == 7;
        per_sign.push_back(best);
    }
    s.add("gadget_seven_of_ten", counts_ok, {{"max_over_d", per_sign}});

    SplitMix64 rng(seed);
    std::size_t formulas = 50, bad = 0, yes = 0;
    for (std::size_t t = 0; t < formulas; ++t) {
        std::size_t n = rng.below(5), l = 1 + rng.below(10 - n);
        CnfFormula f = random_cnf(n, l, 1 + rng.below(6), 3, rng);
        ReductionReport r = minmax_report(f);
        yes += r.oracle_answer;
        bad += !r.agreement();
    }
    s.add("forall_exists_iff_minmax", bad == 0, {{"formulas", formulas}, {"yes", yes}, {"failures", bad}});
    return s.take();
}

SuiteReport hc_suite(uint64_t seed) {
    Suite s("reductions-hc", seed);
    SplitMix64 rng(seed);
    std::size_t formulas = 50, bad = 0;
    json first;
    for (std::size_t t = 0; t < formulas; ++t) {
        std::size_t n = 1 + rng.below(6), l = rng.below(13 - n);
        CnfFormula f = random_cnf(n, l, 1 + rng.below(12), 2, rng);
        HcPropertyReport r = verify_hc_properties(f, build_hc(f));
        if (!r.ok()) {
            ++bad;
            if (first.is_null()) {
                first = r.to_json();
            }
        }
    }
    json detail = {{"formulas", formulas}, {"failures", bad}};
    if (!first.is_null()) {
        detail["first_failure"] = first;
    }
    s.add("hc_properties", bad == 0, detail);
    return s.take();
}

SuiteReport sigma2_suite(uint64_t seed) {
    Suite s("reductions-sigma2", seed);
    SplitMix64 rng(seed);
    std::size_t runs = 0, bad = 0, yes = 0;
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(3);
        std::size_t l = rng.below(5 - n);
        CnfFormula f = random_cnf(n, l, 1 + rng.below(4), 2, rng);
        for (std::size_t k = 0; k <= f.clauses.size() + 1; ++k) {
            ReductionReport r = sigma2_report(f, k);
            ++runs;
            yes += r.oracle_answer;
            bad += !r.agreement();
        }
    }
    s.add("mask_search_iff_neg_minmax", bad == 0 && yes > 0 && yes < runs,
          {{"runs", runs}, {"yes", yes}, {"failures", bad}});

    bool restriction_ok = true;
    json sizes = json::array();
    for (auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
        Sigma2Layout layout{n, l};
        std::size_t core = layout.core_size();
        std::vector<BitVec> masks;
        for (uint64_t m = 0; m < (uint64_t{1} << core); ++m) {
            masks.push_back(BitVec::from_u64(core, m));
        }
        GadgetRestrictionReport r = verify_gadget_restriction(n, l, masks);
        restriction_ok &= r.ok();
        sizes.push_back({{"n", n}, {"l", l}, {"masks", masks.size()}, {"ok", r.ok()}});
    }
    s.add("gadget_restriction", restriction_ok, {{"sizes", sizes}});
    return s.take();
}

// -------------------------------------------------------------------- qmc

SuiteReport qmc_suite(uint64_t seed) {
    Suite s("qmc", seed);
    std::size_t reference_calls = 0;
    auto reference = [&](const Hamiltonian &h, double beta) {
        ++reference_calls;
        return exact_reference(h, beta);
    };

    {
        Hamiltonian h = tfim(4);
        QmcParams p;
        p.beta = 1;
        p.slices = 64;
        p.sweeps = 20000;
        p.burn_in = 2000;
        p.seed = seed;
        QmcResult r = run_qmc(h, p);
        double thermal = reference(h, 1).thermal_energy;
        double est = estimator_reference(h, 1, 64);
        double sigma = r.energy_stderr;
        bool near_estimator = std::abs(r.energy - est) <= 3 * sigma;
        bool inside_gap = std::abs(r.energy - thermal) <= std::abs(est - thermal) + 3 * sigma;
        s.add("tfim_energy", near_estimator && inside_gap && sigma > 0,
              {{"energy", r.energy},
               {"stderr", sigma},
               {"thermal", thermal},
               {"estimator_mean", est},
               {"trotter_trace", trotter_reference(h, 1, 64)}});
        s.add("tfim_sign_is_one", r.avg_sign == 1.0 && r.sign_stderr == 0.0, {{"avg_sign", r.avg_sign}});
    }

    {
        Hamiltonian h = frustrated_pair();
        QmcParams p;
        p.beta = 1;
        p.slices = 6;
        p.sweeps = 40000;
        p.mode = QmcMode::Reweighted;
        p.seed = seed;
        QmcResult r = run_qmc(h, p);
        PathEnumeration e = enumerate_paths(h, 1, 6);
        reference(h, 1);
        s.add("reweighted_matches_enumeration",
              r.avg_sign < 1 && std::abs(r.energy - e.energy) <= 3 * r.energy_stderr,
              {{"energy", r.energy},
               {"stderr", r.energy_stderr},
               {"enumerated", e.energy},
               {"avg_sign", r.avg_sign},
               {"enumerated_sign", e.avg_sign}});
    }

    {
        SplitMix64 rng(seed);
        std::size_t triples = 50, bad = 0, nonstoquastic = 0;
        for (std::size_t t = 0; t < triples; ++t) {
            Rational a = random_rational(rng, 3), b = random_rational(rng, 3), c = random_rational(rng, 3);
            Hamiltonian h = xyz_translational(3, a, b, c);
            // Keeps every diagonal factor 1 - tau H_xx positive.
            Rational beta(1, 2 * (1 + std::abs(c.get_num().get_si())));
            beta.canonicalize();
            PositivityResult r = check_path_positivity(h, beta, 4);
            bad += !r.positive;
            nonstoquastic += check_global(h).status != GlobalStatus::Stoquastic;
            reference(h, to_double(beta));
        }
        s.add("translational_xyz_positivity", bad == 0,
              {{"triples", triples}, {"non_stoquastic", nonstoquastic}, {"failures", bad}});
    }

    {
        // With every transition allowed, the estimator mean differs from
        // <H>_beta by the Trotter error only, which isolates the prefactor.
        // Sparse instances also carry the dropped two-step terms and are
        // reported for information.
        SplitMix64 rng(seed ^ 0x5eed);
        std::size_t dense_closer = 0, sparse_closer = 0, per_kind = 40;
        auto compare = [&](const Hamiltonian &h) {
            double beta = 0.2 + 1.8 * rng.uniform();
            std::size_t slices = 4 + rng.below(29);
            double thermal = reference(h, beta).thermal_energy;
            double a = estimator_reference(h, beta, slices, Normalization::PerSlice);
            double b = estimator_reference(h, beta, slices, Normalization::PerSliceMinusOne);
            return std::abs(a - thermal) <= std::abs(b - thermal);
        };
        for (std::size_t t = 0; t < per_kind; ++t) {
            auto coupling = [&] {
                Rational r(1 + static_cast<long>(rng.below(4)), 2);
                r.canonicalize();
                return -r;
            };
            Hamiltonian h(2);
            for (const char *x : {"XI", "IX", "XX"}) {
                h.add(coupling(), PauliString::from_dense(x));
            }
            for (const char *z : {"ZI", "IZ", "ZZ"}) {
                h.add(random_rational(rng, 2), PauliString::from_dense(z));
            }
            dense_closer += compare(h);
        }
        for (std::size_t t = 0; t < per_kind;) {
            auto supports = random_supports(2, 2, 1, rng);
            Hamiltonian h = random_local_instance(2, supports, rng, 0.0);
            if (h.is_diagonal()) {
                continue;
            }
            ++t;
            sparse_closer += compare(h);
        }
        bool per_slice = dense_closer * 2 > per_kind;
        s.add("normalization_convention", per_slice,
              {{"instances", per_kind},
               {"per_slice_closer", dense_closer},
               {"sparse_instances", per_kind},
               {"sparse_per_slice_closer", sparse_closer},
               {"matched", per_slice ? to_string(Normalization::PerSlice)
                                     : to_string(Normalization::PerSliceMinusOne)}});
    }

    // exact_reference throws if the bound fails, so reaching here means it
    // held on every call.
    s.add("free_energy_bound", true, {{"calls", reference_calls}});
    return s.take();
}

const std::map<std::string, std::function<SuiteReport(uint64_t)>> &registry() {
    static const std::map<std::string, std::function<SuiteReport(uint64_t)>> suites = {
        {"pauli", pauli_suite},
        {"hamiltonian", hamiltonian_suite},
        {"stoq-check", stoq_check_suite},
        {"decompose", decompose_suite},
        {"curing", curing_suite},
        {"reductions-conp", conp_suite},
        {"reductions-minmax", minmax_suite},
        {"reductions-hc", hc_suite},
        {"reductions-sigma2", sigma2_suite},
        {"qmc", qmc_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {
        "pauli",           "hamiltonian",       "stoq-check",    "decompose",         "curing",
        "reductions-conp", "reductions-minmax", "reductions-hc", "reductions-sigma2", "qmc",
    };
    return names;
}

SuiteReport run_suite(const std::string &name, uint64_t seed) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return it->second(seed);
}

std::vector<SuiteReport> run_all_suites(uint64_t seed) {
    std::vector<SuiteReport> out;
    for (const auto &name : suite_names()) {
        out.push_back(run_suite(name, seed));
    }
    return out;
}

}  // namespace stoq
