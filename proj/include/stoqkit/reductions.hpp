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


#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stoqkit/hamiltonian.hpp"

namespace stoq {

/// Largest instance the brute-force oracles enumerate.
constexpr std::size_t kMaxEnumerationBits = 24;

// ------------------------------------------------------------------ Ising

struct IsingEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    Rational j = 1;
};

/// Energy sum_E J_ij S_i S_j + [fields] sum_i S_i with S_i = (-1)^{x_i},
/// i.e. the eigenvalue of Z_i on the basis string x.
struct IsingInstance {
    std::size_t num_vertices = 0;
    std::vector<IsingEdge> edges;
    bool unit_fields = false;

    /// Throws std::invalid_argument on self-loops, repeated edges or
    /// vertices out of range.
    void validate() const;
    Rational energy(uint64_t x) const;
    /// sum_E J Z_u Z_v (+ sum Z_i) on num_vertices qubits starting at `offset`.
    Hamiltonian hamiltonian(std::size_t num_qubits, std::size_t offset = 0) const;
    /// -(sum |J| + [fields] n); a frustrated instance has E0 above it.
    Rational unfrustrated_bound() const;
    nlohmann::json to_json() const;
};

/// Lines "u v J", optional "vertices N" and "fields on|off".
IsingInstance parse_graph(std::string_view text);
std::string serialize_graph(const IsingInstance &g);

struct IsingMinimum {
    Rational energy;
    /// Lexicographically smallest minimizing string.
    uint64_t argmin = 0;
    std::vector<int> spins;
};

/// Exact minimum by enumeration (parallel chunks, deterministic reduction).
IsingMinimum solve_ps(const IsingInstance &g);

struct Prop1Instance {
    Hamiltonian h;
    Rational e0;
    bool frustrated = false;
};

/// X_0 (x) (E0 - H_Ising) with vertex i on qubit i+1.
Prop1Instance gen_prop1(const IsingInstance &g);

/// (K + eps) X_c - X_c (x) H_Ising on n+1 qubits, control c = n.
Hamiltonian gen_conp(const IsingInstance &g, const Rational &k, const Rational &eps = Rational(1, 2));

/// Whether H_class splits into m-local diagonal terms whose minima add up to
/// the global minimum, decided as check_termwise(X_0 (x) (E0 - H_class), m+1).
bool check_frustration_free_decomposition(const Hamiltonian &h_class, std::size_t m);

// -------------------------------------------------------------------- CNF

/// Literals are DIMACS integers: variable v in 1..n is x_v, n+1..n+l is
/// y_{v-n}; negative means negated.
struct CnfFormula {
    std::size_t n = 0;
    std::size_t l = 0;
    std::vector<std::vector<int>> clauses;

    std::size_t num_vars() const {
        return n + l;
    }
    /// Throws std::invalid_argument on empty clauses or undeclared variables.
    void validate() const;
    /// Assignment bit v-1 is variable v.
    bool clause_satisfied(std::size_t k, uint64_t assignment) const;
    std::size_t satisfied_count(uint64_t assignment) const;
    nlohmann::json to_json() const;
};

/// DIMACS CNF with "p cnf V M" and an optional "c forall n" line.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula &f);

struct MinmaxInstance {
    CnfFormula formula;
    std::size_t k = 0;
    /// Clauses with fewer than 3 literals were padded by repeating a literal.
    std::size_t padded_clauses = 0;
};

/// Ten 2-CNF clauses per input clause with a fresh existential variable d
/// appended to the y-block; k = 7m.
MinmaxInstance gadget_3sat_to_minmax(const CnfFormula &formula3);

/// For all x there is y with every clause satisfied.
bool eval_forall_exists(const CnfFormula &f);
/// For all x there is y with at least k clauses satisfied.
bool eval_minmax(const CnfFormula &f, std::size_t k);
/// There is x such that every y violates at least k clauses.
bool eval_neg_minmax(const CnfFormula &f, std::size_t k);

/// sum_k P(c_k1) P(c_k2) on n+l qubits with P(a_i) = X_i + I,
/// P(~a_i) = Z_i + I, P(b_i) = |0><0|, P(~b_i) = |1><1|. A clause that
/// repeats a literal uses it once; a clause containing a literal and its
/// negation is always satisfied and contributes nothing.
Hamiltonian build_hc(const CnfFormula &f);

struct HcPropertyReport {
    bool offdiag_nonnegative = true;
    bool diagonal_minimized_on_ones = true;
    bool counts_violations = true;
    /// x for the first failure of any property.
    std::optional<uint64_t> failing_x;

    bool ok() const {
        return offdiag_nonnegative && diagonal_minimized_on_ones && counts_violations;
    }
    nlohmann::json to_json() const;
};

/// Exhaustive check of the three properties of H_C(x) = W(x0^l) H_C W(x0^l)
/// over every x. Requires 2n + l <= 26.
HcPropertyReport verify_hc_properties(const CnfFormula &f, const Hamiltonian &hc);

/// Qubit layout of the assembled instance: the core register (x-block,
/// y-block, control, d-ancillas) followed by one (a, b, c) triple per core
/// qubit.
struct Sigma2Layout {
    std::size_t n = 0;
    std::size_t l = 0;

    std::size_t x(std::size_t i) const {
        return i;
    }
    std::size_t y(std::size_t j) const {
        return n + j;
    }
    std::size_t control() const {
        return n + l;
    }
    std::size_t d(std::size_t j) const {
        return n + l + 1 + j;
    }
    std::size_t core_size() const {
        return n + 2 * l + 1;
    }
    /// Ancillas (a, b, c) protecting core qubit u.
    std::size_t a(std::size_t u) const {
        return core_size() + 3 * u;
    }
    std::size_t b(std::size_t u) const {
        return a(u) + 1;
    }
    std::size_t c(std::size_t u) const {
        return a(u) + 2;
    }
    std::size_t num_qubits() const {
        return 4 * core_size();
    }
    nlohmann::json to_json() const;
};

struct Gadgets {
    Hamiltonian g1;
    Hamiltonian g2;
};

/// Gadgets for a Hamiltonian on n + l qubits, on 4n + 8l qubits: x-block
/// 0..n-1, y-block n..n+l-1, d_j = n+l+j, then the (a, b, c) triple of
/// qubit u at n+2l+3u for each of the first n+2l qubits.
Gadgets build_gadgets(std::size_t n, std::size_t l);

/// G1 on the given qubits with ancillas at ancilla_base + 3i.
Hamiltonian build_g1(std::size_t num_qubits, const std::vector<std::size_t> &protected_qubits,
                     std::size_t ancilla_base);
/// G2 for pairs (y_j, d_j).
Hamiltonian build_g2(std::size_t num_qubits, const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

struct Sigma2Instance {
    Hamiltonian h;
    Sigma2Layout layout;
    std::size_t k = 0;
};

/// (X_c (x) (kI - H_C) + G2) + G1 on the layout above.
Sigma2Instance assemble_sigma2(const CnfFormula &f, std::size_t k);

/// Smallest x in {0,1}^n (lexicographic) such that Hadamards on x-qubit i
/// and its three ancillas, for every i with x_i = 1, make the instance
/// globally stoquastic.
std::optional<uint64_t> sigma2_mask_search(const Sigma2Instance &inst);

struct GadgetRestrictionEntry {
    /// Hadamard mask on the core register.
    BitVec mask;
    bool touches_protected = false;
    /// For touching masks: the y/d block j and a positive entry whose flip
    /// contains d_j.
    std::optional<std::size_t> block;
    std::optional<std::pair<BitVec, BitVec>> witness;
    Rational value;
    bool ok = false;
};

struct GadgetRestrictionReport {
    std::size_t n = 0;
    std::size_t l = 0;
    std::vector<GadgetRestrictionEntry> entries;

    bool ok() const;
    nlohmann::json to_json() const;
};

/// For each core mask, conjugates G2 and either exhibits an uncancellable
/// positive entry (mask touches some y_j or d_j) or confirms stoquasticity.
GadgetRestrictionReport verify_gadget_restriction(std::size_t n, std::size_t l, const std::vector<BitVec> &masks);

/// Outcome of one reduction run against its brute-force oracle.
struct ReductionReport {
    std::string kind;
    nlohmann::json instance;
    bool oracle_answer = false;
    bool hamiltonian_answer = false;

    bool agreement() const {
        return oracle_answer == hamiltonian_answer;
    }
    nlohmann::json to_json() const;
};

/// solve_ps "<= K" against check_global(gen_conp) = NotStoquastic.
ReductionReport conp_report(const IsingInstance &g, const Rational &k, const Rational &eps = Rational(1, 2));
/// eval_neg_minmax(f, k) against sigma2_mask_search.
ReductionReport sigma2_report(const CnfFormula &f, std::size_t k);
/// eval_forall_exists(f) against eval_minmax(gadget(f), 7m).
ReductionReport minmax_report(const CnfFormula &formula3);

}  // namespace stoq
