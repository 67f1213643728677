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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stoqkit/clifford.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {

/// check_global could not decide one of the candidates.
struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction produced an image map or Hamiltonian that failed its own
/// checks. Never expected in practice.
struct InternalValidationFailure : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------- Hadamard

/// Smallest mask (lexicographic, qubit 0 most significant) whose Hadamard
/// conjugation is globally stoquastic. Throws BudgetExceeded when
/// n > max_n and UndecidedError when check_global is undecided on a mask
/// examined before the answer is known.
std::optional<BitVec> search_hadamard_mask(const Hamiltonian &h, std::size_t max_n = 20,
                                           std::size_t budget = kDefaultGlobalBudget);

/// As search_hadamard_mask, but bit i of the search mask puts a Hadamard
/// on every qubit of groups[i]. Returns the full-length qubit mask.
std::optional<BitVec> search_hadamard_mask_grouped(const Hamiltonian &h,
                                                   const std::vector<std::vector<std::size_t>> &groups,
                                                   std::size_t max_bits = 20,
                                                   std::size_t budget = kDefaultGlobalBudget);

// -------------------------------------------------------------- XYZ chains

enum class Boundary { Open, Closed };

struct XyzCoupling {
    Rational xx;
    Rational yy;
    Rational zz;

    Rational product() const {
        return xx * yy * zz;
    }
    bool operator==(const XyzCoupling &other) const = default;
};

/// Edge e couples site e and site e+1 (mod n when closed).
struct XyzChain {
    std::size_t n = 0;
    std::vector<XyzCoupling> couplings;
    Boundary boundary = Boundary::Open;

    std::size_t num_edges() const {
        return boundary == Boundary::Open ? (n == 0 ? 0 : n - 1) : n;
    }
    /// Throws std::invalid_argument on a bad edge count or a closed chain
    /// with fewer than 3 sites.
    void validate() const;
    Hamiltonian to_hamiltonian() const;
};

/// Lines "i a_xx a_yy a_zz", optional "sites N" and "boundary open|closed".
/// Without "sites" the chain has one more site than its largest edge index.
XyzChain parse_chain(std::string_view text);
std::string serialize_chain(const XyzChain &chain);

/// Signed permutation of the (X, Y, Z) axes with determinant +1. Row i has
/// its single nonzero entry sign[i] in column perm[i].
struct SignedPermutation {
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> sign{1, 1, 1};

    /// All 24 elements in a fixed order; index 0 is the identity.
    static const std::vector<SignedPermutation> &all();

    int entry(int row, int col) const {
        return perm[row] == col ? sign[row] : 0;
    }
    int determinant() const;
    /// Single-qubit Clifford on `qubit` mapping axis a to column a.
    std::pair<SignedPauli, SignedPauli> images(std::size_t num_qubits, std::size_t qubit) const;
    std::string to_string() const;
};

/// R_left diag(c) R_right^T when it is diagonal.
std::optional<XyzCoupling> transform_coupling(const XyzCoupling &c, const SignedPermutation &left,
                                              const SignedPermutation &right);

/// alpha_xx <= -|alpha_yy|.
bool satisfies_curing_criterion(const XyzCoupling &c);

struct SingleQubitCure {
    /// Index into SignedPermutation::all() per site.
    std::vector<std::size_t> assignment;
    std::vector<XyzCoupling> transformed_couplings;
    CliffordTableau tableau;
    Hamiltonian transformed;
};

/// Lexicographically smallest assignment (by index sequence) whose
/// transformed couplings are all diagonal and satisfy the curing criterion.
/// Dynamic programming over the edges; closed chains fix site 0 first.
std::optional<SingleQubitCure> search_xyz_single_qubit(const XyzChain &chain);

/// Exhaustive backtracking over 24^n assignments in the same order. For
/// cross-checking the dynamic program.
std::optional<std::vector<std::size_t>> brute_force_xyz_single_qubit(const XyzChain &chain);

// ------------------------------------------------------- Clifford images

struct ImageEntry {
    PauliString source;
    SignedPauli image;
};

struct GeneratorImageMap {
    std::size_t num_qubits = 0;
    std::vector<ImageEntry> entries;

    nlohmann::json to_json() const;
};

struct ImageValidation {
    bool ok = true;
    /// Entry indices of the first violated relation. For product relations
    /// the pair is (first entry of the relation, dependent entry).
    std::optional<std::pair<std::size_t, std::size_t>> violated;
    std::string reason;

    explicit operator bool() const {
        return ok;
    }
};

/// Checks pairwise commutation, that every product relation among the
/// sources holds for the images with the same sign, and that independent
/// sources have independent images.
ImageValidation validate_images(const GeneratorImageMap &map);

/// Extends a valid partial map to a full tableau by symplectic Gram-Schmidt.
/// Throws InvalidTableau on an inconsistent map.
CliffordTableau complete_tableau(const GeneratorImageMap &map);

struct CliffordCure {
    GeneratorImageMap map;
    CliffordTableau tableau;
    Hamiltonian transformed;
    /// Sites shifted by one so the odd-edge condition plays the even role.
    bool relabeled = false;
    /// The input was already stoquastic; the map is the identity.
    bool identity = false;
    TermwiseCertificate certificate;

    nlohmann::json to_json() const;
};

/// Clifford cure of an open XYZ chain into a 4-termwise stoquastic
/// Hamiltonian. Throws NotApplicable for closed or ineligible chains.
CliffordCure cure_xyz_clifford(const XyzChain &chain);

/// Maps an independent subset of pairwise commuting terms to single-qubit
/// Z's. Throws NotApplicable if two terms anticommute.
CliffordCure cure_commuting(const Hamiltonian &h);

}  // namespace stoq
