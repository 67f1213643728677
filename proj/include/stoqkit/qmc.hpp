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

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "stoqkit/hamiltonian.hpp"

namespace stoq {

/// Closed path of N basis strings; slice N wraps to slice 0. Bit q of a
/// slice is qubit q.
struct PathConfig {
    std::size_t num_qubits = 0;
    std::vector<uint64_t> slices;

    std::size_t size() const {
        return slices.size();
    }
    std::string to_string() const;
};

/// Double-precision entry oracle grouped by flip mask. Requires n <= 63.
class EntryOracle {
   public:
    EntryOracle() = default;
    explicit EntryOracle(const Hamiltonian &h);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    double diagonal(uint64_t x) const;
    /// <row|H|col>.
    double entry(uint64_t row, uint64_t col) const;
    /// Appends (y, <y|H|x>) for every y != x with a nonzero entry.
    void neighbors(uint64_t x, std::vector<std::pair<uint64_t, double>> &out) const;
    /// Nonzero flip masks in ascending order.
    const std::vector<uint64_t> &flip_masks() const {
        return masks_;
    }
    /// Sum of |coefficients| of the diagonal terms, offset included.
    double diagonal_norm_bound() const;
    bool stoquastified() const {
        return stoquastified_;
    }

   private:
    friend EntryOracle stoquastify(const Hamiltonian &h);
    struct Term {
        uint64_t z = 0;
        double coeff = 0;
    };
    double group_value(uint64_t flip, uint64_t col) const;

    std::size_t num_qubits_ = 0;
    bool stoquastified_ = false;
    double offset_ = 0;
    std::map<uint64_t, std::vector<Term>> groups_;
    std::vector<uint64_t> masks_;
};

/// Oracle for H~ with H~_xy = -|H_xy| off the diagonal and H~_xx = H_xx.
EntryOracle stoquastify(const Hamiltonian &h);

/// prod_i <x_{i+1}|I - tau H|x_i>.
double path_weight(const EntryOracle &h, const PathConfig &path, double tau);
/// Exact weight from matrix_entry with rational tau.
Rational path_weight_exact(const Hamiltonian &h, const PathConfig &path, const Rational &tau);

enum class Normalization { PerSlice, PerSliceMinusOne };
std::string to_string(Normalization n);

struct ZeroWeightSegment : std::domain_error {
    using std::domain_error::domain_error;
};

/// Ratio of a single segment: <y|H(I - tau H)|x> / <y|I - tau H|x>.
double segment_energy(const EntryOracle &h, uint64_t x, uint64_t y, double tau);
/// Sum of segment_energy over the path divided by N (PerSlice) or N - 1.
double local_energy(const EntryOracle &h, const PathConfig &path, double tau,
                    Normalization normalization = Normalization::PerSlice);

enum class QmcMode { Direct, Reweighted };
std::string to_string(QmcMode m);

struct QmcParams {
    double beta = 1;
    std::size_t slices = 16;
    std::size_t sweeps = 10000;
    std::size_t burn_in = 1000;
    std::size_t thinning = 1;
    uint64_t seed = 1;
    QmcMode mode = QmcMode::Direct;
    Normalization normalization = Normalization::PerSlice;
    double single_flip_fraction = 0.8;
    /// Independent chains, one split stream each, merged in stream order.
    std::size_t chains = 1;

    void validate() const;
    nlohmann::json to_json() const;
};

struct QmcResult {
    double energy = 0;
    double energy_stderr = 0;
    double avg_sign = 1;
    double sign_stderr = 0;
    double acceptance = 0;
    std::size_t samples = 0;
    QmcParams params;

    nlohmann::json to_json() const;
};

constexpr std::size_t kQmcBatches = 32;

/// Called on every recorded sample with the path and its weight sign.
using PathObserver = std::function<void(const PathConfig &, int sign)>;

/// Metropolis path-integral estimate of <H>_beta. Direct mode requires a
/// globally stoquastic H with tau * diagonal_norm_bound < 1; reweighted
/// mode samples |W| and returns the sign-weighted ratio estimator.
QmcResult run_qmc(const Hamiltonian &h, const QmcParams &params, const PathObserver &observer = {});

/// Constant path at the lexicographically first string whose diagonal
/// factor is nonzero.
PathConfig initial_path(const EntryOracle &h, std::size_t slices, double tau);

struct PathEnumeration {
    /// sum_x W(x), sum_x |W(x)|.
    double z_signed = 0;
    double z_abs = 0;
    /// sum_x h(x) W(x) / sum_x W(x).
    double energy = 0;
    double avg_sign = 1;
    /// P(x) = |W(x)| / z_abs indexed by the path index (slice i in bits
    /// [i n, (i + 1) n)).
    std::vector<double> probabilities;
};

constexpr std::size_t kMaxPathEnumerationBits = 20;

/// Exact sums over every closed path. Requires n N <= 20.
PathEnumeration enumerate_paths(const Hamiltonian &h, double beta, std::size_t slices,
                                Normalization normalization = Normalization::PerSlice);
PathConfig path_from_index(uint64_t index, std::size_t num_qubits, std::size_t slices);
uint64_t path_index(const PathConfig &path);

struct ExactReference {
    double thermal_energy = 0;
    double log_partition = 0;
    double partition = 0;
    double free_energy = 0;
    double ground_energy = 0;
};

/// Dense Gibbs quantities. Throws std::logic_error if |F - E0| > n / beta.
ExactReference exact_reference(const Hamiltonian &h, double beta);

/// Tr(H T^N) / Tr(T^N) with T = I - (beta / N) H, from the dense spectrum.
double trotter_reference(const Hamiltonian &h, double beta, std::size_t slices);

/// Exact mean of local_energy over the path distribution:
/// Tr(T^{N-1} ((H T) o M)) / Tr(T^N), where M marks the nonzero entries of
/// T, times N / N or N / (N - 1). Segments with a zero factor are excluded
/// from the sampled paths, so this differs from Tr(H T^N) / Tr(T^N) by the
/// tau (H^2)_yx terms on such segments.
double estimator_reference(const Hamiltonian &h, double beta, std::size_t slices,
                           Normalization normalization = Normalization::PerSlice);

struct PositivityResult {
    bool positive = true;
    std::optional<PathConfig> counterexample;
    Rational weight;
    std::size_t paths_checked = 0;
};

/// Exact sign of every closed path weight. Requires n N <= 20.
PositivityResult check_path_positivity(const Hamiltonian &h, const Rational &beta, std::size_t slices);

}  // namespace stoq
