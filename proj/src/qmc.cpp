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


#include "stoqkit/qmc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stoqkit/dense.hpp"
#include "stoqkit/parallel.hpp"
#include "stoqkit/random.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {

std::string PathConfig::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < slices.size(); ++i) {
        if (i) {
            out += ' ';
        }
        for (std::size_t q = 0; q < num_qubits; ++q) {
            out += ((slices[i] >> q) & 1) ? '1' : '0';
        }
    }
    return out;
}

// ------------------------------------------------------------ EntryOracle

EntryOracle::EntryOracle(const Hamiltonian &h) : num_qubits_(h.num_qubits()) {
    h.require_real();
    if (num_qubits_ > 63) {
        throw BudgetExceeded("entry oracle limited to 63 qubits");
    }
    offset_ = h.offset().get_d();
    for (const auto &t : h.terms()) {
        uint64_t x = t.string.x().to_u64();
        uint64_t z = t.string.z().to_u64();
        // Y = iXZ, so a real string carries i^{#Y} = (-1)^{#Y / 2}.
        int ys = std::popcount(x & z);
        double c = t.coeff.get_d() * ((ys / 2) % 2 ? -1.0 : 1.0);
        groups_[x].push_back({z, c});
    }
    for (const auto &[mask, terms] : groups_) {
        if (mask != 0) {
            masks_.push_back(mask);
        }
    }
}

double EntryOracle::group_value(uint64_t flip, uint64_t col) const {
    auto it = groups_.find(flip);
    if (it == groups_.end()) {
        return 0;
    }
    double v = 0;
    for (const auto &t : it->second) {
        v += (std::popcount(t.z & col) & 1) ? -t.coeff : t.coeff;
    }
    if (stoquastified_ && flip != 0) {
        v = -std::abs(v);
    }
    return v;
}

double EntryOracle::diagonal(uint64_t x) const {
    return offset_ + group_value(0, x);
}

double EntryOracle::entry(uint64_t row, uint64_t col) const {
    uint64_t flip = row ^ col;
    return flip == 0 ? diagonal(col) : group_value(flip, col);
}

void EntryOracle::neighbors(uint64_t x, std::vector<std::pair<uint64_t, double>> &out) const {
    for (uint64_t mask : masks_) {
        double v = group_value(mask, x);
        if (v != 0) {
            out.emplace_back(x ^ mask, v);
        }
    }
}

double EntryOracle::diagonal_norm_bound() const {
    double b = std::abs(offset_);
    if (auto it = groups_.find(0); it != groups_.end()) {
        for (const auto &t : it->second) {
            b += std::abs(t.coeff);
        }
    }
    return b;
}

EntryOracle stoquastify(const Hamiltonian &h) {
    EntryOracle o(h);
    o.stoquastified_ = true;
    return o;
}

// ------------------------------------------------------------ path weights

namespace {

double factor(const EntryOracle &h, uint64_t from, uint64_t to, double tau) {
    return (from == to ? 1.0 : 0.0) - tau * h.entry(to, from);
}

}  // namespace

double path_weight(const EntryOracle &h, const PathConfig &path, double tau) {
    double w = 1;
    const std::size_t n = path.size();
    for (std::size_t i = 0; i < n; ++i) {
        w *= factor(h, path.slices[i], path.slices[(i + 1) % n], tau);
    }
    return w;
}

Rational path_weight_exact(const Hamiltonian &h, const PathConfig &path, const Rational &tau) {
    Rational w = 1;
    const std::size_t n = path.size();
    for (std::size_t i = 0; i < n; ++i) {
        uint64_t a = path.slices[i];
        uint64_t b = path.slices[(i + 1) % n];
        Rational e = matrix_entry(h, BitVec::from_u64(h.num_qubits(), b), BitVec::from_u64(h.num_qubits(), a));
        w *= Rational(a == b ? 1 : 0) - tau * e;
    }
    return w;
}

std::string to_string(Normalization n) {
    return n == Normalization::PerSlice ? "1/N" : "1/(N-1)";
}

double segment_energy(const EntryOracle &h, uint64_t x, uint64_t y, double tau) {
    double den = factor(h, x, y, tau);
    if (den == 0) {
        throw ZeroWeightSegment("zero-weight segment in local energy");
    }
    // <y|H^2|x> = sum over z in {x} and the neighbors of x of H_yz H_zx.
    double h2 = h.entry(y, x) * h.diagonal(x);
    thread_local std::vector<std::pair<uint64_t, double>> nb;
    nb.clear();
    h.neighbors(x, nb);
    for (const auto &[z, hzx] : nb) {
        h2 += h.entry(y, z) * hzx;
    }
    return (h.entry(y, x) - tau * h2) / den;
}

double local_energy(const EntryOracle &h, const PathConfig &path, double tau, Normalization normalization) {
    const std::size_t n = path.size();
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s += segment_energy(h, path.slices[i], path.slices[(i + 1) % n], tau);
    }
    return s / static_cast<double>(normalization == Normalization::PerSlice ? n : n - 1);
}

// -------------------------------------------------------------- sampler

std::string to_string(QmcMode m) {
    return m == QmcMode::Direct ? "direct" : "reweighted";
}

void QmcParams::validate() const {
    if (!(beta > 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be positive");
    }
    if (slices < 2) {
        throw std::invalid_argument("at least 2 Trotter slices are required");
    }
    if (thinning == 0 || chains == 0) {
        throw std::invalid_argument("thinning and chains must be positive");
    }
    if (sweeps / thinning < kQmcBatches) {
        throw std::invalid_argument("need at least " + std::to_string(kQmcBatches) + " samples per chain");
    }
    if (!(single_flip_fraction >= 0 && single_flip_fraction <= 1)) {
        throw std::invalid_argument("single_flip_fraction must lie in [0, 1]");
    }
}

nlohmann::json QmcParams::to_json() const {
    return {{"beta", beta},
            {"slices", slices},
            {"sweeps", sweeps},
            {"burn_in", burn_in},
            {"thinning", thinning},
            {"seed", seed},
            {"mode", to_string(mode)},
            {"normalization", to_string(normalization)},
            {"single_flip_fraction", single_flip_fraction},
            {"chains", chains}};
}

nlohmann::json QmcResult::to_json() const {
    return {{"energy", energy},
            {"stderr", energy_stderr},
            {"avg_sign", avg_sign},
            {"sign_stderr", sign_stderr},
            {"acceptance", acceptance},
            {"samples", samples},
            {"sweeps", params.sweeps},
            {"seed", params.seed},
            {"beta", params.beta},
            {"slices", params.slices},
            {"mode", to_string(params.mode)},
            {"normalization", to_string(params.normalization)}};
}

PathConfig initial_path(const EntryOracle &h, std::size_t slices, double tau) {
    const std::size_t n = h.num_qubits();
    const uint64_t limit = uint64_t{1} << std::min<std::size_t>(n, 20);
    for (uint64_t r = 0; r < limit; ++r) {
        uint64_t x = lex_rank_to_bits(r, n);
        if (factor(h, x, x, tau) != 0) {
            return {n, std::vector<uint64_t>(slices, x)};
        }
    }
    throw std::runtime_error("no allowed constant initial path found");
}

namespace {

struct ChainOutput {
    std::vector<double> weighted;  // h * sign
    std::vector<double> signs;
    std::size_t proposed = 0;
    std::size_t accepted = 0;
};

ChainOutput run_chain(const EntryOracle &h, const QmcParams &p, SplitMix64 rng, const PathObserver &observer) {
    const double tau = p.beta / static_cast<double>(p.slices);
    const std::size_t n_slices = p.slices;
    PathConfig path = initial_path(h, n_slices, tau);
    // Without off-diagonal terms every allowed path is constant; flipping a
    // bit on every slice keeps it constant.
    std::vector<uint64_t> masks = h.flip_masks();
    bool global_moves = masks.empty();
    if (global_moves) {
        for (std::size_t q = 0; q < h.num_qubits(); ++q) {
            masks.push_back(uint64_t{1} << q);
        }
    }
    std::vector<double> seg(n_slices);
    for (std::size_t i = 0; i < n_slices; ++i) {
        seg[i] = factor(h, path.slices[i], path.slices[(i + 1) % n_slices], tau);
    }
    int negatives = static_cast<int>(std::count_if(seg.begin(), seg.end(), [](double v) { return v < 0; }));

    ChainOutput out;
    const std::size_t per_sweep = n_slices * std::max<std::size_t>(1, h.num_qubits());
    const std::size_t total = p.burn_in + p.sweeps;
    std::vector<std::size_t> touched;
    std::vector<double> fresh;
    std::vector<uint64_t> proposal(n_slices);
    for (std::size_t sweep = 0; sweep < total; ++sweep) {
        for (std::size_t step = 0; step < per_sweep && !masks.empty(); ++step) {
            uint64_t mask = masks[rng.below(masks.size())];
            std::size_t i = rng.below(n_slices);
            touched.clear();
            proposal = path.slices;
            if (global_moves) {
                for (auto &s : proposal) {
                    s ^= mask;
                }
                for (std::size_t k = 0; k < n_slices; ++k) {
                    touched.push_back(k);
                }
            } else {
                bool pair = !rng.chance(p.single_flip_fraction);
                std::size_t last = pair ? (i + 1) % n_slices : i;
                proposal[i] ^= mask;
                if (pair) {
                    proposal[last] ^= mask;
                }
                // Segments entering i and leaving last, plus the one between.
                touched.push_back((i + n_slices - 1) % n_slices);
                touched.push_back(i);
                if (pair) {
                    touched.push_back(last);
                }
                std::sort(touched.begin(), touched.end());
                touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            }
            ++out.proposed;
            fresh.clear();
            double ratio = 1;
            for (std::size_t k : touched) {
                double f = factor(h, proposal[k], proposal[(k + 1) % n_slices], tau);
                fresh.push_back(f);
                ratio *= std::abs(f) / std::abs(seg[k]);
            }
            if (ratio == 0) {
                continue;
            }
            if (ratio >= 1 || rng.uniform() < ratio) {
                ++out.accepted;
                path.slices.swap(proposal);
                for (std::size_t t = 0; t < touched.size(); ++t) {
                    negatives += (fresh[t] < 0) - (seg[touched[t]] < 0);
                    seg[touched[t]] = fresh[t];
                }
            }
        }
        if (sweep >= p.burn_in && (sweep - p.burn_in) % p.thinning == 0 &&
            out.signs.size() < p.sweeps / p.thinning) {
            int sign = (negatives % 2) ? -1 : 1;
            double e = local_energy(h, path, tau, p.normalization);
            out.weighted.push_back(sign * e);
            out.signs.push_back(sign);
            if (observer) {
                observer(path, sign);
            }
        }
    }
    return out;
}

double mean(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stderr_of(const std::vector<double> &v) {
    double m = mean(v);
    double s = 0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

}  // namespace

QmcResult run_qmc(const Hamiltonian &h, const QmcParams &params, const PathObserver &observer) {
    params.validate();
    EntryOracle oracle(h);
    const double tau = params.beta / static_cast<double>(params.slices);
    if (params.mode == QmcMode::Direct) {
        if (check_global(h).status != GlobalStatus::Stoquastic) {
            throw std::invalid_argument("direct mode needs a globally stoquastic Hamiltonian");
        }
        if (tau * oracle.diagonal_norm_bound() >= 1) {
            throw std::invalid_argument("direct mode needs tau * sum |diagonal coefficients| < 1");
        }
    }
    // |W| is the same under H and its stoquastified form, so both modes run
    // on the factors of H and track the sign separately.
    std::vector<ChainOutput> chains(params.chains);
    SplitMix64 root(params.seed);
    auto run = [&](std::size_t c) { chains[c] = run_chain(oracle, params, root.split(c), observer); };
    if (observer) {
        for (std::size_t c = 0; c < params.chains; ++c) {
            run(c);
        }
    } else {
        parallel_for(params.chains, run);
    }

    std::vector<double> weighted, signs;
    std::size_t proposed = 0, accepted = 0;
    for (const auto &c : chains) {
        weighted.insert(weighted.end(), c.weighted.begin(), c.weighted.end());
        signs.insert(signs.end(), c.signs.begin(), c.signs.end());
        proposed += c.proposed;
        accepted += c.accepted;
    }
    QmcResult r;
    r.params = params;
    r.samples = signs.size();
    r.acceptance = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0;
    const std::size_t batch = r.samples / kQmcBatches;
    std::vector<double> ratios, sign_means;
    for (std::size_t b = 0; b < kQmcBatches; ++b) {
        double ws = 0, ss = 0;
        for (std::size_t k = b * batch; k < (b + 1) * batch; ++k) {
            ws += weighted[k];
            ss += signs[k];
        }
        ratios.push_back(ws / ss);
        sign_means.push_back(ss / static_cast<double>(batch));
    }
    r.avg_sign = mean(signs);
    r.energy = std::accumulate(weighted.begin(), weighted.end(), 0.0) / std::accumulate(signs.begin(), signs.end(), 0.0);
    r.energy_stderr = stderr_of(ratios);
    r.sign_stderr = stderr_of(sign_means);
    return r;
}

// ------------------------------------------------------------ enumeration

PathConfig path_from_index(uint64_t index, std::size_t num_qubits, std::size_t slices) {
    PathConfig p{num_qubits, std::vector<uint64_t>(slices)};
    const uint64_t mask = (uint64_t{1} << num_qubits) - 1;
    for (std::size_t i = 0; i < slices; ++i) {
        p.slices[i] = (index >> (i * num_qubits)) & mask;
    }
    return p;
}

uint64_t path_index(const PathConfig &path) {
    uint64_t idx = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        idx |= path.slices[i] << (i * path.num_qubits);
    }
    return idx;
}

namespace {

void require_path_budget(std::size_t n, std::size_t slices) {
    if (slices < 2) {
        throw std::invalid_argument("at least 2 Trotter slices are required");
    }
    if (n * slices > kMaxPathEnumerationBits) {
        throw BudgetExceeded("path enumeration needs n * N <= " + std::to_string(kMaxPathEnumerationBits));
    }
}

}  // namespace

PathEnumeration enumerate_paths(const Hamiltonian &h, double beta, std::size_t slices, Normalization normalization) {
    const std::size_t n = h.num_qubits();
    require_path_budget(n, slices);
    EntryOracle oracle(h);
    const double tau = beta / static_cast<double>(slices);
    const uint64_t total = uint64_t{1} << (n * slices);
    const uint64_t chunk = 1 << 12;
    const uint64_t chunks = (total + chunk - 1) / chunk;
    struct Partial {
        double z_signed = 0, z_abs = 0, num = 0;
    };
    std::vector<Partial> parts(chunks);
    std::vector<double> weights(total, 0.0);
    parallel_for(chunks, [&](std::size_t c) {
        Partial &pt = parts[c];
        for (uint64_t idx = c * chunk; idx < std::min(total, (c + 1) * chunk); ++idx) {
            PathConfig p = path_from_index(idx, n, slices);
            double w = path_weight(oracle, p, tau);
            if (w == 0) {
                continue;
            }
            weights[idx] = w;
            pt.z_signed += w;
            pt.z_abs += std::abs(w);
            pt.num += w * local_energy(oracle, p, tau, normalization);
        }
    });
    PathEnumeration out;
    double num = 0;
    for (const auto &pt : parts) {
        out.z_signed += pt.z_signed;
        out.z_abs += pt.z_abs;
        num += pt.num;
    }
    out.energy = num / out.z_signed;
    out.avg_sign = out.z_signed / out.z_abs;
    out.probabilities.resize(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        out.probabilities[idx] = std::abs(weights[idx]) / out.z_abs;
    }
    return out;
}

ExactReference exact_reference(const Hamiltonian &h, double beta) {
    if (!(beta >= 0)) {
        throw std::invalid_argument("beta must be nonnegative");
    }
    Eigen::VectorXd e = spectrum(h);
    const std::size_t n = h.num_qubits();
    ExactReference r;
    r.ground_energy = e(0);
    double s = 0, se = 0;
    for (Eigen::Index k = 0; k < e.size(); ++k) {
        double w = std::exp(-beta * (e(k) - r.ground_energy));
        s += w;
        se += w * e(k);
    }
    r.thermal_energy = se / s;
    r.log_partition = -beta * r.ground_energy + std::log(s);
    r.partition = std::exp(r.log_partition);
    if (beta == 0) {
        r.free_energy = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.free_energy = -r.log_partition / beta;
    double gap = std::abs(r.free_energy - r.ground_energy);
    if (gap > static_cast<double>(n) / beta * (1 + 1e-12) + 1e-12) {
        throw std::logic_error("free energy bound |F - E0| <= n / beta violated");
    }
    return r;
}

double trotter_reference(const Hamiltonian &h, double beta, std::size_t slices) {
    Eigen::VectorXd e = spectrum(h);
    const double tau = beta / static_cast<double>(slices);
    double scale = 0;
    for (Eigen::Index k = 0; k < e.size(); ++k) {
        scale = std::max(scale, std::abs(1 - tau * e(k)));
    }
    double num = 0, den = 0;
    for (Eigen::Index k = 0; k < e.size(); ++k) {
        double t = std::pow((1 - tau * e(k)) / scale, static_cast<double>(slices));
        num += e(k) * t;
        den += t;
    }
    return num / den;
}

double estimator_reference(const Hamiltonian &h, double beta, std::size_t slices, Normalization normalization) {
    if (slices < 2) {
        throw std::invalid_argument("at least 2 Trotter slices are required");
    }
    Eigen::MatrixXd m = dense_matrix(h);
    const Eigen::Index dim = m.rows();
    const double tau = beta / static_cast<double>(slices);
    Eigen::MatrixXd t = Eigen::MatrixXd::Identity(dim, dim) - tau * m;
    Eigen::MatrixXd ht = m * t;
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (t(r, c) == 0) {
                ht(r, c) = 0;
            }
        }
    }
    // Rescale T so powers stay finite; the ratio is unchanged.
    double scale = t.cwiseAbs().rowwise().sum().maxCoeff();
    Eigen::MatrixXd ts = t / scale;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(dim, dim);
    for (std::size_t k = 0; k + 1 < slices; ++k) {
        power = power * ts;
    }
    double num = (power * ht).trace() / scale;
    double den = (power * ts).trace();
    double per = static_cast<double>(slices) /
                 static_cast<double>(normalization == Normalization::PerSlice ? slices : slices - 1);
    return num / den * per;
}

PositivityResult check_path_positivity(const Hamiltonian &h, const Rational &beta, std::size_t slices) {
    const std::size_t n = h.num_qubits();
    require_path_budget(n, slices);
    h.require_real();
    const Rational tau = beta / static_cast<long>(slices);
    EntryOracle oracle(h);
    std::vector<uint64_t> moves = {0};
    moves.insert(moves.end(), oracle.flip_masks().begin(), oracle.flip_masks().end());
    const uint64_t states = uint64_t{1} << n;
    // Exact sign of <x ^ move|I - tau H|x> for every state and move.
    std::vector<int8_t> sign(states * moves.size());
    for (uint64_t x = 0; x < states; ++x) {
        for (std::size_t m = 0; m < moves.size(); ++m) {
            uint64_t y = x ^ moves[m];
            Rational f = Rational(m == 0 ? 1 : 0) -
                         tau * matrix_entry(h, BitVec::from_u64(n, y), BitVec::from_u64(n, x));
            sign[x * moves.size() + m] = static_cast<int8_t>(sgn(f));
        }
    }
    auto segment_sign = [&](uint64_t x, uint64_t y) -> int {
        auto it = std::lower_bound(moves.begin() + 1, moves.end(), x ^ y);
        std::size_t m = (x == y) ? 0 : (it != moves.end() && *it == (x ^ y) ? it - moves.begin() : moves.size());
        return m == moves.size() ? 0 : sign[x * moves.size() + m];
    };
    const uint64_t total = uint64_t{1} << (n * slices);
    const uint64_t chunk = 1 << 12;
    const uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<uint64_t> first_negative(chunks, total);
    parallel_for(chunks, [&](std::size_t c) {
        for (uint64_t idx = c * chunk; idx < std::min(total, (c + 1) * chunk); ++idx) {
            PathConfig p = path_from_index(idx, n, slices);
            int s = 1;
            for (std::size_t i = 0; i < slices && s != 0; ++i) {
                s *= segment_sign(p.slices[i], p.slices[(i + 1) % slices]);
            }
            if (s < 0) {
                first_negative[c] = idx;
                return;
            }
        }
    });
    PositivityResult r;
    r.paths_checked = total;
    uint64_t worst = *std::min_element(first_negative.begin(), first_negative.end());
    if (worst < total) {
        r.positive = false;
        r.counterexample = path_from_index(worst, n, slices);
        r.weight = path_weight_exact(h, *r.counterexample, tau);
    }
    return r;
}

}  // namespace stoq
