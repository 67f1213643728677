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

#include "stoqkit/stoq_check.hpp"

#include <bit>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "stoqkit/linprog.hpp"
#include "stoqkit/parallel.hpp"
#include "stoqkit/pauli_sum.hpp"

namespace stoq {

namespace {

template <typename V>
std::pair<V, uint64_t> gray_maximize(const std::vector<uint64_t> &masks, const std::vector<V> &nums, std::size_t width) {
    std::vector<std::vector<std::size_t>> by_bit(width);
    for (std::size_t t = 0; t < masks.size(); ++t) {
        for (std::size_t j = 0; j < width; ++j) {
            if ((masks[t] >> j) & 1) {
                by_bit[j].push_back(t);
            }
        }
    }
    std::vector<int> signs(masks.size(), 1);
    V value = 0;
    for (const auto &c : nums) {
        value += c;
    }
    V best = value;
    uint64_t y = 0, key = 0, best_y = 0, best_key = 0;
    uint64_t total = width == 0 ? 1 : uint64_t{1} << width;
    for (uint64_t g = 1; g < total; ++g) {
        auto j = static_cast<std::size_t>(std::countr_zero(g));
        y ^= uint64_t{1} << j;
        key ^= uint64_t{1} << (width - 1 - j);
        for (auto t : by_bit[j]) {
            if (signs[t] > 0) {
                value -= 2 * nums[t];
            } else {
                value += 2 * nums[t];
            }
            signs[t] = -signs[t];
        }
        if (value > best || (value == best && key < best_key)) {
            best = value;
            best_y = y;
            best_key = key;
        }
    }
    return {best, best_y};
}

/// Calls fn(mask) for every subset of `positions` with at most `max_size` elements.
template <typename F>
void for_each_small_subset(const std::vector<std::size_t> &positions, std::size_t max_size, F &&fn) {
    std::vector<std::size_t> stack;
    std::function<void(std::size_t, uint64_t)> rec = [&](std::size_t start, uint64_t mask) {
        fn(mask);
        if (stack.size() == max_size) {
            return;
        }
        for (std::size_t i = start; i < positions.size(); ++i) {
            stack.push_back(i);
            rec(i + 1, mask | (uint64_t{1} << positions[i]));
            stack.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<std::size_t> bit_positions(uint64_t mask) {
    std::vector<std::size_t> out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

uint64_t deposit(uint64_t value, const std::vector<std::size_t> &positions) {
    uint64_t out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        out |= ((value >> j) & 1) << positions[j];
    }
    return out;
}

}  // namespace

PolyMax maximize(const ParityPoly &p) {
    if (p.width > 63) {
        throw BudgetExceeded("parity polynomial wider than 63 coordinates");
    }
    Integer denom = 1;
    for (const auto &[u, c] : p.coeffs) {
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<uint64_t> masks;
    std::vector<Integer> nums;
    Integer abs_total = 0;
    for (const auto &[u, c] : p.coeffs) {
        masks.push_back(u);
        Integer v = c.get_num() * (denom / c.get_den());
        abs_total += abs(v);
        nums.push_back(std::move(v));
    }
    PolyMax out;
    if (abs_total < (Integer(1) << 61)) {
        std::vector<int64_t> small;
        for (const auto &v : nums) {
            small.push_back(v.get_si());
        }
        auto [best, arg] = gray_maximize<int64_t>(masks, small, p.width);
        out.value = Rational(Integer(static_cast<long>(best)), denom);
        out.argmax = arg;
    } else {
        auto [best, arg] = gray_maximize<Integer>(masks, nums, p.width);
        out.value = Rational(best, denom);
        out.argmax = arg;
    }
    out.value.canonicalize();
    return out;
}

std::string to_string(GlobalStatus s) {
    switch (s) {
        case GlobalStatus::Stoquastic:
            return "Stoquastic";
        case GlobalStatus::NotStoquastic:
            return "NotStoquastic";
        default:
            return "Undecided";
    }
}

nlohmann::json GlobalVerdict::to_json() const {
    nlohmann::json out = {{"status", to_string(status)}, {"budget", budget}, {"budget_used", budget_used}};
    if (witness) {
        out["witness"] = {{"x", witness->first.to_string()},
                          {"y", witness->second.to_string()},
                          {"entry", to_string(witness_value)}};
    }
    if (undecided_flip) {
        out["undecided_flip"] = undecided_flip->to_string();
    }
    return out;
}

GlobalVerdict check_global(const Hamiltonian &h, std::size_t budget) {
    auto groups = flip_groups(h);
    GlobalVerdict verdict;
    verdict.budget = budget;

    struct Task {
        const FlipGroup *group;
        uint64_t rep;
    };
    std::vector<Task> tasks;
    std::vector<std::size_t> group_first_task;
    std::vector<const FlipGroup *> ordered;
    for (const auto &[s, g] : groups) {
        if (g.is_diagonal()) {
            continue;
        }
        ordered.push_back(&g);
        group_first_task.push_back(tasks.size());
        if (g.relevant.popcount() > budget) {
            continue;
        }
        for (uint64_t k = 0; k < g.num_representatives(); ++k) {
            tasks.push_back({&g, g.representative(k)});
        }
    }
    group_first_task.push_back(tasks.size());

    std::vector<PolyMax> results(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        results[i] = maximize(tasks[i].group->entry_poly(tasks[i].rep));
    });

    for (const auto &t : tasks) {
        verdict.budget_used += uint64_t{1} << t.group->free_qubits.size();
    }
    for (std::size_t gi = 0; gi < ordered.size(); ++gi) {
        const FlipGroup &g = *ordered[gi];
        if (g.relevant.popcount() > budget) {
            if (!verdict.undecided_flip) {
                verdict.undecided_flip = g.flip;
            }
            continue;
        }
        std::optional<std::size_t> best;
        BitVec best_string;
        for (std::size_t i = group_first_task[gi]; i < group_first_task[gi + 1]; ++i) {
            if (sgn(results[i].value) <= 0) {
                continue;
            }
            BitVec candidate = g.embed(tasks[i].rep, results[i].argmax);
            if (!best || results[i].value > results[*best].value ||
                (results[i].value == results[*best].value && candidate < best_string)) {
                best = i;
                best_string = candidate;
            }
        }
        if (best) {
            verdict.status = GlobalStatus::NotStoquastic;
            verdict.witness_value = results[*best].value;
            verdict.witness = std::make_pair(best_string, best_string ^ g.flip);
            verdict.undecided_flip.reset();
            return verdict;
        }
    }
    verdict.status = verdict.undecided_flip ? GlobalStatus::Undecided : GlobalStatus::Stoquastic;
    return verdict;
}

Hamiltonian TermwiseGenerator::to_hamiltonian() const {
    std::size_t n = flip.size();
    PauliSum op = PauliSum::scalar(n, Rational(1));
    if (all_pairs) {
        for (auto q : flip.ones()) {
            op = op * (PauliSum::transition(n, q, false, true) + PauliSum::transition(n, q, true, false));
        }
    } else {
        PauliSum forward = PauliSum::scalar(n, Rational(1));
        for (auto q : flip.ones()) {
            bool a = representative.get(q);
            forward = forward * PauliSum::transition(n, q, !a, a);
        }
        op = forward + forward.adjoint();
    }
    for (auto q : support.ones()) {
        op = op * PauliSum::projector(n, q, assignment.get(q));
    }
    return op.scaled(GaussianRational(-weight)).to_hamiltonian();
}

Hamiltonian TermwiseCertificate::reconstruct(std::size_t num_qubits) const {
    Hamiltonian out(num_qubits);
    out.add(diagonal);
    for (const auto &g : generators) {
        out.add(g.to_hamiltonian());
    }
    return out;
}

nlohmann::json TermwiseCertificate::to_json() const {
    nlohmann::json out = {{"verdict", yes ? "YES" : "NO"}, {"m", m}};
    if (yes) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto &g : generators) {
            gens.push_back({{"flip", g.flip.to_string()},
                            {"representative", g.representative.to_string()},
                            {"support", g.support.to_string()},
                            {"assignment", g.assignment.to_string()},
                            {"weight", to_string(g.weight)},
                            {"all_pairs", g.all_pairs}});
        }
        out["generators"] = gens;
        out["diagonal"] = stoq::to_json(diagonal);
    } else {
        if (failing_flip) {
            out["failing_flip"] = failing_flip->to_string();
        }
        if (failing_representative) {
            out["failing_representative"] = failing_representative->to_string();
        }
        out["reason"] = reason;
        if (!farkas.empty()) {
            nlohmann::json y = nlohmann::json::array();
            for (const auto &v : farkas) {
                y.push_back(to_string(v));
            }
            out["farkas"] = y;
        }
    }
    return out;
}

namespace {

struct TermwiseTaskResult {
    bool ok = true;
    std::string reason;
    std::vector<TermwiseGenerator> generators;
    std::vector<Rational> farkas;
};

// Generators that agree on (S, T, z, weight) across all 2^{|S|-1} pairs of a
// flip group collapse into a single all-pairs generator.
std::vector<TermwiseGenerator> merge_pair_generators(std::vector<TermwiseGenerator> gens) {
    using Key = std::tuple<std::string, std::string, std::string, std::string>;
    auto key = [](const TermwiseGenerator &g) {
        return Key{g.flip.to_string(), g.support.to_string(), g.assignment.to_string(),
                   to_string(g.weight)};
    };
    std::map<Key, std::set<std::string>> reps;
    for (const auto &g : gens) {
        reps[key(g)].insert(g.representative.to_string());
    }
    std::vector<TermwiseGenerator> out;
    std::set<Key> emitted;
    for (auto &g : gens) {
        Key k = key(g);
        std::size_t pairs = std::size_t{1} << (g.flip.popcount() - 1);
        if (reps[k].size() != pairs) {
            out.push_back(std::move(g));
        } else if (emitted.insert(k).second) {
            g.representative = BitVec(g.flip.size());
            g.all_pairs = true;
            out.push_back(std::move(g));
        }
    }
    return out;
}

TermwiseGenerator make_generator(const FlipGroup &g, uint64_t a, uint64_t t_local, uint64_t z_local,
                                 Rational weight) {
    TermwiseGenerator gen;
    gen.flip = g.flip;
    gen.representative = g.embed(a, 0);
    std::size_t n = g.flip.size();
    gen.support = BitVec(n);
    scatter_bits(gen.support, g.free_qubits, t_local);
    gen.assignment = BitVec(n);
    scatter_bits(gen.assignment, g.free_qubits, z_local);
    gen.weight = std::move(weight);
    return gen;
}

TermwiseTaskResult solve_pair(const FlipGroup &g, uint64_t a, std::size_t m, const TermwiseOptions &options) {
    TermwiseTaskResult res;
    ParityPoly f = g.entry_poly(a);
    if (f.is_zero()) {
        return res;
    }
    std::size_t s = g.flip_qubits.size();
    if (s > m) {
        res.ok = false;
        res.reason = "flip set larger than m";
        return res;
    }
    std::size_t d = m - s;
    if (f.degree() > d) {
        res.ok = false;
        res.reason = "entry function has parity degree above m - |S|";
        return res;
    }
    uint64_t v = f.support();
    auto pos = bit_positions(v);
    std::size_t r = pos.size();

    if (r <= d && !options.force_lp) {
        // Subcube indicators on all of V span the nonnegative orthant.
        for (uint64_t z = 0; z < (uint64_t{1} << r); ++z) {
            uint64_t y = deposit(z, pos);
            Rational val = f.eval(y);
            if (sgn(val) > 0) {
                res.ok = false;
                res.reason = "positive off-diagonal entry";
                res.generators.clear();
                return res;
            }
            if (sgn(val) < 0) {
                res.generators.push_back(make_generator(g, a, v, y, -val));
            }
        }
        return res;
    }

    // Variables q_{T,z} = p_{T,z} 2^{-|T|}; rows indexed by U with |U| <= d.
    std::vector<uint64_t> row_masks;
    std::unordered_map<uint64_t, std::size_t> row_index;
    for_each_small_subset(pos, d, [&](uint64_t u) {
        row_index.emplace(u, row_masks.size());
        row_masks.push_back(u);
    });
    std::vector<std::pair<uint64_t, uint64_t>> vars;
    for (auto t : row_masks) {
        auto tpos = bit_positions(t);
        for (uint64_t z = 0; z < (uint64_t{1} << tpos.size()); ++z) {
            vars.emplace_back(t, deposit(z, tpos));
        }
    }
    if (row_masks.size() * vars.size() > 20'000'000) {
        throw BudgetExceeded("termwise cone-membership system too large");
    }
    RationalMatrix a_mat(row_masks.size(), std::vector<Rational>(vars.size()));
    for (std::size_t j = 0; j < vars.size(); ++j) {
        auto [t, z] = vars[j];
        // Rows U subset of T.
        for (uint64_t u = t;; u = (u - 1) & t) {
            a_mat[row_index.at(u)][j] = (std::popcount(z & u) & 1) ? -1 : 1;
            if (u == 0) {
                break;
            }
        }
    }
    std::vector<Rational> b(row_masks.size());
    for (const auto &[u, c] : f.coeffs) {
        b[row_index.at(u)] = -c;
    }
    auto lp = solve_feasibility(a_mat, b);
    if (!lp.feasible) {
        res.ok = false;
        res.reason = "entry function outside the m-local stoquastic cone";
        res.farkas = std::move(lp.farkas);
        return res;
    }
    for (std::size_t j = 0; j < vars.size(); ++j) {
        if (sgn(lp.solution[j]) > 0) {
            auto [t, z] = vars[j];
            Rational w = lp.solution[j];
            w *= Rational(Integer(1) << std::popcount(t));
            res.generators.push_back(make_generator(g, a, t, z, w));
        }
    }
    return res;
}

}  // namespace

TermwiseCertificate check_termwise(const Hamiltonian &h, std::size_t m, const TermwiseOptions &options) {
    h.require_real();
    std::size_t n = h.num_qubits();
    TermwiseCertificate cert;
    cert.m = m;
    cert.diagonal = Hamiltonian(n);
    cert.diagonal.add(h.offset(), PauliString(n));
    for (const auto &t : h.terms()) {
        if (!t.string.is_diagonal()) {
            continue;
        }
        cert.diagonal.add(t.coeff, t.string);
        if (t.string.weight() > m && !cert.failing_flip) {
            cert.failing_flip = BitVec(n);
            cert.failing_representative = BitVec(n);
            cert.reason = "diagonal term " + t.string.to_sparse_string() + " is not m-local";
        }
    }
    if (cert.failing_flip) {
        return cert;
    }

    auto groups = flip_groups(h);
    struct Task {
        const FlipGroup *group;
        uint64_t rep;
    };
    std::vector<Task> tasks;
    for (const auto &[s, g] : groups) {
        if (g.is_diagonal()) {
            continue;
        }
        for (uint64_t k = 0; k < g.num_representatives(); ++k) {
            tasks.push_back({&g, g.representative(k)});
        }
    }
    std::vector<TermwiseTaskResult> results(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        results[i] = solve_pair(*tasks[i].group, tasks[i].rep, m, options);
    });
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!results[i].ok) {
            cert.failing_flip = tasks[i].group->flip;
            cert.failing_representative = tasks[i].group->embed(tasks[i].rep, 0);
            cert.reason = results[i].reason;
            cert.farkas = std::move(results[i].farkas);
            return cert;
        }
    }
    for (auto &r : results) {
        for (auto &gen : r.generators) {
            cert.generators.push_back(std::move(gen));
        }
    }
    cert.generators = merge_pair_generators(std::move(cert.generators));
    cert.yes = true;
    return cert;
}

}  // namespace stoq
