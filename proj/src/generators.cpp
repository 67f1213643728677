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


#include "stoqkit/generators.hpp"

#include <algorithm>

#include "stoqkit/pauli_sum.hpp"

namespace stoq {

namespace {

PauliString pair_string(std::size_t n, std::size_t p, std::size_t q, Letter l) {
    PauliString s(n);
    s.set_letter(p, l);
    s.set_letter(q, l);
    return s;
}

}  // namespace

Hamiltonian tfim(std::size_t n, const Rational &j, const Rational &g, bool closed) {
    Hamiltonian h(n);
    std::size_t edges = closed ? n : (n == 0 ? 0 : n - 1);
    for (std::size_t i = 0; i < edges; ++i) {
        h.add(-j, pair_string(n, i, (i + 1) % n, Letter::Z));
    }
    for (std::size_t i = 0; i < n; ++i) {
        h.add(-g, PauliString::single(n, i, Letter::X));
    }
    h.name = "tfim";
    return h;
}

Hamiltonian xyz_translational(std::size_t n, const Rational &a, const Rational &b, const Rational &c, bool closed) {
    XyzChain chain;
    chain.n = n;
    chain.boundary = closed ? Boundary::Closed : Boundary::Open;
    chain.couplings.assign(chain.num_edges(), XyzCoupling{a, b, c});
    Hamiltonian h = chain.to_hamiltonian();
    h.name = "xyz";
    return h;
}

Rational random_rational(SplitMix64 &rng, int range, int denom) {
    Rational r(static_cast<long>(rng.below(2 * range + 1)) - range, denom);
    r.canonicalize();
    return r;
}

std::vector<std::vector<std::size_t>> random_supports(std::size_t n, std::size_t k, std::size_t max_degree,
                                                      SplitMix64 &rng) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> degree(n, 0);
    if (max_degree == 0 || k == 0) {
        return out;
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (degree[q] > 0) {
            continue;
        }
        std::vector<std::size_t> support = {q};
        std::size_t want = 1 + rng.below(k);
        for (std::size_t attempt = 0; attempt < 4 * n && support.size() < want; ++attempt) {
            std::size_t p = rng.below(n);
            if (degree[p] < max_degree && std::find(support.begin(), support.end(), p) == support.end()) {
                support.push_back(p);
            }
        }
        std::sort(support.begin(), support.end());
        for (auto p : support) {
            ++degree[p];
        }
        out.push_back(support);
    }
    return out;
}

Hamiltonian random_local_instance(std::size_t n, const std::vector<std::vector<std::size_t>> &supports,
                                  SplitMix64 &rng, double perturb) {
    PauliSum sum(n);
    for (const auto &support : supports) {
        std::size_t w = support.size();
        std::size_t pieces = 1 + rng.below(3);
        for (std::size_t k = 0; k < pieces; ++k) {
            uint64_t flip = 1 + rng.below((uint64_t{1} << w) - 1);
            uint64_t projected = rng.below(uint64_t{1} << w) & ~flip;
            uint64_t a = rng.below(uint64_t{1} << w);
            PauliSum up = PauliSum::scalar(n, Rational(1));
            for (std::size_t i = 0; i < w; ++i) {
                std::size_t q = support[i];
                bool bit = (a >> i) & 1;
                if ((flip >> i) & 1) {
                    up = up * PauliSum::transition(n, q, !bit, bit);
                } else if ((projected >> i) & 1) {
                    up = up * PauliSum::projector(n, q, bit);
                }
            }
            Rational c(static_cast<long>(1 + rng.below(3)));
            sum -= (up + up.adjoint()).scaled(c);
        }
        PauliString diag(n);
        for (auto q : support) {
            if (rng.chance(0.5)) {
                diag.set_letter(q, Letter::Z);
            }
        }
        sum.add(random_rational(rng, 2), diag);
    }
    Hamiltonian h = sum.to_hamiltonian();
    if (!supports.empty() && rng.chance(perturb)) {
        const auto &support = supports[rng.below(supports.size())];
        PauliString p(n);
        for (auto q : support) {
            p.set_letter(q, static_cast<Letter>(rng.below(4)));
        }
        for (auto q : support) {
            if (!p.is_real() && p.letter(q) == Letter::Y) {
                p.set_letter(q, Letter::X);
            }
        }
        h.add(rng.chance(0.5) ? 1 : -1, p);
    }
    h.name = "random_local";
    return h;
}

Hamiltonian random_real_hamiltonian(std::size_t n, std::size_t terms, std::size_t k, SplitMix64 &rng, int range) {
    Hamiltonian h(n);
    std::size_t attempts = 0;
    while (n > 0 && h.terms().size() < terms && attempts++ < 50 * terms + 50) {
        PauliString p(n);
        std::size_t w = 1 + rng.below(std::min(k, n));
        for (std::size_t i = 0; i < w; ++i) {
            p.set_letter(rng.below(n), static_cast<Letter>(1 + rng.below(3)));
        }
        if (!p.is_real() || p.is_identity()) {
            continue;
        }
        Rational c = random_rational(rng, range);
        h.add(sgn(c) == 0 ? Rational(1) : c, p);
    }
    h.name = "random_real";
    return h;
}

IsingInstance random_ising(std::size_t n, SplitMix64 &rng, double p) {
    IsingInstance g;
    g.num_vertices = n;
    g.unit_fields = rng.chance(0.5);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.chance(p)) {
                g.edges.push_back({u, v, rng.chance(0.5) ? Rational(1) : Rational(-1)});
            }
        }
    }
    return g;
}

CnfFormula random_cnf(std::size_t n, std::size_t l, std::size_t m, std::size_t width, SplitMix64 &rng) {
    CnfFormula f;
    f.n = n;
    f.l = l;
    const std::size_t vars = n + l;
    if (vars == 0) {
        return f;
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t w = 1 + rng.below(std::min(width, vars));
        std::vector<int> clause;
        while (clause.size() < w) {
            int v = static_cast<int>(1 + rng.below(vars));
            if (std::none_of(clause.begin(), clause.end(), [v](int lit) { return std::abs(lit) == v; })) {
                clause.push_back(rng.chance(0.5) ? v : -v);
            }
        }
        f.clauses.push_back(clause);
    }
    return f;
}

XyzChain random_xyz_chain(std::size_t n, Boundary boundary, SplitMix64 &rng, int range) {
    XyzChain c;
    c.n = n;
    c.boundary = boundary;
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
        c.couplings.push_back(
            {random_rational(rng, range), random_rational(rng, range), random_rational(rng, range)});
    }
    return c;
}

XyzChain random_eligible_chain(std::size_t n, SplitMix64 &rng, int range) {
    XyzChain c = random_xyz_chain(n, Boundary::Open, rng, range);
    std::size_t parity = rng.below(2);
    for (std::size_t e = 0; e < c.num_edges(); ++e) {
        if ((e + 1) % 2 == parity && sgn(c.couplings[e].product()) < 0) {
            c.couplings[e].xx = -c.couplings[e].xx;
        }
    }
    return c;
}

}  // namespace stoq
