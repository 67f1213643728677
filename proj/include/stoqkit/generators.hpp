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

#include <vector>

#include "stoqkit/curing.hpp"
#include "stoqkit/hamiltonian.hpp"
#include "stoqkit/random.hpp"
#include "stoqkit/reductions.hpp"

namespace stoq {

/// -J sum Z_i Z_{i+1} - g sum X_i.
Hamiltonian tfim(std::size_t n, const Rational &j = 1, const Rational &g = 1, bool closed = false);

/// sum_i a X_i X_{i+1} + b Y_i Y_{i+1} + c Z_i Z_{i+1}.
Hamiltonian xyz_translational(std::size_t n, const Rational &a, const Rational &b, const Rational &c,
                              bool closed = false);

/// Uniform integer in [-range, range] divided by denom.
Rational random_rational(SplitMix64 &rng, int range, int denom = 1);

/// Interaction supports of size <= k where every qubit lies in at most
/// max_degree of them. Each qubit is covered by at least one support when
/// max_degree > 0.
std::vector<std::vector<std::size_t>> random_supports(std::size_t n, std::size_t k, std::size_t max_degree,
                                                      SplitMix64 &rng);

/// Sum over the supports of random nonnegative multiples of
/// -(|a><a~| + |a~><a|)_S (x) |z><z|_T (S, T disjoint inside the support)
/// and random diagonal strings; globally stoquastic by construction. With
/// probability perturb, one random real Pauli string on a support is added.
Hamiltonian random_local_instance(std::size_t n, const std::vector<std::vector<std::size_t>> &supports,
                                  SplitMix64 &rng, double perturb = 0.5);

/// Random real Hamiltonian with `terms` Pauli strings of weight <= k.
Hamiltonian random_real_hamiltonian(std::size_t n, std::size_t terms, std::size_t k, SplitMix64 &rng,
                                    int range = 3);

/// Random graph: each edge with probability p, J = +-1, fields on or off.
IsingInstance random_ising(std::size_t n, SplitMix64 &rng, double p = 0.4);

/// Random CNF with clause widths 1..width over distinct variables.
CnfFormula random_cnf(std::size_t n, std::size_t l, std::size_t m, std::size_t width, SplitMix64 &rng);

/// Random XYZ chain with integer couplings in [-range, range].
XyzChain random_xyz_chain(std::size_t n, Boundary boundary, SplitMix64 &rng, int range = 3);

/// Random open chain accepted by cure_xyz_clifford: every even-labelled
/// edge (or every odd-labelled one) has a_xx a_yy a_zz >= 0.
XyzChain random_eligible_chain(std::size_t n, SplitMix64 &rng, int range = 3);

}  // namespace stoq
