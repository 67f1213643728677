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


#include "stoqkit/curing.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "stoqkit/parallel.hpp"

namespace stoq {

// ---------------------------------------------------------------- Hadamard

std::optional<BitVec> search_hadamard_mask(const Hamiltonian &h, std::size_t max_n, std::size_t budget) {
    std::size_t n = h.num_qubits();
    if (n > max_n) {
        throw BudgetExceeded("Hadamard mask search over " + std::to_string(n) + " qubits exceeds max_n " +
                             std::to_string(max_n));
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t q = 0; q < n; ++q) {
        groups[q] = {q};
    }
    return search_hadamard_mask_grouped(h, groups, max_n, budget);
}

std::optional<BitVec> search_hadamard_mask_grouped(const Hamiltonian &h,
                                                   const std::vector<std::vector<std::size_t>> &groups,
                                                   std::size_t max_bits, std::size_t budget) {
    h.require_real();
    std::size_t n = h.num_qubits();
    std::size_t bits = groups.size();
    if (bits > max_bits || bits >= 63) {
        throw BudgetExceeded("Hadamard mask search over " + std::to_string(bits) + " mask bits exceeds the limit");
    }
    for (const auto &g : groups) {
        for (std::size_t q : g) {
            if (q >= n) {
                throw std::invalid_argument("mask group references qubit " + std::to_string(q));
            }
        }
    }
    auto mask_of = [&](uint64_t rank) {
        uint64_t g = lex_rank_to_bits(rank, bits);
        BitVec mask(n);
        for (std::size_t i = 0; i < bits; ++i) {
            if ((g >> i) & 1) {
                for (std::size_t q : groups[i]) {
                    mask.set(q, true);
                }
            }
        }
        return mask;
    };

    const uint64_t total = uint64_t{1} << bits;
    const uint64_t chunk = 64;
    const uint64_t num_chunks = (total + chunk - 1) / chunk;
    const uint64_t batch = std::max<uint64_t>(1, worker_count() * 4);

    // Per chunk: first rank that decided the scan and whether it was a hit.
    struct Event {
        uint64_t rank = 0;
        bool found = false;
        bool undecided = false;
    };
    for (uint64_t start = 0; start < num_chunks; start += batch) {
        uint64_t count = std::min(batch, num_chunks - start);
        std::vector<Event> events(count);
        parallel_for(count, [&](std::size_t i) {
            uint64_t lo = (start + i) * chunk;
            uint64_t hi = std::min(total, lo + chunk);
            for (uint64_t r = lo; r < hi; ++r) {
                GlobalVerdict v = check_global(conjugate_hadamard(h, mask_of(r)), budget);
                if (v.status == GlobalStatus::Stoquastic) {
                    events[i] = {r, true, false};
                    return;
                }
                if (v.status == GlobalStatus::Undecided) {
                    events[i] = {r, false, true};
                    return;
                }
            }
        });
        for (const Event &e : events) {
            if (e.found) {
                return mask_of(e.rank);
            }
            if (e.undecided) {
                throw UndecidedError("check_global undecided for Hadamard mask " + mask_of(e.rank).to_string());
            }
        }
    }
    return std::nullopt;
}

// -------------------------------------------------------------- XYZ chains

void XyzChain::validate() const {
    if (boundary == Boundary::Closed && n < 3) {
        throw std::invalid_argument("closed chain needs at least 3 sites");
    }
    if (couplings.size() != num_edges()) {
        throw std::invalid_argument("chain with " + std::to_string(n) + " sites has " +
                                    std::to_string(couplings.size()) + " couplings, expected " +
                                    std::to_string(num_edges()));
    }
}

Hamiltonian XyzChain::to_hamiltonian() const {
    validate();
    Hamiltonian h(n);
    for (std::size_t e = 0; e < couplings.size(); ++e) {
        std::size_t i = e;
        std::size_t j = (e + 1) % n;
        const Letter letters[3] = {Letter::X, Letter::Y, Letter::Z};
        const Rational *coeffs[3] = {&couplings[e].xx, &couplings[e].yy, &couplings[e].zz};
        for (int a = 0; a < 3; ++a) {
            PauliString p(n);
            p.set_letter(i, letters[a]);
            p.set_letter(j, letters[a]);
            h.add(*coeffs[a], p);
        }
    }
    return h;
}

namespace {

std::vector<std::string> split_tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

Rational parse_coefficient(const std::string &tok, std::size_t line_no) {
    if (tok.find_first_of("ij") != std::string::npos) {
        throw ParseError(ParseError::Kind::NonRealCoefficient, line_no, "non-real coupling '" + tok + "'");
    }
    auto q = parse_rational(tok);
    if (!q) {
        throw ParseError(ParseError::Kind::Malformed, line_no, "bad coupling '" + tok + "'");
    }
    return *q;
}

std::size_t parse_index(const std::string &tok, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty() || tok[0] == '-') {
        throw ParseError(ParseError::Kind::Malformed, line_no, "bad index '" + tok + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

XyzChain parse_chain(std::string_view text) {
    XyzChain chain;
    std::optional<std::size_t> sites;
    std::map<std::size_t, XyzCoupling> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto tok = split_tokens(line);
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "sites") {
            if (tok.size() != 2) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'sites N'");
            }
            sites = parse_index(tok[1], line_no);
        } else if (tok[0] == "boundary") {
            if (tok.size() != 2 || (tok[1] != "open" && tok[1] != "closed")) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'boundary open|closed'");
            }
            chain.boundary = tok[1] == "open" ? Boundary::Open : Boundary::Closed;
        } else {
            if (tok.size() != 4) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'i a_xx a_yy a_zz'");
            }
            std::size_t e = parse_index(tok[0], line_no);
            if (edges.count(e)) {
                throw ParseError(ParseError::Kind::RepeatedIndex, line_no, "edge " + tok[0] + " repeated");
            }
            edges[e] = {parse_coefficient(tok[1], line_no), parse_coefficient(tok[2], line_no),
                        parse_coefficient(tok[3], line_no)};
        }
    }
    std::size_t max_edge = edges.empty() ? 0 : edges.rbegin()->first + 1;
    if (sites) {
        chain.n = *sites;
    } else {
        chain.n = chain.boundary == Boundary::Open ? (edges.empty() ? 0 : max_edge + 1) : max_edge;
    }
    if (max_edge > chain.num_edges()) {
        throw ParseError(ParseError::Kind::QubitOutOfRange, line_no,
                         "edge " + std::to_string(max_edge - 1) + " outside a chain of " + std::to_string(chain.n) +
                             " sites");
    }
    chain.couplings.assign(chain.num_edges(), XyzCoupling{});
    for (const auto &[e, c] : edges) {
        chain.couplings[e] = c;
    }
    try {
        chain.validate();
    } catch (const std::invalid_argument &err) {
        throw ParseError(ParseError::Kind::Malformed, line_no, err.what());
    }
    return chain;
}

std::string serialize_chain(const XyzChain &chain) {
    std::ostringstream out;
    out << "sites " << chain.n << "\n";
    out << "boundary " << (chain.boundary == Boundary::Open ? "open" : "closed") << "\n";
    for (std::size_t e = 0; e < chain.couplings.size(); ++e) {
        const auto &c = chain.couplings[e];
        out << e << " " << to_string(c.xx) << " " << to_string(c.yy) << " " << to_string(c.zz) << "\n";
    }
    return out.str();
}

const std::vector<SignedPermutation> &SignedPermutation::all() {
    static const std::vector<SignedPermutation> group = [] {
        std::vector<SignedPermutation> out;
        std::array<int, 3> perm{0, 1, 2};
        do {
            for (int b = 0; b < 8; ++b) {
                SignedPermutation s;
                s.perm = perm;
                for (int i = 0; i < 3; ++i) {
                    s.sign[i] = ((b >> (2 - i)) & 1) ? -1 : 1;
                }
                if (s.determinant() == 1) {
                    out.push_back(s);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return group;
}

int SignedPermutation::determinant() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            inversions += perm[i] > perm[j];
        }
    }
    int d = inversions % 2 ? -1 : 1;
    return d * sign[0] * sign[1] * sign[2];
}

std::pair<SignedPauli, SignedPauli> SignedPermutation::images(std::size_t num_qubits, std::size_t qubit) const {
    const Letter axis_letter[3] = {Letter::X, Letter::Y, Letter::Z};
    auto column = [&](int a) {
        for (int r = 0; r < 3; ++r) {
            if (perm[r] == a) {
                return SignedPauli{PauliString::single(num_qubits, qubit, axis_letter[r]), sign[r] < 0};
            }
        }
        throw std::logic_error("signed permutation without column");
    };
    return {column(0), column(2)};
}

std::string SignedPermutation::to_string() const {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
        if (r) {
            out += ";";
        }
        for (int c = 0; c < 3; ++c) {
            int v = entry(r, c);
            out += c ? " " : "";
            out += v > 0 ? "+1" : (v < 0 ? "-1" : "0");
        }
    }
    return out + "]";
}

std::optional<XyzCoupling> transform_coupling(const XyzCoupling &c, const SignedPermutation &left,
                                              const SignedPermutation &right) {
    const Rational *axis[3] = {&c.xx, &c.yy, &c.zz};
    Rational out[3];
    for (int a = 0; a < 3; ++a) {
        if (sgn(*axis[a]) == 0) {
            continue;
        }
        int r = 0;
        int s = 0;
        while (left.perm[r] != a) {
            ++r;
        }
        while (right.perm[s] != a) {
            ++s;
        }
        if (r != s) {
            return std::nullopt;
        }
        out[r] = *axis[a] * left.sign[r] * right.sign[s];
    }
    return XyzCoupling{out[0], out[1], out[2]};
}

bool satisfies_curing_criterion(const XyzCoupling &c) {
    return c.xx <= -abs(c.yy);
}

namespace {

std::size_t edge_right(const XyzChain &chain, std::size_t e) {
    return (e + 1) % chain.n;
}

bool edge_ok(const XyzChain &chain, std::size_t e, std::size_t p, std::size_t q) {
    const auto &group = SignedPermutation::all();
    auto t = transform_coupling(chain.couplings[e], group[p], group[q]);
    return t && satisfies_curing_criterion(*t);
}

}  // namespace

std::optional<SingleQubitCure> search_xyz_single_qubit(const XyzChain &chain) {
    chain.validate();
    const auto &group = SignedPermutation::all();
    const std::size_t g = group.size();
    const std::size_t n = chain.n;
    const std::size_t path_edges = n == 0 ? 0 : n - 1;

    // compat[e][p * g + q] for the edge (e, e+1).
    std::vector<std::vector<char>> compat(chain.num_edges(), std::vector<char>(g * g));
    for (std::size_t e = 0; e < chain.num_edges(); ++e) {
        for (std::size_t p = 0; p < g; ++p) {
            for (std::size_t q = 0; q < g; ++q) {
                compat[e][p * g + q] = edge_ok(chain, e, p, q);
            }
        }
    }

    std::optional<std::vector<std::size_t>> found;
    std::size_t first_choices = n == 0 ? 1 : (chain.boundary == Boundary::Closed ? g : 1);
    for (std::size_t p0 = 0; p0 < first_choices && !found; ++p0) {
        if (n == 0) {
            found.emplace();
            break;
        }
        // feas[i][p]: sites i..n-1 can be completed from p at site i.
        std::vector<std::vector<char>> feas(n, std::vector<char>(g, 0));
        for (std::size_t p = 0; p < g; ++p) {
            feas[n - 1][p] = chain.boundary == Boundary::Closed ? compat[n - 1][p * g + p0] : 1;
        }
        for (std::size_t i = n - 1; i-- > 0;) {
            for (std::size_t p = 0; p < g; ++p) {
                for (std::size_t q = 0; q < g && !feas[i][p]; ++q) {
                    feas[i][p] = compat[i][p * g + q] && feas[i + 1][q];
                }
            }
        }
        std::vector<std::size_t> assign(n);
        bool ok = false;
        if (chain.boundary == Boundary::Closed) {
            ok = feas[0][p0];
            assign[0] = p0;
        } else {
            for (std::size_t p = 0; p < g && !ok; ++p) {
                if (feas[0][p]) {
                    assign[0] = p;
                    ok = true;
                }
            }
        }
        if (!ok) {
            continue;
        }
        for (std::size_t i = 0; i < path_edges; ++i) {
            for (std::size_t q = 0; q < g; ++q) {
                if (compat[i][assign[i] * g + q] && feas[i + 1][q]) {
                    assign[i + 1] = q;
                    break;
                }
            }
        }
        found = assign;
    }
    if (!found) {
        return std::nullopt;
    }

    SingleQubitCure cure;
    cure.assignment = *found;
    CliffordTableau tableau(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [xi, zi] = group[cure.assignment[i]].images(n, i);
        tableau.set_x_image(i, xi);
        tableau.set_z_image(i, zi);
    }
    XyzChain image = chain;
    for (std::size_t e = 0; e < chain.num_edges(); ++e) {
        auto t = transform_coupling(chain.couplings[e], group[cure.assignment[e]],
                                    group[cure.assignment[edge_right(chain, e)]]);
        if (!t || !satisfies_curing_criterion(*t)) {
            throw InternalValidationFailure("assignment violates the curing criterion on edge " + std::to_string(e));
        }
        cure.transformed_couplings.push_back(*t);
        image.couplings[e] = *t;
    }
    cure.tableau = tableau;
    cure.transformed = conjugate_clifford(chain.to_hamiltonian(), tableau);
    if (!(cure.transformed == image.to_hamiltonian())) {
        throw InternalValidationFailure("conjugated chain differs from the transformed couplings");
    }
    if (check_global(cure.transformed).status != GlobalStatus::Stoquastic) {
        throw InternalValidationFailure("single-qubit cure is not stoquastic");
    }
    return cure;
}

std::optional<std::vector<std::size_t>> brute_force_xyz_single_qubit(const XyzChain &chain) {
    chain.validate();
    const std::size_t g = SignedPermutation::all().size();
    const std::size_t n = chain.n;
    std::vector<std::size_t> assign(n, 0);
    // Depth-first in index order; edges are checked once both ends are set.
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n) {
            return true;
        }
        for (std::size_t p = 0; p < g; ++p) {
            assign[i] = p;
            if (i > 0 && !edge_ok(chain, i - 1, assign[i - 1], p)) {
                continue;
            }
            if (chain.boundary == Boundary::Closed && i == n - 1 && !edge_ok(chain, n - 1, p, assign[0])) {
                continue;
            }
            if (extend(i + 1)) {
                return true;
            }
        }
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return assign;
}

// ------------------------------------------------------- Clifford images

namespace {

BitVec symplectic_vector(const PauliString &p) {
    std::size_t n = p.num_qubits();
    BitVec v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        v.set(q, p.x().get(q));
        v.set(n + q, p.z().get(q));
    }
    return v;
}

PhasedPauli identity_phased(std::size_t n) {
    return {PauliString(n), 0};
}

struct ReducedRow {
    BitVec vec;
    std::size_t pivot = 0;
};

/// Reduces v against rows (each row is zero at the pivots of earlier rows).
/// Calls on_use(i) for every row folded in.
template <typename F>
void reduce(BitVec &v, const std::vector<ReducedRow> &rows, F on_use) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (v.get(rows[i].pivot)) {
            v ^= rows[i].vec;
            on_use(i);
        }
    }
}

/// Some Pauli v with <v, w_i> = r_i for every constraint (symplectic form).
/// With nonzero set, v must not be the identity.
std::optional<PauliString> solve_symplectic(std::size_t n, const std::vector<std::pair<PauliString, bool>> &cons,
                                            bool nonzero) {
    const std::size_t cols = 2 * n;
    std::vector<BitVec> rows;
    std::vector<std::size_t> pivots;
    for (const auto &[w, r] : cons) {
        BitVec row(cols + 1);
        for (std::size_t q = 0; q < n; ++q) {
            row.set(q, w.z().get(q));
            row.set(n + q, w.x().get(q));
        }
        row.set(cols, r);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (row.get(pivots[i])) {
                row ^= rows[i];
            }
        }
        std::size_t p = row.first_one();
        if (p >= cols) {
            if (p == cols) {
                return std::nullopt;
            }
            continue;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].get(p)) {
                rows[i] ^= row;
            }
        }
        rows.push_back(row);
        pivots.push_back(p);
    }
    BitVec v(cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        v.set(pivots[i], rows[i].get(cols));
    }
    if (nonzero && v.none()) {
        std::vector<char> is_pivot(cols, 0);
        for (std::size_t p : pivots) {
            is_pivot[p] = 1;
        }
        std::size_t f = 0;
        while (f < cols && is_pivot[f]) {
            ++f;
        }
        if (f == cols) {
            return std::nullopt;
        }
        v.set(f, true);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            v.set(pivots[i], rows[i].get(cols) ^ rows[i].get(f));
        }
    }
    BitVec x(n);
    BitVec z(n);
    for (std::size_t q = 0; q < n; ++q) {
        x.set(q, v.get(q));
        z.set(q, v.get(n + q));
    }
    return PauliString(x, z);
}

/// Indices of a maximal independent prefix-greedy subset of the strings.
std::vector<std::size_t> independent_subset(const std::vector<PauliString> &strings) {
    std::vector<ReducedRow> rows;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < strings.size(); ++j) {
        BitVec v = symplectic_vector(strings[j]);
        reduce(v, rows, [](std::size_t) {});
        if (v.none()) {
            continue;
        }
        std::size_t p = v.first_one();
        rows.push_back({v, p});
        out.push_back(j);
    }
    return out;
}

nlohmann::json map_entries_json(const GeneratorImageMap &map) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &e : map.entries) {
        out.push_back({{"source", e.source.to_sparse_string()}, {"image", e.image.to_string()}});
    }
    return out;
}

}  // namespace

nlohmann::json GeneratorImageMap::to_json() const {
    return {{"num_qubits", num_qubits}, {"entries", map_entries_json(*this)}};
}

ImageValidation validate_images(const GeneratorImageMap &map) {
    const std::size_t n = map.num_qubits;
    const auto &entries = map.entries;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (entries[j].source.num_qubits() != n || entries[j].image.string.num_qubits() != n) {
            return {false, std::make_pair(j, j), "entry size differs from the map width"};
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (commutes(entries[i].source, entries[j].source) !=
                commutes(entries[i].image.string, entries[j].image.string)) {
                return {false, std::make_pair(i, j), "commutation relation not preserved"};
            }
        }
    }
    std::vector<ReducedRow> src_rows;
    std::vector<PhasedPauli> src_ops;
    std::vector<PhasedPauli> img_ops;
    std::vector<std::size_t> first_entry;
    std::vector<ReducedRow> img_rows;
    std::vector<std::size_t> img_first;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        BitVec v = symplectic_vector(entries[j].source);
        PhasedPauli ps{entries[j].source, 0};
        PhasedPauli pi = entries[j].image.phased();
        std::size_t first = j;
        reduce(v, src_rows, [&](std::size_t i) {
            ps = multiply(ps, src_ops[i]);
            pi = multiply(pi, img_ops[i]);
            first = std::min(first, first_entry[i]);
        });
        if (v.none()) {
            if (!pi.string.is_identity()) {
                return {false, std::make_pair(first, j), "product relation maps to a non-identity image"};
            }
            if (ps.phase != pi.phase) {
                return {false, std::make_pair(first, j), "product relation changes sign"};
            }
            continue;
        }
        BitVec w = symplectic_vector(entries[j].image.string);
        std::size_t img_rel = j;
        reduce(w, img_rows, [&](std::size_t i) { img_rel = std::min(img_rel, img_first[i]); });
        if (w.none()) {
            return {false, std::make_pair(img_rel, j), "independent sources have dependent images"};
        }
        img_rows.push_back({w, w.first_one()});
        img_first.push_back(first);
        src_rows.push_back({v, v.first_one()});
        src_ops.push_back(ps);
        img_ops.push_back(pi);
        first_entry.push_back(first);
    }
    return {};
}

CliffordTableau complete_tableau(const GeneratorImageMap &map) {
    ImageValidation check = validate_images(map);
    if (!check) {
        throw InvalidTableau("inconsistent partial map: " + check.reason);
    }
    const std::size_t n = map.num_qubits;
    std::vector<PauliString> sources;
    for (const auto &e : map.entries) {
        sources.push_back(e.source);
    }
    struct Pair {
        PhasedPauli src;
        PhasedPauli img;
    };
    std::vector<Pair> pending;
    for (std::size_t j : independent_subset(sources)) {
        pending.push_back({{map.entries[j].source, 0}, map.entries[j].image.phased()});
    }

    // Symplectic basis pairs (e_k, f_k) on both sides.
    std::vector<Pair> e_ops;
    std::vector<Pair> f_ops;
    auto constraints = [&](bool image_side, const std::optional<PauliString> &partner_of) {
        std::vector<std::pair<PauliString, bool>> cons;
        if (partner_of) {
            cons.emplace_back(*partner_of, true);
        }
        for (const auto &p : pending) {
            cons.emplace_back(image_side ? p.img.string : p.src.string, false);
        }
        for (std::size_t k = 0; k < e_ops.size(); ++k) {
            cons.emplace_back(image_side ? e_ops[k].img.string : e_ops[k].src.string, false);
            cons.emplace_back(image_side ? f_ops[k].img.string : f_ops[k].src.string, false);
        }
        return cons;
    };
    auto fresh = [&](const std::optional<Pair> &partner_of) {
        auto s = solve_symplectic(n, constraints(false, partner_of ? std::optional(partner_of->src.string) : std::nullopt),
                                  !partner_of);
        auto t = solve_symplectic(n, constraints(true, partner_of ? std::optional(partner_of->img.string) : std::nullopt),
                                  !partner_of);
        if (!s || !t) {
            throw InvalidTableau("cannot extend the partial map to a symplectic basis");
        }
        return Pair{{*s, 0}, {*t, 0}};
    };

    while (!pending.empty()) {
        Pair a = pending.front();
        pending.erase(pending.begin());
        std::optional<Pair> b;
        for (std::size_t j = 0; j < pending.size(); ++j) {
            if (!commutes(a.src.string, pending[j].src.string)) {
                b = pending[j];
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(j));
                break;
            }
        }
        if (!b) {
            b = fresh(a);
        }
        for (auto &p : pending) {
            if (!commutes(p.src.string, b->src.string)) {
                p.src = multiply(p.src, a.src);
                p.img = multiply(p.img, a.img);
            }
            if (!commutes(p.src.string, a.src.string)) {
                p.src = multiply(p.src, b->src);
                p.img = multiply(p.img, b->img);
            }
            if (!commutes(p.src.string, a.src.string) || !commutes(p.src.string, b->src.string) ||
                !commutes(p.img.string, a.img.string) || !commutes(p.img.string, b->img.string)) {
                throw InvalidTableau("symplectic reduction failed");
            }
        }
        e_ops.push_back(a);
        f_ops.push_back(*b);
    }
    while (e_ops.size() < n) {
        Pair a = fresh(std::nullopt);
        Pair b = fresh(a);
        e_ops.push_back(a);
        f_ops.push_back(b);
    }

    // v = sum_k <v, f_k> e_k + <v, e_k> f_k.
    auto image_of = [&](const PauliString &target) {
        PhasedPauli ps = identity_phased(n);
        PhasedPauli pi = identity_phased(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (!commutes(target, f_ops[k].src.string)) {
                ps = multiply(ps, e_ops[k].src);
                pi = multiply(pi, e_ops[k].img);
            }
            if (!commutes(target, e_ops[k].src.string)) {
                ps = multiply(ps, f_ops[k].src);
                pi = multiply(pi, f_ops[k].img);
            }
        }
        if (!(ps.string == target)) {
            throw InternalValidationFailure("symplectic basis does not span the target");
        }
        return to_signed({pi.string, (pi.phase + 4 - ps.phase) % 4});
    };
    CliffordTableau tableau(n);
    for (std::size_t q = 0; q < n; ++q) {
        tableau.set_x_image(q, image_of(PauliString::single(n, q, Letter::X)));
        tableau.set_z_image(q, image_of(PauliString::single(n, q, Letter::Z)));
    }
    if (std::string err = tableau.validation_error(); !err.empty()) {
        throw InternalValidationFailure("completed tableau invalid: " + err);
    }
    for (std::size_t j = 0; j < map.entries.size(); ++j) {
        if (!(tableau.apply(map.entries[j].source) == map.entries[j].image.phased())) {
            throw InternalValidationFailure("completed tableau disagrees with entry " + std::to_string(j));
        }
    }
    return tableau;
}

nlohmann::json CliffordCure::to_json() const {
    nlohmann::json tab = nlohmann::json::array();
    for (std::size_t q = 0; q < tableau.num_qubits(); ++q) {
        tab.push_back({{"qubit", q},
                       {"x_image", tableau.x_image(q).to_string()},
                       {"z_image", tableau.z_image(q).to_string()}});
    }
    return {{"map", map.to_json()},
            {"tableau", tab},
            {"transformed", serialize_hsum(transformed)},
            {"relabeled", relabeled},
            {"identity", identity},
            {"termwise_m", certificate.m},
            {"termwise_yes", certificate.yes}};
}

namespace {

void certify_cure(CliffordCure &cure, const Hamiltonian &h, std::size_t m) {
    if (ImageValidation v = validate_images(cure.map); !v) {
        throw InternalValidationFailure("image map fails validation: " + v.reason);
    }
    cure.tableau = complete_tableau(cure.map);
    cure.transformed = conjugate_clifford(h, cure.tableau);
    cure.certificate = check_termwise(cure.transformed, m);
    if (!cure.certificate.yes) {
        throw InternalValidationFailure("transformed Hamiltonian is not " + std::to_string(m) +
                                        "-termwise stoquastic: " + cure.certificate.reason);
    }
}

}  // namespace

CliffordCure cure_xyz_clifford(const XyzChain &chain) {
    chain.validate();
    if (chain.boundary == Boundary::Closed) {
        throw NotApplicable("the Clifford cure needs an open chain");
    }
    const std::size_t n = chain.n;
    const std::size_t edges = chain.num_edges();
    // Label t = e + 1 + offset for edge e; even labels are X-side edges.
    auto parity_ok = [&](std::size_t offset) {
        for (std::size_t e = 0; e < edges; ++e) {
            if ((e + 1 + offset) % 2 == 0 && sgn(chain.couplings[e].product()) < 0) {
                return false;
            }
        }
        return true;
    };
    std::size_t offset = 0;
    if (!parity_ok(0)) {
        if (!parity_ok(1)) {
            throw NotApplicable("neither edge-parity condition holds");
        }
        offset = 1;
    }
    Hamiltonian h = chain.to_hamiltonian();

    CliffordCure cure;
    cure.relabeled = offset == 1;
    cure.map.num_qubits = n;
    auto pair_string = [&](std::size_t e, Letter l) {
        PauliString p(n);
        p.set_letter(e, l);
        p.set_letter(e + 1, l);
        return p;
    };

    if (check_global(h).status == GlobalStatus::Stoquastic) {
        cure.identity = true;
        for (std::size_t e = 0; e < edges; ++e) {
            for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
                PauliString p = pair_string(e, l);
                cure.map.entries.push_back({p, {p, false}});
            }
        }
        certify_cure(cure, h, 4);
        return cure;
    }

    auto string_on = [&](std::initializer_list<long> labels, Letter l) {
        PauliString p(n);
        for (long t : labels) {
            long site = t - 1 - static_cast<long>(offset);
            if (site >= 0 && site < static_cast<long>(n)) {
                p.set_letter(static_cast<std::size_t>(site), l);
            }
        }
        return p;
    };
    for (std::size_t e = 0; e < edges; ++e) {
        const XyzCoupling &c = chain.couplings[e];
        long t = static_cast<long>(e + 1 + offset);
        SignedPauli xx;
        SignedPauli yy;
        if (t % 2 == 1) {
            xx = {string_on({t}, Letter::Z), false};
            yy = {string_on({t, t + 1}, Letter::Z), false};
        } else {
            int sz = sign(c.zz);
            int dxx = -sign(c.xx);
            int dyy = -sign(c.yy);
            if (dxx == 0 && dyy == 0) {
                dxx = 1;
                dyy = sz < 0 ? -1 : 1;
            } else if (dxx == 0) {
                dxx = sz < 0 ? -dyy : dyy;
            } else if (dyy == 0) {
                dyy = sz < 0 ? -dxx : dxx;
            }
            xx = {string_on({t, t + 2}, Letter::X), dxx < 0};
            yy = {string_on({t - 1, t, t + 1, t + 2}, Letter::X), dyy < 0};
        }
        // Z_i Z_j = -(X_i X_j)(Y_i Y_j).
        PhasedPauli zz = multiply(xx.phased(), yy.phased());
        zz.phase = (zz.phase + 2) % 4;
        cure.map.entries.push_back({pair_string(e, Letter::X), xx});
        cure.map.entries.push_back({pair_string(e, Letter::Y), yy});
        cure.map.entries.push_back({pair_string(e, Letter::Z), to_signed(zz)});
    }
    certify_cure(cure, h, 4);
    return cure;
}

CliffordCure cure_commuting(const Hamiltonian &h) {
    h.require_real();
    const auto &terms = h.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (!commutes(terms[i].string, terms[j].string)) {
                throw NotApplicable("terms " + terms[i].string.to_sparse_string() + " and " +
                                    terms[j].string.to_sparse_string() + " anticommute");
            }
        }
    }
    const std::size_t n = h.num_qubits();
    std::vector<PauliString> strings;
    for (const auto &t : terms) {
        strings.push_back(t.string);
    }
    CliffordCure cure;
    cure.map.num_qubits = n;
    std::size_t k = 0;
    for (std::size_t j : independent_subset(strings)) {
        cure.map.entries.push_back({strings[j], {PauliString::single(n, k++, Letter::Z), false}});
    }
    std::size_t m = std::max<std::size_t>(1, k);
    certify_cure(cure, h, m);
    if (!cure.transformed.is_diagonal()) {
        throw InternalValidationFailure("commuting terms did not map to a diagonal Hamiltonian");
    }
    return cure;
}

}  // namespace stoq
