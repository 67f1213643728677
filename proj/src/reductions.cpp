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


#include "stoqkit/reductions.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stoqkit/curing.hpp"
#include "stoqkit/parallel.hpp"
#include "stoqkit/pauli_sum.hpp"
#include "stoqkit/stoq_check.hpp"

namespace stoq {

namespace {

void require_enumerable(std::size_t bits, const char *what) {
    if (bits > kMaxEnumerationBits) {
        throw BudgetExceeded(std::string(what) + " over " + std::to_string(bits) + " bits exceeds the limit of " +
                             std::to_string(kMaxEnumerationBits));
    }
}

/// sum_t c_t (-1)^{|mask_t & x|} + offset with every coefficient scaled to
/// a common integer denominator.
struct ScaledParitySum {
    std::vector<std::pair<uint64_t, int64_t>> terms;
    int64_t offset = 0;
    Integer denominator = 1;

    int64_t eval(uint64_t x) const {
        int64_t v = offset;
        for (const auto &[mask, c] : terms) {
            v += (std::popcount(mask & x) & 1) ? -c : c;
        }
        return v;
    }
    Rational value(int64_t scaled) const {
        Rational r(Integer(static_cast<long>(scaled)), denominator);
        r.canonicalize();
        return r;
    }
};

ScaledParitySum scale_parity_sum(const std::vector<std::pair<uint64_t, Rational>> &terms, const Rational &offset) {
    ScaledParitySum out;
    Integer den = offset.get_den();
    for (const auto &t : terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den().get_mpz_t());
    }
    out.denominator = den;
    Integer total = 0;
    auto scaled = [&](const Rational &c) {
        Rational s = c * den;
        Integer v = s.get_num();
        total += abs(v);
        if (!v.fits_slong_p()) {
            throw BudgetExceeded("coefficients too large for enumeration");
        }
        return static_cast<int64_t>(v.get_si());
    };
    out.offset = scaled(offset);
    for (const auto &[mask, c] : terms) {
        out.terms.emplace_back(mask, scaled(c));
    }
    if (total >= Integer(1) << 62) {
        throw BudgetExceeded("coefficients too large for enumeration");
    }
    return out;
}

/// Minimum over x in {0,1}^width and the first minimizer in lexicographic
/// order (position 0 most significant). Parallel over rank chunks.
std::pair<int64_t, uint64_t> minimize_lex(const ScaledParitySum &f, std::size_t width) {
    const uint64_t total = uint64_t{1} << width;
    const uint64_t chunk = uint64_t{1} << 14;
    const uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<std::pair<int64_t, uint64_t>> best(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        uint64_t lo = c * chunk;
        uint64_t hi = std::min(total, lo + chunk);
        int64_t bv = std::numeric_limits<int64_t>::max();
        uint64_t br = lo;
        for (uint64_t r = lo; r < hi; ++r) {
            int64_t v = f.eval(lex_rank_to_bits(r, width));
            if (v < bv) {
                bv = v;
                br = r;
            }
        }
        best[c] = {bv, br};
    });
    auto it = std::min_element(best.begin(), best.end());
    return {it->first, lex_rank_to_bits(it->second, width)};
}

ScaledParitySum ising_parity_sum(const IsingInstance &g) {
    std::vector<std::pair<uint64_t, Rational>> terms;
    for (const auto &e : g.edges) {
        terms.emplace_back((uint64_t{1} << e.u) | (uint64_t{1} << e.v), e.j);
    }
    if (g.unit_fields) {
        for (std::size_t i = 0; i < g.num_vertices; ++i) {
            terms.emplace_back(uint64_t{1} << i, Rational(1));
        }
    }
    return scale_parity_sum(terms, 0);
}

std::vector<std::string> tokens_of(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

std::size_t parse_count(const std::string &tok, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (tok.empty() || pos != tok.size() || tok[0] == '-' || tok[0] == '+') {
        throw ParseError(ParseError::Kind::Malformed, line_no, "bad integer '" + tok + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

// ------------------------------------------------------------------ Ising

void IsingInstance::validate() const {
    if (num_vertices > 63) {
        throw std::invalid_argument("Ising instance limited to 63 vertices");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &e : edges) {
        if (e.u >= num_vertices || e.v >= num_vertices) {
            throw std::invalid_argument("edge vertex out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        }
        if (!seen.insert(std::minmax(e.u, e.v)).second) {
            throw std::invalid_argument("repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
    }
}

Rational IsingInstance::energy(uint64_t x) const {
    Rational e = 0;
    auto spin = [&](std::size_t i) { return ((x >> i) & 1) ? -1 : 1; };
    for (const auto &edge : edges) {
        e += edge.j * (spin(edge.u) * spin(edge.v));
    }
    if (unit_fields) {
        for (std::size_t i = 0; i < num_vertices; ++i) {
            e += spin(i);
        }
    }
    return e;
}

Hamiltonian IsingInstance::hamiltonian(std::size_t num_qubits, std::size_t offset) const {
    validate();
    Hamiltonian h(num_qubits);
    for (const auto &e : edges) {
        PauliString p(num_qubits);
        p.set_letter(e.u + offset, Letter::Z);
        p.set_letter(e.v + offset, Letter::Z);
        h.add(e.j, p);
    }
    if (unit_fields) {
        for (std::size_t i = 0; i < num_vertices; ++i) {
            h.add(1, PauliString::single(num_qubits, i + offset, Letter::Z));
        }
    }
    return h;
}

Rational IsingInstance::unfrustrated_bound() const {
    Rational b = 0;
    for (const auto &e : edges) {
        b -= abs(e.j);
    }
    if (unit_fields) {
        b -= static_cast<long>(num_vertices);
    }
    return b;
}

nlohmann::json IsingInstance::to_json() const {
    nlohmann::json es = nlohmann::json::array();
    for (const auto &e : edges) {
        es.push_back({e.u, e.v, to_string(e.j)});
    }
    return {{"vertices", num_vertices}, {"edges", es}, {"unit_fields", unit_fields}};
}

IsingInstance parse_graph(std::string_view text) {
    IsingInstance g;
    std::optional<std::size_t> vertices;
    std::size_t max_vertex = 0;
    bool any_edge = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto tok = tokens_of(line);
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "vertices") {
            if (tok.size() != 2) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'vertices N'");
            }
            vertices = parse_count(tok[1], line_no);
            continue;
        }
        if (tok[0] == "fields") {
            if (tok.size() != 2 || (tok[1] != "on" && tok[1] != "off")) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'fields on|off'");
            }
            g.unit_fields = tok[1] == "on";
            continue;
        }
        if (tok.size() != 3) {
            throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'u v J'");
        }
        if (tok[2].find_first_of("ij") != std::string::npos) {
            throw ParseError(ParseError::Kind::NonRealCoefficient, line_no, "non-real coupling");
        }
        auto j = parse_rational(tok[2]);
        if (!j) {
            throw ParseError(ParseError::Kind::Malformed, line_no, "bad coupling '" + tok[2] + "'");
        }
        IsingEdge e{parse_count(tok[0], line_no), parse_count(tok[1], line_no), *j};
        if (e.u == e.v) {
            throw ParseError(ParseError::Kind::RepeatedIndex, line_no, "self-loop");
        }
        for (const auto &other : g.edges) {
            if (std::minmax(other.u, other.v) == std::minmax(e.u, e.v)) {
                throw ParseError(ParseError::Kind::RepeatedIndex, line_no, "repeated edge");
            }
        }
        max_vertex = std::max({max_vertex, e.u, e.v});
        any_edge = true;
        g.edges.push_back(e);
    }
    g.num_vertices = vertices ? *vertices : (any_edge ? max_vertex + 1 : 0);
    if (any_edge && max_vertex >= g.num_vertices) {
        throw ParseError(ParseError::Kind::QubitOutOfRange, line_no, "edge vertex beyond declared count");
    }
    if (g.num_vertices > 63) {
        throw ParseError(ParseError::Kind::QubitOutOfRange, line_no, "more than 63 vertices");
    }
    return g;
}

std::string serialize_graph(const IsingInstance &g) {
    std::ostringstream out;
    out << "vertices " << g.num_vertices << "\n";
    out << "fields " << (g.unit_fields ? "on" : "off") << "\n";
    for (const auto &e : g.edges) {
        out << e.u << " " << e.v << " " << to_string(e.j) << "\n";
    }
    return out.str();
}

IsingMinimum solve_ps(const IsingInstance &g) {
    g.validate();
    require_enumerable(g.num_vertices, "Ising enumeration");
    ScaledParitySum f = ising_parity_sum(g);
    auto [v, x] = minimize_lex(f, g.num_vertices);
    IsingMinimum out;
    out.energy = f.value(v);
    out.argmin = x;
    for (std::size_t i = 0; i < g.num_vertices; ++i) {
        out.spins.push_back(((x >> i) & 1) ? -1 : 1);
    }
    return out;
}

Prop1Instance gen_prop1(const IsingInstance &g) {
    Prop1Instance out;
    out.e0 = solve_ps(g).energy;
    out.frustrated = out.e0 > g.unfrustrated_bound();
    std::size_t n = g.num_vertices + 1;
    Hamiltonian inner = g.hamiltonian(n, 1).scaled(-1);
    inner.add(out.e0, PauliString(n));
    out.h = Hamiltonian(n);
    for (const auto &t : inner.terms()) {
        PauliString p = t.string;
        p.set_letter(0, Letter::X);
        out.h.add(t.coeff, p);
    }
    out.h.add(inner.offset(), PauliString::single(n, 0, Letter::X));
    out.h.name = "prop1";
    return out;
}

Hamiltonian gen_conp(const IsingInstance &g, const Rational &k, const Rational &eps) {
    if (sgn(eps) <= 0 || eps >= 1) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
    std::size_t n = g.num_vertices + 1;
    std::size_t control = g.num_vertices;
    Hamiltonian ising = g.hamiltonian(n, 0);
    Hamiltonian h(n);
    h.add(k + eps, PauliString::single(n, control, Letter::X));
    for (const auto &t : ising.terms()) {
        PauliString p = t.string;
        p.set_letter(control, Letter::X);
        h.add(-t.coeff, p);
    }
    h.name = "conp";
    return h;
}

bool check_frustration_free_decomposition(const Hamiltonian &h_class, std::size_t m) {
    if (!h_class.is_diagonal()) {
        throw std::invalid_argument("frustration-free check needs a diagonal Hamiltonian");
    }
    std::size_t n = h_class.num_qubits();
    require_enumerable(n, "diagonal minimum");
    std::vector<std::pair<uint64_t, Rational>> terms;
    for (const auto &t : h_class.terms()) {
        terms.emplace_back(t.string.z().to_u64(), t.coeff);
    }
    ScaledParitySum f = scale_parity_sum(terms, h_class.offset());
    Rational e0 = f.value(minimize_lex(f, n).first);
    // X_0 (x) (E0 - H_class) with H_class moved up by one qubit.
    Hamiltonian lifted = embed(h_class, n + 1, 1);
    Hamiltonian x0(n + 1);
    for (const auto &t : lifted.terms()) {
        PauliString p = t.string;
        p.set_letter(0, Letter::X);
        x0.add(-t.coeff, p);
    }
    x0.add(e0 - lifted.offset(), PauliString::single(n + 1, 0, Letter::X));
    return check_termwise(x0, m + 1).yes;
}

// -------------------------------------------------------------------- CNF

void CnfFormula::validate() const {
    if (num_vars() > 63) {
        throw std::invalid_argument("formula limited to 63 variables");
    }
    for (const auto &c : clauses) {
        if (c.empty()) {
            throw std::invalid_argument("empty clause");
        }
        for (int lit : c) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars()) {
                throw std::invalid_argument("literal " + std::to_string(lit) + " references an undeclared variable");
            }
        }
    }
}

bool CnfFormula::clause_satisfied(std::size_t k, uint64_t assignment) const {
    for (int lit : clauses[k]) {
        bool bit = (assignment >> (std::abs(lit) - 1)) & 1;
        if (bit == (lit > 0)) {
            return true;
        }
    }
    return false;
}

std::size_t CnfFormula::satisfied_count(uint64_t assignment) const {
    std::size_t s = 0;
    for (std::size_t k = 0; k < clauses.size(); ++k) {
        s += clause_satisfied(k, assignment);
    }
    return s;
}

nlohmann::json CnfFormula::to_json() const {
    return {{"n", n}, {"l", l}, {"clauses", clauses}};
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    std::optional<std::size_t> vars;
    std::optional<std::size_t> count;
    std::optional<std::size_t> forall;
    std::vector<int> current;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "c") {
            if (tok.size() == 3 && tok[1] == "forall") {
                forall = parse_count(tok[2], line_no);
            }
            continue;
        }
        if (tok[0] == "p") {
            if (tok.size() != 4 || tok[1] != "cnf" || vars) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "expected a single 'p cnf V M'");
            }
            vars = parse_count(tok[2], line_no);
            count = parse_count(tok[3], line_no);
            continue;
        }
        if (!vars) {
            throw ParseError(ParseError::Kind::MissingHeader, line_no, "clause before 'p cnf' header");
        }
        for (const auto &t : tok) {
            long v = 0;
            std::size_t pos = 0;
            try {
                v = std::stol(t, &pos);
            } catch (const std::exception &) {
                pos = 0;
            }
            if (pos != t.size()) {
                throw ParseError(ParseError::Kind::Malformed, line_no, "bad literal '" + t + "'");
            }
            if (v == 0) {
                if (current.empty()) {
                    throw ParseError(ParseError::Kind::Malformed, line_no, "empty clause");
                }
                f.clauses.push_back(current);
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(std::labs(v)) > *vars) {
                throw ParseError(ParseError::Kind::QubitOutOfRange, line_no, "literal " + t + " exceeds variable count");
            }
            current.push_back(static_cast<int>(v));
        }
    }
    if (!vars) {
        throw ParseError(ParseError::Kind::MissingHeader, line_no, "missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw ParseError(ParseError::Kind::Malformed, line_no, "last clause not terminated by 0");
    }
    if (f.clauses.size() != *count) {
        throw ParseError(ParseError::Kind::Malformed, line_no,
                         "header declares " + std::to_string(*count) + " clauses, found " +
                             std::to_string(f.clauses.size()));
    }
    std::size_t nx = forall.value_or(0);
    if (nx > *vars) {
        throw ParseError(ParseError::Kind::QubitOutOfRange, line_no, "forall block exceeds variable count");
    }
    f.n = nx;
    f.l = *vars - nx;
    if (f.num_vars() > 63) {
        throw ParseError(ParseError::Kind::QubitOutOfRange, line_no, "more than 63 variables");
    }
    return f;
}

std::string serialize_dimacs(const CnfFormula &f) {
    std::ostringstream out;
    out << "c forall " << f.n << "\n";
    out << "p cnf " << f.num_vars() << " " << f.clauses.size() << "\n";
    for (const auto &c : f.clauses) {
        for (int lit : c) {
            out << lit << " ";
        }
        out << "0\n";
    }
    return out.str();
}

MinmaxInstance gadget_3sat_to_minmax(const CnfFormula &formula3) {
    formula3.validate();
    MinmaxInstance out;
    const std::size_t m = formula3.clauses.size();
    out.formula.n = formula3.n;
    out.formula.l = formula3.l + m;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<int> c = formula3.clauses[i];
        if (c.size() > 3) {
            throw std::invalid_argument("clause " + std::to_string(i) + " has more than 3 literals");
        }
        if (c.size() < 3) {
            ++out.padded_clauses;
            // Repeating a literal keeps the 7-of-10 count exact: the count
            // depends only on the truth values of a, b, c.
            while (c.size() < 3) {
                c.push_back(c.front());
            }
        }
        int a = c[0], b = c[1], cc = c[2];
        int d = static_cast<int>(formula3.n + formula3.l + i + 1);
        std::vector<std::vector<int>> ten = {{a},       {b},       {cc},      {d},      {-a, -b},
                                             {-a, -cc}, {-b, -cc}, {a, -d},   {b, -d},  {cc, -d}};
        for (auto &cl : ten) {
            out.formula.clauses.push_back(cl);
        }
    }
    out.k = 7 * m;
    return out;
}

namespace {

struct ClauseMasks {
    uint64_t pos = 0;
    uint64_t neg = 0;
};

std::vector<ClauseMasks> clause_masks(const CnfFormula &f) {
    std::vector<ClauseMasks> out;
    for (const auto &c : f.clauses) {
        ClauseMasks m;
        for (int lit : c) {
            uint64_t bit = uint64_t{1} << (std::abs(lit) - 1);
            (lit > 0 ? m.pos : m.neg) |= bit;
        }
        out.push_back(m);
    }
    return out;
}

std::size_t count_satisfied(const std::vector<ClauseMasks> &cs, uint64_t a) {
    std::size_t s = 0;
    for (const auto &c : cs) {
        s += ((a & c.pos) | (~a & c.neg)) != 0;
    }
    return s;
}

/// For every x in {0,1}^n, best_y(x) = max over y of satisfied clauses.
/// Returns whether pred(best) holds for all x (universal) or some x.
template <typename Pred>
bool quantify_x(const CnfFormula &f, bool universal, Pred pred) {
    f.validate();
    require_enumerable(f.num_vars(), "formula enumeration");
    auto cs = clause_masks(f);
    const uint64_t xs = uint64_t{1} << f.n;
    const uint64_t ys = uint64_t{1} << f.l;
    const uint64_t chunk = std::max<uint64_t>(1, (uint64_t{1} << 16) >> std::min<std::size_t>(16, f.l));
    const uint64_t chunks = (xs + chunk - 1) / chunk;
    std::vector<char> result(chunks, universal ? 1 : 0);
    parallel_for(chunks, [&](std::size_t c) {
        uint64_t lo = c * chunk;
        uint64_t hi = std::min(xs, lo + chunk);
        for (uint64_t x = lo; x < hi; ++x) {
            std::size_t best = 0;
            std::size_t worst = cs.size();
            for (uint64_t y = 0; y < ys; ++y) {
                std::size_t s = count_satisfied(cs, x | (y << f.n));
                best = std::max(best, s);
                worst = std::min(worst, s);
            }
            bool p = pred(best, worst, cs.size());
            if (universal && !p) {
                result[c] = 0;
                return;
            }
            if (!universal && p) {
                result[c] = 1;
                return;
            }
        }
    });
    if (universal) {
        return std::all_of(result.begin(), result.end(), [](char v) { return v != 0; });
    }
    return std::any_of(result.begin(), result.end(), [](char v) { return v != 0; });
}

}  // namespace

bool eval_forall_exists(const CnfFormula &f) {
    return quantify_x(f, true, [](std::size_t best, std::size_t, std::size_t m) { return best == m; });
}

bool eval_minmax(const CnfFormula &f, std::size_t k) {
    return quantify_x(f, true, [k](std::size_t best, std::size_t, std::size_t) { return best >= k; });
}

bool eval_neg_minmax(const CnfFormula &f, std::size_t k) {
    // Every y violates at least k clauses: m - max_y satisfied >= k.
    return quantify_x(f, false, [k](std::size_t best, std::size_t, std::size_t m) { return m - best >= k; });
}

Hamiltonian build_hc(const CnfFormula &f) {
    f.validate();
    const std::size_t nq = f.num_vars();
    PauliSum total(nq);
    auto p_of = [&](int lit) {
        std::size_t v = static_cast<std::size_t>(std::abs(lit)) - 1;
        if (v < f.n) {
            Letter l = lit > 0 ? Letter::X : Letter::Z;
            return PauliSum::letter(nq, v, l) + PauliSum::scalar(nq, Rational(1));
        }
        return PauliSum::projector(nq, v, lit < 0);
    };
    for (std::size_t k = 0; k < f.clauses.size(); ++k) {
        std::vector<int> lits;
        bool tautology = false;
        for (int lit : f.clauses[k]) {
            if (std::find(lits.begin(), lits.end(), -lit) != lits.end()) {
                tautology = true;
            }
            if (std::find(lits.begin(), lits.end(), lit) == lits.end()) {
                lits.push_back(lit);
            }
        }
        if (tautology) {
            continue;
        }
        if (lits.size() > 2) {
            throw std::invalid_argument("clause " + std::to_string(k) + " has more than 2 distinct literals");
        }
        PauliSum term = p_of(lits[0]);
        if (lits.size() == 2) {
            term = term * p_of(lits[1]);
        }
        total += term;
    }
    Hamiltonian h = total.to_hamiltonian();
    h.name = "hc";
    return h;
}

nlohmann::json HcPropertyReport::to_json() const {
    nlohmann::json j = {{"offdiag_nonnegative", offdiag_nonnegative},
                        {"diagonal_minimized_on_ones", diagonal_minimized_on_ones},
                        {"counts_violations", counts_violations},
                        {"ok", ok()}};
    if (failing_x) {
        j["failing_x"] = *failing_x;
    }
    return j;
}

HcPropertyReport verify_hc_properties(const CnfFormula &f, const Hamiltonian &hc) {
    const std::size_t n = f.n;
    const std::size_t l = f.l;
    if (2 * n + l > 26) {
        throw BudgetExceeded("H_C property check needs 2n + l <= 26");
    }
    auto cs = clause_masks(f);
    const uint64_t xs = uint64_t{1} << n;
    const uint64_t ones = xs - 1;
    struct Flags {
        bool offdiag = true;
        bool minimized = true;
        bool counts = true;
    };
    std::vector<Flags> flags(xs);
    parallel_for(xs, [&](std::size_t xi) {
        uint64_t x = xi;
        BitVec mask = BitVec::from_u64(n + l, x);
        Hamiltonian hx = conjugate_hadamard(hc, mask);
        Flags &fl = flags[xi];
        fl.offdiag = check_global(hx.scaled(-1)).status == GlobalStatus::Stoquastic;
        std::vector<std::pair<uint64_t, Rational>> diag;
        for (const auto &t : hx.terms()) {
            if (t.string.is_diagonal()) {
                diag.emplace_back(t.string.z().to_u64(), t.coeff);
            }
        }
        ScaledParitySum d = scale_parity_sum(diag, hx.offset());
        for (uint64_t y = 0; y < (uint64_t{1} << l); ++y) {
            int64_t at_ones = d.eval(ones | (y << n));
            Rational violated = static_cast<long>(cs.size() - count_satisfied(cs, x | (y << n)));
            if (d.value(at_ones) != violated) {
                fl.counts = false;
            }
            for (uint64_t z = 0; z < xs && fl.minimized; ++z) {
                if (d.eval(z | (y << n)) < at_ones) {
                    fl.minimized = false;
                }
            }
        }
    });
    HcPropertyReport out;
    for (uint64_t x = 0; x < xs; ++x) {
        const Flags &fl = flags[x];
        if ((!fl.offdiag || !fl.minimized || !fl.counts) && !out.failing_x) {
            out.failing_x = x;
        }
        out.offdiag_nonnegative &= fl.offdiag;
        out.diagonal_minimized_on_ones &= fl.minimized;
        out.counts_violations &= fl.counts;
    }
    return out;
}

nlohmann::json Sigma2Layout::to_json() const {
    return {{"n", n},
            {"l", l},
            {"x_block", {x(0), n}},
            {"y_block", {y(0), l}},
            {"control", control()},
            {"d_block", {d(0), l}},
            {"ancilla_base", core_size()},
            {"ancillas_per_core_qubit", 3},
            {"num_qubits", num_qubits()}};
}

Hamiltonian build_g1(std::size_t num_qubits, const std::vector<std::size_t> &protected_qubits,
                     std::size_t ancilla_base) {
    Hamiltonian g(num_qubits);
    auto two = [&](std::size_t p, std::size_t q, Letter l) {
        PauliString s(num_qubits);
        s.set_letter(p, l);
        s.set_letter(q, l);
        return s;
    };
    for (std::size_t i = 0; i < protected_qubits.size(); ++i) {
        std::size_t u = protected_qubits[i];
        std::size_t a = ancilla_base + 3 * i;
        std::size_t b = a + 1;
        std::size_t c = a + 2;
        g.add(-1, PauliString::single(num_qubits, c, Letter::X));
        g.add(-1, PauliString::single(num_qubits, c, Letter::Z));
        g.add(-1, two(u, a, Letter::X));
        g.add(-1, two(u, a, Letter::Y));
        g.add(-1, two(u, a, Letter::Z));
        g.add(-3, two(a, b, Letter::X));
        g.add(-1, two(a, b, Letter::Y));
        g.add(-2, two(a, b, Letter::Z));
        g.add(-1, two(b, c, Letter::X));
        g.add(-1, two(b, c, Letter::Y));
        g.add(-1, two(b, c, Letter::Z));
    }
    return g;
}

Hamiltonian build_g2(std::size_t num_qubits, const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
    Hamiltonian g(num_qubits);
    for (const auto &[y, d] : pairs) {
        PauliString xx(num_qubits);
        xx.set_letter(y, Letter::X);
        xx.set_letter(d, Letter::X);
        PauliString zz(num_qubits);
        zz.set_letter(y, Letter::Z);
        zz.set_letter(d, Letter::Z);
        g.add(-1, xx);
        g.add(1, zz);
    }
    return g;
}

Gadgets build_gadgets(std::size_t n, std::size_t l) {
    std::size_t core = n + 2 * l;
    std::size_t nq = 4 * core;
    std::vector<std::size_t> prot(core);
    std::iota(prot.begin(), prot.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < l; ++j) {
        pairs.emplace_back(n + j, n + l + j);
    }
    return {build_g1(nq, prot, core), build_g2(nq, pairs)};
}

Sigma2Instance assemble_sigma2(const CnfFormula &f, std::size_t k) {
    Sigma2Instance out;
    out.layout = {f.n, f.l};
    out.k = k;
    const Sigma2Layout &L = out.layout;
    const std::size_t nq = L.num_qubits();
    Hamiltonian hc = embed(build_hc(f), nq, 0);
    Hamiltonian h(nq);
    PauliString xc = PauliString::single(nq, L.control(), Letter::X);
    h.add(Rational(static_cast<long>(k)) - hc.offset(), xc);
    for (const auto &t : hc.terms()) {
        PauliString p = t.string;
        p.set_letter(L.control(), Letter::X);
        h.add(-t.coeff, p);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < L.l; ++j) {
        pairs.emplace_back(L.y(j), L.d(j));
    }
    std::vector<std::size_t> prot(L.core_size());
    std::iota(prot.begin(), prot.end(), 0);
    h.add(build_g2(nq, pairs));
    h.add(build_g1(nq, prot, L.core_size()));
    h.name = "sigma2";
    out.h = h;
    return out;
}

std::optional<uint64_t> sigma2_mask_search(const Sigma2Instance &inst) {
    const Sigma2Layout &L = inst.layout;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < L.n; ++i) {
        groups.push_back({L.x(i), L.a(i), L.b(i), L.c(i)});
    }
    auto mask = search_hadamard_mask_grouped(inst.h, groups);
    if (!mask) {
        return std::nullopt;
    }
    uint64_t x = 0;
    for (std::size_t i = 0; i < L.n; ++i) {
        x |= uint64_t{mask->get(L.x(i))} << i;
    }
    return x;
}

bool GadgetRestrictionReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.ok; });
}

nlohmann::json GadgetRestrictionReport::to_json() const {
    nlohmann::json es = nlohmann::json::array();
    for (const auto &e : entries) {
        nlohmann::json j = {{"mask", e.mask.to_string()}, {"touches_protected", e.touches_protected}, {"ok", e.ok}};
        if (e.block) {
            j["block"] = *e.block;
        }
        if (e.witness) {
            j["witness"] = {e.witness->first.to_string(), e.witness->second.to_string()};
            j["value"] = to_string(e.value);
        }
        es.push_back(j);
    }
    return {{"n", n}, {"l", l}, {"entries", es}, {"ok", ok()}};
}

GadgetRestrictionReport verify_gadget_restriction(std::size_t n, std::size_t l, const std::vector<BitVec> &masks) {
    Sigma2Layout L{n, l};
    const std::size_t core = L.core_size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < l; ++j) {
        pairs.emplace_back(L.y(j), L.d(j));
    }
    Hamiltonian g2 = build_g2(core, pairs);
    GadgetRestrictionReport report;
    report.n = n;
    report.l = l;
    for (const BitVec &mask : masks) {
        if (mask.size() != core) {
            throw std::invalid_argument("mask width differs from the core register");
        }
        GadgetRestrictionEntry e;
        e.mask = mask;
        Hamiltonian conj = conjugate_hadamard(g2, mask);
        for (std::size_t j = 0; j < l && !e.block; ++j) {
            if (!mask.get(L.y(j)) && !mask.get(L.d(j))) {
                continue;
            }
            e.touches_protected = true;
            // Entries between strings that differ on d_j (and possibly y_j)
            // come from block j alone.
            for (int u = 0; u < 4 && !e.witness; ++u) {
                for (int v = 0; v < 4 && !e.witness; ++v) {
                    if (((u ^ v) & 2) == 0) {
                        continue;
                    }
                    BitVec bu(core), bv(core);
                    bu.set(L.y(j), u & 1);
                    bu.set(L.d(j), (u >> 1) & 1);
                    bv.set(L.y(j), v & 1);
                    bv.set(L.d(j), (v >> 1) & 1);
                    Rational val = matrix_entry(conj, bu, bv);
                    if (sgn(val) > 0) {
                        e.block = j;
                        e.witness = std::make_pair(bu, bv);
                        e.value = val;
                    }
                }
            }
        }
        if (e.touches_protected) {
            e.ok = e.witness.has_value();
        } else {
            e.ok = check_global(conj).status == GlobalStatus::Stoquastic;
        }
        report.entries.push_back(e);
    }
    return report;
}

nlohmann::json ReductionReport::to_json() const {
    return {{"kind", kind},
            {"instance", instance},
            {"oracle_answer", oracle_answer},
            {"hamiltonian_answer", hamiltonian_answer},
            {"agreement", agreement()}};
}

ReductionReport conp_report(const IsingInstance &g, const Rational &k, const Rational &eps) {
    ReductionReport r;
    r.kind = "conp";
    r.instance = g.to_json();
    r.instance["K"] = to_string(k);
    r.instance["epsilon"] = to_string(eps);
    r.oracle_answer = solve_ps(g).energy <= k;
    r.hamiltonian_answer = check_global(gen_conp(g, k, eps)).status == GlobalStatus::NotStoquastic;
    return r;
}

ReductionReport sigma2_report(const CnfFormula &f, std::size_t k) {
    ReductionReport r;
    r.kind = "sigma2";
    Sigma2Instance inst = assemble_sigma2(f, k);
    r.instance = f.to_json();
    r.instance["k"] = k;
    r.instance["layout"] = inst.layout.to_json();
    r.oracle_answer = eval_neg_minmax(f, k);
    auto x = sigma2_mask_search(inst);
    r.hamiltonian_answer = x.has_value();
    if (x) {
        r.instance["mask_x"] = *x;
    }
    return r;
}

ReductionReport minmax_report(const CnfFormula &formula3) {
    ReductionReport r;
    r.kind = "minmax";
    MinmaxInstance g = gadget_3sat_to_minmax(formula3);
    r.instance = formula3.to_json();
    r.instance["k"] = g.k;
    r.instance["gadget_clauses"] = g.formula.clauses.size();
    r.instance["padded_clauses"] = g.padded_clauses;
    r.oracle_answer = eval_forall_exists(formula3);
    r.hamiltonian_answer = eval_minmax(g.formula, g.k);
    return r;
}

}  // namespace stoq
