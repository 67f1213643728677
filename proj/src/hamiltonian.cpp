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

#include "stoqkit/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stoq {

ParseError::ParseError(Kind kind, std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind(kind), line(line) {
}

Hamiltonian::Hamiltonian(std::size_t num_qubits) : num_qubits_(num_qubits) {
}

void Hamiltonian::add(const Rational &coeff, const PauliString &string) {
    if (string.num_qubits() != num_qubits_) {
        throw std::invalid_argument("term qubit count does not match the Hamiltonian");
    }
    if (sgn(coeff) == 0) {
        return;
    }
    if (string.is_identity()) {
        offset_ += coeff;
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), string,
                               [](const PauliTerm &t, const PauliString &s) { return t.string < s; });
    if (it != terms_.end() && it->string == string) {
        it->coeff += coeff;
        if (sgn(it->coeff) == 0) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, PauliTerm{coeff, string});
    }
}

void Hamiltonian::add(const Hamiltonian &other, const Rational &scale) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("qubit count mismatch");
    }
    offset_ += scale * other.offset_;
    for (const auto &t : other.terms_) {
        add(scale * t.coeff, t.string);
    }
}

Hamiltonian Hamiltonian::scaled(const Rational &factor) const {
    Hamiltonian out(num_qubits_);
    out.add(*this, factor);
    out.name = name;
    out.provenance = provenance;
    return out;
}

Rational Hamiltonian::coefficient(const PauliString &string) const {
    if (string.is_identity()) {
        return offset_;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), string,
                               [](const PauliTerm &t, const PauliString &s) { return t.string < s; });
    if (it != terms_.end() && it->string == string) {
        return it->coeff;
    }
    return 0;
}

std::size_t Hamiltonian::locality() const {
    std::size_t k = 0;
    for (const auto &t : terms_) {
        k = std::max(k, t.string.weight());
    }
    return k;
}

std::size_t Hamiltonian::max_degree() const {
    std::vector<std::size_t> degree(num_qubits_, 0);
    for (const auto &t : terms_) {
        for (auto q : t.string.support().ones()) {
            ++degree[q];
        }
    }
    return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

bool Hamiltonian::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) { return t.string.is_real(); });
}

bool Hamiltonian::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) { return t.string.is_diagonal(); });
}

void Hamiltonian::require_real() const {
    for (const auto &t : terms_) {
        if (!t.string.is_real()) {
            throw NonRealHamiltonian("term " + t.string.to_sparse_string() + " has an odd number of Y letters");
        }
    }
}

Hamiltonian operator+(const Hamiltonian &a, const Hamiltonian &b) {
    Hamiltonian out = a;
    out.add(b);
    return out;
}

Hamiltonian operator-(const Hamiltonian &a, const Hamiltonian &b) {
    Hamiltonian out = a;
    out.add(b, -1);
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_index(std::string_view digits, std::size_t &out) {
    if (digits.empty() || digits.size() > 9) {
        return false;
    }
    out = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
        out = out * 10 + static_cast<std::size_t>(c - '0');
    }
    return true;
}

}  // namespace

Hamiltonian parse_hsum(std::string_view text) {
    using K = ParseError::Kind;
    Hamiltonian h;
    bool have_header = false;
    std::string name, provenance;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            auto body = trim(line.substr(1));
            if (body.rfind("name:", 0) == 0) {
                name = std::string(trim(body.substr(5)));
            } else if (body.rfind("provenance:", 0) == 0) {
                provenance = std::string(trim(body.substr(11)));
            }
            continue;
        }
        auto tokens = split_ws(line);
        if (tokens[0] == "qubits") {
            std::size_t n = 0;
            if (have_header || tokens.size() != 2 || !parse_index(tokens[1], n)) {
                throw ParseError(K::Malformed, line_no, "expected a single header line 'qubits N'");
            }
            h = Hamiltonian(n);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(K::MissingHeader, line_no, "term before 'qubits N' header");
        }
        auto coeff_text = tokens[0];
        if (coeff_text.find_first_of("ij") != std::string_view::npos) {
            throw ParseError(K::NonRealCoefficient, line_no, "coefficient must be real");
        }
        auto coeff = parse_rational(coeff_text);
        if (!coeff) {
            throw ParseError(K::Malformed, line_no, "cannot parse coefficient '" + std::string(coeff_text) + "'");
        }
        if (tokens.size() < 2) {
            throw ParseError(K::Malformed, line_no, "term has no factors");
        }
        PauliString s(h.num_qubits());
        if (tokens.size() == 2 && tokens[1] == "I") {
            h.add(*coeff, s);
            continue;
        }
        BitVec seen(h.num_qubits());
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            auto tok = tokens[t];
            std::size_t q = 0;
            if (tok.size() < 2 || (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z') ||
                !parse_index(tok.substr(1), q)) {
                throw ParseError(K::Malformed, line_no, "bad factor '" + std::string(tok) + "'");
            }
            if (q >= h.num_qubits()) {
                throw ParseError(K::QubitOutOfRange, line_no, "qubit index " + std::to_string(q) + " out of range");
            }
            if (seen.get(q)) {
                throw ParseError(K::RepeatedIndex, line_no, "qubit " + std::to_string(q) + " repeated in one term");
            }
            seen.set(q, true);
            s.set_letter(q, letter_from_char(tok[0]));
        }
        h.add(*coeff, s);
    }
    if (!have_header) {
        throw ParseError(K::MissingHeader, line_no, "missing 'qubits N' header");
    }
    h.name = name;
    h.provenance = provenance;
    return h;
}

std::string serialize_hsum(const Hamiltonian &h) {
    std::ostringstream out;
    if (!h.name.empty()) {
        out << "# name: " << h.name << "\n";
    }
    if (!h.provenance.empty()) {
        out << "# provenance: " << h.provenance << "\n";
    }
    out << "qubits " << h.num_qubits() << "\n";
    if (sgn(h.offset()) != 0) {
        out << to_string(h.offset()) << " I\n";
    }
    for (const auto &t : h.terms()) {
        out << to_string(t.coeff) << " " << t.string.to_sparse_string() << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const Hamiltonian &h) {
    nlohmann::json terms = nlohmann::json::array();
    if (sgn(h.offset()) != 0) {
        terms.push_back({{"coeff", to_string(h.offset())}, {"pauli", "I"}});
    }
    for (const auto &t : h.terms()) {
        terms.push_back({{"coeff", to_string(t.coeff)}, {"pauli", t.string.to_sparse_string()}});
    }
    nlohmann::json out = {{"qubits", h.num_qubits()}, {"terms", terms}};
    if (!h.name.empty()) {
        out["name"] = h.name;
    }
    if (!h.provenance.empty()) {
        out["provenance"] = h.provenance;
    }
    return out;
}

Rational matrix_entry(const Hamiltonian &h, const BitVec &x, const BitVec &y) {
    if (x.size() != h.num_qubits() || y.size() != h.num_qubits()) {
        throw std::invalid_argument("basis state length mismatch");
    }
    BitVec d = x ^ y;
    Rational re;
    Rational im;
    if (d.none()) {
        re = h.offset();
    }
    for (const auto &t : h.terms()) {
        if (t.string.x() != d) {
            continue;
        }
        auto a = apply_to_basis(t, y);
        switch (a.phase) {
            case 0:
                re += a.magnitude;
                break;
            case 1:
                im += a.magnitude;
                break;
            case 2:
                re -= a.magnitude;
                break;
            default:
                im -= a.magnitude;
        }
    }
    if (sgn(im) != 0) {
        throw NonRealHamiltonian("matrix entry has a nonzero imaginary part");
    }
    return re;
}

Hamiltonian conjugate_hadamard(const Hamiltonian &h, const BitVec &mask) {
    if (mask.size() != h.num_qubits()) {
        throw std::invalid_argument("mask length mismatch");
    }
    Hamiltonian out(h.num_qubits());
    out.add(h.offset(), PauliString(h.num_qubits()));
    for (const auto &t : h.terms()) {
        PauliString s(h.num_qubits());
        bool negate = false;
        for (auto q : t.string.support().ones()) {
            Letter l = t.string.letter(q);
            if (mask.get(q)) {
                if (l == Letter::X) {
                    l = Letter::Z;
                } else if (l == Letter::Z) {
                    l = Letter::X;
                } else {
                    negate = !negate;
                }
            }
            s.set_letter(q, l);
        }
        out.add(negate ? Rational(-t.coeff) : t.coeff, s);
    }
    out.name = h.name;
    out.provenance = h.provenance;
    return out;
}

Hamiltonian embed(const Hamiltonian &h, std::size_t num_qubits, std::size_t offset) {
    if (offset + h.num_qubits() > num_qubits) {
        throw std::invalid_argument("embedding does not fit in the target register");
    }
    Hamiltonian out(num_qubits);
    out.add(h.offset(), PauliString(num_qubits));
    for (const auto &t : h.terms()) {
        PauliString s(num_qubits);
        for (auto q : t.string.support().ones()) {
            s.set_letter(q + offset, t.string.letter(q));
        }
        out.add(t.coeff, s);
    }
    return out;
}

}  // namespace stoq
