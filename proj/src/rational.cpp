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

#include "stoqkit/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace stoq {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> parse_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string_view::npos) {
        auto exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
            exp_negative = exp_text[0] == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            return std::nullopt;
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) {
            exponent = -exponent;
        }
        text = text.substr(0, e);
    }
    std::string digits;
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(text)) {
            return std::nullopt;
        }
        digits = std::string(text);
    } else {
        auto int_part = text.substr(0, dot);
        auto frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            return std::nullopt;
        }
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
            return std::nullopt;
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    }
    if (digits.empty()) {
        return std::nullopt;
    }
    Integer mantissa(digits, 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational out = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    out.canonicalize();
    if (negative) {
        out = -out;
    }
    return out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_decimal(text);
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
        negative = num[0] == '-';
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        return std::nullopt;
    }
    Integer d(std::string(den), 10);
    if (d == 0) {
        return std::nullopt;
    }
    Rational out(Integer(std::string(num), 10), d);
    out.canonicalize();
    if (negative) {
        out = -out;
    }
    return out;
}

std::string to_string(const Rational &q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

Rational from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot convert a non-finite double to a rational");
    }
    Rational out(value);
    out.canonicalize();
    return out;
}

GaussianRational GaussianRational::times_i_pow(unsigned k) const {
    switch (k & 3) {
        case 0:
            return *this;
        case 1:
            return {-im, re};
        case 2:
            return {-re, -im};
        default:
            return {im, -re};
    }
}

std::string to_string(const GaussianRational &q) {
    if (sgn(q.im) == 0) {
        return to_string(q.re);
    }
    return "(" + to_string(q.re) + (sgn(q.im) < 0 ? "" : "+") + to_string(q.im) + "i)";
}

}  // namespace stoq
