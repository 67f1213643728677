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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace stoq {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", or a decimal such as "-1.25e-3" into an exact rational.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational &q);

/// Explicit lossy conversion.
inline double to_double(const Rational &q) {
    return q.get_d();
}

/// Exact binary value of a finite double.
Rational from_double(double value);

inline int sign(const Rational &q) {
    return sgn(q);
}

/// Complex number with rational parts. Used as the coefficient field of the
/// Pauli algebra so that intermediate odd-Y strings stay exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {
    }
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    }

    bool is_zero() const {
        return sgn(re) == 0 && sgn(im) == 0;
    }
    GaussianRational conj() const {
        return {re, -im};
    }
    /// Multiplies by i^k.
    GaussianRational times_i_pow(unsigned k) const;

    GaussianRational &operator+=(const GaussianRational &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) {
        return a -= b;
    }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const GaussianRational &o) const {
        return re == o.re && im == o.im;
    }
};

std::string to_string(const GaussianRational &q);

}  // namespace stoq
