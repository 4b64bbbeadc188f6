#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace zonograph {

// Exact rational scalar used throughout; no floating point anywhere in the
// core. GMP keeps every elimination, determinant and volume overflow-free.
using Rational = mpq_class;
using BigInt = mpz_class;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// Canonical text form: reduced, denominator positive, "/1" elided ("2", "-3/4").
std::string rational_to_string(const Rational& r);

/// Accepts "p" or "p/q" with optional sign; rejects q = 0 and malformed input.
std::optional<Rational> parse_rational(const std::string& text);

Rational parse_rational_or_throw(const std::string& text);

/// Non-authoritative decimal rendering for --approx output.
std::string approx_decimal(const Rational& r);

bool lex_less(const QVector& a, const QVector& b);

std::string vector_to_string(const QVector& v);

}  // namespace zonograph
