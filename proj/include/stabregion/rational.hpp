#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stabreg {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form we rely on
// everywhere: denominator > 0 and gcd(numerator, denominator) == 1. Every
// predicate in the library is decided with these, never with floats: the
// strata we classify live exactly on hyperplanes like x1 - x2 ∈ ℤ, which
// floating point cannot decide.
using Rational = boost::multiprecision::cpp_rational;

// floor(q) = max{n ∈ ℤ : n ≤ q}, exact for negatives: floor(-1/2) = -1.
Int floor(const Rational& q);

// Offset ceiling: ceil(q) = floor(q) + 1 for every q, including integers,
// so ceil(2) = 3. The shift-candidate enumeration depends on the floor and
// ceiling choices being distinct at every point; do not "fix" this to the
// standard ceiling.
Int ceil(const Rational& q);

// frac(q) = q - floor(q) ∈ [0, 1).
Rational frac(const Rational& q);

// floor(x+y) - floor(x) - floor(y). Always 0 or 1.
Int floor_sum_defect(const Rational& x, const Rational& y);

bool is_integer(const Rational& q);

// Accepts "p/q" and plain integer strings, with optional leading sign.
// Decimal notation is rejected: "0.5" is ambiguous about exactness.
Rational parse_rational(const std::string& text);

// Integers print bare ("-3"), everything else as "p/q" ("-5/2").
std::string format_rational(const Rational& q);

std::string format_int(const Int& n);
Int parse_int(const std::string& text);

}  // namespace stabreg
