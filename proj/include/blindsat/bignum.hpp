#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blindsat {

using BigInt = boost::multiprecision::cpp_int;
/// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "7", "-3/4" or "0.25" exactly. Throws DomainError on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Rounds `value` half away from zero to `decimals` places and renders it
/// with '.' as separator and no grouping. Trailing zeros are kept.
std::string to_fixed(const Rational& value, unsigned decimals);

/// Renders `value` with at most `significant` significant digits, rounding
/// half away from zero, trailing zeros stripped. Plain positional notation.
std::string to_decimal(const Rational& value, unsigned significant = 15);

/// Same rounding as to_decimal in `d.ddde-7` form, for values whose
/// positional rendering would be unreasonably long.
std::string to_scientific(const Rational& value, unsigned significant = 15);

/// 2^exponent.
BigInt pow2(std::uint64_t exponent);

/// Binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(const BigInt& n, std::uint64_t k);

}  // namespace blindsat
