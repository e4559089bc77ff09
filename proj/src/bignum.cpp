#include "blindsat/bignum.hpp"

#include <algorithm>
#include <cctype>

#include "blindsat/error.hpp"

namespace blindsat {

namespace {

BigInt pow10(unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= 10;
  return out;
}

// |value| * 10^shift rounded half away from zero, for shift >= 0, or
// |value| / 10^-shift rounded likewise for negative shift.
BigInt round_scaled(const Rational& value, int shift) {
  BigInt num = abs(numerator(value));
  BigInt den = denominator(value);
  if (shift >= 0) num *= pow10(static_cast<unsigned>(shift));
  else den *= pow10(static_cast<unsigned>(-shift));
  return (2 * num + den) / (2 * den);
}

std::string insert_point(std::string digits, unsigned decimals) {
  if (decimals == 0) return digits;
  if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
  digits.insert(digits.size() - decimals, 1, '.');
  return digits;
}

}  // namespace

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(),
                                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  auto to_int = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  };

  if (auto slash = text.find('/'); slash != std::string::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw DomainError("malformed rational '" + text + "'");
    BigInt d = to_int(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(to_int(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_int(whole) || (!frac.empty() && !is_int(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw DomainError("malformed decimal '" + text + "'");
    const bool negative = whole[0] == '-';
    Rational magnitude = Rational(abs(to_int(whole)));
    if (!frac.empty())
      magnitude += Rational(BigInt(frac), pow10(static_cast<unsigned>(frac.size())));
    return negative ? Rational(-magnitude) : magnitude;
  }
  if (!is_int(text)) throw DomainError("malformed number '" + text + "'");
  return Rational(to_int(text));
}

std::string to_fixed(const Rational& value, unsigned decimals) {
  const BigInt scaled = round_scaled(value, static_cast<int>(decimals));
  std::string out = insert_point(scaled.str(), decimals);
  if (value < 0 && scaled != 0) out.insert(0, 1, '-');
  return out;
}

namespace {

Rational power_of_ten(int k) {
  return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                : Rational(BigInt(1), pow10(static_cast<unsigned>(-k)));
}

// Decimal exponent e with 10^e <= |value| < 10^(e+1); value must be nonzero.
int decimal_exponent(const Rational& value) {
  const BigInt num = abs(numerator(value));
  const BigInt& den = denominator(value);
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  const Rational magnitude(num, den);
  while (magnitude < power_of_ten(e)) --e;
  while (magnitude >= power_of_ten(e + 1)) ++e;
  return e;
}

}  // namespace

std::string to_decimal(const Rational& value, unsigned significant) {
  if (value == 0) return "0";
  if (significant == 0) significant = 1;
  const int e = decimal_exponent(value);

  const int decimals = static_cast<int>(significant) - 1 - e;
  std::string out;
  if (decimals <= 0) {
    const BigInt rounded = round_scaled(value, decimals);
    out = (rounded * pow10(static_cast<unsigned>(-decimals))).str();
  } else {
    out = insert_point(round_scaled(value, decimals).str(), static_cast<unsigned>(decimals));
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (value < 0) out.insert(0, 1, '-');
  return out;
}

std::string to_scientific(const Rational& value, unsigned significant) {
  if (value == 0) return "0";
  if (significant == 0) significant = 1;
  int e = decimal_exponent(value);
  BigInt digits = abs(round_scaled(value, static_cast<int>(significant) - 1 - e));
  std::string text = digits.str();
  if (text.size() > significant) {  // rounded up to the next power of ten
    ++e;
    text.pop_back();
  }
  while (text.size() > 1 && text.back() == '0') text.pop_back();
  std::string out = value < 0 ? "-" : "";
  out += text[0];
  if (text.size() > 1) out += "." + text.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt out = 0;
  bit_set(out, static_cast<unsigned>(exponent));
  return out;
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (BigInt(k) > n) return 0;
  BigInt result = 1;
  // Multiplicative formula; every intermediate quotient is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - BigInt(k) + BigInt(i);
    result /= BigInt(i);
  }
  return result;
}

}  // namespace blindsat
