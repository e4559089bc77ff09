#include "blindsat/census.hpp"

#include <algorithm>
#include <string>

#include "blindsat/error.hpp"

namespace blindsat {

namespace {

void check_census_n(std::uint64_t n, const Limits& limits) {
  if (n > limits.max_census_n)
    throw CapacityError("census over n=" + std::to_string(n) + " exceeds cap of " +
                        std::to_string(limits.max_census_n));
}

void check_row(std::uint64_t n, std::uint64_t m) {
  const std::uint64_t rows = std::uint64_t{1} << n;
  if (m == 0 || m > rows)
    throw DomainError("row " + std::to_string(m) + " outside 1.." + std::to_string(rows));
}

// 2^-m < 0.5 * 10^-decimals makes 1 - 2^-m round to exactly 1.
bool rounds_to_one(std::uint64_t m, unsigned decimals) {
  return m > 4 * static_cast<std::uint64_t>(decimals) + 2;
}

}  // namespace

BigInt class_count(std::uint64_t n, const Limits& limits) {
  check_census_n(n, limits);
  return pow2(std::uint64_t{1} << n);
}

CensusRow census_row(std::uint64_t n, const Limits& limits) {
  return {n, pow2(n), class_count(n, limits)};
}

BigInt first_true_count(std::uint64_t n, std::uint64_t m, const Limits& limits) {
  check_census_n(n, limits);
  check_row(n, m);
  return pow2((std::uint64_t{1} << n) - m);
}

BigInt q_sum(std::uint64_t n, std::uint64_t m, const Limits& limits) {
  check_census_n(n, limits);
  check_row(n, m);
  const std::uint64_t rows = std::uint64_t{1} << n;
  return pow2(rows) - pow2(rows - m);
}

ExactRatio r_ratio(std::uint64_t m) {
  if (m == 0) throw DomainError("r(m) needs m >= 1");
  const BigInt denominator = pow2(m);
  return ExactRatio(100 * (denominator - 1), denominator);
}

std::string r_fraction_fixed(std::uint64_t m, unsigned decimals) {
  if (m == 0) throw DomainError("r(m) needs m >= 1");
  if (rounds_to_one(m, decimals)) return decimals == 0 ? "1" : "1." + std::string(decimals, '0');
  const BigInt denominator = pow2(m);
  return to_fixed(Rational(denominator - 1, denominator), decimals);
}

std::string PolyRatio::fraction_fixed(unsigned decimals) const {
  return r_fraction_fixed(rows, decimals);
}

std::string PolyRatio::fraction_decimal(unsigned significant) const {
  if (percent) return to_decimal(*percent / 100, significant);
  // Here 0.5 <= value < 1, so significant digits are decimal places.
  if (rounds_to_one(rows, significant)) return "1";
  return to_decimal(r_ratio(rows) / 100, significant);
}

PolyRatio r_poly(std::uint64_t n, std::uint64_t s) {
  if (n == 0) throw DomainError("r(n^s) needs n >= 1");
  std::uint64_t m = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    if (m > (std::uint64_t{1} << 62) / n) throw CapacityError("n^s overflows 63 bits");
    m *= n;
  }
  // n^s <= 2^n, decided without computing 2^n for large n.
  const bool applicable = n >= 63 || m <= (std::uint64_t{1} << n);
  PolyRatio out{m, applicable, std::nullopt};
  if (m <= PolyRatio::kMaterializedRows) out.percent = r_ratio(m);
  return out;
}

std::optional<BigInt> poly_first_true_count(std::uint64_t n, std::uint64_t s,
                                            const Limits& limits) {
  check_census_n(n, limits);
  const auto ratio = r_poly(n, s);
  if (!ratio.applicable) return std::nullopt;
  return first_true_count(n, ratio.rows, limits);
}

ExactRatio lucky_ratio(std::uint64_t n, std::uint64_t m, const Limits& limits) {
  check_census_n(n, limits);
  const std::uint64_t rows = std::uint64_t{1} << n;
  if (m > rows) throw DomainError("m=" + std::to_string(m) + " exceeds 2^n=" + std::to_string(rows));
  const std::uint64_t k = std::min(m, rows - m);
  if (k > (std::uint64_t{1} << 20)) throw CapacityError("binomial coefficient too large to evaluate");
  return ExactRatio(BigInt(1), binomial(BigInt(rows), k));
}

std::map<std::optional<std::uint64_t>, std::uint64_t> empirical_first_true(std::uint64_t n,
                                                                            const Limits& limits) {
  if (n > limits.max_enumeration_n || n > 5)
    throw CapacityError("enumerating 2^(2^n) tables for n=" + std::to_string(n) +
                        " exceeds cap of " + std::to_string(limits.max_enumeration_n));
  const std::uint64_t rows = std::uint64_t{1} << n;
  const std::uint64_t vectors = std::uint64_t{1} << rows;

  std::map<std::optional<std::uint64_t>, std::uint64_t> tally;
  for (std::uint64_t v = 0; v < vectors; ++v) {
    // Bit r-1 of v is the result in row r.
    std::optional<std::uint64_t> first;
    for (std::uint64_t r = 1; r <= rows; ++r) {
      if ((v >> (r - 1)) & 1U) {
        first = r;
        break;
      }
    }
    ++tally[first];
  }
  return tally;
}

}  // namespace blindsat
