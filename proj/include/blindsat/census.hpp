#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <optional>

#include "blindsat/bignum.hpp"
#include "blindsat/limits.hpp"

namespace blindsat {

/// Exact ratio in lowest terms with a positive denominator.
using ExactRatio = Rational;

struct CensusRow {
  std::uint64_t n;
  /// Rows per truth table, 2^n.
  BigInt rows;
  /// Truth tables (equivalence classes) over n atoms, 2^(2^n).
  BigInt class_count;
};

/// 2^(2^n). Throws CapacityError above limits.max_census_n.
BigInt class_count(std::uint64_t n, const Limits& limits = {});
CensusRow census_row(std::uint64_t n, const Limits& limits = {});

/// Classes whose first true row is m: 2^(2^n - m). Throws DomainError unless
/// 1 <= m <= 2^n.
BigInt first_true_count(std::uint64_t n, std::uint64_t m, const Limits& limits = {});

/// Classes whose first true row is one of 1..m: 2^(2^n) - 2^(2^n - m).
BigInt q_sum(std::uint64_t n, std::uint64_t m, const Limits& limits = {});

/// Percentage of classes with a first success within m rows:
/// 100 (2^m - 1) / 2^m. Throws DomainError for m = 0.
ExactRatio r_ratio(std::uint64_t m);

/// r_ratio(n^s), flagged not applicable when n^s > 2^n (more rows than the
/// table has). The ratio is defined either way; it is materialized as an
/// exact fraction while n^s <= kMaterializedRows and otherwise kept as the
/// symbolic 100 (2^m - 1) / 2^m.
struct PolyRatio {
  static constexpr std::uint64_t kMaterializedRows = 4096;

  std::uint64_t rows;  // m = n^s
  bool applicable;
  std::optional<ExactRatio> percent;

  /// r(m) / 100 rounded half up to `decimals` places, exact for every m.
  std::string fraction_fixed(unsigned decimals) const;
  /// r(m) / 100 with up to `significant` significant digits.
  std::string fraction_decimal(unsigned significant = 15) const;
};
/// Throws CapacityError when n^s overflows 63 bits.
PolyRatio r_poly(std::uint64_t n, std::uint64_t s);

/// (2^m - 1) / 2^m rounded half up to `decimals` places, without
/// materializing 2^m when it cannot affect the rounded digits.
std::string r_fraction_fixed(std::uint64_t m, unsigned decimals);

/// first_true_count(n, n^s), or nullopt where n^s > 2^n.
std::optional<BigInt> poly_first_true_count(std::uint64_t n, std::uint64_t s,
                                            const Limits& limits = {});

/// m! (2^n - m)! / (2^n)! = 1 / C(2^n, m). Throws DomainError unless
/// 0 <= m <= 2^n.
ExactRatio lucky_ratio(std::uint64_t n, std::uint64_t m, const Limits& limits = {});

/// Enumerates every result vector of length 2^n and tallies the index of its
/// first 1 (nullopt for the all-zero vector). Throws CapacityError above
/// limits.max_enumeration_n.
std::map<std::optional<std::uint64_t>, std::uint64_t> empirical_first_true(
    std::uint64_t n, const Limits& limits = {});

}  // namespace blindsat
