#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blindsat/bignum.hpp"

namespace blindsat {

/// Subset of variables x_1..x_n: bit (i-1) set means x_i occurs.
using Monomial = std::uint64_t;

/// Integer-coefficient polynomial in which every variable has exponent 0 or 1.
/// Terms are keyed by their variable subset; the empty subset carries the
/// constant. Zero coefficients are never stored.
class MultilinearPoly {
public:
  struct Term {
    Monomial monomial;
    BigInt coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  static constexpr unsigned kMaxDimension = 64;

  /// The zero polynomial in `dimension` variables.
  explicit MultilinearPoly(unsigned dimension = 0);

  static MultilinearPoly constant(unsigned dimension, BigInt value);
  /// x_index, 1 <= index <= dimension.
  static MultilinearPoly variable(unsigned dimension, unsigned index);
  /// Builds from arbitrary (monomial, coefficient) pairs, merging duplicates
  /// and dropping zeros.
  static MultilinearPoly from_terms(unsigned dimension, std::vector<Term> terms);

  unsigned dimension() const noexcept { return dimension_; }
  /// Terms in ascending monomial order.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(Monomial m) const;
  BigInt constant_term() const { return coefficient(0); }
  /// True iff the polynomial is the constant `value`.
  bool is_constant(const BigInt& value) const;

  /// Same polynomial in a wider ambient space.
  MultilinearPoly widened(unsigned dimension) const;

  /// Value at the binary point whose coordinates are the bits of `point`
  /// (bit i-1 is x_i).
  BigInt evaluate_binary(Monomial point) const;

  /// Exact value at an arbitrary rational point of length dimension().
  Rational evaluate(std::span<const Rational> point) const;

  /// Terms ordered by degree, then lexicographically by variable index, e.g.
  /// `1*x1 + 1*x2 - 2*x1*x2 + 3`; the constant comes last, `0` for zero.
  std::string to_string() const;

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  MultilinearPoly& operator-=(const MultilinearPoly& other);
  /// Product with every x^2 reduced to x on the fly.
  MultilinearPoly& operator*=(const MultilinearPoly& other);

  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  friend MultilinearPoly operator*(MultilinearPoly a, const MultilinearPoly& b) { return a *= b; }

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
  MultilinearPoly(unsigned dimension, std::vector<Term> sorted_terms)
      : dimension_(dimension), terms_(std::move(sorted_terms)) {}
  void add_scaled(const MultilinearPoly& other, int sign);

  unsigned dimension_ = 0;
  std::vector<Term> terms_;
};

/// Renders a monomial as `x1*x3`, or an empty string for the constant.
std::string monomial_to_string(Monomial m);

}  // namespace blindsat
