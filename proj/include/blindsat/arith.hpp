#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "blindsat/formula.hpp"
#include "blindsat/limits.hpp"
#include "blindsat/poly.hpp"

namespace blindsat {

/// Arithmetization of a formula: atom p_i becomes x_i, and
///   ~A      -> 1 - h(A)
///   A & B   -> h(A) h(B)
///   A | B   -> h(A) + h(B) - h(A) h(B)
///   A -> B  -> (1 - h(A)) (1 - h(B)) + h(B)
///   A <-> B -> (1 - h(A)) (1 - h(B)) (1 + h(A) + h(B)) + h(A) h(B)
/// with x^2 reduced to x inside every product. TOP is 1 and BOT is 0.
/// `dimension` 0 means max_atom(f); a larger value adds unused variables.
MultilinearPoly arithmetize(const Formula& f, unsigned dimension = 0);

/// arithmetize(f) - 1. Its binary roots are the satisfying assignments of f.
MultilinearPoly characteristic(const Formula& f, unsigned dimension = 0);

/// Exact value of `p` at a rational point of length p.dimension().
Rational eval_poly(const MultilinearPoly& p, std::span<const Rational> point);

/// A point of {0,1}^n; entry i-1 is x_i.
using BinaryPoint = std::vector<std::uint8_t>;

BinaryPoint binary_point(Monomial bits, unsigned dimension);

/// All zeros of `p` on {0,1}^n, sorted with x_1 as the most significant
/// coordinate. Throws CapacityError beyond the table cap.
std::vector<BinaryPoint> binary_roots(const MultilinearPoly& p, const Limits& limits = {});

/// Outcome of solving p = 0 for one variable with the others fixed.
struct SolvedValue {
  Rational value;
  friend bool operator==(const SolvedValue&, const SolvedValue&) = default;
};
/// The variable vanished and the remainder is a nonzero constant ("1 = 0").
struct Inconsistent {
  friend bool operator==(const Inconsistent&, const Inconsistent&) = default;
};
/// The variable vanished and the remainder is zero: every value solves it.
struct Indeterminate {
  friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
};
using SolveResult = std::variant<SolvedValue, Inconsistent, Indeterminate>;

/// Writes p = A x_var + B with the other variables fixed to `others` (given
/// in ascending variable order, skipping `var`) and returns -B/A.
SolveResult solve_for_variable(const MultilinearPoly& p, unsigned var,
                               std::span<const Rational> others);

/// Replaces x_from by x_to in every term and merges.
MultilinearPoly substitute_equal(const MultilinearPoly& p, unsigned from, unsigned to);

/// Per-occurrence exponents for a generalized polynomial: key (monomial,
/// variable index) gives the exponent of that variable in that term.
using ExponentMap = std::map<std::pair<Monomial, unsigned>, std::uint64_t>;

/// Value of the generalized polynomial (p with the exponents of `exponents`
/// applied) at a rational point.
Rational eval_with_exponents(const MultilinearPoly& p, const ExponentMap& exponents,
                             std::span<const Rational> point);

/// True iff the generalized polynomial agrees with `p` at every binary point.
/// Exhaustive up to the table cap; beyond it, `trials` pseudo-random binary
/// points drawn from `seed`. Throws DomainError for an even exponent or a key
/// that does not name a variable of an existing term.
bool exponent_variant_agrees(const MultilinearPoly& p, const ExponentMap& exponents,
                             std::uint64_t trials = 1000, std::uint64_t seed = 0,
                             const Limits& limits = {});

/// Product of separately arithmetized factors.
class FactoredPoly {
public:
  explicit FactoredPoly(std::vector<MultilinearPoly> factors);

  const std::vector<MultilinearPoly>& factors() const noexcept { return factors_; }
  unsigned dimension() const noexcept;

  BigInt evaluate_binary(Monomial point) const;
  /// Multiplies the factors out.
  MultilinearPoly expand() const;
  /// `(f1) * (f2) * ...`
  std::string to_string() const;

private:
  std::vector<MultilinearPoly> factors_;
};

/// One factor per top-level conjunct of `f` (a non-conjunction gives a single
/// factor), all in the ambient dimension max_atom(f).
FactoredPoly factored_arithmetize(const Formula& f);

/// Zeros of a factored polynomial found factor by factor: the union of every
/// factor's binary zeros, with repeats across factors removed.
struct FactorSieve {
  std::vector<BinaryPoint> roots;
  /// Factor evaluations performed.
  std::uint64_t evaluations = 0;
  /// Zeros found by more than one factor and dropped.
  std::uint64_t duplicates = 0;
};
FactorSieve factored_binary_roots(const FactoredPoly& p, const Limits& limits = {});

/// (n + 1) 2^n: coefficient plus exponents for each of the 2^n terms.
BigInt expanded_input_size(std::uint64_t n);

}  // namespace blindsat
