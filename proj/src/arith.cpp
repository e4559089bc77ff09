#include "blindsat/arith.hpp"

#include <bit>
#include <random>

#include "blindsat/error.hpp"
#include "blindsat/truth_table.hpp"

namespace blindsat {

namespace {

MultilinearPoly arithmetize_node(const Formula& f, unsigned dim) {
  const auto one = MultilinearPoly::constant(dim, 1);
  switch (f.kind()) {
    case NodeKind::Atom: return MultilinearPoly::variable(dim, f.atom_index());
    case NodeKind::Top: return one;
    case NodeKind::Bottom: return MultilinearPoly(dim);
    case NodeKind::Not: return one - arithmetize_node(f.child(), dim);
    case NodeKind::Binary: {
      const auto a = arithmetize_node(f.left(), dim);
      const auto b = arithmetize_node(f.right(), dim);
      switch (f.connective()) {
        case Connective::And: return a * b;
        case Connective::Or: return a + b - a * b;
        case Connective::Implies: return (one - a) * (one - b) + b;
        case Connective::Iff: return (one - a) * (one - b) * (one + a + b) + a * b;
      }
    }
  }
  throw DomainError("unknown formula node");
}

unsigned resolve_dimension(const Formula& f, unsigned dimension) {
  const unsigned needed = f.max_atom();
  if (dimension == 0) return needed;
  if (dimension < needed)
    throw DomainError("dimension " + std::to_string(dimension) + " is below the largest atom p" +
                      std::to_string(needed));
  return dimension;
}

// Coordinate order of BinaryPoint vs. the row index: x_1 is the row's MSB.
Monomial row_to_point(std::uint64_t row, unsigned n) {
  Monomial point = 0;
  for (unsigned i = 0; i < n; ++i)
    if ((row >> (n - 1 - i)) & 1U) point |= Monomial{1} << i;
  return point;
}

// Values of p at every binary point, indexed by point mask, when they provably
// fit in 64 bits (sum of |coefficients| bounds every subset sum).
std::optional<std::vector<std::int64_t>> all_binary_values(const MultilinearPoly& p) {
  BigInt bound = 0;
  for (const auto& t : p.terms()) bound += abs(t.coefficient);
  if (bound >= (BigInt(1) << 62)) return std::nullopt;

  const unsigned n = p.dimension();
  std::vector<std::int64_t> values(std::size_t{1} << n, 0);
  for (const auto& t : p.terms()) values[t.monomial] = static_cast<std::int64_t>(t.coefficient);
  // Subset-sum (zeta) transform.
  for (unsigned i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < values.size(); ++s)
      if (s & bit) values[s] += values[s ^ bit];
  }
  return values;
}

void check_odd_exponents(const MultilinearPoly& p, const ExponentMap& exponents) {
  for (const auto& [key, exponent] : exponents) {
    const auto& [monomial, var] = key;
    if (exponent % 2 == 0)
      throw DomainError("exponent " + std::to_string(exponent) + " for x" + std::to_string(var) +
                        " is even; only odd exponents keep the binary roots");
    if (var == 0 || var > 64 || ((monomial >> (var - 1)) & 1U) == 0)
      throw DomainError("x" + std::to_string(var) + " does not occur in term " +
                        monomial_to_string(monomial));
    if (p.coefficient(monomial) == 0)
      throw DomainError("polynomial has no term " + monomial_to_string(monomial));
  }
}

}  // namespace

MultilinearPoly arithmetize(const Formula& f, unsigned dimension) {
  return arithmetize_node(f, resolve_dimension(f, dimension));
}

MultilinearPoly characteristic(const Formula& f, unsigned dimension) {
  auto h = arithmetize(f, dimension);
  return h - MultilinearPoly::constant(h.dimension(), 1);
}

Rational eval_poly(const MultilinearPoly& p, std::span<const Rational> point) {
  return p.evaluate(point);
}

BinaryPoint binary_point(Monomial bits, unsigned dimension) {
  BinaryPoint point(dimension, 0);
  for (unsigned i = 0; i < dimension; ++i) point[i] = static_cast<std::uint8_t>((bits >> i) & 1U);
  return point;
}

std::vector<BinaryPoint> binary_roots(const MultilinearPoly& p, const Limits& limits) {
  const unsigned n = p.dimension();
  check_table_capacity(n, limits);
  const std::uint64_t rows = std::uint64_t{1} << n;
  std::vector<BinaryPoint> roots;

  if (auto values = all_binary_values(p)) {
    for (std::uint64_t r = 0; r < rows; ++r) {
      const Monomial point = row_to_point(r, n);
      if ((*values)[point] == 0) roots.push_back(binary_point(point, n));
    }
  } else {
    for (std::uint64_t r = 0; r < rows; ++r) {
      const Monomial point = row_to_point(r, n);
      if (p.evaluate_binary(point) == 0) roots.push_back(binary_point(point, n));
    }
  }
  return roots;
}

SolveResult solve_for_variable(const MultilinearPoly& p, unsigned var,
                               std::span<const Rational> others) {
  const unsigned n = p.dimension();
  if (var == 0 || var > n)
    throw DomainError("x" + std::to_string(var) + " is not a variable of the polynomial");
  if (others.size() + 1 != n)
    throw DomainError("expected " + std::to_string(n - 1) + " values for the other variables");

  // Full point with a placeholder at `var`.
  std::vector<Rational> point;
  point.reserve(n);
  for (unsigned i = 1, k = 0; i <= n; ++i) point.push_back(i == var ? Rational(0) : others[k++]);

  const Monomial var_bit = Monomial{1} << (var - 1);
  Rational slope = 0;
  Rational offset = 0;
  for (const auto& t : p.terms()) {
    Rational product(t.coefficient);
    for (Monomial m = t.monomial & ~var_bit; m != 0 && product != 0; m &= m - 1)
      product *= point[static_cast<std::size_t>(std::countr_zero(m))];
    ((t.monomial & var_bit) ? slope : offset) += product;
  }

  if (slope != 0) return SolvedValue{-offset / slope};
  if (offset != 0) return Inconsistent{};
  return Indeterminate{};
}

MultilinearPoly substitute_equal(const MultilinearPoly& p, unsigned from, unsigned to) {
  const unsigned n = p.dimension();
  if (from == to) throw DomainError("substitution needs two distinct variables");
  if (from == 0 || to == 0 || from > n || to > n)
    throw DomainError("substituted variables must lie in 1.." + std::to_string(n));

  const Monomial from_bit = Monomial{1} << (from - 1);
  const Monomial to_bit = Monomial{1} << (to - 1);
  std::vector<MultilinearPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    if (m & from_bit) m = (m & ~from_bit) | to_bit;
    terms.push_back({m, t.coefficient});
  }
  return MultilinearPoly::from_terms(n, std::move(terms));
}

Rational eval_with_exponents(const MultilinearPoly& p, const ExponentMap& exponents,
                             std::span<const Rational> point) {
  if (point.size() != p.dimension()) throw DomainError("point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational product(t.coefficient);
    for (Monomial m = t.monomial; m != 0; m &= m - 1) {
      const auto var = static_cast<unsigned>(std::countr_zero(m)) + 1;
      auto it = exponents.find({t.monomial, var});
      const std::uint64_t e = it == exponents.end() ? 1 : it->second;
      const Rational& x = point[var - 1];
      Rational power = 1;
      for (std::uint64_t k = 0; k < e; ++k) power *= x;
      product *= power;
    }
    sum += product;
  }
  return sum;
}

bool exponent_variant_agrees(const MultilinearPoly& p, const ExponentMap& exponents,
                             std::uint64_t trials, std::uint64_t seed, const Limits& limits) {
  check_odd_exponents(p, exponents);
  const unsigned n = p.dimension();

  std::vector<Rational> point(n);
  auto agrees_at = [&](Monomial bits) {
    for (unsigned i = 0; i < n; ++i) point[i] = (bits >> i) & 1U;
    return eval_with_exponents(p, exponents, point) == Rational(p.evaluate_binary(bits));
  };

  if (n <= limits.max_table_atoms && n < 64) {
    for (Monomial bits = 0; bits < (Monomial{1} << n); ++bits)
      if (!agrees_at(bits)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  const Monomial mask = n >= 64 ? ~Monomial{0} : (Monomial{1} << n) - 1;
  for (std::uint64_t i = 0; i < trials; ++i)
    if (!agrees_at(rng() & mask)) return false;
  return true;
}

FactoredPoly::FactoredPoly(std::vector<MultilinearPoly> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("a factored polynomial needs at least one factor");
  const unsigned dim = dimension();
  for (auto& f : factors_)
    if (f.dimension() != dim) f = f.widened(dim);
}

unsigned FactoredPoly::dimension() const noexcept {
  unsigned dim = 0;
  for (const auto& f : factors_) dim = std::max(dim, f.dimension());
  return dim;
}

BigInt FactoredPoly::evaluate_binary(Monomial point) const {
  BigInt product = 1;
  for (const auto& f : factors_) {
    product *= f.evaluate_binary(point);
    if (product == 0) break;
  }
  return product;
}

MultilinearPoly FactoredPoly::expand() const {
  MultilinearPoly product = MultilinearPoly::constant(dimension(), 1);
  for (const auto& f : factors_) product *= f;
  return product;
}

std::string FactoredPoly::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " * ";
    out += '(' + f.to_string() + ')';
  }
  return out;
}

namespace {

void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == NodeKind::Binary && f.connective() == Connective::And) {
    collect_conjuncts(f.left(), out);
    collect_conjuncts(f.right(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

FactoredPoly factored_arithmetize(const Formula& f) {
  std::vector<Formula> conjuncts;
  collect_conjuncts(f, conjuncts);
  const unsigned dim = f.max_atom();
  std::vector<MultilinearPoly> factors;
  factors.reserve(conjuncts.size());
  for (const auto& c : conjuncts) factors.push_back(arithmetize(c, dim));
  return FactoredPoly(std::move(factors));
}

FactorSieve factored_binary_roots(const FactoredPoly& p, const Limits& limits) {
  const unsigned n = p.dimension();
  check_table_capacity(n, limits);
  const std::uint64_t rows = std::uint64_t{1} << n;

  FactorSieve sieve;
  std::vector<bool> is_root(rows, false);
  for (const auto& factor : p.factors()) {
    for (std::uint64_t r = 0; r < rows; ++r) {
      ++sieve.evaluations;
      if (factor.evaluate_binary(row_to_point(r, n)) != 0) continue;
      if (is_root[r]) ++sieve.duplicates;
      else is_root[r] = true;
    }
  }
  for (std::uint64_t r = 0; r < rows; ++r)
    if (is_root[r]) sieve.roots.push_back(binary_point(row_to_point(r, n), n));
  return sieve;
}

BigInt expanded_input_size(std::uint64_t n) { return BigInt(n + 1) * pow2(n); }

}  // namespace blindsat
