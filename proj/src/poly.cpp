#include "blindsat/poly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "blindsat/error.hpp"

namespace blindsat {

namespace {

void check_dimension(unsigned dimension) {
  if (dimension > MultilinearPoly::kMaxDimension)
    throw CapacityError("polynomials support at most 64 variables");
}

Monomial full_mask(unsigned dimension) {
  return dimension >= 64 ? ~Monomial{0} : (Monomial{1} << dimension) - 1;
}

}  // namespace

MultilinearPoly::MultilinearPoly(unsigned dimension) : dimension_(dimension) {
  check_dimension(dimension);
}

MultilinearPoly MultilinearPoly::constant(unsigned dimension, BigInt value) {
  return from_terms(dimension, {{0, std::move(value)}});
}

MultilinearPoly MultilinearPoly::variable(unsigned dimension, unsigned index) {
  if (index == 0 || index > dimension)
    throw DomainError("variable x" + std::to_string(index) + " outside dimension " +
                      std::to_string(dimension));
  return from_terms(dimension, {{Monomial{1} << (index - 1), 1}});
}

MultilinearPoly MultilinearPoly::from_terms(unsigned dimension, std::vector<Term> terms) {
  check_dimension(dimension);
  const Monomial allowed = full_mask(dimension);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if ((t.monomial & ~allowed) != 0) throw DomainError("monomial outside polynomial dimension");
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  return MultilinearPoly(dimension, std::move(merged));
}

BigInt MultilinearPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial < key; });
  return (it != terms_.end() && it->monomial == m) ? it->coefficient : BigInt(0);
}

bool MultilinearPoly::is_constant(const BigInt& value) const {
  if (value == 0) return terms_.empty();
  return terms_.size() == 1 && terms_[0].monomial == 0 && terms_[0].coefficient == value;
}

MultilinearPoly MultilinearPoly::widened(unsigned dimension) const {
  if (dimension < dimension_) throw DomainError("cannot narrow a polynomial");
  check_dimension(dimension);
  return MultilinearPoly(dimension, terms_);
}

BigInt MultilinearPoly::evaluate_binary(Monomial point) const {
  BigInt sum = 0;
  for (const auto& t : terms_)
    if ((t.monomial & ~point) == 0) sum += t.coefficient;
  return sum;
}

Rational MultilinearPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != dimension_)
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(dimension_));

  // Binary points reduce to a subset sum over integers.
  Monomial bits = 0;
  bool binary = true;
  for (std::size_t i = 0; i < point.size() && binary; ++i) {
    if (point[i] == 1) bits |= Monomial{1} << i;
    else if (point[i] != 0) binary = false;
  }
  if (binary) return Rational(evaluate_binary(bits));

  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational product(t.coefficient);
    for (Monomial m = t.monomial; m != 0 && product != 0; m &= m - 1)
      product *= point[static_cast<std::size_t>(std::countr_zero(m))];
    sum += product;
  }
  return sum;
}

std::string monomial_to_string(Monomial m) {
  std::string out;
  for (; m != 0; m &= m - 1) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";

  // Graded order: degree first, then the sorted index lists lexicographically.
  // Bit-reversing the monomial turns "smallest index first" into a plain
  // numeric comparison (a lower index is a more significant reversed bit).
  std::vector<const Term*> order;
  for (const auto& t : terms_)
    if (t.monomial != 0) order.push_back(&t);
  auto reversed = [](Monomial m) {
    Monomial r = 0;
    for (int i = 0; i < 64; ++i)
      if ((m >> i) & 1U) r |= Monomial{1} << (63 - i);
    return r;
  };
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    const int da = std::popcount(a->monomial);
    const int db = std::popcount(b->monomial);
    if (da != db) return da < db;
    return reversed(a->monomial) > reversed(b->monomial);
  });
  if (terms_.front().monomial == 0) order.push_back(&terms_.front());

  std::string out;
  for (const Term* t : order) {
    const bool negative = t->coefficient < 0;
    const BigInt magnitude = negative ? BigInt(-t->coefficient) : t->coefficient;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.str();
    if (t->monomial != 0) {
      out += '*';
      out += monomial_to_string(t->monomial);
    }
  }
  return out;
}

void MultilinearPoly::add_scaled(const MultilinearPoly& other, int sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      merged.push_back({b->monomial, sign > 0 ? b->coefficient : BigInt(-b->coefficient)});
      ++b;
    } else {
      BigInt c = a->coefficient;
      if (sign > 0) c += b->coefficient; else c -= b->coefficient;
      if (c != 0) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  dimension_ = std::max(dimension_, other.dimension_);
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  add_scaled(other, +1);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& other) {
  add_scaled(other, -1);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const MultilinearPoly& other) {
  // x_i * x_i = x_i, so the product monomial is the union of both subsets.
  std::unordered_map<Monomial, BigInt> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[a.monomial | b.monomial] += a.coefficient * b.coefficient;

  std::vector<Term> product;
  product.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) product.push_back({m, std::move(c)});
  std::sort(product.begin(), product.end(),
            [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  terms_ = std::move(product);
  dimension_ = std::max(dimension_, other.dimension_);
  return *this;
}

}  // namespace blindsat
