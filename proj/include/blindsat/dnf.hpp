#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blindsat/bignum.hpp"
#include "blindsat/formula.hpp"
#include "blindsat/limits.hpp"

namespace blindsat {

struct Literal {
  AtomIndex atom;
  bool positive;

  Literal negated() const { return {atom, !positive}; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of distinct literals.
class Clause {
public:
  /// Throws DomainError when empty, when an atom index is 0, or when a
  /// literal repeats.
  explicit Clause(std::vector<Literal> literals);
  const std::vector<Literal>& literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }

private:
  std::vector<Literal> literals_;
};

/// Conjunction of at least one clause.
class CnfFormula {
public:
  explicit CnfFormula(std::vector<Clause> clauses);
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  Formula to_formula() const;
  /// Largest atom index used.
  AtomIndex max_atom() const;

private:
  std::vector<Clause> clauses_;
};

/// Disjunction of conjunctions. An empty disjunct list is the contradiction.
class DnfFormula {
public:
  using Disjunct = std::vector<Literal>;

  /// Throws DomainError when a disjunct is empty.
  explicit DnfFormula(std::vector<Disjunct> disjuncts);
  const std::vector<Disjunct>& disjuncts() const noexcept { return disjuncts_; }
  Formula to_formula() const;
  std::vector<AtomIndex> atoms() const;

private:
  std::vector<Disjunct> disjuncts_;
};

/// Number of disjuncts `distribute` produces: the product of clause sizes.
BigInt disjunct_count(const CnfFormula& f);

/// Streams the distributed disjuncts in odometer order (last clause varies
/// fastest) without materializing them. Returning false from `visit` stops.
void for_each_disjunct(const CnfFormula& f, const std::function<bool(const DnfFormula::Disjunct&)>& visit);

/// Distributes & over |, picking one literal per clause; no simplification,
/// no deduplication. Throws CapacityError (with the count in the message)
/// when the product exceeds limits.max_disjuncts.
DnfFormula distribute(const CnfFormula& f, const Limits& limits = {});

/// Scans disjuncts left to right and returns an assignment built from the
/// first one free of complementary pairs (its literals made true, every other
/// atom of the formula 0); nullopt when every disjunct is contradictory.
std::optional<Assignment> dnf_satisfying_assignment(const DnfFormula& f);

enum class Classification { Tautology, Contradiction, Contingency };
const char* to_string(Classification c) noexcept;

/// Truth-table sweep over the formula's atoms.
Classification classify(const DnfFormula& f, const Limits& limits = {});

/// k clauses of m distinct literals over atoms 1..n with random signs,
/// deterministic in `seed`. Throws DomainError unless 1 <= m <= n and k >= 1.
CnfFormula blowup_instance(unsigned n, unsigned k, unsigned m, std::uint64_t seed);

/// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header and
/// 0-terminated clauses of signed integers. Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

}  // namespace blindsat
