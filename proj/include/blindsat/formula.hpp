#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blindsat {

/// 1-based propositional letter index: atom k is printed `p<k>`.
using AtomIndex = std::uint32_t;

enum class NodeKind : std::uint8_t { Atom, Top, Bottom, Not, Binary };

enum class Connective : std::uint8_t { And, Or, Implies, Iff };

const char* connective_symbol(Connective c) noexcept;

/// Immutable propositional formula over atoms, the constants TOP/BOT and the
/// connectives ~, &, |, ->, <->. Copies share structure.
class Formula {
public:
  static Formula atom(AtomIndex index);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula child);
  static Formula binary(Connective op, Formula left, Formula right);

  /// Left-associated conjunction / disjunction of `parts`. An empty list gives
  /// TOP (conjunction) or BOT (disjunction); a single part is returned as is.
  static Formula conjunction(std::span<const Formula> parts);
  static Formula disjunction(std::span<const Formula> parts);

  /// Literal `p<k>` or `~p<k>`.
  static Formula literal(AtomIndex index, bool positive);

  NodeKind kind() const noexcept;
  /// Valid for Atom nodes only.
  AtomIndex atom_index() const;
  /// Valid for Binary nodes only.
  Connective connective() const;
  /// Operand of a Not node; left operand of a Binary node.
  const Formula& child() const;
  const Formula& left() const { return child(); }
  const Formula& right() const;

  /// Sorted, duplicate-free atom indices occurring in the formula.
  const std::vector<AtomIndex>& atoms() const noexcept;
  /// Largest atom index present, 0 for constant formulas.
  AtomIndex max_atom() const noexcept;
  /// Number of AST nodes.
  std::size_t size() const noexcept;

  /// Fully parenthesized canonical text; parses back to an equal formula.
  std::string to_string() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula operator~(Formula f);
Formula operator&(Formula a, Formula b);
Formula operator|(Formula a, Formula b);

/// Parses the formula grammar:
///   atoms `p1`, `p2`, ...; constants `TOP`, `BOT`; `~` negation; binary
///   `&`, `|`, `->`, `<->` with precedence ~ > & > | > -> > <->; `&`, `|` and
///   `<->` associate left, `->` associates right.
/// Throws ParseError on malformed text or atom index 0.
Formula parse_formula(std::string_view text);

/// A truth-value assignment to atoms.
class Assignment {
public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const AtomIndex, bool>> values)
      : values_(values) {}

  /// Atom `atoms[j]` receives bit (n-1-j) of `bits`, i.e. the first listed
  /// atom is the most significant bit.
  static Assignment from_row_bits(std::span<const AtomIndex> atoms, std::uint64_t bits);

  void set(AtomIndex atom, bool value) { values_[atom] = value; }
  bool contains(AtomIndex atom) const { return values_.count(atom) != 0; }
  /// Throws DomainError when the atom is unassigned.
  bool at(AtomIndex atom) const;
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<AtomIndex, bool>& values() const noexcept { return values_; }

  /// Bit string of the values in ascending atom order.
  std::string bits() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

private:
  std::map<AtomIndex, bool> values_;
};

/// Standard two-valued semantics. Throws DomainError when `a` misses an atom
/// of `f`.
bool evaluate(const Formula& f, const Assignment& a);

}  // namespace blindsat
