#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blindsat/bignum.hpp"
#include "blindsat/formula.hpp"
#include "blindsat/limits.hpp"

namespace blindsat {

/// 1-based position in the exploration sequence of a blind search.
using Position = std::uint64_t;

/// One blind sequential search algorithm: the order in which atoms branch and
/// the value each atom takes first. Exploration is a depth-first walk of the
/// binary tree whose outermost level is the first atom of `permutation`.
class SearchOrder {
public:
  /// `permutation` lists atoms 1..n in branching order; `first_values[k-1]`
  /// is the value atom p_k takes first. Throws DomainError unless the
  /// permutation is a bijection on 1..n and both have length n.
  SearchOrder(std::vector<AtomIndex> permutation, std::vector<std::uint8_t> first_values);

  /// Identity permutation, every atom 0 first: the natural row order.
  static SearchOrder natural(unsigned n);

  /// Parses `sigma=3,1,2;d=101`.
  static SearchOrder parse(std::string_view text);
  std::string to_string() const;

  unsigned atom_count() const noexcept { return static_cast<unsigned>(permutation_.size()); }
  const std::vector<AtomIndex>& permutation() const noexcept { return permutation_; }
  const std::vector<std::uint8_t>& first_values() const noexcept { return first_values_; }
  bool first_value(AtomIndex atom) const { return first_values_.at(atom - 1) != 0; }
  std::uint64_t position_count() const noexcept { return std::uint64_t{1} << atom_count(); }

  /// Bit k-1 of the result is the value of p_k at position t.
  std::uint64_t assignment_bits(Position t) const;
  /// Inverse of assignment_bits.
  Position position_of(std::uint64_t assignment_bits) const;

  friend bool operator==(const SearchOrder&, const SearchOrder&) = default;

private:
  std::vector<AtomIndex> permutation_;
  std::vector<std::uint8_t> first_values_;
};

/// Assignment explored at position t: with c_1..c_n the bits of t-1 (c_1
/// most significant), the r-th atom of the permutation gets its first value
/// XOR c_r. Throws DomainError unless 1 <= t <= 2^n.
Assignment explored_assignment(const SearchOrder& order, Position t);

struct SearchStep {
  /// Bit k-1 is the value of p_k.
  std::uint64_t assignment;
  bool result;
};

struct SearchTrace {
  SearchOrder order;
  std::vector<SearchStep> steps;
  /// Position of the first success; nullopt when every row evaluated false.
  std::optional<Position> first_success;

  /// CSV with header `t,assignment,result`, assignment bits in atom order.
  std::string to_csv() const;
};

/// Evaluates f at positions 1, 2, ... and stops at the first success.
/// Throws DomainError when f uses an atom beyond the order's n.
SearchTrace run_search(const SearchOrder& order, const Formula& f, const Limits& limits = {});

/// Conjunction of one literal per atom (ascending atom order) that is true
/// exactly at the assignment explored at position t.
Formula adversary_single_row(const SearchOrder& order, Position t);

/// The formula only the last explored position satisfies: literal ~p_k when
/// p_k is tried true first, p_k otherwise.
Formula worst_case_formula(const SearchOrder& order);

/// Disjunction of adversary_single_row over `positions` in ascending order.
/// Throws DomainError for an empty set or an out-of-range position.
Formula adversary_rows(const SearchOrder& order, const std::set<Position>& positions);

/// A blind search preceded by a checklist of known worst cases. Each checklist
/// entry costs one row. Entry k is satisfied exactly by positions 2^n-k..2^n.
class TowerAlgorithm {
public:
  explicit TowerAlgorithm(SearchOrder order) : order_(std::move(order)) {}

  const SearchOrder& order() const noexcept { return order_; }
  const std::vector<Formula>& checklist() const noexcept { return checklist_; }
  std::size_t size() const noexcept { return checklist_.size(); }

  /// Tower with the next worst case appended. Throws DomainError once the
  /// checklist has 2^n - 1 entries.
  TowerAlgorithm extended() const;

  /// Formula true only at position 2^n - size(): it passes every checklist
  /// entry and then needs 2^n - size() search rows.
  Formula next_adversary() const;

private:
  SearchOrder order_;
  std::vector<Formula> checklist_;
};

/// tower_extend: the tower with one more checklist entry.
TowerAlgorithm tower_extend(const TowerAlgorithm& tower);

struct TowerOutcome {
  /// Checklist entries tested plus rows explored by the fallback search.
  std::uint64_t rows_charged;
  /// Rows charged when a solution became known, nullopt if none exists.
  std::optional<std::uint64_t> effective_position;
  /// Index of the matching checklist entry, if any.
  std::optional<std::size_t> checklist_hit;
};

/// Checks f against each checklist entry by truth-table equivalence (one row
/// charged per entry, stopping at a hit); on a miss falls back to run_search.
TowerOutcome tower_run(const TowerAlgorithm& tower, const Formula& f, const Limits& limits = {});

/// Heuristic search that explores only a fixed set of positions, the same for
/// every formula.
class HeuristicAlgorithm {
public:
  /// Throws DomainError when a position is outside 1..2^n.
  HeuristicAlgorithm(unsigned n, std::set<Position> explored);

  unsigned atom_count() const noexcept { return n_; }
  const std::set<Position>& explored() const noexcept { return explored_; }
  /// Smallest position not explored, if any.
  std::optional<Position> first_unexplored() const;
  /// Same heuristic with `t` added to the explored set.
  HeuristicAlgorithm extended(Position t) const;

private:
  unsigned n_;
  std::set<Position> explored_;
};

struct HeuristicHit {
  Position position;
  Assignment assignment;
};

/// First explored position (ascending) at which f is true; nullopt is a Miss,
/// which says nothing about the unexplored positions.
std::optional<HeuristicHit> heuristic_run(const HeuristicAlgorithm& h, const SearchOrder& order,
                                          const Formula& f);

/// adversary_single_row at the smallest unexplored position. Throws
/// DomainError when every position is explored.
Formula heuristic_adversary(const HeuristicAlgorithm& h, const SearchOrder& order);

/// n! 2^n.
BigInt count_orders(std::uint64_t n);

/// Every permutation of 1..n combined with every first-value vector, in a
/// fixed order (permutations lexicographic, then first values by binary
/// count). Throws CapacityError for n > 8.
std::vector<SearchOrder> all_orders(unsigned n);

/// Key nullopt counts the contradiction class.
using FirstSuccessTally = std::map<std::optional<Position>, std::uint64_t>;

/// First-success position under `order` for every one of the 2^(2^n) truth
/// tables over p_1..p_n. Throws CapacityError beyond limits.max_enumeration_n.
FirstSuccessTally l_distribution(const SearchOrder& order, const Limits& limits = {});

}  // namespace blindsat
