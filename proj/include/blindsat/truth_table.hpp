#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blindsat/formula.hpp"
#include "blindsat/limits.hpp"

namespace blindsat {

/// Formula flattened into a postfix program over a fixed atom ordering, for
/// fast repeated evaluation. Slot j holds the value of `atoms[j]`.
class CompiledFormula {
public:
  /// Throws DomainError when `atoms` misses an atom of `f` or has more than 64
  /// entries.
  CompiledFormula(const Formula& f, std::span<const AtomIndex> atoms);

  /// Bit j of `slots` is the value of the j-th listed atom.
  bool evaluate_slots(std::uint64_t slots) const;

  /// Row convention: the first listed atom is the most significant bit of
  /// `row_bits` (row k, 1-based, is `row_bits = k - 1`).
  bool evaluate_row(std::uint64_t row_bits) const;

  std::size_t atom_count() const noexcept { return atom_count_; }

private:
  enum class Op : std::uint8_t { Load, True, False, Not, And, Or, Implies, Iff };
  struct Instr {
    Op op;
    std::uint8_t slot;
  };
  void compile(const Formula& f, std::span<const AtomIndex> atoms);

  std::vector<Instr> program_;
  std::size_t atom_count_ = 0;
  std::size_t max_depth_ = 0;
};

/// Bit-packed truth table over an ordered atom list. Row k (1-based) assigns
/// the j-th listed atom the j-th most significant bit of k-1.
class TruthTable {
public:
  TruthTable(std::vector<AtomIndex> atoms, std::vector<std::uint64_t> words);

  const std::vector<AtomIndex>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::uint64_t row_count() const noexcept { return std::uint64_t{1} << atoms_.size(); }

  /// Result of the row with zero-based bit pattern `row_bits`.
  bool at(std::uint64_t row_bits) const {
    return ((words_[row_bits >> 6] >> (row_bits & 63)) & 1U) != 0;
  }
  /// Result of 1-based row k.
  bool row(std::uint64_t k) const { return at(k - 1); }

  std::uint64_t count_true() const;
  bool all_true() const;
  bool all_false() const;

  /// Result vector as '0'/'1' characters in row order.
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  std::vector<AtomIndex> atoms_;
  std::vector<std::uint64_t> words_;
};

/// Throws DomainError when `atoms` misses an atom of `f` or repeats one, and
/// CapacityError when the table would exceed `limits.max_table_atoms`.
TruthTable truth_table(const Formula& f, std::vector<AtomIndex> atoms,
                       const Limits& limits = {});

/// Truth table over atoms(f).
TruthTable truth_table(const Formula& f, const Limits& limits = {});

/// Throws CapacityError when `n` exceeds the table cap.
void check_table_capacity(std::size_t n, const Limits& limits);

}  // namespace blindsat
