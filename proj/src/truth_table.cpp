#include "blindsat/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "blindsat/error.hpp"

namespace blindsat {

CompiledFormula::CompiledFormula(const Formula& f, std::span<const AtomIndex> atoms)
    : atom_count_(atoms.size()) {
  if (atoms.size() > 64) throw DomainError("at most 64 atoms can be compiled");
  program_.reserve(f.size());
  compile(f, atoms);

  std::size_t depth = 0;
  for (const auto& instr : program_) {
    switch (instr.op) {
      case Op::Load:
      case Op::True:
      case Op::False: ++depth; break;
      case Op::Not: break;
      default: --depth; break;
    }
    max_depth_ = std::max(max_depth_, depth);
  }
}

void CompiledFormula::compile(const Formula& f, std::span<const AtomIndex> atoms) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      auto it = std::find(atoms.begin(), atoms.end(), f.atom_index());
      if (it == atoms.end())
        throw DomainError("atom list misses p" + std::to_string(f.atom_index()));
      program_.push_back({Op::Load, static_cast<std::uint8_t>(it - atoms.begin())});
      return;
    }
    case NodeKind::Top: program_.push_back({Op::True, 0}); return;
    case NodeKind::Bottom: program_.push_back({Op::False, 0}); return;
    case NodeKind::Not:
      compile(f.child(), atoms);
      program_.push_back({Op::Not, 0});
      return;
    case NodeKind::Binary: {
      compile(f.left(), atoms);
      compile(f.right(), atoms);
      Op op = Op::And;
      switch (f.connective()) {
        case Connective::And: op = Op::And; break;
        case Connective::Or: op = Op::Or; break;
        case Connective::Implies: op = Op::Implies; break;
        case Connective::Iff: op = Op::Iff; break;
      }
      program_.push_back({op, 0});
      return;
    }
  }
}

bool CompiledFormula::evaluate_slots(std::uint64_t slots) const {
  // Small formulas stay on the stack; deep ones fall back to the heap.
  constexpr std::size_t kInline = 128;
  char inline_stack[kInline];
  std::vector<char> heap_stack;
  char* stack = inline_stack;
  if (max_depth_ > kInline) {
    heap_stack.resize(max_depth_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  auto push = [&](bool v) { stack[top++] = static_cast<char>(v); };
  auto pop = [&]() -> bool { return stack[--top] != 0; };

  for (const auto& instr : program_) {
    switch (instr.op) {
      case Op::Load: push(((slots >> instr.slot) & 1U) != 0); break;
      case Op::True: push(true); break;
      case Op::False: push(false); break;
      case Op::Not: push(!pop()); break;
      default: {
        const bool r = pop();
        const bool l = pop();
        switch (instr.op) {
          case Op::And: push(l && r); break;
          case Op::Or: push(l || r); break;
          case Op::Implies: push(!l || r); break;
          default: push(l == r); break;
        }
      }
    }
  }
  return pop();
}

bool CompiledFormula::evaluate_row(std::uint64_t row_bits) const {
  // Reverse the n low bits: the first atom (slot 0) is the row's MSB.
  std::uint64_t slots = 0;
  for (std::size_t j = 0; j < atom_count_; ++j)
    slots |= ((row_bits >> (atom_count_ - 1 - j)) & 1U) << j;
  return evaluate_slots(slots);
}

TruthTable::TruthTable(std::vector<AtomIndex> atoms, std::vector<std::uint64_t> words)
    : atoms_(std::move(atoms)), words_(std::move(words)) {
  if (atoms_.size() > 40) throw CapacityError("truth table too large");
  const auto rows = row_count();
  const auto needed = (rows + 63) / 64;
  if (words_.size() != needed) throw DomainError("truth table word count mismatch");
  if (rows < 64) words_[0] &= (std::uint64_t{1} << rows) - 1;
}

std::uint64_t TruthTable::count_true() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool TruthTable::all_true() const { return count_true() == row_count(); }

bool TruthTable::all_false() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::string TruthTable::to_string() const {
  std::string out;
  out.reserve(row_count());
  for (std::uint64_t r = 0; r < row_count(); ++r) out += at(r) ? '1' : '0';
  return out;
}

void check_table_capacity(std::size_t n, const Limits& limits) {
  if (n > limits.max_table_atoms || n > 63)
    throw CapacityError("truth table over " + std::to_string(n) + " atoms exceeds cap of " +
                        std::to_string(limits.max_table_atoms));
}

TruthTable truth_table(const Formula& f, std::vector<AtomIndex> atoms, const Limits& limits) {
  auto sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("atom list repeats an atom");
  if (!std::includes(sorted.begin(), sorted.end(), f.atoms().begin(), f.atoms().end()))
    throw DomainError("atom list misses an atom of the formula");
  check_table_capacity(atoms.size(), limits);

  const CompiledFormula program(f, atoms);
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  std::vector<std::uint64_t> words((rows + 63) / 64, 0);
  for (std::uint64_t r = 0; r < rows; ++r)
    if (program.evaluate_row(r)) words[r >> 6] |= std::uint64_t{1} << (r & 63);
  return TruthTable(std::move(atoms), std::move(words));
}

TruthTable truth_table(const Formula& f, const Limits& limits) {
  return truth_table(f, f.atoms(), limits);
}

}  // namespace blindsat
