#include "blindsat/logic.hpp"

#include <algorithm>
#include <iterator>

#include "blindsat/truth_table.hpp"

namespace blindsat {

std::size_t quasinorm(const Formula& f) noexcept { return f.atoms().size(); }

bool equivalent(const Formula& f, const Formula& g, const Limits& limits) {
  std::vector<AtomIndex> atoms;
  std::set_union(f.atoms().begin(), f.atoms().end(), g.atoms().begin(), g.atoms().end(),
                 std::back_inserter(atoms));
  check_table_capacity(atoms.size(), limits);
  const CompiledFormula pf(f, atoms);
  const CompiledFormula pg(g, atoms);
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  for (std::uint64_t r = 0; r < rows; ++r)
    if (pf.evaluate_slots(r) != pg.evaluate_slots(r)) return false;
  return true;
}

namespace {

// Position j of the atom list is the row's bit (n-1-j).
bool depends_on(const TruthTable& table, std::size_t j) {
  const auto n = table.atom_count();
  const std::uint64_t flip = std::uint64_t{1} << (n - 1 - j);
  for (std::uint64_t r = 0; r < table.row_count(); ++r)
    if ((r & flip) == 0 && table.at(r) != table.at(r | flip)) return true;
  return false;
}

}  // namespace

std::vector<AtomIndex> essential_atoms(const Formula& f, const Limits& limits) {
  const auto table = truth_table(f, limits);
  std::vector<AtomIndex> out;
  for (std::size_t j = 0; j < table.atom_count(); ++j)
    if (depends_on(table, j)) out.push_back(table.atoms()[j]);
  return out;
}

std::size_t class_quasinorm(const Formula& f, const Limits& limits) {
  return essential_atoms(f, limits).size();
}

bool is_irreducible(const Formula& f, const Limits& limits) {
  return class_quasinorm(f, limits) == quasinorm(f);
}

Formula irreducible_representative(const Formula& f, const Limits& limits) {
  const auto table = truth_table(f, limits);
  if (table.all_false()) return Formula::bottom();
  if (table.all_true()) return Formula::top();

  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < table.atom_count(); ++j)
    if (depends_on(table, j)) keep.push_back(j);

  // Inessential atoms are pinned to 0; the value does not matter.
  const auto n = table.atom_count();
  const auto k = keep.size();
  std::vector<Formula> minterms;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    std::uint64_t row = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((sub >> (k - 1 - i)) & 1U) row |= std::uint64_t{1} << (n - 1 - keep[i]);
    if (!table.at(row)) continue;

    std::vector<Formula> literals;
    literals.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      literals.push_back(Formula::literal(table.atoms()[keep[i]], ((sub >> (k - 1 - i)) & 1U) != 0));
    minterms.push_back(Formula::conjunction(literals));
  }
  return Formula::disjunction(minterms);
}

}  // namespace blindsat
