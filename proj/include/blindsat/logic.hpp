#pragma once

#include <vector>

#include "blindsat/formula.hpp"
#include "blindsat/limits.hpp"

namespace blindsat {

/// Number of distinct atoms occurring syntactically in `f`.
std::size_t quasinorm(const Formula& f) noexcept;

/// True iff the truth tables of `f` and `g` over atoms(f) ∪ atoms(g) agree.
bool equivalent(const Formula& f, const Formula& g, const Limits& limits = {});

/// Atoms on which the truth function of `f` actually depends: p is essential
/// iff some pair of assignments differing only at p evaluates differently.
std::vector<AtomIndex> essential_atoms(const Formula& f, const Limits& limits = {});

/// Minimum atom count over the equivalence class of `f`, i.e. the number of
/// essential atoms.
std::size_t class_quasinorm(const Formula& f, const Limits& limits = {});

/// True iff no equivalent formula uses fewer atoms (every atom is essential).
bool is_irreducible(const Formula& f, const Limits& limits = {});

/// Canonical representative of the class of `f`: BOT for contradictions, TOP
/// for tautologies, otherwise the complete disjunctive normal form over the
/// essential atoms, minterms in row order and literals in ascending atom
/// order. Applying it twice gives the same formula.
Formula irreducible_representative(const Formula& f, const Limits& limits = {});

}  // namespace blindsat
