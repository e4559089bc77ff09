#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace blindsat {

/// Capacity caps shared by every exhaustive operation.
struct Limits {
  Limits() = default;

  /// Largest atom count for which a 2^n truth table is materialized.
  unsigned max_table_atoms = 24;
  /// Largest number of disjuncts `distribute` will materialize.
  std::uint64_t max_disjuncts = std::uint64_t{1} << 24;
  /// Largest n accepted by the census (2^(2^n) has 2^n bits).
  unsigned max_census_n = 30;
  /// Largest n for the exhaustive class enumerations (2^(2^n) tables).
  unsigned max_enumeration_n = 4;
};

/// Parses a cap override. Accepts a bare integer (table atoms) or a comma
/// separated list of `atoms=`, `disjuncts=`, `census=`, `enum=` entries.
/// Returns nullopt on malformed text.
std::optional<Limits> parse_limits(std::string_view text, Limits base = {});

/// Defaults, overridden by the BLINDSAT_CAP environment variable when set.
/// Throws ParseError when the variable is malformed.
Limits limits_from_environment();

}  // namespace blindsat
