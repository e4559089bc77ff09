#include "blindsat/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "blindsat/error.hpp"

namespace blindsat {

namespace {

std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    return std::nullopt;
  return value;
}

}  // namespace

std::optional<Limits> parse_limits(std::string_view text, Limits base) {
  if (auto bare = parse_unsigned(text)) {
    if (*bare > 63) return std::nullopt;
    base.max_table_atoms = static_cast<unsigned>(*bare);
    return base;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    auto eq = item.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    auto key = item.substr(0, eq);
    auto value = parse_unsigned(item.substr(eq + 1));
    if (!value) return std::nullopt;

    if (key == "atoms" && *value <= 63) {
      base.max_table_atoms = static_cast<unsigned>(*value);
    } else if (key == "disjuncts") {
      base.max_disjuncts = *value;
    } else if (key == "census" && *value <= 40) {
      base.max_census_n = static_cast<unsigned>(*value);
    } else if (key == "enum" && *value <= 5) {
      base.max_enumeration_n = static_cast<unsigned>(*value);
    } else {
      return std::nullopt;
    }
  }
  return base;
}

Limits limits_from_environment() {
  const char* raw = std::getenv("BLINDSAT_CAP");
  if (raw == nullptr) return {};
  auto limits = parse_limits(raw);
  if (!limits) throw ParseError("malformed BLINDSAT_CAP value '" + std::string(raw) + "'", 0);
  return *limits;
}

}  // namespace blindsat
