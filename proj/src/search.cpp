#include "blindsat/search.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "blindsat/error.hpp"
#include "blindsat/logic.hpp"
#include "blindsat/truth_table.hpp"

namespace blindsat {

SearchOrder::SearchOrder(std::vector<AtomIndex> permutation, std::vector<std::uint8_t> first_values)
    : permutation_(std::move(permutation)), first_values_(std::move(first_values)) {
  const auto n = permutation_.size();
  if (n > 63) throw CapacityError("search orders support at most 63 atoms");
  if (first_values_.size() != n)
    throw DomainError("first-value vector has " + std::to_string(first_values_.size()) +
                      " entries for " + std::to_string(n) + " atoms");
  std::vector<bool> seen(n + 1, false);
  for (auto atom : permutation_) {
    if (atom == 0 || atom > n || seen[atom])
      throw DomainError("permutation is not a bijection on 1.." + std::to_string(n));
    seen[atom] = true;
  }
  for (auto& d : first_values_)
    if (d > 1) throw DomainError("first values must be 0 or 1");
}

SearchOrder SearchOrder::natural(unsigned n) {
  std::vector<AtomIndex> identity(n);
  std::iota(identity.begin(), identity.end(), AtomIndex{1});
  return SearchOrder(std::move(identity), std::vector<std::uint8_t>(n, 0));
}

SearchOrder SearchOrder::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> SearchOrder {
    throw ParseError("bad search order '" + std::string(text) + "': " + why, 0);
  };
  auto semi = text.find(';');
  if (semi == std::string_view::npos) return fail("expected 'sigma=...;d=...'");
  auto sigma = text.substr(0, semi);
  auto d = text.substr(semi + 1);
  if (!sigma.starts_with("sigma=") || !d.starts_with("d=")) return fail("expected 'sigma=...;d=...'");
  sigma.remove_prefix(6);
  d.remove_prefix(2);

  std::vector<AtomIndex> perm;
  while (!sigma.empty()) {
    auto comma = sigma.find(',');
    auto item = sigma.substr(0, comma);
    AtomIndex value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
      return fail("permutation entries must be positive integers");
    perm.push_back(value);
    if (comma == std::string_view::npos) break;
    sigma.remove_prefix(comma + 1);
    if (sigma.empty()) return fail("trailing comma");
  }
  std::vector<std::uint8_t> first;
  for (char c : d) {
    if (c != '0' && c != '1') return fail("first values must be a bit string");
    first.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  try {
    return SearchOrder(std::move(perm), std::move(first));
  } catch (const DomainError& e) {
    return fail(e.what());
  }
}

std::string SearchOrder::to_string() const {
  std::string out = "sigma=";
  for (std::size_t i = 0; i < permutation_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(permutation_[i]);
  }
  out += ";d=";
  for (auto v : first_values_) out += v ? '1' : '0';
  return out;
}

std::uint64_t SearchOrder::assignment_bits(Position t) const {
  const auto n = atom_count();
  if (t == 0 || t > position_count())
    throw DomainError("position " + std::to_string(t) + " outside 1.." +
                      std::to_string(position_count()));
  const std::uint64_t c = t - 1;
  std::uint64_t bits = 0;
  for (unsigned r = 0; r < n; ++r) {
    const AtomIndex atom = permutation_[r];
    const std::uint64_t branch = (c >> (n - 1 - r)) & 1U;
    if ((first_values_[atom - 1] ^ branch) != 0) bits |= std::uint64_t{1} << (atom - 1);
  }
  return bits;
}

Position SearchOrder::position_of(std::uint64_t assignment_bits) const {
  const auto n = atom_count();
  std::uint64_t c = 0;
  for (unsigned r = 0; r < n; ++r) {
    const AtomIndex atom = permutation_[r];
    const std::uint64_t value = (assignment_bits >> (atom - 1)) & 1U;
    c |= (value ^ first_values_[atom - 1]) << (n - 1 - r);
  }
  return c + 1;
}

namespace {

Assignment assignment_from_bits(std::uint64_t bits, unsigned n) {
  Assignment a;
  for (AtomIndex k = 1; k <= n; ++k) a.set(k, ((bits >> (k - 1)) & 1U) != 0);
  return a;
}

std::vector<AtomIndex> atoms_up_to(unsigned n) {
  std::vector<AtomIndex> atoms(n);
  std::iota(atoms.begin(), atoms.end(), AtomIndex{1});
  return atoms;
}

void check_formula_fits(const SearchOrder& order, const Formula& f) {
  if (f.max_atom() > order.atom_count())
    throw DomainError("formula uses p" + std::to_string(f.max_atom()) + " but the order covers " +
                      std::to_string(order.atom_count()) + " atoms");
}

}  // namespace

Assignment explored_assignment(const SearchOrder& order, Position t) {
  return assignment_from_bits(order.assignment_bits(t), order.atom_count());
}

std::string SearchTrace::to_csv() const {
  std::ostringstream out;
  out << "t,assignment,result\n";
  const unsigned n = order.atom_count();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << (i + 1) << ',';
    for (unsigned k = 0; k < n; ++k) out << (((steps[i].assignment >> k) & 1U) ? '1' : '0');
    out << ',' << (steps[i].result ? 1 : 0) << '\n';
  }
  return out.str();
}

SearchTrace run_search(const SearchOrder& order, const Formula& f, const Limits& limits) {
  check_formula_fits(order, f);
  check_table_capacity(order.atom_count(), limits);
  // Slot j holds p_{j+1}, so assignment bits feed the program directly.
  const auto atoms = atoms_up_to(order.atom_count());
  const CompiledFormula program(f, atoms);

  SearchTrace trace{order, {}, std::nullopt};
  for (Position t = 1; t <= order.position_count(); ++t) {
    const auto bits = order.assignment_bits(t);
    const bool result = program.evaluate_slots(bits);
    trace.steps.push_back({bits, result});
    if (result) {
      trace.first_success = t;
      break;
    }
  }
  return trace;
}

Formula adversary_single_row(const SearchOrder& order, Position t) {
  const auto bits = order.assignment_bits(t);
  std::vector<Formula> literals;
  for (AtomIndex k = 1; k <= order.atom_count(); ++k)
    literals.push_back(Formula::literal(k, ((bits >> (k - 1)) & 1U) != 0));
  return Formula::conjunction(literals);
}

Formula worst_case_formula(const SearchOrder& order) {
  std::vector<Formula> literals;
  for (AtomIndex k = 1; k <= order.atom_count(); ++k)
    literals.push_back(Formula::literal(k, !order.first_value(k)));
  return Formula::conjunction(literals);
}

Formula adversary_rows(const SearchOrder& order, const std::set<Position>& positions) {
  if (positions.empty()) throw DomainError("adversary needs at least one row");
  std::vector<Formula> disjuncts;
  for (auto t : positions) disjuncts.push_back(adversary_single_row(order, t));
  return Formula::disjunction(disjuncts);
}

TowerAlgorithm TowerAlgorithm::extended() const {
  const auto k = checklist_.size();
  const auto last = order_.position_count();
  if (k + 1 >= last)
    throw DomainError("tower saturated: checklist already has " + std::to_string(k) + " entries");
  std::set<Position> rows;
  for (Position t = last - k; t <= last; ++t) rows.insert(t);
  TowerAlgorithm next = *this;
  next.checklist_.push_back(adversary_rows(order_, rows));
  return next;
}

Formula TowerAlgorithm::next_adversary() const {
  if (checklist_.size() >= order_.position_count())
    throw DomainError("no position left for an adversary");
  return adversary_single_row(order_, order_.position_count() - checklist_.size());
}

TowerAlgorithm tower_extend(const TowerAlgorithm& tower) { return tower.extended(); }

TowerOutcome tower_run(const TowerAlgorithm& tower, const Formula& f, const Limits& limits) {
  check_formula_fits(tower.order(), f);
  TowerOutcome outcome{0, std::nullopt, std::nullopt};
  const auto& checklist = tower.checklist();
  for (std::size_t i = 0; i < checklist.size(); ++i) {
    ++outcome.rows_charged;
    if (equivalent(f, checklist[i], limits)) {
      outcome.checklist_hit = i;
      outcome.effective_position = outcome.rows_charged;
      return outcome;
    }
  }
  const auto trace = run_search(tower.order(), f, limits);
  outcome.rows_charged += trace.steps.size();
  if (trace.first_success) outcome.effective_position = outcome.rows_charged;
  return outcome;
}

HeuristicAlgorithm::HeuristicAlgorithm(unsigned n, std::set<Position> explored)
    : n_(n), explored_(std::move(explored)) {
  if (n > 63) throw CapacityError("heuristics support at most 63 atoms");
  const Position last = std::uint64_t{1} << n;
  for (auto t : explored_)
    if (t == 0 || t > last)
      throw DomainError("explored position " + std::to_string(t) + " outside 1.." +
                        std::to_string(last));
}

std::optional<Position> HeuristicAlgorithm::first_unexplored() const {
  Position candidate = 1;
  for (auto t : explored_) {
    if (t != candidate) break;
    ++candidate;
  }
  if (candidate > (std::uint64_t{1} << n_)) return std::nullopt;
  return candidate;
}

HeuristicAlgorithm HeuristicAlgorithm::extended(Position t) const {
  auto rows = explored_;
  rows.insert(t);
  return HeuristicAlgorithm(n_, std::move(rows));
}

std::optional<HeuristicHit> heuristic_run(const HeuristicAlgorithm& h, const SearchOrder& order,
                                          const Formula& f) {
  if (h.atom_count() != order.atom_count())
    throw DomainError("heuristic and search order disagree on the atom count");
  check_formula_fits(order, f);
  const auto atoms = atoms_up_to(order.atom_count());
  const CompiledFormula program(f, atoms);
  for (auto t : h.explored()) {
    const auto bits = order.assignment_bits(t);
    if (program.evaluate_slots(bits)) return HeuristicHit{t, assignment_from_bits(bits, h.atom_count())};
  }
  return std::nullopt;
}

Formula heuristic_adversary(const HeuristicAlgorithm& h, const SearchOrder& order) {
  if (h.atom_count() != order.atom_count())
    throw DomainError("heuristic and search order disagree on the atom count");
  auto t = h.first_unexplored();
  if (!t) throw DomainError("the heuristic explores every row; no adversary exists");
  return adversary_single_row(order, *t);
}

BigInt count_orders(std::uint64_t n) {
  BigInt factorial = 1;
  for (std::uint64_t i = 2; i <= n; ++i) factorial *= i;
  return factorial * pow2(n);
}

std::vector<SearchOrder> all_orders(unsigned n) {
  if (n > 8) throw CapacityError("enumerating all orders is limited to n <= 8");
  std::vector<SearchOrder> out;
  auto perm = atoms_up_to(n);
  do {
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
      std::vector<std::uint8_t> first(n);
      for (unsigned k = 0; k < n; ++k) first[k] = static_cast<std::uint8_t>((d >> (n - 1 - k)) & 1U);
      out.emplace_back(perm, std::move(first));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FirstSuccessTally l_distribution(const SearchOrder& order, const Limits& limits) {
  const unsigned n = order.atom_count();
  if (n > limits.max_enumeration_n || n > 5)
    throw CapacityError("class enumeration over " + std::to_string(n) + " atoms exceeds cap of " +
                        std::to_string(limits.max_enumeration_n));

  // A truth table is a bit vector indexed by assignment bits.
  const std::uint64_t positions = order.position_count();
  std::vector<std::uint64_t> assignment_at(positions);
  for (Position t = 1; t <= positions; ++t) assignment_at[t - 1] = order.assignment_bits(t);

  FirstSuccessTally tally;
  const std::uint64_t tables = positions == 64 ? 0 : std::uint64_t{1} << positions;
  for (std::uint64_t table = 0; table < tables; ++table) {
    std::optional<Position> first;
    for (Position t = 1; t <= positions; ++t) {
      if ((table >> assignment_at[t - 1]) & 1U) {
        first = t;
        break;
      }
    }
    ++tally[first];
  }
  return tally;
}

}  // namespace blindsat
