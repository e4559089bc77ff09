#include "blindsat/dnf.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "blindsat/error.hpp"
#include "blindsat/truth_table.hpp"

namespace blindsat {

namespace {

Formula literal_formula(const Literal& l) { return Formula::literal(l.atom, l.positive); }

Formula conjunction_of(const std::vector<Literal>& literals) {
  std::vector<Formula> parts;
  parts.reserve(literals.size());
  for (const auto& l : literals) parts.push_back(literal_formula(l));
  return Formula::conjunction(parts);
}

Formula disjunction_of(const std::vector<Literal>& literals) {
  std::vector<Formula> parts;
  parts.reserve(literals.size());
  for (const auto& l : literals) parts.push_back(literal_formula(l));
  return Formula::disjunction(parts);
}

bool has_complementary_pair(const DnfFormula::Disjunct& d) {
  std::set<Literal> seen(d.begin(), d.end());
  return std::any_of(d.begin(), d.end(), [&](const Literal& l) { return seen.count(l.negated()) != 0; });
}

}  // namespace

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw DomainError("a clause needs at least one literal");
  std::set<Literal> seen;
  for (const auto& l : literals_) {
    if (l.atom == 0) throw DomainError("atom index must be positive");
    if (!seen.insert(l).second)
      throw DomainError(std::string("clause repeats literal ") + (l.positive ? "" : "~") + "p" +
                        std::to_string(l.atom));
  }
}

CnfFormula::CnfFormula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  if (clauses_.empty()) throw DomainError("a CNF formula needs at least one clause");
}

Formula CnfFormula::to_formula() const {
  std::vector<Formula> parts;
  parts.reserve(clauses_.size());
  for (const auto& c : clauses_) parts.push_back(disjunction_of(c.literals()));
  return Formula::conjunction(parts);
}

AtomIndex CnfFormula::max_atom() const {
  AtomIndex top = 0;
  for (const auto& c : clauses_)
    for (const auto& l : c.literals()) top = std::max(top, l.atom);
  return top;
}

DnfFormula::DnfFormula(std::vector<Disjunct> disjuncts) : disjuncts_(std::move(disjuncts)) {
  for (const auto& d : disjuncts_) {
    if (d.empty()) throw DomainError("a disjunct needs at least one literal");
    for (const auto& l : d)
      if (l.atom == 0) throw DomainError("atom index must be positive");
  }
}

Formula DnfFormula::to_formula() const {
  std::vector<Formula> parts;
  parts.reserve(disjuncts_.size());
  for (const auto& d : disjuncts_) parts.push_back(conjunction_of(d));
  return Formula::disjunction(parts);
}

std::vector<AtomIndex> DnfFormula::atoms() const {
  std::set<AtomIndex> atoms;
  for (const auto& d : disjuncts_)
    for (const auto& l : d) atoms.insert(l.atom);
  return {atoms.begin(), atoms.end()};
}

BigInt disjunct_count(const CnfFormula& f) {
  BigInt count = 1;
  for (const auto& c : f.clauses()) count *= c.size();
  return count;
}

void for_each_disjunct(const CnfFormula& f,
                       const std::function<bool(const DnfFormula::Disjunct&)>& visit) {
  const auto& clauses = f.clauses();
  const auto k = clauses.size();
  std::vector<std::size_t> digit(k, 0);
  DnfFormula::Disjunct current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = clauses[i].literals()[0];

  while (true) {
    if (!visit(current)) return;
    // Odometer increment, last clause fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digit[i] < clauses[i].size()) {
        current[i] = clauses[i].literals()[digit[i]];
        break;
      }
      digit[i] = 0;
      current[i] = clauses[i].literals()[0];
      if (i == 0) return;
    }
  }
}

DnfFormula distribute(const CnfFormula& f, const Limits& limits) {
  const BigInt count = disjunct_count(f);
  if (count > limits.max_disjuncts)
    throw CapacityError("distribution yields " + count.str() + " disjuncts, cap is " +
                        std::to_string(limits.max_disjuncts));
  std::vector<DnfFormula::Disjunct> disjuncts;
  disjuncts.reserve(static_cast<std::size_t>(count));
  for_each_disjunct(f, [&](const DnfFormula::Disjunct& d) {
    disjuncts.push_back(d);
    return true;
  });
  return DnfFormula(std::move(disjuncts));
}

std::optional<Assignment> dnf_satisfying_assignment(const DnfFormula& f) {
  for (const auto& d : f.disjuncts()) {
    if (has_complementary_pair(d)) continue;
    Assignment a;
    for (auto atom : f.atoms()) a.set(atom, false);
    for (const auto& l : d) a.set(l.atom, l.positive);
    return a;
  }
  return std::nullopt;
}

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Contradiction: return "contradiction";
    case Classification::Contingency: return "contingency";
  }
  return "?";
}

Classification classify(const DnfFormula& f, const Limits& limits) {
  const auto table = truth_table(f.to_formula(), f.atoms(), limits);
  if (table.all_true()) return Classification::Tautology;
  if (table.all_false()) return Classification::Contradiction;
  return Classification::Contingency;
}

CnfFormula blowup_instance(unsigned n, unsigned k, unsigned m, std::uint64_t seed) {
  if (m == 0 || m > n)
    throw DomainError("clause width m=" + std::to_string(m) + " must lie in 1..n=" + std::to_string(n));
  if (k == 0) throw DomainError("at least one clause is required");

  // mt19937_64 output is fully specified, and the draws below avoid the
  // implementation-defined standard distributions, so instances are
  // reproducible across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(k);
  std::vector<AtomIndex> pool(n);
  for (unsigned c = 0; c < k; ++c) {
    for (unsigned i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<Literal> literals;
    for (unsigned i = 0; i < m; ++i) {
      const auto j = i + static_cast<unsigned>(rng() % (n - i));
      std::swap(pool[i], pool[j]);
      literals.push_back({pool[i], (rng() & 1U) != 0});
    }
    clauses.emplace_back(std::move(literals));
  }
  return CnfFormula(std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::size_t line_start = 0;
  bool have_header = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;

  while (line_start < text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string line(text.substr(line_start, line_end - line_start));
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;

    std::istringstream in(line);
    if (line[first] == 'p') {
      std::string p, fmt;
      if (have_header || !(in >> p >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" ||
          declared_vars < 0 || declared_clauses < 1)
        throw ParseError("malformed DIMACS header", offset + first);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before 'p cnf' header", offset + first);

    long long value = 0;
    while (in >> value) {
      if (value == 0) {
        if (pending.empty()) throw ParseError("empty clause", offset + first);
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const DomainError& e) {
          throw ParseError(e.what(), offset + first);
        }
        pending.clear();
        continue;
      }
      const long long atom = value < 0 ? -value : value;
      if (atom > declared_vars) throw ParseError("literal exceeds declared variable count", offset + first);
      pending.push_back({static_cast<AtomIndex>(atom), value > 0});
    }
    if (!in.eof()) throw ParseError("non-integer token in clause", offset + first);
  }
  if (!have_header) throw ParseError("missing 'p cnf' header", 0);
  if (!pending.empty()) throw ParseError("last clause is not 0-terminated", text.size());
  if (static_cast<long long>(clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(clauses.size()),
                     0);
  return CnfFormula(std::move(clauses));
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.max_atom() << ' ' << f.clauses().size() << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& l : c.literals()) out << (l.positive ? "" : "-") << l.atom << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace blindsat
