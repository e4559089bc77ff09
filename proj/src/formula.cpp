#include "blindsat/formula.hpp"

#include <algorithm>
#include <iterator>

#include "blindsat/error.hpp"

namespace blindsat {

struct Formula::Node {
  NodeKind kind;
  Connective connective = Connective::And;
  AtomIndex atom = 0;
  // Formula holds a shared_ptr<const Node>, so the children can only be
  // stored behind an indirection here.
  std::unique_ptr<const Formula> lhs;
  std::unique_ptr<const Formula> rhs;
  std::vector<AtomIndex> atoms;
  std::size_t size = 1;
};

const char* connective_symbol(Connective c) noexcept {
  switch (c) {
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Implies: return "->";
    case Connective::Iff: return "<->";
  }
  return "?";
}

Formula Formula::atom(AtomIndex index) {
  if (index == 0) throw DomainError("atom index must be positive");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Atom;
  node->atom = index;
  node->atoms = {index};
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula value = [] {
    auto node = std::make_shared<Node>();
    node->kind = NodeKind::Top;
    return Formula(std::move(node));
  }();
  return value;
}

Formula Formula::bottom() {
  static const Formula value = [] {
    auto node = std::make_shared<Node>();
    node->kind = NodeKind::Bottom;
    return Formula(std::move(node));
  }();
  return value;
}

Formula Formula::negation(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Not;
  node->atoms = child.atoms();
  node->size = child.size() + 1;
  node->lhs = std::make_unique<const Formula>(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::binary(Connective op, Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Binary;
  node->connective = op;
  std::set_union(left.atoms().begin(), left.atoms().end(), right.atoms().begin(),
                 right.atoms().end(), std::back_inserter(node->atoms));
  node->size = left.size() + right.size() + 1;
  node->lhs = std::make_unique<const Formula>(std::move(left));
  node->rhs = std::make_unique<const Formula>(std::move(right));
  return Formula(std::move(node));
}

namespace {

Formula fold_left(Connective op, std::span<const Formula> parts, const Formula& empty) {
  if (parts.empty()) return empty;
  Formula acc = parts.front();
  for (const auto& part : parts.subspan(1)) acc = Formula::binary(op, acc, part);
  return acc;
}

}  // namespace

Formula Formula::conjunction(std::span<const Formula> parts) {
  return fold_left(Connective::And, parts, top());
}

Formula Formula::disjunction(std::span<const Formula> parts) {
  return fold_left(Connective::Or, parts, bottom());
}

Formula Formula::literal(AtomIndex index, bool positive) {
  return positive ? atom(index) : negation(atom(index));
}

NodeKind Formula::kind() const noexcept { return node_->kind; }

AtomIndex Formula::atom_index() const {
  if (node_->kind != NodeKind::Atom) throw DomainError("not an atom");
  return node_->atom;
}

Connective Formula::connective() const {
  if (node_->kind != NodeKind::Binary) throw DomainError("not a binary node");
  return node_->connective;
}

const Formula& Formula::child() const {
  if (!node_->lhs) throw DomainError("leaf has no operand");
  return *node_->lhs;
}

const Formula& Formula::right() const {
  if (!node_->rhs) throw DomainError("not a binary node");
  return *node_->rhs;
}

const std::vector<AtomIndex>& Formula::atoms() const noexcept { return node_->atoms; }

AtomIndex Formula::max_atom() const noexcept {
  return node_->atoms.empty() ? 0 : node_->atoms.back();
}

std::size_t Formula::size() const noexcept { return node_->size; }

namespace {

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Atom:
      out += 'p';
      out += std::to_string(f.atom_index());
      return;
    case NodeKind::Top: out += "TOP"; return;
    case NodeKind::Bottom: out += "BOT"; return;
    case NodeKind::Not:
      out += '~';
      print(f.child(), out);
      return;
    case NodeKind::Binary:
      out += '(';
      print(f.left(), out);
      out += ' ';
      out += connective_symbol(f.connective());
      out += ' ';
      print(f.right(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case NodeKind::Atom: return a.atom_index() == b.atom_index();
    case NodeKind::Top:
    case NodeKind::Bottom: return true;
    case NodeKind::Not: return a.child() == b.child();
    case NodeKind::Binary:
      return a.connective() == b.connective() && a.left() == b.left() &&
             a.right() == b.right();
  }
  return false;
}

Formula operator~(Formula f) { return Formula::negation(std::move(f)); }
Formula operator&(Formula a, Formula b) {
  return Formula::binary(Connective::And, std::move(a), std::move(b));
}
Formula operator|(Formula a, Formula b) {
  return Formula::binary(Connective::Or, std::move(a), std::move(b));
}

Assignment Assignment::from_row_bits(std::span<const AtomIndex> atoms, std::uint64_t bits) {
  Assignment a;
  const auto n = atoms.size();
  for (std::size_t j = 0; j < n; ++j) a.set(atoms[j], ((bits >> (n - 1 - j)) & 1U) != 0);
  return a;
}

bool Assignment::at(AtomIndex atom) const {
  auto it = values_.find(atom);
  if (it == values_.end())
    throw DomainError("assignment misses atom p" + std::to_string(atom));
  return it->second;
}

std::string Assignment::bits() const {
  std::string out;
  out.reserve(values_.size());
  for (const auto& [atom, value] : values_) out += value ? '1' : '0';
  return out;
}

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case NodeKind::Atom: return a.at(f.atom_index());
    case NodeKind::Top: return true;
    case NodeKind::Bottom: return false;
    case NodeKind::Not: return !evaluate(f.child(), a);
    case NodeKind::Binary: {
      // Both operands are evaluated so that a missing atom is always reported.
      const bool l = evaluate(f.left(), a);
      const bool r = evaluate(f.right(), a);
      switch (f.connective()) {
        case Connective::And: return l && r;
        case Connective::Or: return l || r;
        case Connective::Implies: return !l || r;
        case Connective::Iff: return l == r;
      }
    }
  }
  return false;
}

}  // namespace blindsat
