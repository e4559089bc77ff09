#include <cctype>
#include <limits>

#include "blindsat/error.hpp"
#include "blindsat/formula.hpp"

namespace blindsat {

namespace {

// Recursive descent, one function per precedence level:
//   iff     := implies ('<->' implies)*
//   implies := or ('->' implies)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | primary
//   primary := atom | TOP | BOT | '(' iff ')'
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

private:
  Formula parse_iff() {
    Formula acc = parse_implies();
    while (accept("<->")) acc = Formula::binary(Connective::Iff, acc, parse_implies());
    return acc;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    // "<->" also starts with '<', never with '-', so no ambiguity here.
    if (accept("->")) return Formula::binary(Connective::Implies, lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (accept("|")) acc = Formula::binary(Connective::Or, acc, parse_and());
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (accept("&")) acc = Formula::binary(Connective::And, acc, parse_unary());
    return acc;
  }

  Formula parse_unary() {
    if (accept("~")) return Formula::negation(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula inner = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (accept_word("TOP")) return Formula::top();
    if (accept_word("BOT")) return Formula::bottom();
    if (text_[pos_] == 'p') return parse_atom();
    fail("expected a formula");
  }

  Formula parse_atom() {
    const std::size_t start = pos_;
    ++pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected atom index after 'p'");
    std::uint64_t index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (index > std::numeric_limits<AtomIndex>::max()) fail_at("atom index too large", start);
      ++pos_;
    }
    if (index == 0) fail_at("atom index 0 is not allowed", start);
    return Formula::atom(static_cast<AtomIndex>(index));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  bool accept_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const auto end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace blindsat
