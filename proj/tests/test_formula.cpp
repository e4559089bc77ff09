#include <gtest/gtest.h>

#include <algorithm>

#include "blindsat/error.hpp"
#include "blindsat/formula.hpp"
#include "blindsat/logic.hpp"
#include "blindsat/truth_table.hpp"
#include "support/random_formula.hpp"

using namespace blindsat;

namespace {

const char* kExampleA = "(p1 | p2 | p3) & ~(p1 & p2) & ~(p1 & p3) & ~(p2 & p3)";

Formula p(AtomIndex k) { return Formula::atom(k); }

}  // namespace

//===----------------------------------------------------------------------===//
// Parsing and printing
//===----------------------------------------------------------------------===//

TEST(ParseTest, ConjunctionWithNegation) {
  EXPECT_EQ(parse_formula("p1 & ~p2"), p(1) & ~p(2));
}

TEST(ParseTest, Constants) {
  EXPECT_EQ(parse_formula("BOT").kind(), NodeKind::Bottom);
  EXPECT_EQ(parse_formula("TOP").kind(), NodeKind::Top);
}

TEST(ParseTest, RunningExample) {
  const auto a = parse_formula(kExampleA);
  const auto expected = ((((p(1) | p(2)) | p(3)) & ~(p(1) & p(2))) & ~(p(1) & p(3))) & ~(p(2) & p(3));
  EXPECT_EQ(a, expected);
  EXPECT_EQ(a.atoms(), (std::vector<AtomIndex>{1, 2, 3}));
}

TEST(ParseTest, Precedence) {
  // ~ > & > | > -> > <->
  EXPECT_EQ(parse_formula("~p1 & p2 | p3 -> p4 <-> p5"),
            Formula::binary(Connective::Iff,
                            Formula::binary(Connective::Implies, (~p(1) & p(2)) | p(3), p(4)),
                            p(5)));
}

TEST(ParseTest, Associativity) {
  EXPECT_EQ(parse_formula("p1 -> p2 -> p3"),
            Formula::binary(Connective::Implies, p(1),
                            Formula::binary(Connective::Implies, p(2), p(3))));
  EXPECT_EQ(parse_formula("p1 <-> p2 <-> p3"),
            Formula::binary(Connective::Iff, Formula::binary(Connective::Iff, p(1), p(2)), p(3)));
  EXPECT_EQ(parse_formula("p1 | p2 | p3"), (p(1) | p(2)) | p(3));
}

TEST(ParseTest, Errors) {
  EXPECT_THROW(parse_formula("p0"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("p1 &"), ParseError);
  EXPECT_THROW(parse_formula("(p1"), ParseError);
  EXPECT_THROW(parse_formula("p1 p2"), ParseError);
  EXPECT_THROW(parse_formula("q1"), ParseError);
  EXPECT_THROW(parse_formula("TOPP"), ParseError);
  EXPECT_THROW(parse_formula("p99999999999"), ParseError);
  try {
    parse_formula("p1 & p0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ParseTest, PrinterIsFullyParenthesized) {
  EXPECT_EQ(parse_formula("p1 & ~p2 | TOP").to_string(), "((p1 & ~p2) | TOP)");
  EXPECT_EQ(parse_formula("~~(p1 <-> BOT)").to_string(), "~~(p1 <-> BOT)");
}

TEST(ParseTest, RoundTripProperty) {
  test_support::FormulaGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    const auto f = gen.formula(6, 5);
    EXPECT_EQ(parse_formula(f.to_string()), f) << f.to_string();
  }
}

//===----------------------------------------------------------------------===//
// Evaluation and truth tables
//===----------------------------------------------------------------------===//

TEST(EvaluateTest, Constants) {
  EXPECT_TRUE(evaluate(Formula::top(), {}));
  EXPECT_FALSE(evaluate(Formula::bottom(), {}));
}

TEST(EvaluateTest, RunningExample) {
  const auto a = parse_formula(kExampleA);
  EXPECT_TRUE(evaluate(a, {{1, true}, {2, false}, {3, false}}));
  EXPECT_FALSE(evaluate(a, {{1, true}, {2, true}, {3, false}}));
}

TEST(EvaluateTest, MissingAtom) {
  EXPECT_THROW(evaluate(p(1) & p(2), {{1, true}}), DomainError);
  // Also reported when the other operand already decides the value.
  EXPECT_THROW(evaluate(p(1) | p(2), {{1, true}}), DomainError);
}

TEST(TruthTableTest, SingleAtom) {
  EXPECT_EQ(truth_table(p(1), {1}).to_string(), "01");
}

TEST(TruthTableTest, NegatedConjunction) {
  EXPECT_EQ(truth_table(~p(1) & ~p(2), {1, 2}).to_string(), "1000");
}

TEST(TruthTableTest, RunningExampleExactlyOneTrueRows) {
  const auto table = truth_table(parse_formula(kExampleA), {1, 2, 3});
  EXPECT_EQ(table.to_string(), "01101000");
  EXPECT_EQ(table.count_true(), 3u);
}

TEST(TruthTableTest, RowConventionFirstAtomIsMostSignificant) {
  // Listing p2 first swaps the roles of the bits.
  EXPECT_EQ(truth_table(p(1) & ~p(2), {1, 2}).to_string(), "0010");
  EXPECT_EQ(truth_table(p(1) & ~p(2), {2, 1}).to_string(), "0100");
}

TEST(TruthTableTest, RowsMatchEvaluate) {
  test_support::FormulaGenerator gen(3);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.formula(5, 5);
    const std::vector<AtomIndex> atoms{3, 1, 5, 2, 4};
    const auto table = truth_table(f, atoms);
    for (std::uint64_t k = 1; k <= table.row_count(); ++k)
      EXPECT_EQ(table.row(k), evaluate(f, Assignment::from_row_bits(atoms, k - 1)));
  }
}

TEST(TruthTableTest, Errors) {
  EXPECT_THROW(truth_table(p(1) & p(2), {1}), DomainError);
  EXPECT_THROW(truth_table(p(1), {1, 1}), DomainError);
  Limits tiny;
  tiny.max_table_atoms = 2;
  EXPECT_THROW(truth_table(p(1) & p(2) & p(3), tiny), CapacityError);
}

//===----------------------------------------------------------------------===//
// Quasi-norms, essential atoms, irreducibility
//===----------------------------------------------------------------------===//

TEST(QuasinormTest, Examples) {
  EXPECT_EQ(quasinorm(Formula::bottom()), 0u);
  EXPECT_EQ(quasinorm(p(1) & ~p(2)), 2u);
  EXPECT_EQ(quasinorm(p(1) | (p(1) & p(2))), 2u);
}

TEST(EquivalentTest, Examples) {
  EXPECT_TRUE(equivalent(p(1) | (p(1) & p(2)), p(1)));
  EXPECT_TRUE(equivalent(p(1), p(1)));
  EXPECT_TRUE(equivalent(parse_formula("p1 -> p1"), Formula::top()));
  EXPECT_FALSE(equivalent(p(1), p(2)));
}

TEST(EssentialAtomsTest, Examples) {
  EXPECT_EQ(essential_atoms(p(1) | (p(1) & p(2))), (std::vector<AtomIndex>{1}));
  EXPECT_EQ(essential_atoms(parse_formula("p1 <-> p2")), (std::vector<AtomIndex>{1, 2}));
  EXPECT_TRUE(essential_atoms(p(1) & ~p(1)).empty());
}

TEST(ClassQuasinormTest, Examples) {
  EXPECT_EQ(class_quasinorm(p(1) | (p(1) & p(2))), 1u);
  EXPECT_EQ(class_quasinorm(Formula::top()), 0u);
  EXPECT_EQ(class_quasinorm(parse_formula(kExampleA)), 3u);
}

TEST(IrreducibleTest, Examples) {
  EXPECT_FALSE(is_irreducible(p(1) | (p(1) & p(2))));
  EXPECT_TRUE(is_irreducible(p(1) & ~p(2)));
  EXPECT_TRUE(is_irreducible(parse_formula("~p1 & ~p2 & ~p3")));
  EXPECT_TRUE(is_irreducible(Formula::top()));
}

TEST(RepresentativeTest, Examples) {
  EXPECT_EQ(irreducible_representative(p(1) | (p(1) & p(2))), p(1));
  EXPECT_EQ(irreducible_representative(p(1) & ~p(1)), Formula::bottom());
  EXPECT_EQ(irreducible_representative(parse_formula("p1 -> p1")), Formula::top());
  EXPECT_EQ(irreducible_representative(parse_formula("p1 <-> p2")).to_string(),
            "((~p1 & ~p2) | (p1 & p2))");
  // Inessential atoms vanish even when they sit between essential ones.
  EXPECT_EQ(irreducible_representative(parse_formula("p1 & (p2 | ~p2) & p3")).to_string(),
            "(p1 & p3)");
}

//===----------------------------------------------------------------------===//
// Properties
//===----------------------------------------------------------------------===//

TEST(FormulaPropertyTest, QuasinormTriangleInequality) {
  test_support::FormulaGenerator gen(17);
  const Connective ops[] = {Connective::And, Connective::Or, Connective::Implies, Connective::Iff};
  for (int i = 0; i < 400; ++i) {
    const auto a = gen.formula(6, 3);
    const auto b = gen.formula(6, 3);
    std::vector<AtomIndex> shared;
    std::set_intersection(a.atoms().begin(), a.atoms().end(), b.atoms().begin(), b.atoms().end(),
                          std::back_inserter(shared));
    for (auto op : ops) {
      const auto combined = quasinorm(Formula::binary(op, a, b));
      EXPECT_LE(combined, quasinorm(a) + quasinorm(b));
      EXPECT_EQ(combined == quasinorm(a) + quasinorm(b), shared.empty());
      EXPECT_EQ(quasinorm(Formula::binary(op, a, a)), quasinorm(a));
    }
  }
}

TEST(FormulaPropertyTest, ClassQuasinormTriangleOnRepresentatives) {
  test_support::FormulaGenerator gen(19);
  const Connective ops[] = {Connective::And, Connective::Or, Connective::Implies, Connective::Iff};
  for (int i = 0; i < 200; ++i) {
    const auto a = irreducible_representative(gen.formula(5, 4));
    const auto b = irreducible_representative(gen.formula(5, 4));
    for (auto op : ops)
      EXPECT_LE(class_quasinorm(Formula::binary(op, a, b)), class_quasinorm(a) + class_quasinorm(b));
  }
}

TEST(FormulaPropertyTest, RepresentativeIsIrreducibleFixedPoint) {
  test_support::FormulaGenerator gen(23);
  for (int i = 0; i < 300; ++i) {
    const auto f = gen.formula(6, 5);
    const auto rep = irreducible_representative(f);
    EXPECT_TRUE(equivalent(rep, f));
    EXPECT_TRUE(is_irreducible(rep));
    EXPECT_EQ(rep.atoms(), essential_atoms(f));
    EXPECT_EQ(irreducible_representative(rep), rep);
  }
}

TEST(FormulaPropertyTest, EssentialAtomsBounded) {
  test_support::FormulaGenerator gen(29);
  for (int i = 0; i < 300; ++i) {
    const auto f = gen.formula(6, 5);
    const auto essential = essential_atoms(f);
    EXPECT_TRUE(std::includes(f.atoms().begin(), f.atoms().end(), essential.begin(), essential.end()));
    EXPECT_LE(class_quasinorm(f), quasinorm(f));
  }
}

TEST(FormulaPropertyTest, EquivalenceIsAnEquivalenceRelation) {
  test_support::FormulaGenerator gen(31);
  // Few atoms and shallow formulas so that equivalent triples actually occur.
  int transitive_chains = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto a = gen.formula(2, 2);
    const auto b = gen.formula(2, 2);
    const auto c = gen.formula(2, 2);
    EXPECT_TRUE(equivalent(a, a));
    EXPECT_EQ(equivalent(a, b), equivalent(b, a));
    if (equivalent(a, b) && equivalent(b, c)) {
      ++transitive_chains;
      EXPECT_TRUE(equivalent(a, c));
    }
  }
  EXPECT_GT(transitive_chains, 10);
}
