#include <gtest/gtest.h>

#include "blindsat/dnf.hpp"
#include "blindsat/error.hpp"
#include "blindsat/logic.hpp"
#include "blindsat/truth_table.hpp"
#include "support/random_formula.hpp"

using namespace blindsat;

namespace {

Literal pos(AtomIndex a) { return {a, true}; }
Literal neg(AtomIndex a) { return {a, false}; }

CnfFormula example_a_cnf() {
  return CnfFormula({Clause({pos(1), pos(2), pos(3)}), Clause({neg(1), neg(2)}),
                     Clause({neg(1), neg(3)}), Clause({neg(2), neg(3)})});
}

bool oracle_satisfiable(const Formula& f) {
  if (f.atoms().empty()) return evaluate(f, Assignment{});
  return !truth_table(f).all_false();
}

}  // namespace

TEST(ClauseTest, Invariants) {
  EXPECT_THROW(Clause({}), DomainError);
  EXPECT_THROW(Clause({pos(1), pos(1)}), DomainError);
  EXPECT_THROW(Clause({pos(0)}), DomainError);
  EXPECT_NO_THROW(Clause({pos(1), neg(1)}));
  EXPECT_THROW(CnfFormula({}), DomainError);
  EXPECT_THROW(DnfFormula(std::vector<DnfFormula::Disjunct>{{}}), DomainError);
  EXPECT_NO_THROW(DnfFormula(std::vector<DnfFormula::Disjunct>{}));
}

TEST(DistributeTest, Examples) {
  const auto single = distribute(CnfFormula({Clause({pos(1), pos(2)})}));
  ASSERT_EQ(single.disjuncts().size(), 2u);
  EXPECT_EQ(single.disjuncts()[0], DnfFormula::Disjunct{pos(1)});
  EXPECT_EQ(single.disjuncts()[1], DnfFormula::Disjunct{pos(2)});

  const auto a = example_a_cnf();
  EXPECT_EQ(disjunct_count(a), 24);
  const auto dnf = distribute(a);
  EXPECT_EQ(dnf.disjuncts().size(), 24u);
  for (const auto& d : dnf.disjuncts()) EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(dnf.disjuncts()[0], (DnfFormula::Disjunct{pos(1), neg(1), neg(1), neg(2)}));
  EXPECT_EQ(dnf.disjuncts()[1], (DnfFormula::Disjunct{pos(1), neg(1), neg(1), neg(3)}));
  EXPECT_TRUE(equivalent(dnf.to_formula(), a.to_formula()));
}

TEST(DistributeTest, BlowupCounts) {
  EXPECT_EQ(distribute(blowup_instance(3, 3, 3, 0)).disjuncts().size(), 27u);
  EXPECT_EQ(distribute(blowup_instance(4, 4, 4, 0)).disjuncts().size(), 256u);
  EXPECT_EQ(distribute(blowup_instance(5, 5, 4, 0)).disjuncts().size(), 1024u);
  EXPECT_EQ(disjunct_count(blowup_instance(30, 30, 30, 1)), pow(BigInt(30), 30));
}

TEST(DistributeTest, Capacity) {
  Limits tiny;
  tiny.max_disjuncts = 26;
  try {
    distribute(blowup_instance(3, 3, 3, 0), tiny);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("27"), std::string::npos);
  }
}

TEST(DistributeTest, StreamingMatchesMaterialized) {
  const auto cnf = blowup_instance(5, 3, 3, 9);
  const auto dnf = distribute(cnf);
  std::size_t i = 0;
  for_each_disjunct(cnf, [&](const DnfFormula::Disjunct& d) {
    EXPECT_EQ(d, dnf.disjuncts().at(i++));
    return true;
  });
  EXPECT_EQ(i, dnf.disjuncts().size());
  std::size_t seen = 0;
  for_each_disjunct(cnf, [&](const DnfFormula::Disjunct&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(BlowupTest, Shape) {
  const auto f = blowup_instance(4, 1, 1, 3);
  ASSERT_EQ(f.clauses().size(), 1u);
  EXPECT_EQ(f.clauses()[0].size(), 1u);
  const auto g = blowup_instance(6, 5, 4, 11);
  EXPECT_EQ(g.clauses().size(), 5u);
  for (const auto& c : g.clauses()) {
    EXPECT_EQ(c.size(), 4u);
    std::set<AtomIndex> atoms;
    for (const auto& l : c.literals()) {
      EXPECT_GE(l.atom, 1u);
      EXPECT_LE(l.atom, 6u);
      atoms.insert(l.atom);
    }
    EXPECT_EQ(atoms.size(), 4u);
  }
  EXPECT_EQ(to_dimacs(blowup_instance(6, 5, 4, 11)), to_dimacs(g));
  EXPECT_NE(to_dimacs(blowup_instance(6, 5, 4, 12)), to_dimacs(g));
  EXPECT_THROW(blowup_instance(3, 2, 4, 0), DomainError);
  EXPECT_THROW(blowup_instance(3, 0, 2, 0), DomainError);
}

TEST(SatisfyingAssignmentTest, Examples) {
  const DnfFormula f({{pos(1), neg(1)}, {pos(2), pos(3)}});
  const auto a = dnf_satisfying_assignment(f);
  ASSERT_TRUE(a);
  EXPECT_FALSE(a->at(1));
  EXPECT_TRUE(a->at(2));
  EXPECT_TRUE(a->at(3));

  EXPECT_FALSE(dnf_satisfying_assignment(DnfFormula({{pos(1), neg(1)}, {neg(2), pos(2)}})));
  EXPECT_FALSE(dnf_satisfying_assignment(DnfFormula(std::vector<DnfFormula::Disjunct>{})));

  const auto cnf = example_a_cnf();
  const auto b = dnf_satisfying_assignment(distribute(cnf));
  ASSERT_TRUE(b);
  EXPECT_TRUE(evaluate(cnf.to_formula(), *b));
  EXPECT_TRUE(evaluate(parse_formula("(p1 | p2 | p3) & ~(p1 & p2) & ~(p1 & p3) & ~(p2 & p3)"), *b));
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify(DnfFormula({{pos(1)}, {neg(1)}})), Classification::Tautology);
  EXPECT_EQ(classify(DnfFormula({{pos(1), neg(1)}})), Classification::Contradiction);
  EXPECT_EQ(classify(DnfFormula({{pos(1), pos(2)}})), Classification::Contingency);
  EXPECT_EQ(classify(DnfFormula(std::vector<DnfFormula::Disjunct>{})), Classification::Contradiction);
  EXPECT_STREQ(to_string(Classification::Contingency), "contingency");
  Limits tiny;
  tiny.max_table_atoms = 1;
  EXPECT_THROW(classify(DnfFormula({{pos(1), pos(2)}}), tiny), CapacityError);
}

TEST(DimacsTest, RoundTrip) {
  const auto text = "c example\np cnf 3 4\n1 2 3 0\n-1 -2 0\n-1 -3 0\n-2 -3 0\n";
  const auto cnf = parse_dimacs(text);
  EXPECT_TRUE(equivalent(cnf.to_formula(), example_a_cnf().to_formula()));
  EXPECT_EQ(to_dimacs(cnf), "p cnf 3 4\n1 2 3 0\n-1 -2 0\n-1 -3 0\n-2 -3 0\n");
  EXPECT_EQ(to_dimacs(parse_dimacs(to_dimacs(cnf))), to_dimacs(cnf));
  // Clauses may span lines.
  EXPECT_EQ(to_dimacs(parse_dimacs("p cnf 2 1\n1\n-2 0\n")), "p cnf 2 1\n1 -2 0\n");
}

TEST(DimacsTest, Rejects) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
}

//===----------------------------------------------------------------------===//
// Properties against the truth-table oracle
//===----------------------------------------------------------------------===//

TEST(DnfPropertyTest, DistributePreservesEquivalence) {
  test_support::FormulaGenerator gen(211);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + gen.pick(6);
    const unsigned k = 1 + gen.pick(4);
    const unsigned m = 1 + gen.pick(std::min(n, 3u));
    const auto cnf = blowup_instance(n, k, m, gen.engine()());
    const auto dnf = distribute(cnf);
    EXPECT_EQ(BigInt(dnf.disjuncts().size()), pow(BigInt(m), k));
    for (const auto& d : dnf.disjuncts()) EXPECT_EQ(d.size(), k);
    EXPECT_TRUE(equivalent(dnf.to_formula(), cnf.to_formula()));
  }
}

TEST(DnfPropertyTest, SatisfyingAssignmentIsSoundAndComplete) {
  test_support::FormulaGenerator gen(223);
  for (int i = 0; i < 1000; ++i) {
    const unsigned n = 1 + gen.pick(8);
    const auto dnf = gen.dnf(n, 4, 4);
    const auto f = dnf.to_formula();
    const auto a = dnf_satisfying_assignment(dnf);
    EXPECT_EQ(a.has_value(), oracle_satisfiable(f)) << f.to_string();
    if (a) EXPECT_TRUE(evaluate(f, *a)) << f.to_string();
  }
}

TEST(DnfPropertyTest, ClassifyAgreesWithOracle) {
  test_support::FormulaGenerator gen(227);
  for (int i = 0; i < 500; ++i) {
    const auto dnf = gen.dnf(1 + gen.pick(3), 6, 2);
    const auto table = truth_table(dnf.to_formula());
    const auto expected = table.all_true()    ? Classification::Tautology
                          : table.all_false() ? Classification::Contradiction
                                              : Classification::Contingency;
    EXPECT_EQ(classify(dnf), expected);
  }
}
