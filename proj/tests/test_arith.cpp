#include <gtest/gtest.h>

#include <set>

#include "blindsat/arith.hpp"
#include "blindsat/error.hpp"
#include "blindsat/logic.hpp"
#include "blindsat/truth_table.hpp"
#include "support/random_formula.hpp"

using namespace blindsat;

namespace {

const char* kExampleA = "(p1 | p2 | p3) & ~(p1 & p2) & ~(p1 & p3) & ~(p2 & p3)";

constexpr Monomial x1 = 1, x2 = 2, x3 = 4;

Formula example_a() { return parse_formula(kExampleA); }

std::vector<Rational> point(std::initializer_list<int> coords) {
  std::vector<Rational> out;
  for (int c : coords) out.emplace_back(c);
  return out;
}

std::vector<BinaryPoint> satisfying_points(const Formula& f, unsigned n) {
  std::vector<BinaryPoint> out;
  std::vector<AtomIndex> atoms;
  for (AtomIndex k = 1; k <= n; ++k) atoms.push_back(k);
  const auto table = truth_table(f, atoms);
  for (std::uint64_t r = 0; r < table.row_count(); ++r) {
    if (!table.at(r)) continue;
    BinaryPoint p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>((r >> (n - 1 - i)) & 1U);
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(PolyTest, ReductionInsideProducts) {
  const auto a = MultilinearPoly::variable(2, 1);
  const auto b = MultilinearPoly::variable(2, 2);
  EXPECT_EQ(a * a, a);
  EXPECT_EQ((a * b) * a, a * b);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(PolyTest, RenderingIsGraded) {
  const auto h = arithmetize(example_a());
  EXPECT_EQ(h.to_string(), "1*x1 + 1*x2 + 1*x3 - 2*x1*x2 - 2*x1*x3 - 2*x2*x3 + 3*x1*x2*x3");
  EXPECT_EQ(characteristic(example_a()).to_string(),
            "1*x1 + 1*x2 + 1*x3 - 2*x1*x2 - 2*x1*x3 - 2*x2*x3 + 3*x1*x2*x3 - 1");
  EXPECT_EQ(MultilinearPoly(3).to_string(), "0");
  EXPECT_EQ(MultilinearPoly::constant(0, -1).to_string(), "-1");
}

TEST(ArithmetizeTest, RunningExample) {
  const auto h = arithmetize(example_a());
  EXPECT_EQ(h.dimension(), 3u);
  EXPECT_EQ(h.term_count(), 7u);
  EXPECT_EQ(h.coefficient(x1), 1);
  EXPECT_EQ(h.coefficient(x2), 1);
  EXPECT_EQ(h.coefficient(x3), 1);
  EXPECT_EQ(h.coefficient(x1 | x2), -2);
  EXPECT_EQ(h.coefficient(x1 | x3), -2);
  EXPECT_EQ(h.coefficient(x2 | x3), -2);
  EXPECT_EQ(h.coefficient(x1 | x2 | x3), 3);
  EXPECT_EQ(h.constant_term(), 0);
}

TEST(ArithmetizeTest, TautologyAndContradictionCollapse) {
  EXPECT_TRUE(arithmetize(parse_formula("p1 -> p1")).is_constant(1));
  EXPECT_TRUE(arithmetize(parse_formula("p1 & ~p1")).is_zero());
  EXPECT_TRUE(arithmetize(parse_formula("(p1 & p2) <-> (p2 & p1)")).is_constant(1));
}

TEST(ArithmetizeTest, WiderDimension) {
  const auto h = arithmetize(Formula::atom(2), 4);
  EXPECT_EQ(h.dimension(), 4u);
  EXPECT_THROW(arithmetize(Formula::atom(5), 4), DomainError);
}

TEST(CharacteristicTest, Constants) {
  EXPECT_EQ(characteristic(example_a()).constant_term(), -1);
  EXPECT_TRUE(characteristic(Formula::top()).is_zero());
  EXPECT_TRUE(characteristic(Formula::bottom()).is_constant(-1));
}

TEST(EvalPolyTest, RunningExample) {
  const auto h = arithmetize(example_a());
  EXPECT_EQ(eval_poly(h, point({1, 0, 0})), 1);
  EXPECT_EQ(eval_poly(h, point({1, 1, 1})), 0);
  EXPECT_EQ(eval_poly(characteristic(example_a()), point({0, 0, 1})), 0);
}

TEST(EvalPolyTest, RationalPoint) {
  // h(A) at (1/2, 1/2, 1/2) = 3/2 - 6/4 + 3/8 = 3/8
  const auto h = arithmetize(example_a());
  const std::vector<Rational> half(3, Rational(1, 2));
  EXPECT_EQ(eval_poly(h, half), Rational(3, 8));
  EXPECT_THROW(eval_poly(h, point({1, 0})), DomainError);
}

TEST(BinaryRootsTest, RunningExample) {
  const std::vector<BinaryPoint> g_roots{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(binary_roots(characteristic(example_a())), g_roots);
  const std::vector<BinaryPoint> h_roots{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  EXPECT_EQ(binary_roots(arithmetize(example_a())), h_roots);
  EXPECT_TRUE(binary_roots(characteristic(Formula::bottom())).empty());
}

TEST(BinaryRootsTest, LargeCoefficientsUseExactPath) {
  // Coefficients beyond 64 bits force the BigInt sweep.
  const BigInt huge = BigInt(1) << 80;
  const auto p = MultilinearPoly::from_terms(2, {{x1, huge}, {0, -huge}});
  const std::vector<BinaryPoint> roots{{1, 0}, {1, 1}};
  EXPECT_EQ(binary_roots(p), roots);
}

TEST(BinaryRootsTest, Capacity) {
  Limits tiny;
  tiny.max_table_atoms = 2;
  EXPECT_THROW(binary_roots(characteristic(example_a()), tiny), CapacityError);
}

TEST(SolveTest, RunningExample) {
  const auto g = characteristic(example_a());
  EXPECT_EQ(solve_for_variable(g, 1, point({1, 1})), SolveResult(Inconsistent{}));
  EXPECT_EQ(solve_for_variable(g, 1, point({0, 0})), SolveResult(SolvedValue{1}));
  EXPECT_EQ(solve_for_variable(g, 1, point({1, 0})), SolveResult(SolvedValue{0}));
  EXPECT_EQ(solve_for_variable(g, 1, point({0, 1})), SolveResult(SolvedValue{0}));
}

TEST(SolveTest, MatchesClosedFormAtRationalPoints) {
  // x1 = (2 x2 x3 - x2 - x3 + 1) / (3 x2 x3 - 2 (x2 + x3) + 1)
  const auto g = characteristic(example_a());
  for (int a = -3; a <= 3; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Rational x2(a, b), x3(b, 3);
      const Rational den = 3 * x2 * x3 - 2 * (x2 + x3) + 1;
      if (den == 0) continue;
      const Rational expected = (2 * x2 * x3 - x2 - x3 + 1) / den;
      const std::vector<Rational> others{x2, x3};
      EXPECT_EQ(solve_for_variable(g, 1, others), SolveResult(SolvedValue{expected}));
    }
  }
}

TEST(SolveTest, Indeterminate) {
  const auto p = MultilinearPoly::from_terms(2, {{x1 | x2, 1}, {x2, -1}});
  EXPECT_EQ(solve_for_variable(p, 1, point({0})), SolveResult(Indeterminate{}));
  EXPECT_THROW(solve_for_variable(p, 3, point({0})), DomainError);
  EXPECT_THROW(solve_for_variable(p, 1, point({0, 0})), DomainError);
}

TEST(SubstituteTest, RunningExample) {
  const auto g = characteristic(example_a());
  const auto s = substitute_equal(g, 2, 1);
  EXPECT_EQ(s, MultilinearPoly::from_terms(3, {{x3, 1}, {x1 | x3, -1}, {0, -1}}));
  EXPECT_EQ(s.to_string(), "1*x3 - 1*x1*x3 - 1");
}

TEST(SubstituteTest, ConstantAndCollapse) {
  const auto c = MultilinearPoly::constant(2, 5);
  EXPECT_EQ(substitute_equal(c, 1, 2), c);
  const auto p = MultilinearPoly::from_terms(2, {{x1 | x2, 1}, {x1, 1}});
  EXPECT_EQ(substitute_equal(p, 2, 1), MultilinearPoly::from_terms(2, {{x1, 2}}));
  EXPECT_THROW(substitute_equal(p, 1, 1), DomainError);
}

TEST(ExponentVariantTest, Examples) {
  const auto g = characteristic(example_a());
  EXPECT_TRUE(exponent_variant_agrees(g, {}));

  ExponentMap cubes;
  for (const auto& t : g.terms())
    if (t.monomial & x1) cubes[{t.monomial, 1}] = 3;
  EXPECT_TRUE(exponent_variant_agrees(g, cubes));

  ExponentMap even{{{x1, 1}, 2}};
  EXPECT_THROW(exponent_variant_agrees(g, even), DomainError);
  ExponentMap absent{{{x1, 2}, 3}};
  EXPECT_THROW(exponent_variant_agrees(g, absent), DomainError);
}

TEST(ExponentVariantTest, DiffersOffTheCube) {
  // Same binary behaviour, different polynomial: x1^3 != x1 at x1 = 2.
  const auto p = MultilinearPoly::variable(1, 1);
  ExponentMap cube{{{x1, 1}, 3}};
  EXPECT_TRUE(exponent_variant_agrees(p, cube));
  const std::vector<Rational> two{Rational(2)};
  EXPECT_EQ(eval_with_exponents(p, cube, two), 8);
}

TEST(ExponentVariantTest, SampledBeyondCap) {
  Limits tiny;
  tiny.max_table_atoms = 1;
  const auto g = characteristic(example_a());
  ExponentMap cubes{{{x1 | x2 | x3, 2}, 5}};
  EXPECT_TRUE(exponent_variant_agrees(g, cubes, 50, 7, tiny));
}

TEST(FactoredTest, RunningExample) {
  const auto fp = factored_arithmetize(example_a());
  ASSERT_EQ(fp.factors().size(), 4u);
  EXPECT_EQ(fp.factors()[0], arithmetize(parse_formula("p1 | p2 | p3"), 3));
  EXPECT_EQ(fp.factors()[0].to_string(),
            "1*x1 + 1*x2 + 1*x3 - 1*x1*x2 - 1*x1*x3 - 1*x2*x3 + 1*x1*x2*x3");
  EXPECT_EQ(fp.factors()[1].to_string(), "-1*x1*x2 + 1");
  EXPECT_EQ(fp.factors()[2].to_string(), "-1*x1*x3 + 1");
  EXPECT_EQ(fp.factors()[3].to_string(), "-1*x2*x3 + 1");
  EXPECT_EQ(fp.expand(), arithmetize(example_a()));
}

TEST(FactoredTest, SingleAtom) {
  const auto fp = factored_arithmetize(Formula::atom(1));
  ASSERT_EQ(fp.factors().size(), 1u);
  EXPECT_EQ(fp.factors()[0], MultilinearPoly::variable(1, 1));
}

TEST(FactoredTest, SieveMatchesExpandedRoots) {
  const auto fp = factored_arithmetize(example_a());
  const auto sieve = factored_binary_roots(fp);
  EXPECT_EQ(sieve.roots, binary_roots(arithmetize(example_a())));
  EXPECT_EQ(sieve.evaluations, 4u * 8u);
  // (1,1,1) zeroes all three pair factors.
  EXPECT_EQ(sieve.duplicates, 2u);
}

TEST(InputSizeTest, Examples) {
  EXPECT_EQ(expanded_input_size(3), 32);
  EXPECT_EQ(expanded_input_size(0), 1);
  EXPECT_EQ(expanded_input_size(10), 11264);
}

//===----------------------------------------------------------------------===//
// Properties against the truth-table oracle
//===----------------------------------------------------------------------===//

TEST(ArithPropertyTest, SoundnessOnBinaryPoints) {
  test_support::FormulaGenerator gen(101);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + gen.pick(6);
    const auto f = gen.formula(n, 5);
    const auto h = arithmetize(f, n);
    EXPECT_LE(h.term_count(), std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Rational> pt(n);
      for (unsigned k = 0; k < n; ++k) pt[k] = (bits >> k) & 1U;
      EXPECT_EQ(eval_poly(h, pt), evaluate(f, test_support::assignment_of(bits, n)) ? 1 : 0);
    }
  }
}

TEST(ArithPropertyTest, RootsAreSatisfyingAssignments) {
  test_support::FormulaGenerator gen(103);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + gen.pick(6);
    const auto f = gen.formula(n, 5);
    EXPECT_EQ(binary_roots(characteristic(f, n)), satisfying_points(f, n)) << f.to_string();
    const bool tautology = truth_table(f, [&] {
                             std::vector<AtomIndex> a;
                             for (AtomIndex k = 1; k <= n; ++k) a.push_back(k);
                             return a;
                           }()).all_true();
    EXPECT_EQ(arithmetize(f, n).is_constant(1), tautology);
  }
}

TEST(ArithPropertyTest, SolvedBinaryValuesAreRoots) {
  test_support::FormulaGenerator gen(107);
  for (int i = 0; i < 150; ++i) {
    const unsigned n = 2 + gen.pick(4);
    const auto g = characteristic(gen.formula(n, 4), n);
    const unsigned var = 1 + gen.pick(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      std::vector<Rational> others(n - 1);
      for (unsigned k = 0; k < n - 1; ++k) others[k] = (bits >> k) & 1U;
      const auto result = solve_for_variable(g, var, others);
      const auto* solved = std::get_if<SolvedValue>(&result);
      if (!solved || (solved->value != 0 && solved->value != 1)) continue;
      std::vector<Rational> full(others);
      full.insert(full.begin() + (var - 1), solved->value);
      EXPECT_EQ(eval_poly(g, full), 0);
    }
  }
}

TEST(ArithPropertyTest, SubstitutionKeepsOnlyRootsOnThePlane) {
  test_support::FormulaGenerator gen(109);
  for (int i = 0; i < 150; ++i) {
    const unsigned n = 2 + gen.pick(4);
    const auto g = characteristic(gen.formula(n, 4), n);
    const unsigned a = 1 + gen.pick(n);
    const unsigned b = 1 + (a + gen.pick(n - 1)) % n;
    ASSERT_NE(a, b);
    const auto s = substitute_equal(g, a, b);
    std::vector<BinaryPoint> on_plane;
    for (const auto& r : binary_roots(g))
      if (r[a - 1] == r[b - 1]) on_plane.push_back(r);
    std::vector<BinaryPoint> s_on_plane;
    for (const auto& r : binary_roots(s))
      if (r[a - 1] == r[b - 1]) s_on_plane.push_back(r);
    EXPECT_EQ(s_on_plane, on_plane);
  }
}

TEST(ArithPropertyTest, FactoredAgreesWithExpanded) {
  test_support::FormulaGenerator gen(113);
  for (int i = 0; i < 150; ++i) {
    const unsigned n = 1 + gen.pick(5);
    auto f = gen.formula(n, 3) & gen.formula(n, 3) & gen.formula(n, 3);
    const auto fp = factored_arithmetize(f);
    const auto h = arithmetize(f);
    for (Monomial bits = 0; bits < (Monomial{1} << h.dimension()); ++bits)
      EXPECT_EQ(fp.evaluate_binary(bits), h.evaluate_binary(bits));
    EXPECT_EQ(factored_binary_roots(fp).roots, binary_roots(h));
  }
}
