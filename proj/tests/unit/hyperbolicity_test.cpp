#include <gtest/gtest.h>

#include "chebms/diagonal_operator.hpp"
#include "chebms/errors.hpp"
#include "chebms/hyperbolicity.hpp"
#include "generators.hpp"

using namespace chebms;
using chebms::testing::Gen;
using chebms::testing::Q;

TEST(IsHyperbolic, Examples) {
  EXPECT_TRUE(is_hyperbolic(Polynomial({-1, 0, 1})));
  EXPECT_FALSE(is_hyperbolic(Polynomial({1, 0, 1})));
  EXPECT_TRUE(is_hyperbolic(Polynomial({1, -2, 1})));
  EXPECT_TRUE(is_hyperbolic(Polynomial()));
  EXPECT_TRUE(is_hyperbolic(Polynomial({5})));
}

TEST(RealRootCount, Intervals) {
  EXPECT_EQ(real_root_count(Polynomial({-1, 0, 1}), -2, 2), 2u);
  EXPECT_EQ(real_root_count(Polynomial({0, -1, 0, 1}), Q(-1, 2), Q(1, 2)), 1u);
  EXPECT_EQ(real_root_count(Polynomial({1, 0, 1}), -10, 10), 0u);
  // Half-open: a root at hi counts, a root at lo does not.
  EXPECT_EQ(real_root_count(Polynomial({-1, 0, 1}), -1, 1), 1u);
  EXPECT_EQ(real_root_count(Polynomial({-1, 0, 1}), 0, 1), 1u);
  EXPECT_EQ(real_root_count(Polynomial({-1, 0, 1}), 1, 2), 0u);
  EXPECT_THROW(real_root_count(Polynomial({-1, 0, 1}), 1, 1), DegenerateInterval);
  EXPECT_THROW(real_root_count(Polynomial(), 0, 1), DomainError);
}

TEST(SturmChain, EndsInNonzeroConstant) {
  const SturmChain chain = sturm_chain(Polynomial({-6, 11, -6, 1}));
  ASSERT_FALSE(chain.polynomials.empty());
  EXPECT_EQ(chain.polynomials.back().degree(), 0u);
  EXPECT_EQ(real_root_count(Polynomial({-6, 11, -6, 1})), 3u);
}

namespace {

// Builds a random polynomial from factors with known real-root structure:
// linear factors x - r, and quadratics (x - s)^2 + t whose roots are real
// iff t <= 0. Returns the polynomial and whether it is hyperbolic.
std::pair<Polynomial, bool> random_factored(Gen& gen, std::size_t max_degree) {
  Polynomial p = Polynomial::constant(gen.nonzero_rational());
  bool hyperbolic = true;
  std::size_t degree = 0;
  const auto target = static_cast<std::size_t>(gen.integer(1, static_cast<long>(max_degree)));
  while (degree < target) {
    if (degree + 2 <= target && gen.integer(0, 1) == 1) {
      const BigRational s = gen.rational(3, 4);
      const BigRational t = gen.rational(2, 5);
      p = p * Polynomial({s * s + t, -2 * s, 1});
      if (t.sign() > 0) hyperbolic = false;
      degree += 2;
    } else {
      p = p * Polynomial({-gen.rational(3, 4), 1});
      degree += 1;
    }
  }
  return {p, hyperbolic};
}

// Lower bound on the number of distinct real roots: sign changes over a
// fine rational grid covering the Cauchy bound, plus exact grid hits.
std::size_t grid_root_lower_bound(const Polynomial& p) {
  BigRational bound = 0;
  for (const auto& c : p.coefficients()) bound = std::max(bound, (c / p.leading()).abs());
  bound += 1;
  const BigRational step = Q(1, 96);
  std::size_t count = 0;
  int last = p.sign_at(-bound);
  for (BigRational x = -bound + step; x <= bound; x += step) {
    const int s = p.sign_at(x);
    if (s == 0) {
      ++count;
    } else if (last != 0 && s != last) {
      ++count;
    }
    last = s;
  }
  return count;
}

}  // namespace

TEST(IsHyperbolic, AgreesWithConstructionAndGridOracle) {
  Gen gen(2024);
  for (int t = 0; t < 200; ++t) {
    const auto [p, expected] = random_factored(gen, 8);
    EXPECT_EQ(is_hyperbolic(p), expected) << p.to_string();
    const Polynomial sf = square_free_part(p);
    const std::size_t sturm = real_root_count(p);
    const std::size_t grid = grid_root_lower_bound(sf);
    EXPECT_LE(grid, sturm) << p.to_string();
    if (grid == *sf.degree()) EXPECT_TRUE(is_hyperbolic(p));
  }
}

TEST(IsHyperbolic, ReflectionPreservesRealRootedness) {
  Gen gen(99);
  const SequenceSpec alt = SequenceSpec::geometric(-1);
  for (int t = 0; t < 100; ++t) {
    const auto [p, expected] = random_factored(gen, 10);
    (void)expected;
    EXPECT_EQ(is_hyperbolic(apply_diagonal(alt, p)), is_hyperbolic(p));
  }
}

TEST(Falsify, GeometricTwoHasCounterexample) {
  const auto found = falsify_ms(SequenceSpec::geometric(2), 4, 1, 1000);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(is_hyperbolic(found->input));
  EXPECT_FALSE(is_hyperbolic(found->image));
  EXPECT_GT(found->image_real_root_deficit, 0u);
  EXPECT_EQ(found->image, apply_diagonal(SequenceSpec::geometric(2), found->input));
}

TEST(Falsify, TwoThirdsCubeIsACounterexampleForRatioTwo) {
  const Polynomial p = pow(Polynomial({Q(2, 3), 1}), 3);
  EXPECT_TRUE(is_hyperbolic(p));
  EXPECT_FALSE(is_hyperbolic(apply_diagonal(SequenceSpec::geometric(2), p)));
}

TEST(Falsify, NoCounterexampleForKnownSequences) {
  EXPECT_FALSE(falsify_ms(SequenceSpec::polynomial({1}), 8, 3, 300).has_value());
  EXPECT_FALSE(falsify_ms(SequenceSpec::geometric(-1), 10, 3, 300).has_value());
}

TEST(Falsify, Deterministic) {
  const auto a = falsify_ms(SequenceSpec::geometric(Q(3, 2)), 5, 77, 500);
  const auto b = falsify_ms(SequenceSpec::geometric(Q(3, 2)), 5, 77, 500);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) {
    EXPECT_EQ(a->input, b->input);
    EXPECT_EQ(a->image, b->image);
  }
}

TEST(Falsify, ShortExplicitSequenceIsClamped) {
  EXPECT_FALSE(falsify_ms(SequenceSpec::explicit_values({3}), 5, 0, 50).has_value());
  EXPECT_NO_THROW(falsify_ms(SequenceSpec::explicit_values({1, 2, 3}), 9, 0, 50));
}
