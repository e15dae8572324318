#include <gtest/gtest.h>

#include "chebms/errors.hpp"
#include "chebms/serialize.hpp"
#include "generators.hpp"

using namespace chebms;
using chebms::testing::Gen;
using chebms::testing::Q;

TEST(Serialize, RationalFormat) {
  EXPECT_EQ(to_json(Q(-3, 4)), Json("-3/4"));
  EXPECT_EQ(to_json(Q(5)), Json("5"));
  EXPECT_THROW(rational_from_json(Json(3)), ParseError);
}

TEST(Serialize, PolynomialRoundTrip) {
  Gen gen(4);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = gen.polynomial_up_to(10);
    const Json j = to_json(p);
    EXPECT_EQ(j.at("basis"), "standard");
    EXPECT_EQ(polynomial_from_json(Json::parse(j.dump())), p);
    const ChebSeries s = std_to_cheb(p);
    EXPECT_EQ(to_json(s).at("basis"), "chebyshev");
    EXPECT_EQ(cheb_series_from_json(to_json(s)), s);
  }
  EXPECT_THROW(polynomial_from_json(to_json(ChebSeries({1}))), ParseError);
}

TEST(Serialize, SymbolPrefix) {
  const SequenceSpec spec = SequenceSpec::polynomial({0, 1});
  const Json j = to_json(spec, symbol_prefix(spec, 2));
  EXPECT_EQ(j.dump(), R"({"spec":"poly:0,1","k_max":2,"coefficients":["0","0","-1/2","0","-1/48"]})");
}

TEST(Serialize, VerdictRoundTrip) {
  for (const Verdict& v : {classify_polynomial_sequence({0, 1}, 10), classify_polynomial_sequence({1}, 10),
                           geometric_ms_test(Q(-7, 3)), geometric_ms_test(1)}) {
    const Json j = to_json(v);
    EXPECT_TRUE(j.contains("status"));
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_TRUE(j.contains("notes"));
    EXPECT_EQ(verdict_from_json(Json::parse(j.dump())), v);
  }
  const Json lin = to_json(classify_polynomial_sequence({0, 1}, 10));
  EXPECT_EQ(lin.at("witness").dump(), R"({"n":1,"q2n":"-1/2","q2n2":"-1/48"})");
}

TEST(Serialize, Counterexample) {
  Counterexample c{Polynomial({-1, 0, 1}), Polynomial({1, 0, 1}), 2, 2};
  const Json j = to_json(c);
  EXPECT_EQ(j.at("input_real_roots"), 2);
  EXPECT_EQ(j.at("image_real_root_deficit"), 2);
  EXPECT_EQ(polynomial_from_json(j.at("image_poly")), c.image);
}
