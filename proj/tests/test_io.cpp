#include "sps/errors.hpp"
#include "sps/io.hpp"
#include "support/builders.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

using namespace sps;
using namespace sps::testing;

namespace {

std::string path_of_error(const std::string& text) {
  try {
    parse_expression_text(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Io, ParsesUnivariateDocument) {
  const ExpressionFile f = parse_expression_text(R"({
    "variables": ["X"],
    "factors": [{"monomials": [{"coeff": "1", "exponents": ["1"]}, {"coeff": "-1/2", "exponents": ["0"]}]}],
    "terms": [{"alphas": ["3"]}, {"alphas": ["100000000000000000000"], "g": {"monomials": []}}]
  })");
  const SpsExpression e = f.univariate();
  EXPECT_EQ(e.factors[0], poly({{"1", "1"}, {"-1/2", "0"}}));
  EXPECT_EQ(e.terms[0].g, cst(1));
  EXPECT_TRUE(e.terms[1].g.is_zero());
  EXPECT_EQ(e.terms[1].alphas[0], Integer("100000000000000000000"));
}

TEST(Io, ErrorsNameTheJsonPath) {
  EXPECT_EQ(path_of_error(R"({"variables": ["X"], "factors": [], "terms": [{"alphas": [1]}]})"), "/terms/0/alphas/0");
  EXPECT_EQ(path_of_error(R"({"variables": ["X"], "factors": [{"monomials": [{"coeff": "1/0", "exponents": ["1"]}]}],
                              "terms": []})"),
            "/factors/0/monomials/0/coeff");
  EXPECT_EQ(path_of_error(R"({"variables": ["X", "Y"], "factors": [{"monomials": [{"coeff": "1", "exponents": ["1"]}]}],
                              "terms": []})"),
            "/factors/0/monomials/0/exponents");
  EXPECT_EQ(path_of_error(R"({"variables": ["X"], "factors": []})"), "");
  EXPECT_EQ(path_of_error(R"({"variables": ["X"], "factors": [], "terms": [{"alphas": ["-2"]}]})"),
            "/terms/0/alphas/0");
  EXPECT_EQ(path_of_error("{not json"), "");
  EXPECT_EQ(path_of_error(R"({"variables": ["X", "X"], "factors": [], "terms": []})"), "/variables/1");
}

TEST(Io, RoundTripIsIdentityOnCanonicalText) {
  Rng rng(31);
  InstanceParams params;
  for (int iter = 0; iter < 100; ++iter) {
    const ExpressionFile f = from_univariate(random_expression(rng, params));
    const std::string text = canonical_text(f);
    const ExpressionFile again = parse_expression_text(text);
    ASSERT_EQ(canonical_text(again), text);
    ASSERT_EQ(digest(again), digest(f));
  }
  for (int iter = 0; iter < 50; ++iter) {
    ExpressionFile f;
    f.expr = random_multivariate(rng, 3, iter % 2 == 0);
    f.variables = {"a", "b", "c"};
    const std::string text = canonical_text(f);
    ASSERT_EQ(canonical_text(parse_expression_text(text)), text);
  }
}

TEST(Io, DigestIgnoresLayoutAndMonomialOrder) {
  const ExpressionFile a = parse_expression_text(
      R"({"variables":["X"],"factors":[{"monomials":[{"coeff":"1","exponents":["0"]},{"coeff":"2","exponents":["3"]}]}],"terms":[{"alphas":["1"]}]})");
  const ExpressionFile b = parse_expression_text(R"({
      "terms": [ {"alphas": ["1"]} ],
      "variables": ["X"],
      "factors": [ {"monomials": [ {"exponents": ["3"], "coeff": "4/2"}, {"coeff": "1", "exponents": ["0"]} ]} ]
  })");
  EXPECT_EQ(digest(a), digest(b));
  EXPECT_EQ(digest(a).rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(digest(a).size(), 8u + 16u);
}

TEST(Io, BoundsJsonUsesStrings) {
  const BoundReport r = evaluate_bounds(expression({poly({{"1", "1"}, {"-3", "0"}})},
                                                   {{ints({5}), cst(1)}, {ints({2}), cst(1)}}));
  const Json j = bounds_to_json(r);
  EXPECT_EQ(j["naive_bound"], "20");
  EXPECT_TRUE(j["descartes"].is_null());
  EXPECT_TRUE(j["h_sequence_naive"][1].is_string());
}
