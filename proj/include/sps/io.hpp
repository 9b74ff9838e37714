#pragma once

#include "sps/multivariate.hpp"
#include "sps/pit.hpp"
#include "sps/root_bounds.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sps {

using Json = nlohmann::ordered_json;

/// Parsed expression document with its variable names.
struct ExpressionFile {
  std::vector<std::string> variables;
  MultivariateSpsExpression expr;

  /// The univariate view; throws InvalidArgument for more than one variable.
  SpsExpression univariate() const;
};

/// Builds an ExpressionFile from a document; throws ParseError naming the
/// JSON pointer of the first malformed value.
ExpressionFile parse_expression(const Json& doc);
ExpressionFile parse_expression_text(const std::string& text);
ExpressionFile read_expression_file(const std::string& path);

/// Wraps a univariate expression with the single variable name `X`.
ExpressionFile from_univariate(const SpsExpression& expr, std::string variable = "X");

/// Canonical document: monomials in canonical order, every number a string.
Json to_json(const ExpressionFile& file);
std::string canonical_text(const ExpressionFile& file);

/// "fnv1a64:" followed by 16 hex digits of the canonical text's FNV-1a hash.
std::string digest(const ExpressionFile& file);

Json polynomial_to_json(const SparsePoly& p);
Json trace_to_json(const PitVerdict& verdict);
Json bounds_to_json(const BoundReport& report);

}  // namespace sps
