#include "sps/expression.hpp"

#include "sps/errors.hpp"

#include <algorithm>

namespace sps {

std::size_t SpsExpression::max_factor_sparsity() const noexcept {
  std::size_t t = 0;
  for (const auto& f : factors) t = std::max(t, f.sparsity());
  return t;
}

std::size_t SpsExpression::max_multiplier_sparsity() const noexcept {
  std::size_t h = 0;
  for (const auto& term : terms) h = std::max(h, term.g.sparsity());
  return h;
}

bool SpsExpression::all_multipliers_one() const {
  const SparsePoly one = SparsePoly::constant(Rational(1));
  return std::all_of(terms.begin(), terms.end(), [&](const TermSpec& t) { return t.g == one; });
}

std::vector<std::string> validate(const SpsExpression& expr) {
  std::vector<std::string> out;
  if (expr.factors.empty()) out.emplace_back("expression has no factors");
  if (expr.terms.empty()) out.emplace_back("expression has no terms");
  for (std::size_t j = 0; j < expr.factors.size(); ++j) {
    if (expr.factors[j].is_zero()) {
      out.push_back("factor " + std::to_string(j + 1) + " is the zero polynomial");
    }
  }
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    const auto& alphas = expr.terms[i].alphas;
    if (alphas.size() != expr.factors.size()) {
      out.push_back("term " + std::to_string(i + 1) + ": expected " + std::to_string(expr.factors.size()) +
                    " exponents, got " + std::to_string(alphas.size()));
    }
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      if (alphas[j] < 0) {
        out.push_back("term " + std::to_string(i + 1) + ": exponent " + std::to_string(j + 1) +
                      " is negative");
      }
    }
  }
  return out;
}

void require_valid(const SpsExpression& expr) {
  auto violations = validate(expr);
  if (!violations.empty()) throw InvalidExpression(std::move(violations));
}

}  // namespace sps
