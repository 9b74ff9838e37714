#pragma once

#include "sps/coefficient.hpp"
#include "sps/sparse_poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sps {

/// One summand g * prod_j f_j^alphas[j] of an SPS expression.
struct TermSpec {
  std::vector<Integer> alphas;
  SparsePoly g = SparsePoly::constant(Rational(1));
};

/// sum_i g_i * prod_j f_j^alpha_ij with m shared factors f_j and k terms.
struct SpsExpression {
  std::vector<SparsePoly> factors;
  std::vector<TermSpec> terms;

  std::size_t k() const noexcept { return terms.size(); }
  std::size_t m() const noexcept { return factors.size(); }
  /// t: maximum sparsity of the factors.
  std::size_t max_factor_sparsity() const noexcept;
  /// h: maximum sparsity of the multipliers g_i.
  std::size_t max_multiplier_sparsity() const noexcept;
  /// True when every g_i is the constant 1.
  bool all_multipliers_one() const;
};

/// One message per broken invariant; empty iff the expression is well formed.
/// Factor and term numbers in messages are 1-based.
std::vector<std::string> validate(const SpsExpression& expr);

/// Throws InvalidExpression carrying validate()'s violations, if any.
void require_valid(const SpsExpression& expr);

}  // namespace sps
