#pragma once

#include "sps/coefficient.hpp"
#include "sps/expression.hpp"
#include "sps/sparse_poly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sps {

struct MultiMonomial {
  Rational coeff;
  std::vector<Integer> exponents;  // one entry per variable
};

bool operator==(const MultiMonomial& a, const MultiMonomial& b);

/// Sparse polynomial in a fixed number of variables, canonical: monomials
/// ordered lexicographically by exponent vector, no zero coefficients.
class MultivariateSparsePoly {
 public:
  explicit MultivariateSparsePoly(std::size_t variables = 1) : variables_(variables) {}

  static MultivariateSparsePoly from_terms(std::size_t variables, std::vector<MultiMonomial> terms);
  static MultivariateSparsePoly constant(std::size_t variables, const Rational& c);
  /// Embeds a univariate polynomial in variable index 0.
  static MultivariateSparsePoly from_univariate(const SparsePoly& p);

  std::size_t variables() const noexcept { return variables_; }
  const std::vector<MultiMonomial>& monomials() const noexcept { return terms_; }
  std::size_t sparsity() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Maximum over monomials of the exponent sum; 0 for the zero polynomial.
  Integer total_degree() const;

  friend bool operator==(const MultivariateSparsePoly& a, const MultivariateSparsePoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t variables_;
  std::vector<MultiMonomial> terms_;
};

MultivariateSparsePoly add(const MultivariateSparsePoly& p, const MultivariateSparsePoly& q);
MultivariateSparsePoly mul(const MultivariateSparsePoly& p, const MultivariateSparsePoly& q);
MultivariateSparsePoly scale(const MultivariateSparsePoly& p, const Rational& c);
/// Requires n to fit a machine word unless p is a single monomial.
MultivariateSparsePoly pow(const MultivariateSparsePoly& p, const Integer& n);

struct MultivariateTerm {
  std::vector<Integer> alphas;
  std::optional<MultivariateSparsePoly> g;  // absent means the constant 1
};

/// sum_i g_i * prod_j f_j^alpha_ij over `variables` variables.
struct MultivariateSpsExpression {
  std::size_t variables = 1;
  std::vector<MultivariateSparsePoly> factors;
  std::vector<MultivariateTerm> terms;
};

std::vector<std::string> validate(const MultivariateSpsExpression& expr);

/// max over terms with nonzero g of total_degree(g) + sum_j alpha_ij * total_degree(f_j),
/// and over factors of total_degree(f_j), so every factor maps injectively too.
Integer safe_kronecker_degree(const MultivariateSpsExpression& expr);

/// X_i -> X^((d+1)^i) for the 1-based variable index i.
SparsePoly kronecker_substitute(const MultivariateSparsePoly& p, const Integer& d);

/// Univariate image under kronecker_substitute of every factor and multiplier;
/// the alpha matrix is unchanged. `d` defaults to safe_kronecker_degree and is
/// rejected (InvalidArgument, "degree bound too small") when below it.
SpsExpression kronecker_reduce(const MultivariateSpsExpression& expr,
                               const std::optional<Integer>& d = std::nullopt);

/// Exact univariate view of a 1-variable expression (no substitution).
SpsExpression to_univariate(const MultivariateSpsExpression& expr);

}  // namespace sps
