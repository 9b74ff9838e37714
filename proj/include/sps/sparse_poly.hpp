#pragma once

#include "sps/coefficient.hpp"
#include "sps/sumset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sps {

/// A single nonzero term coeff * X^exponent.
struct Monomial {
  Rational coeff;
  Integer exponent;
};

bool operator==(const Monomial& a, const Monomial& b);

/// Univariate polynomial over Q in sparse canonical form: monomials strictly
/// increasing by exponent, no zero coefficients, the zero polynomial empty.
/// Exponents are arbitrary-precision, so X^(10^20) costs one monomial.
class SparsePoly {
 public:
  SparsePoly() = default;

  static SparsePoly constant(const Rational& c);
  static SparsePoly monomial(const Rational& c, const Integer& exponent);
  /// Accepts terms in any order; merges equal exponents and drops zeros.
  static SparsePoly from_terms(std::vector<Monomial> terms);
  /// coeffs[i] is the coefficient of X^i.
  static SparsePoly from_dense(const std::vector<Rational>& coeffs);
  /// The variable X.
  static SparsePoly x();

  const std::vector<Monomial>& monomials() const noexcept { return terms_; }
  std::size_t sparsity() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  // The following three require a nonzero polynomial.
  const Integer& degree() const;
  /// Lowest exponent present.
  const Integer& order() const;
  const Rational& leading_coeff() const;

  Rational coefficient(const Integer& exponent) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

 private:
  /// Caller guarantees canonical form.
  static SparsePoly from_canonical(std::vector<Monomial> terms);

  std::vector<Monomial> terms_;

  friend SparsePoly add(const SparsePoly&, const SparsePoly&);
  friend SparsePoly sub(const SparsePoly&, const SparsePoly&);
  friend SparsePoly mul(const SparsePoly&, const SparsePoly&);
  friend SparsePoly scale(const SparsePoly&, const Rational&);
  friend SparsePoly derivative(const SparsePoly&);
};

SparsePoly add(const SparsePoly& p, const SparsePoly& q);
SparsePoly sub(const SparsePoly& p, const SparsePoly& q);
SparsePoly negate(const SparsePoly& p);
SparsePoly mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly scale(const SparsePoly& p, const Rational& c);
/// Term-wise a*e*X^(e-1); constants vanish.
SparsePoly derivative(const SparsePoly& p);
/// p^n by repeated squaring.
SparsePoly pow(const SparsePoly& p, const Integer& n);
/// Product of all polynomials in the list; the empty product is 1.
SparsePoly product(const std::vector<SparsePoly>& polys);

/// Exponents carrying a nonzero coefficient.
IntSet support(const SparsePoly& p);

/// Exact evaluation. Throws CapExceeded when an exponent does not fit a word
/// and x is not 0 or +-1.
Rational evaluate(const SparsePoly& p, const Rational& x);

/// Human-readable form such as "2*X^3 - X + 1/2".
std::string to_string(const SparsePoly& p);

inline SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) { return add(p, q); }
inline SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) { return sub(p, q); }
inline SparsePoly operator-(const SparsePoly& p) { return negate(p); }
inline SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) { return mul(p, q); }

}  // namespace sps
