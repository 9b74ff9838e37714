#pragma once

// Seeded random generators shared by the property tests and the acceptance
// suite.

#include "sps/expression.hpp"
#include "sps/multivariate.hpp"
#include "sps/sparse_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace sps::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Rational random_coeff(Rng& rng, long bound = 10, bool rational = false) {
  long num = 0;
  while (num == 0) num = uniform(rng, -bound, bound);
  Rational c{Integer(num), Integer(rational ? uniform(rng, 1, 4) : 1)};
  c.canonicalize();
  return c;
}

/// Nonzero polynomial with 1..max_terms monomials of degree <= max_degree.
inline SparsePoly random_poly(Rng& rng, long max_terms, long max_degree, long coeff_bound = 10,
                              bool rational = false) {
  const long want = uniform(rng, 1, std::min(max_terms, max_degree + 1));
  std::set<long> exps;
  while (static_cast<long>(exps.size()) < want) exps.insert(uniform(rng, 0, max_degree));
  std::vector<Monomial> terms;
  for (long e : exps) terms.push_back({random_coeff(rng, coeff_bound, rational), Integer(e)});
  return SparsePoly::from_terms(std::move(terms));
}

/// Exactly t monomials with distinct exponents in [0, max_degree].
inline SparsePoly random_t_sparse(Rng& rng, long t, long max_degree, long coeff_bound = 20) {
  std::set<long> exps;
  while (static_cast<long>(exps.size()) < t) exps.insert(uniform(rng, 0, max_degree));
  std::vector<Monomial> terms;
  for (long e : exps) terms.push_back({random_coeff(rng, coeff_bound), Integer(e)});
  return SparsePoly::from_terms(std::move(terms));
}

struct InstanceParams {
  long max_k = 4;
  long max_m = 3;
  long max_t = 5;
  long max_alpha = 8;
  long max_factor_degree = 4;
  long max_g_terms = 2;
  long max_g_degree = 3;
  /// Probability that a term keeps g = 1.
  double g_one = 0.5;
};

inline std::vector<Integer> random_alphas(Rng& rng, std::size_t m, long max_alpha) {
  std::vector<Integer> a;
  for (std::size_t j = 0; j < m; ++j) a.emplace_back(uniform(rng, 0, max_alpha));
  return a;
}

inline SparsePoly random_g(Rng& rng, const InstanceParams& p) {
  if (coin(rng, p.g_one)) return SparsePoly::constant(Rational(1));
  return random_poly(rng, p.max_g_terms, p.max_g_degree);
}

inline SpsExpression random_expression(Rng& rng, const InstanceParams& p) {
  SpsExpression e;
  const long m = uniform(rng, 1, p.max_m);
  const long k = uniform(rng, 1, p.max_k);
  for (long j = 0; j < m; ++j) e.factors.push_back(random_poly(rng, p.max_t, p.max_factor_degree));
  for (long i = 0; i < k; ++i) e.terms.push_back({random_alphas(rng, e.factors.size(), p.max_alpha), random_g(rng, p)});
  return e;
}

/// Expression with all g_i = 1.
inline SpsExpression random_ones_expression(Rng& rng, InstanceParams p) {
  p.g_one = 1.0;
  return random_expression(rng, p);
}

namespace detail {

/// One way of writing the same product twice: the twin of a term has a
/// different alpha row and a rescaled g, but the same value.
enum class Rewrite { copy, negated, squared, constant, monomial };

struct PlantedFactors {
  Rewrite kind;
  std::vector<SparsePoly> factors;  // factors[0], factors[1] related by `kind`; factors[2] free
  Rational constant;                // for Rewrite::constant
};

inline PlantedFactors planted_factors(Rng& rng, const InstanceParams& p) {
  PlantedFactors out;
  out.kind = static_cast<Rewrite>(uniform(rng, 0, 4));
  const long half_degree = std::max<long>(1, p.max_factor_degree / 2);
  const SparsePoly base = random_poly(rng, std::min<long>(p.max_t, 3), half_degree);
  switch (out.kind) {
    case Rewrite::copy:
      out.factors = {base, base};
      break;
    case Rewrite::negated:
      out.factors = {base, negate(base)};
      break;
    case Rewrite::squared:
      out.factors = {base, mul(base, base)};
      break;
    case Rewrite::constant:
      out.constant = coin(rng) ? Rational(-1) : Rational(uniform(rng, 2, 3));
      out.factors = {base, SparsePoly::constant(out.constant)};
      break;
    case Rewrite::monomial:
      out.factors = {SparsePoly::x(), base};
      break;
  }
  if (p.max_m >= 3 && coin(rng, 0.7)) out.factors.push_back(random_poly(rng, p.max_t, p.max_factor_degree));
  return out;
}

/// Writes g * prod f^alphas a second time as g2 * prod f^alphas2 (value unchanged).
inline void rewrite(Rng& rng, const PlantedFactors& pf, long max_alpha, const SparsePoly& g,
                    const std::vector<Integer>& alphas, SparsePoly& g2, std::vector<Integer>& alphas2) {
  g2 = g;
  alphas2 = alphas;
  const long a0 = alphas[0].get_si();
  const long a1 = alphas[1].get_si();
  switch (pf.kind) {
    case Rewrite::copy: {
      const long total = a0 + a1;
      const long lo = std::max<long>(0, total - max_alpha);
      const long n0 = uniform(rng, lo, std::min(total, max_alpha));
      alphas2[0] = n0;
      alphas2[1] = total - n0;
      break;
    }
    case Rewrite::negated: {
      const long total = a0 + a1;
      const long lo = std::max<long>(0, total - max_alpha);
      const long n0 = uniform(rng, lo, std::min(total, max_alpha));
      alphas2[0] = n0;
      alphas2[1] = total - n0;
      if ((total - n0 - a1) % 2 != 0) g2 = negate(g2);
      break;
    }
    case Rewrite::squared: {
      const long total = a0 + 2 * a1;  // power of the base
      const long hi = std::min(total / 2, max_alpha);
      const long lo = std::max<long>(0, (total - max_alpha + 1) / 2);
      const long n1 = lo <= hi ? uniform(rng, lo, hi) : a1;
      alphas2[0] = total - 2 * n1;
      alphas2[1] = n1;
      break;
    }
    case Rewrite::constant: {
      const long n1 = uniform(rng, 0, max_alpha);
      alphas2[1] = n1;
      // c^a1 g = c^n1 g2
      const long d = a1 - n1;
      const Rational c = pow(pf.constant, Integer(d < 0 ? -d : d));
      g2 = scale(g, d < 0 ? Rational(1 / c) : c);
      break;
    }
    case Rewrite::monomial: {
      // Move X powers between the factor X and g.
      const long n0 = uniform(rng, 0, a0);
      alphas2[0] = n0;
      g2 = mul(g, SparsePoly::monomial(Rational(1), Integer(a0 - n0)));
      break;
    }
  }
}

}  // namespace detail

/// Identically zero by construction: pairs (or a triple) of terms that are two
/// spellings of the same product with cancelling multipliers.
inline SpsExpression planted_zero(Rng& rng, const InstanceParams& p) {
  const detail::PlantedFactors pf = detail::planted_factors(rng, p);
  SpsExpression e;
  e.factors = pf.factors;
  const std::size_t m = e.factors.size();
  const long alpha_cap = pf.kind == detail::Rewrite::constant ? std::min<long>(p.max_alpha, 4) : p.max_alpha;

  const bool triple = p.max_k >= 3 && coin(rng, 0.25);
  const long groups = triple ? 1 : (p.max_k >= 4 && coin(rng, 0.5) ? 2 : 1);
  for (long gi = 0; gi < groups; ++gi) {
    std::vector<Integer> alphas = random_alphas(rng, m, alpha_cap);
    SparsePoly g = random_g(rng, p);
    SparsePoly g2;
    std::vector<Integer> alphas2;
    detail::rewrite(rng, pf, alpha_cap, g, alphas, g2, alphas2);
    if (triple) {
      // -(g+u)*P + g*P + u*P, the last two respelled.
      SparsePoly u = random_g(rng, p);
      SparsePoly g3;
      std::vector<Integer> alphas3;
      detail::rewrite(rng, pf, alpha_cap, u, alphas, g3, alphas3);
      e.terms.push_back({alphas, negate(add(g, u))});
      e.terms.push_back({alphas2, g2});
      e.terms.push_back({alphas3, g3});
    } else {
      e.terms.push_back({alphas, g});
      e.terms.push_back({alphas2, negate(g2)});
    }
  }
  std::shuffle(e.terms.begin(), e.terms.end(), rng);
  return e;
}

/// planted_zero with one coefficient, exponent or multiplier disturbed;
/// usually, but not always, nonzero.
inline SpsExpression near_miss(Rng& rng, const InstanceParams& p) {
  SpsExpression e = planted_zero(rng, p);
  TermSpec& t = e.terms[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(e.terms.size()) - 1))];
  switch (uniform(rng, 0, 2)) {
    case 0:
      t.g = add(t.g, SparsePoly::monomial(random_coeff(rng, 3), Integer(uniform(rng, 0, p.max_g_degree))));
      break;
    case 1: {
      auto& a = t.alphas[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(t.alphas.size()) - 1))];
      a = a == 0 ? Integer(1) : Integer(a - 1);
      break;
    }
    default:
      t.g = scale(t.g, Rational(2));
      break;
  }
  return e;
}

/// Small multivariate instance; zero by construction half of the time.
inline MultivariateSpsExpression random_multivariate(Rng& rng, std::size_t variables, bool planted) {
  auto random_mpoly = [&](long max_terms, long max_deg) {
    std::vector<MultiMonomial> terms;
    const long n = uniform(rng, 1, max_terms);
    for (long i = 0; i < n; ++i) {
      MultiMonomial mono{random_coeff(rng, 5), {}};
      for (std::size_t v = 0; v < variables; ++v) mono.exponents.emplace_back(uniform(rng, 0, max_deg));
      terms.push_back(std::move(mono));
    }
    auto p = MultivariateSparsePoly::from_terms(variables, std::move(terms));
    if (p.is_zero()) p = MultivariateSparsePoly::constant(variables, Rational(1));
    return p;
  };

  MultivariateSpsExpression e;
  e.variables = variables;
  const long m = uniform(rng, 1, 2);
  for (long j = 0; j < m; ++j) e.factors.push_back(random_mpoly(3, 2));
  if (planted) {
    // f_1 duplicated as a product of pieces: f_1 = a*b spelled as a factor and as two factors.
    const auto a = random_mpoly(2, 1);
    const auto b = random_mpoly(2, 1);
    e.factors.push_back(mul(a, b));
    e.factors.push_back(a);
    e.factors.push_back(b);
    const std::size_t ab = e.factors.size() - 3;
    const long reps = uniform(rng, 1, 2);
    for (long r = 0; r < reps; ++r) {
      std::vector<Integer> alphas(e.factors.size(), Integer(0));
      for (std::size_t j = 0; j < ab; ++j) alphas[j] = uniform(rng, 0, 2);
      const long c = uniform(rng, 0, 3);
      std::vector<Integer> first = alphas, second = alphas;
      first[ab] = c;
      second[ab + 1] = c;
      second[ab + 2] = c;
      auto g = coin(rng) ? std::optional<MultivariateSparsePoly>() : std::optional(random_mpoly(2, 1));
      auto neg = g ? scale(*g, Rational(-1)) : MultivariateSparsePoly::constant(variables, Rational(-1));
      e.terms.push_back({first, g});
      e.terms.push_back({second, neg});
    }
  } else {
    const long k = uniform(rng, 1, 3);
    for (long i = 0; i < k; ++i) {
      std::vector<Integer> alphas;
      for (std::size_t j = 0; j < e.factors.size(); ++j) alphas.emplace_back(uniform(rng, 0, 3));
      auto g = coin(rng) ? std::optional<MultivariateSparsePoly>() : std::optional(random_mpoly(2, 2));
      e.terms.push_back({alphas, g});
    }
  }
  return e;
}

}  // namespace sps::testing
