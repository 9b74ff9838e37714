#include "sps/oracle_verify.hpp"

#include "dense.hpp"
#include "sps/errors.hpp"

#include <random>
#include <string>

namespace sps {
namespace {

// Largest degree for which expansions use dense arithmetic; beyond it the
// sparse arithmetic is the only practical route.
constexpr unsigned long kDenseDegreeLimit = 1UL << 20;

Integer multiset_count(const Integer& alpha, std::size_t sparsity) {
  if (alpha == 0 || sparsity <= 1) return Integer(1);
  Integer out;
  const Integer n = alpha + static_cast<unsigned long>(sparsity - 1);
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), sparsity - 1);
  return out;
}

Integer projected_term(const SparsePoly& g, const std::vector<Integer>& alphas,
                       const std::vector<SparsePoly>& factors) {
  if (g.is_zero()) return Integer(0);
  Integer span = g.degree() - g.order() + 1;
  Integer count(static_cast<unsigned long>(g.sparsity()));
  for (std::size_t j = 0; j < factors.size(); ++j) {
    span += alphas[j] * (factors[j].degree() - factors[j].order());
    count *= multiset_count(alphas[j], factors[j].sparsity());
  }
  return span < count ? span : count;
}

Integer term_degree_bound(const SparsePoly& g, const std::vector<Integer>& alphas,
                          const std::vector<SparsePoly>& factors) {
  Integer d = g.degree();
  for (std::size_t j = 0; j < factors.size(); ++j) d += alphas[j] * factors[j].degree();
  return d;
}

void check_cap(const Integer& projected, std::size_t cap) {
  if (projected > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceeded("expansion refused: projected " + to_string(projected) + " monomials exceed cap " +
                      std::to_string(cap));
  }
}

bool dense_ok(const Integer& degree) { return degree.fits_ulong_p() && degree.get_ui() <= kDenseDegreeLimit; }

dense::RatPoly dense_term(const SparsePoly& g, const std::vector<Integer>& alphas,
                          const std::vector<SparsePoly>& factors) {
  dense::RatPoly acc = dense::from_sparse(g);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (alphas[j] == 0) continue;
    acc = dense::mul(acc, dense::pow(dense::from_sparse(factors[j]), alphas[j].get_ui()));
  }
  return acc;
}

SparsePoly sparse_term(const SparsePoly& g, const std::vector<Integer>& alphas,
                       const std::vector<SparsePoly>& factors) {
  SparsePoly acc = g;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (alphas[j] != 0) acc = mul(acc, pow(factors[j], alphas[j]));
  }
  return acc;
}

struct TermRef {
  const SparsePoly* g;
  const std::vector<Integer>* alphas;
};

/// Expands sum of the referenced terms; dense when every term degree allows.
SparsePoly expand_terms(const std::vector<TermRef>& terms, const std::vector<SparsePoly>& factors) {
  bool dense_path = true;
  for (const auto& t : terms) {
    if (!t.g->is_zero() && !dense_ok(term_degree_bound(*t.g, *t.alphas, factors))) dense_path = false;
  }
  if (dense_path) {
    dense::RatPoly sum;
    for (const auto& t : terms) {
      if (t.g->is_zero()) continue;
      sum = dense::add(sum, dense_term(*t.g, *t.alphas, factors));
    }
    return dense::to_sparse(sum);
  }
  SparsePoly sum;
  for (const auto& t : terms) {
    if (!t.g->is_zero()) sum = add(sum, sparse_term(*t.g, *t.alphas, factors));
  }
  return sum;
}

std::vector<TermRef> level_terms(const LevelState& state) {
  std::vector<TermRef> refs;
  for (const auto& t : state.active_terms) refs.push_back({&t.g, &t.alphas});
  return refs;
}

Integer max_term_degree(const LevelState& state) {
  Integer best(0);
  for (const auto& t : state.active_terms) {
    Integer d = term_degree_bound(t.g, t.alphas, state.factors->factors);
    if (d > best) best = d;
  }
  return best;
}

/// Splits p = X^v * q with q(0) != 0 and returns v.
Integer strip_x_power(const SparsePoly& p, SparsePoly& q) {
  const Integer v = p.order();
  std::vector<Monomial> terms;
  terms.reserve(p.sparsity());
  for (const auto& m : p.monomials()) terms.push_back({m.coeff, m.exponent - v});
  q = SparsePoly::from_terms(std::move(terms));
  return v;
}

/// Primitive integer squarefree part of a nonzero q with q(0) != 0.
dense::IntPoly squarefree_dense(const SparsePoly& q, std::size_t degree_cap) {
  if (q.degree() > Integer(static_cast<unsigned long>(degree_cap))) {
    throw CapExceeded("degree " + to_string(q.degree()) + " exceeds the Sturm degree cap " +
                      std::to_string(degree_cap));
  }
  dense::IntPoly a = dense::primitive(dense::from_sparse(q).num);
  if (a.size() <= 1) return a;
  const dense::IntPoly g = dense::gcd(a, dense::derivative(a));
  if (g.size() <= 1) return a;
  dense::IntPoly quotient;
  const dense::IntPoly rem = dense::positive_prem(a, g, &quotient);
  if (!rem.empty()) throw Error("internal: inexact squarefree division");
  return dense::primitive(std::move(quotient));
}

int sign_at_pos_inf(const dense::IntPoly& p) { return dense::sign(p.back()); }
int sign_at_neg_inf(const dense::IntPoly& p) {
  const int s = dense::sign(p.back());
  return (dense::degree(p) % 2 == 0) ? s : -s;
}
int sign_at_zero(const dense::IntPoly& p) { return dense::sign(p.front()); }

template <class SignFn>
std::size_t variations(const std::vector<dense::IntPoly>& seq, SignFn sign_of) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Integer projected_sparsity(const SpsExpression& expr) {
  require_valid(expr);
  Integer total(0);
  for (const auto& t : expr.terms) total += projected_term(t.g, t.alphas, expr.factors);
  return total;
}

Integer projected_sparsity(const LevelState& state) {
  Integer total(0);
  for (const auto& t : state.active_terms) total += projected_term(t.g, t.alphas, state.factors->factors);
  return total;
}

SparsePoly expand_expression(const SpsExpression& expr, std::size_t size_cap) {
  check_cap(projected_sparsity(expr), size_cap);
  std::vector<TermRef> refs;
  for (const auto& t : expr.terms) refs.push_back({&t.g, &t.alphas});
  return expand_terms(refs, expr.factors);
}

SparsePoly expand_level(const LevelState& state, std::size_t size_cap) {
  check_cap(projected_sparsity(state), size_cap);
  return expand_terms(level_terms(state), state.factors->factors);
}

SparsePoly expand_term(const LevelState& state, std::size_t term_index, std::size_t size_cap) {
  const ActiveTerm& t = state.term(term_index);
  check_cap(projected_term(t.g, t.alphas, state.factors->factors), size_cap);
  return expand_terms({{&t.g, &t.alphas}}, state.factors->factors);
}

SparsePoly squarefree_part(const SparsePoly& p, std::size_t degree_cap) {
  if (p.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
  SparsePoly q;
  const Integer v = strip_x_power(p, q);
  dense::RatPoly sf{squarefree_dense(q, degree_cap), Integer(1)};
  if (v > 0) sf.num.insert(sf.num.begin(), Integer(0));
  sf.den = sf.num.back();
  if (sf.den < 0) {
    sf.den = -sf.den;
    for (auto& c : sf.num) c = -c;
  }
  return dense::to_sparse(sf);
}

RootCount sturm_count(const SparsePoly& p, std::size_t degree_cap) {
  if (p.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  SparsePoly q;
  const Integer v = strip_x_power(p, q);
  RootCount out;
  out.zero_is_root = v > 0;

  const dense::IntPoly s0 = squarefree_dense(q, degree_cap);
  if (s0.size() > 1) {
    std::vector<dense::IntPoly> seq{s0, dense::primitive(dense::derivative(s0))};
    while (seq.back().size() > 1) {
      dense::IntPoly r = dense::primitive(dense::positive_prem(seq[seq.size() - 2], seq.back()));
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      seq.push_back(std::move(r));
    }
    const std::size_t at_neg = variations(seq, sign_at_neg_inf);
    const std::size_t at_zero = variations(seq, sign_at_zero);
    const std::size_t at_pos = variations(seq, sign_at_pos_inf);
    out.negative = at_neg - at_zero;
    out.positive = at_zero - at_pos;
  }
  out.distinct_real_roots = out.negative + out.positive + (out.zero_is_root ? 1 : 0);
  return out;
}

bool check_transform_identity(const LevelState& state, const LevelState& next, std::size_t pivot,
                              std::size_t size_cap) {
  const ActiveTerm& p = state.term(pivot);
  const auto& factors = state.factors->factors;
  check_cap(projected_sparsity(state), size_cap);
  check_cap(projected_sparsity(next), size_cap);
  const SparsePoly& pi = state.factors->pi;

  const Integer deg_bound = max_term_degree(state) * 2 + max_term_degree(next) + p.g.degree() + pi.degree();
  if (dense_ok(deg_bound)) {
    const dense::RatPoly phi = dense::from_sparse(expand_terms(level_terms(state), factors));
    const dense::RatPoly phi_next = dense::from_sparse(expand_terms(level_terms(next), factors));
    const dense::RatPoly tp = dense_term(p.g, p.alphas, factors);
    const dense::RatPoly lhs = dense::mul(phi_next, tp);
    const dense::RatPoly inner =
        dense::sub(dense::mul(dense::derivative(phi), tp), dense::mul(phi, dense::derivative(tp)));
    const dense::RatPoly rhs =
        dense::mul(dense::mul(dense::from_sparse(p.g), dense::from_sparse(pi)), inner);
    return dense::equal(lhs, rhs);
  }
  const SparsePoly phi = expand_terms(level_terms(state), factors);
  const SparsePoly phi_next = expand_terms(level_terms(next), factors);
  const SparsePoly tp = sparse_term(p.g, p.alphas, factors);
  const SparsePoly inner = sub(mul(derivative(phi), tp), mul(phi, derivative(tp)));
  return mul(phi_next, tp) == mul(mul(p.g, pi), inner);
}

bool random_eval_check(const SpsExpression& expr, std::size_t n_points, std::uint64_t seed,
                       std::size_t bit_budget) {
  require_valid(expr);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num_dist(-64, 64);
  std::uniform_int_distribution<long> den_dist(1, 64);
  const Integer budget(static_cast<unsigned long>(bit_budget));

  for (std::size_t point = 0; point < n_points; ++point) {
    long num = 0;
    while (num == 0) num = num_dist(rng);
    Rational x{Integer(num), Integer(den_dist(rng))};
    x.canonicalize();
    const auto x_bits = static_cast<unsigned long>(bit_size(x));

    Integer estimate(0);
    for (const auto& f : expr.factors) estimate += f.degree() * x_bits;
    for (const auto& t : expr.terms) {
      if (!t.g.is_zero()) estimate += t.g.degree() * x_bits;
    }
    if (estimate > budget) throw CapExceeded("evaluation exceeds the bit budget");

    std::vector<Rational> values;
    values.reserve(expr.factors.size());
    for (const auto& f : expr.factors) values.push_back(evaluate(f, x));

    estimate = 0;
    for (const auto& t : expr.terms) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (!is_unit_or_zero(values[j])) estimate += t.alphas[j] * static_cast<unsigned long>(bit_size(values[j]));
      }
    }
    if (estimate > budget) throw CapExceeded("evaluation exceeds the bit budget");

    Rational sum(0);
    for (const auto& t : expr.terms) {
      if (t.g.is_zero()) continue;
      Rational term = evaluate(t.g, x);
      for (std::size_t j = 0; j < values.size(); ++j) term *= pow(values[j], t.alphas[j]);
      sum += term;
    }
    if (sum != 0) return false;
  }
  return true;
}

SparsePoly pw_fixture(unsigned n, unsigned cap) {
  if (n > cap) throw CapExceeded("fixture order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  dense::RatPoly acc = dense::one();
  const unsigned long roots = 1UL << n;
  for (unsigned long i = 1; i <= roots; ++i) {
    acc = dense::mul(acc, dense::RatPoly{{Integer(-static_cast<long>(i)), Integer(1)}, Integer(1)});
  }
  return dense::to_sparse(acc);
}

MultivariateSparsePoly expand_multivariate(const MultivariateSpsExpression& expr, std::size_t size_cap) {
  const auto violations = validate(expr);
  if (!violations.empty()) throw InvalidExpression(violations);
  Integer projected(0);
  for (const auto& t : expr.terms) {
    Integer count(t.g ? static_cast<unsigned long>(t.g->sparsity()) : 1UL);
    for (std::size_t j = 0; j < expr.factors.size(); ++j) count *= multiset_count(t.alphas[j], expr.factors[j].sparsity());
    projected += count;
  }
  check_cap(projected, size_cap);

  MultivariateSparsePoly sum(expr.variables);
  for (const auto& t : expr.terms) {
    MultivariateSparsePoly acc = t.g ? *t.g : MultivariateSparsePoly::constant(expr.variables, Rational(1));
    for (std::size_t j = 0; j < expr.factors.size(); ++j) {
      if (t.alphas[j] != 0) acc = mul(acc, pow(expr.factors[j], t.alphas[j]));
    }
    sum = add(sum, acc);
  }
  return sum;
}

}  // namespace sps
