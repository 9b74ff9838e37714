#include "sps/multivariate.hpp"

#include "sps/errors.hpp"

#include <algorithm>
#include <map>

namespace sps {

bool operator==(const MultiMonomial& a, const MultiMonomial& b) {
  return a.exponents == b.exponents && a.coeff == b.coeff;
}

MultivariateSparsePoly MultivariateSparsePoly::from_terms(std::size_t variables,
                                                          std::vector<MultiMonomial> terms) {
  std::map<std::vector<Integer>, Rational> acc;
  for (auto& t : terms) {
    if (t.exponents.size() != variables) {
      throw InvalidArgument("monomial has " + std::to_string(t.exponents.size()) + " exponents, expected " +
                            std::to_string(variables));
    }
    for (const auto& e : t.exponents) {
      if (e < 0) throw InvalidArgument("negative exponent " + to_string(e));
    }
    acc[std::move(t.exponents)] += t.coeff;
  }
  MultivariateSparsePoly p(variables);
  for (auto& [exps, c] : acc) {
    if (c != 0) p.terms_.push_back({c, exps});
  }
  return p;
}

MultivariateSparsePoly MultivariateSparsePoly::constant(std::size_t variables, const Rational& c) {
  return from_terms(variables, {{c, std::vector<Integer>(variables, Integer(0))}});
}

MultivariateSparsePoly MultivariateSparsePoly::from_univariate(const SparsePoly& p) {
  std::vector<MultiMonomial> terms;
  for (const auto& m : p.monomials()) terms.push_back({m.coeff, {m.exponent}});
  return from_terms(1, std::move(terms));
}

Integer MultivariateSparsePoly::total_degree() const {
  Integer best(0);
  for (const auto& m : terms_) {
    Integer s(0);
    for (const auto& e : m.exponents) s += e;
    if (s > best) best = s;
  }
  return best;
}

MultivariateSparsePoly add(const MultivariateSparsePoly& p, const MultivariateSparsePoly& q) {
  if (p.variables() != q.variables()) throw InvalidArgument("variable count mismatch in add");
  std::vector<MultiMonomial> terms = p.monomials();
  terms.insert(terms.end(), q.monomials().begin(), q.monomials().end());
  return MultivariateSparsePoly::from_terms(p.variables(), std::move(terms));
}

MultivariateSparsePoly mul(const MultivariateSparsePoly& p, const MultivariateSparsePoly& q) {
  if (p.variables() != q.variables()) throw InvalidArgument("variable count mismatch in mul");
  std::vector<MultiMonomial> terms;
  terms.reserve(p.sparsity() * q.sparsity());
  for (const auto& a : p.monomials()) {
    for (const auto& b : q.monomials()) {
      std::vector<Integer> e(p.variables());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = a.exponents[v] + b.exponents[v];
      terms.push_back({Rational(a.coeff * b.coeff), std::move(e)});
    }
  }
  return MultivariateSparsePoly::from_terms(p.variables(), std::move(terms));
}

MultivariateSparsePoly scale(const MultivariateSparsePoly& p, const Rational& c) {
  std::vector<MultiMonomial> terms = p.monomials();
  for (auto& t : terms) t.coeff *= c;
  return MultivariateSparsePoly::from_terms(p.variables(), std::move(terms));
}

MultivariateSparsePoly pow(const MultivariateSparsePoly& p, const Integer& n) {
  if (n < 0) throw InvalidArgument("negative power of a polynomial");
  const std::size_t vars = p.variables();
  if (n == 0) return MultivariateSparsePoly::constant(vars, Rational(1));
  if (p.is_zero()) return MultivariateSparsePoly(vars);
  if (p.sparsity() == 1) {
    const auto& m = p.monomials().front();
    std::vector<Integer> e(vars);
    for (std::size_t v = 0; v < vars; ++v) e[v] = m.exponents[v] * n;
    return MultivariateSparsePoly::from_terms(vars, {{pow(m.coeff, n), std::move(e)}});
  }
  if (!n.fits_ulong_p()) throw CapExceeded("power " + to_string(n) + " cannot be expanded");
  MultivariateSparsePoly result = MultivariateSparsePoly::constant(vars, Rational(1));
  MultivariateSparsePoly base = p;
  for (unsigned long e = n.get_ui();;) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

std::vector<std::string> validate(const MultivariateSpsExpression& expr) {
  std::vector<std::string> out;
  if (expr.variables == 0) out.emplace_back("expression has no variables");
  if (expr.factors.empty()) out.emplace_back("expression has no factors");
  if (expr.terms.empty()) out.emplace_back("expression has no terms");
  for (std::size_t j = 0; j < expr.factors.size(); ++j) {
    if (expr.factors[j].is_zero()) out.push_back("factor " + std::to_string(j + 1) + " is the zero polynomial");
    if (expr.factors[j].variables() != expr.variables) {
      out.push_back("factor " + std::to_string(j + 1) + ": wrong variable count");
    }
  }
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    const auto& term = expr.terms[i];
    if (term.alphas.size() != expr.factors.size()) {
      out.push_back("term " + std::to_string(i + 1) + ": expected " + std::to_string(expr.factors.size()) +
                    " exponents, got " + std::to_string(term.alphas.size()));
    }
    for (std::size_t j = 0; j < term.alphas.size(); ++j) {
      if (term.alphas[j] < 0) {
        out.push_back("term " + std::to_string(i + 1) + ": exponent " + std::to_string(j + 1) + " is negative");
      }
    }
    if (term.g && term.g->variables() != expr.variables) {
      out.push_back("term " + std::to_string(i + 1) + ": multiplier has wrong variable count");
    }
  }
  return out;
}

namespace {

void require_valid(const MultivariateSpsExpression& expr) {
  auto violations = validate(expr);
  if (!violations.empty()) throw InvalidExpression(std::move(violations));
}

}  // namespace

Integer safe_kronecker_degree(const MultivariateSpsExpression& expr) {
  std::vector<Integer> factor_degrees;
  factor_degrees.reserve(expr.factors.size());
  for (const auto& f : expr.factors) factor_degrees.push_back(f.total_degree());
  Integer best(0);
  for (const auto& fd : factor_degrees) {
    if (fd > best) best = fd;
  }
  for (const auto& term : expr.terms) {
    if (term.g && term.g->is_zero()) continue;
    Integer d = term.g ? term.g->total_degree() : Integer(0);
    for (std::size_t j = 0; j < factor_degrees.size() && j < term.alphas.size(); ++j) {
      d += term.alphas[j] * factor_degrees[j];
    }
    if (d > best) best = d;
  }
  return best;
}

SparsePoly kronecker_substitute(const MultivariateSparsePoly& p, const Integer& d) {
  if (d < 0) throw InvalidArgument("negative Kronecker degree bound");
  const Integer base = d + 1;
  std::vector<Integer> weights(p.variables());
  Integer w = base;
  for (auto& x : weights) {
    x = w;
    w *= base;
  }
  std::vector<Monomial> terms;
  terms.reserve(p.sparsity());
  for (const auto& m : p.monomials()) {
    Integer e(0);
    for (std::size_t v = 0; v < weights.size(); ++v) e += m.exponents[v] * weights[v];
    terms.push_back({m.coeff, std::move(e)});
  }
  return SparsePoly::from_terms(std::move(terms));
}

SpsExpression kronecker_reduce(const MultivariateSpsExpression& expr, const std::optional<Integer>& d) {
  require_valid(expr);
  const Integer safe = safe_kronecker_degree(expr);
  const Integer bound = d.value_or(safe);
  if (bound < safe) {
    throw InvalidArgument("degree bound too small: " + to_string(bound) + " < required " + to_string(safe));
  }
  SpsExpression out;
  out.factors.reserve(expr.factors.size());
  for (const auto& f : expr.factors) out.factors.push_back(kronecker_substitute(f, bound));
  for (const auto& term : expr.terms) {
    TermSpec t;
    t.alphas = term.alphas;
    if (term.g) t.g = kronecker_substitute(*term.g, bound);
    out.terms.push_back(std::move(t));
  }
  return out;
}

SpsExpression to_univariate(const MultivariateSpsExpression& expr) {
  if (expr.variables != 1) throw InvalidArgument("to_univariate needs exactly one variable");
  auto convert = [](const MultivariateSparsePoly& p) {
    std::vector<Monomial> terms;
    for (const auto& m : p.monomials()) terms.push_back({m.coeff, m.exponents.front()});
    return SparsePoly::from_terms(std::move(terms));
  };
  SpsExpression out;
  for (const auto& f : expr.factors) out.factors.push_back(convert(f));
  for (const auto& term : expr.terms) {
    TermSpec t;
    t.alphas = term.alphas;
    if (term.g) t.g = convert(*term.g);
    out.terms.push_back(std::move(t));
  }
  return out;
}

}  // namespace sps
