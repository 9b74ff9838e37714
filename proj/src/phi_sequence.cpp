#include "sps/phi_sequence.hpp"

#include "sps/errors.hpp"

#include <algorithm>

namespace sps {

std::shared_ptr<const FactorContext> FactorContext::make(std::vector<SparsePoly> factors) {
  auto ctx = std::make_shared<FactorContext>();
  const std::size_t m = factors.size();
  ctx->pi = product(factors);

  // prefix[j] = f_0 ... f_{j-1}, suffix[j] = f_j ... f_{m-1}
  std::vector<SparsePoly> prefix(m + 1, SparsePoly::constant(Rational(1)));
  std::vector<SparsePoly> suffix(m + 1, SparsePoly::constant(Rational(1)));
  for (std::size_t j = 0; j < m; ++j) prefix[j + 1] = mul(prefix[j], factors[j]);
  for (std::size_t j = m; j-- > 0;) suffix[j] = mul(factors[j], suffix[j + 1]);
  ctx->cofactor_derivatives.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    ctx->cofactor_derivatives.push_back(mul(mul(prefix[j], derivative(factors[j])), suffix[j + 1]));
  }
  ctx->factors = std::move(factors);
  return ctx;
}

const ActiveTerm* LevelState::find(std::size_t original_index) const noexcept {
  auto it = std::lower_bound(active_terms.begin(), active_terms.end(), original_index,
                             [](const ActiveTerm& t, std::size_t i) { return t.original_index < i; });
  if (it != active_terms.end() && it->original_index == original_index) return &*it;
  return nullptr;
}

const ActiveTerm& LevelState::term(std::size_t original_index) const {
  const ActiveTerm* t = find(original_index);
  if (t == nullptr) {
    throw InvalidArgument("term " + std::to_string(original_index + 1) + " is not active at level " +
                          std::to_string(level));
  }
  return *t;
}

std::size_t LevelState::max_g_sparsity() const noexcept {
  std::size_t h = 0;
  for (const auto& t : active_terms) h = std::max(h, t.g.sparsity());
  return h;
}

LevelState initial_state(const SpsExpression& expr) {
  require_valid(expr);
  LevelState state;
  state.level = 1;
  state.factors = FactorContext::make(expr.factors);
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    if (expr.terms[i].g.is_zero()) continue;
    state.active_terms.push_back({i, expr.terms[i].g, expr.terms[i].alphas});
  }
  return state;
}

Integer term_degree(const LevelState& state, std::size_t term_index) {
  const ActiveTerm& t = state.term(term_index);
  Integer d = t.g.degree();
  const auto& fs = state.factors->factors;
  for (std::size_t j = 0; j < fs.size(); ++j) d += t.alphas[j] * fs[j].degree();
  return d;
}

Rational term_leading_coeff(const LevelState& state, std::size_t term_index) {
  const ActiveTerm& t = state.term(term_index);
  Rational c = t.g.leading_coeff();
  const auto& fs = state.factors->factors;
  for (std::size_t j = 0; j < fs.size(); ++j) c *= pow(fs[j].leading_coeff(), t.alphas[j]);
  return c;
}

std::size_t choose_pivot(const LevelState& state) {
  if (state.active_terms.empty()) throw InvalidArgument("no active term to pivot on");
  std::size_t best = state.active_terms.front().original_index;
  Integer best_degree = term_degree(state, best);
  for (std::size_t i = 1; i < state.active_terms.size(); ++i) {
    const std::size_t idx = state.active_terms[i].original_index;
    Integer d = term_degree(state, idx);
    if (d > best_degree) {
      best = idx;
      best_degree = std::move(d);
    }
  }
  return best;
}

LevelState tilde_transform(const LevelState& state, std::size_t pivot) {
  const ActiveTerm& p = state.term(pivot);
  const FactorContext& ctx = *state.factors;
  const SparsePoly dg_p = derivative(p.g);

  LevelState next;
  next.level = state.level + 1;
  next.factors = state.factors;
  for (const auto& t : state.active_terms) {
    if (t.original_index == pivot) continue;

    // sum_j (alpha_ij - alpha_pj) f_j' prod_{l != j} f_l
    SparsePoly weighted;
    for (std::size_t j = 0; j < ctx.factors.size(); ++j) {
      const Integer diff = t.alphas[j] - p.alphas[j];
      if (diff != 0) weighted = add(weighted, scale(ctx.cofactor_derivatives[j], Rational(diff)));
    }
    SparsePoly wronskian = sub(mul(p.g, derivative(t.g)), mul(dg_p, t.g));
    SparsePoly g_new = add(mul(ctx.pi, wronskian), mul(mul(p.g, t.g), weighted));
    if (g_new.is_zero()) continue;
    next.active_terms.push_back({t.original_index, std::move(g_new), t.alphas});
  }
  return next;
}

std::vector<LevelState> phi_sequence(const SpsExpression& expr) {
  std::vector<LevelState> levels;
  levels.push_back(initial_state(expr));
  while (levels.back().active_terms.size() >= 2) {
    const std::size_t pivot = choose_pivot(levels.back());
    levels.back().pivot = pivot;
    LevelState next = tilde_transform(levels.back(), pivot);
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace sps
