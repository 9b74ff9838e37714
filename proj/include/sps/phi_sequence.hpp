#pragma once

#include "sps/coefficient.hpp"
#include "sps/expression.hpp"
#include "sps/sparse_poly.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace sps {

/// The m shared factors plus quantities every elimination step reuses.
struct FactorContext {
  std::vector<SparsePoly> factors;
  /// pi = prod_j f_j
  SparsePoly pi;
  /// cofactor_derivatives[j] = f_j' * prod_{l != j} f_l
  std::vector<SparsePoly> cofactor_derivatives;

  static std::shared_ptr<const FactorContext> make(std::vector<SparsePoly> factors);
};

struct ActiveTerm {
  std::size_t original_index = 0;  // 0-based position in the input expression
  SparsePoly g;                    // never zero
  std::vector<Integer> alphas;
};

/// phi_l = sum over active terms of g_i^(l) * P_i.
struct LevelState {
  std::size_t level = 1;
  std::vector<ActiveTerm> active_terms;
  std::shared_ptr<const FactorContext> factors;
  /// Original index of the term eliminated to produce level + 1, once chosen.
  std::optional<std::size_t> pivot;

  bool syntactically_zero() const noexcept { return active_terms.empty(); }
  /// Nullptr when the term is not active at this level.
  const ActiveTerm* find(std::size_t original_index) const noexcept;
  /// Throws InvalidArgument when the term is not active.
  const ActiveTerm& term(std::size_t original_index) const;
  /// h at this level (0 for a syntactically zero state).
  std::size_t max_g_sparsity() const noexcept;
};

/// Level-1 state of a valid expression; zero multipliers are dropped.
LevelState initial_state(const SpsExpression& expr);

/// deg(g_i) + sum_j alpha_ij * deg(f_j), without expanding any power.
Integer term_degree(const LevelState& state, std::size_t term_index);

/// lc(g_i) * prod_j lc(f_j)^alpha_ij.
Rational term_leading_coeff(const LevelState& state, std::size_t term_index);

/// Active term of maximal term_degree, lowest original index on ties.
std::size_t choose_pivot(const LevelState& state);

/// Eliminates `pivot`: every other active term i gets
///   g~_i = pi*(g_p g_i' - g_p' g_i) + g_p g_i * sum_j (alpha_ij - alpha_pj) f_j' prod_{l!=j} f_l
/// with its alpha row unchanged; terms whose g~_i vanishes are dropped.
LevelState tilde_transform(const LevelState& state, std::size_t pivot);

/// Levels 1..k' obtained by repeated elimination with choose_pivot. Stops once
/// at most one active term remains. Each state except the last records its pivot.
std::vector<LevelState> phi_sequence(const SpsExpression& expr);

}  // namespace sps
