#pragma once

#include "sps/coefficient.hpp"
#include "sps/expression.hpp"
#include "sps/multivariate.hpp"
#include "sps/phi_sequence.hpp"
#include "sps/sparse_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sps {

inline constexpr std::size_t kDefaultExpandCap = 100'000;
inline constexpr std::size_t kDefaultSturmDegreeCap = 512;
inline constexpr std::size_t kDefaultEvalBitBudget = std::size_t{1} << 22;

/// Upper bound on the number of monomials of the full expansion, from degree
/// spans and multiset counts; never smaller than the true sparsity.
Integer projected_sparsity(const SpsExpression& expr);
Integer projected_sparsity(const LevelState& state);

/// sum_i g_i prod_j f_j^alpha_ij expanded. Throws CapExceeded when the
/// projected sparsity exceeds `size_cap`.
SparsePoly expand_expression(const SpsExpression& expr, std::size_t size_cap = kDefaultExpandCap);

/// phi_l of a level state, expanded.
SparsePoly expand_level(const LevelState& state, std::size_t size_cap = kDefaultExpandCap);

/// g * prod_j f_j^alpha_j for one active term, expanded.
SparsePoly expand_term(const LevelState& state, std::size_t term_index, std::size_t size_cap = kDefaultExpandCap);

/// p / gcd(p, p'), monic. Same distinct roots as p. Rejects the zero polynomial.
SparsePoly squarefree_part(const SparsePoly& p, std::size_t degree_cap = kDefaultSturmDegreeCap);

enum class RootMethod { sturm };

struct RootCount {
  std::size_t distinct_real_roots = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool zero_is_root = false;
  RootMethod method = RootMethod::sturm;
};

/// Exact distinct real roots over (-inf, +inf) from the Sturm sequence of the
/// squarefree part, split by sign. Powers of X are factored out first, so
/// `degree_cap` applies to p / X^ord(p).
RootCount sturm_count(const SparsePoly& p, std::size_t degree_cap = kDefaultSturmDegreeCap);

/// True iff expand(next) * T_p == g_p * pi * (phi' T_p - phi T_p'), with
/// phi = expand(state), T_p = expand of the pivot term.
bool check_transform_identity(const LevelState& state, const LevelState& next, std::size_t pivot,
                              std::size_t size_cap = kDefaultExpandCap);

/// Evaluates at n_points seeded random rationals. False means a nonzero value
/// was found (definitely nonzero); true only means no witness was found.
/// Throws CapExceeded when an evaluation would exceed `bit_budget`.
bool random_eval_check(const SpsExpression& expr, std::size_t n_points, std::uint64_t seed,
                       std::size_t bit_budget = kDefaultEvalBitBudget);

/// prod_{i=1}^{2^n} (X - i), expanded; refuses n > cap.
SparsePoly pw_fixture(unsigned n, unsigned cap = 4);

/// Multivariate expansion, independent of any substitution.
MultivariateSparsePoly expand_multivariate(const MultivariateSpsExpression& expr,
                                           std::size_t size_cap = kDefaultExpandCap);

}  // namespace sps
