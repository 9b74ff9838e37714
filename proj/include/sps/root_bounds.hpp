#pragma once

#include "sps/coefficient.hpp"
#include "sps/expression.hpp"
#include "sps/sumset.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sps {

/// 2t - 1: distinct real roots (0 included) of a nonzero t-sparse polynomial.
Integer descartes_bound(std::int64_t t);

/// 2h + 2m(t-1) - 1: roots of a nonzero g * prod_j f_j^alpha_j.
Integer sps1_bound(const Integer& h, std::int64_t m, std::int64_t t);

/// ((m+2) t^m)^(2^(n-1) - 1) * h1^(2^(n-1)); with h1 = 1 this is the
/// sparsity bound for the multipliers at level n of an all-ones expression.
Integer h_bound_naive(std::int64_t n, std::int64_t m, std::int64_t t, const Integer& h1 = Integer(1));

/// 2 h_k + 4 sum_{i<k} h_i + 2m(2k-1)(t-1) - k for a given h_1..h_k.
Integer level_root_bound(std::span<const Integer> h, std::int64_t m, std::int64_t t);

/// level_root_bound with h_bound_naive for each h_i.
Integer naive_bound(std::int64_t k, std::int64_t m, std::int64_t t, const Integer& h1 = Integer(1));

/// (sum_j S(f_j)) - 1. May contain -1.
IntSet support_base_set(const SpsExpression& expr, std::size_t cap = kDefaultSumsetCap);

/// C(p + s, p) >= |p x S| for |S| = s.
Integer binomial_sumset_bound(std::int64_t s, std::int64_t p);

/// [e (1 + s/p)]^p, for display next to binomial_sumset_bound.
double binomial_sumset_estimate(std::int64_t s, std::int64_t p);

/// level_root_bound with h_n <= C(2^(n-1)-1 + t^m, 2^(n-1)-1); k = 1 falls
/// back to sps1_bound(1, m, t).
Integer support_bound(std::int64_t k, std::int64_t m, std::int64_t t);

struct BoundOptions {
  bool exact_sumsets = true;
  std::size_t sumset_cap = kDefaultSumsetCap;
};

struct SupportBound {
  Integer bound;
  /// Per-level multiplier sparsity bounds h_1..h_k that produced `bound`.
  std::vector<Integer> h_sequence;
  /// |2^(n-1) x S_g + (2^(n-1)-1) x S| per level when enumerated.
  std::optional<std::vector<Integer>> exact_sumset_sizes;
  bool cap_exceeded = false;
};

/// Support-based bound for the actual expression: |S| replaces t^m, and with
/// exact sumsets each h_n is the size of 2^(n-1) x S_g + (2^(n-1)-1) x S,
/// S_g being the union of the multiplier supports ({0} when all g_i = 1).
/// Degrades to binomial counts (cap_exceeded) when the enumeration is refused.
SupportBound support_bound_exact(const SpsExpression& expr, const BoundOptions& options = {});

struct BoundReport {
  std::size_t k = 0, m = 0, t = 0, h = 0;
  /// k = 1 only: 2(h-1) + sum over factors that occur of 2(t_j-1), plus 1.
  std::optional<Integer> descartes;
  Integer sps1_bound;
  std::vector<Integer> h_sequence_naive;
  Integer naive_bound;
  std::size_t support_set_size = 0;
  std::vector<Integer> h_sequence_support;
  /// support_bound(k, m, t), the closed form with t^m.
  Integer support_bound_formula;
  /// support_bound_exact(expr).bound
  Integer support_bound;
  std::optional<std::vector<Integer>> exact_sumset_sizes;
  bool sumset_cap_exceeded = false;
  /// support_bound <= naive_bound; reported, never enforced.
  bool support_le_naive = true;
};

BoundReport evaluate_bounds(const SpsExpression& expr, const BoundOptions& options = {});

}  // namespace sps
