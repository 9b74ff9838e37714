#pragma once

#include "sps/coefficient.hpp"
#include "sps/expression.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sps {

/// One level of the identity test.
struct LevelCheck {
  std::size_t level = 0;
  /// Term eliminated at this level; empty for the final level.
  std::optional<std::size_t> pivot_original_index;
  std::size_t active_term_count = 0;
  /// Maximal term degree D among active terms (0 when none are active).
  Integer max_degree;
  /// Sum of leading coefficients of the terms of degree D. Empty when the
  /// oracle path decided it, or when it was not exactly computable.
  std::optional<Rational> leading_coeff_sum;
  bool passed = false;
};

/// Checks in evaluation order: the final level first, then descending.
/// A failed check is always the last entry.
struct PitTrace {
  std::vector<LevelCheck> levels;
  bool g_k_is_zero = false;
};

struct PitVerdict {
  bool is_zero = false;
  PitTrace trace;
};

struct PowerFactor {
  Rational base;
  Integer exponent;
};

/// prod of base^exponent over its factors.
using PowerRow = std::vector<PowerFactor>;

/// Decides whether sum_i prod_j a_ij^alpha_ij = 0. Implementations must never
/// answer wrongly; they signal refusal with OracleIncomplete.
class PowerSumOracle {
 public:
  virtual ~PowerSumOracle() = default;
  virtual bool is_zero(std::span<const PowerRow> rows) const = 0;
};

inline constexpr std::size_t kDefaultOracleBitBudget = std::size_t{1} << 20;

/// Computes the sum exactly by repeated squaring; refuses once the estimated
/// size of the powers exceeds the bit budget.
class ExactPowerSumOracle final : public PowerSumOracle {
 public:
  explicit ExactPowerSumOracle(std::size_t bit_budget = kDefaultOracleBitBudget) : bit_budget_(bit_budget) {}

  bool is_zero(std::span<const PowerRow> rows) const override;
  std::size_t bit_budget() const noexcept { return bit_budget_; }

 private:
  std::size_t bit_budget_;
};

ExactPowerSumOracle exact_power_sum_oracle(std::size_t bit_budget = kDefaultOracleBitBudget);

/// Deterministic zero test. Runs phi_sequence, requires the final level to be
/// syntactically zero, then walks back down: at each earlier level the terms
/// of maximal degree must have cancelling leading coefficients.
PitVerdict pit_decide(const SpsExpression& expr);

/// Same verdict as pit_decide, with every leading-coefficient cancellation
/// test handed to `oracle` instead of computed here.
PitVerdict pit_decide_with_oracle(const SpsExpression& expr, const PowerSumOracle& oracle);

}  // namespace sps
