#include "sps/pit.hpp"

#include "sps/errors.hpp"
#include "sps/phi_sequence.hpp"

namespace sps {

bool ExactPowerSumOracle::is_zero(std::span<const PowerRow> rows) const {
  Integer estimate(0);
  for (const auto& row : rows) {
    for (const auto& f : row) {
      if (f.exponent < 0) throw InvalidArgument("negative exponent in power-sum row");
      if (is_unit_or_zero(f.base)) continue;
      estimate += f.exponent * static_cast<unsigned long>(bit_size(f.base));
    }
  }
  if (estimate > Integer(static_cast<unsigned long>(bit_budget_))) {
    throw OracleIncomplete("power sum needs about " + to_string(estimate) + " bits, budget is " +
                           std::to_string(bit_budget_));
  }
  Rational sum(0);
  for (const auto& row : rows) {
    Rational term(1);
    for (const auto& f : row) term *= pow(f.base, f.exponent);
    sum += term;
  }
  return sum == 0;
}

ExactPowerSumOracle exact_power_sum_oracle(std::size_t bit_budget) { return ExactPowerSumOracle(bit_budget); }

namespace {

PowerRow leading_row(const LevelState& state, const ActiveTerm& t) {
  PowerRow row;
  row.push_back({t.g.leading_coeff(), Integer(1)});
  const auto& fs = state.factors->factors;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (t.alphas[j] != 0) row.push_back({fs[j].leading_coeff(), t.alphas[j]});
  }
  return row;
}

PitVerdict decide(const SpsExpression& expr, const PowerSumOracle* oracle) {
  const std::vector<LevelState> levels = phi_sequence(expr);
  PitVerdict verdict;
  auto& trace = verdict.trace;

  const LevelState& last = levels.back();
  LevelCheck top;
  top.level = last.level;
  top.active_term_count = last.active_terms.size();
  if (last.syntactically_zero()) {
    top.max_degree = 0;
    top.leading_coeff_sum = Rational(0);
    top.passed = true;
    trace.g_k_is_zero = true;
  } else {
    // A single term g*P with g != 0 never vanishes: every factor is nonzero.
    const std::size_t idx = last.active_terms.front().original_index;
    top.max_degree = term_degree(last, idx);
    if (oracle == nullptr) {
      try {
        top.leading_coeff_sum = term_leading_coeff(last, idx);
      } catch (const CapExceeded&) {
      }
    }
    top.passed = false;
    trace.g_k_is_zero = false;
  }
  trace.levels.push_back(top);
  if (!top.passed) return verdict;

  for (std::size_t l = levels.size() - 1; l-- > 0;) {
    const LevelState& state = levels[l];
    LevelCheck check;
    check.level = state.level;
    check.pivot_original_index = state.pivot;
    check.active_term_count = state.active_terms.size();
    check.max_degree = term_degree(state, *state.pivot);

    std::vector<const ActiveTerm*> top_terms;
    for (const auto& t : state.active_terms) {
      if (term_degree(state, t.original_index) == check.max_degree) top_terms.push_back(&t);
    }
    if (oracle == nullptr) {
      Rational sum(0);
      for (const ActiveTerm* t : top_terms) sum += term_leading_coeff(state, t->original_index);
      check.passed = sum == 0;
      check.leading_coeff_sum = std::move(sum);
    } else {
      std::vector<PowerRow> rows;
      rows.reserve(top_terms.size());
      for (const ActiveTerm* t : top_terms) rows.push_back(leading_row(state, *t));
      check.passed = oracle->is_zero(rows);
    }
    trace.levels.push_back(std::move(check));
    if (!trace.levels.back().passed) return verdict;
  }
  verdict.is_zero = true;
  return verdict;
}

}  // namespace

PitVerdict pit_decide(const SpsExpression& expr) { return decide(expr, nullptr); }

PitVerdict pit_decide_with_oracle(const SpsExpression& expr, const PowerSumOracle& oracle) {
  return decide(expr, &oracle);
}

}  // namespace sps
