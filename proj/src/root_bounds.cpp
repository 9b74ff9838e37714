#include "sps/root_bounds.hpp"

#include "sps/errors.hpp"
#include "sps/sparse_poly.hpp"

#include <cmath>
#include <string>

namespace sps {
namespace {

// Bounds whose binary size would exceed this many bits are refused.
constexpr double kMaxBoundBits = double(1UL << 28);

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw InvalidArgument(std::string(name) + " must be >= 1, got " + std::to_string(v));
}

Integer from_i64(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer ipow(const Integer& base, std::uint64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

/// 2^(n-1) as an exact machine word; refuses n beyond 63.
std::uint64_t level_copies(std::int64_t n) {
  if (n < 1) throw InvalidArgument("level must be >= 1, got " + std::to_string(n));
  if (n > 63) throw CapExceeded("level " + std::to_string(n) + " too deep for exact bounds");
  return std::uint64_t{1} << (n - 1);
}

/// C(n, r) with r the smaller side; refuses absurd sizes.
Integer binomial(const Integer& n, const Integer& r) {
  Integer small = r;
  const Integer other = n - r;
  if (other < small) small = other;
  if (small < 0) return Integer(0);
  if (!small.fits_ulong_p() || small > 10'000'000) {
    throw CapExceeded("binomial coefficient too large to evaluate exactly");
  }
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), small.get_ui());
  return out;
}

IntSet multiplier_support(const SpsExpression& expr) {
  IntSet s;
  for (const auto& term : expr.terms) s = set_union(s, support(term.g));
  if (s.empty()) s.push_back(Integer(0));
  return s;
}

}  // namespace

Integer descartes_bound(std::int64_t t) {
  require_positive(t, "t");
  return from_i64(2 * t - 1);
}

Integer sps1_bound(const Integer& h, std::int64_t m, std::int64_t t) {
  if (h < 1) throw InvalidArgument("h must be >= 1");
  require_positive(m, "m");
  require_positive(t, "t");
  return 2 * h + 2 * from_i64(m) * from_i64(t - 1) - 1;
}

Integer h_bound_naive(std::int64_t n, std::int64_t m, std::int64_t t, const Integer& h1) {
  require_positive(m, "m");
  require_positive(t, "t");
  if (h1 < 1) throw InvalidArgument("h1 must be >= 1");
  const std::uint64_t copies = level_copies(n);
  const Integer base = from_i64(m + 2) * ipow(from_i64(t), static_cast<std::uint64_t>(m));
  const double bits = double(copies - 1) * std::log2(base.get_d()) + double(copies) * std::log2(h1.get_d());
  if (bits > kMaxBoundBits) throw CapExceeded("naive sparsity bound at level " + std::to_string(n) + " too large");
  return ipow(base, copies - 1) * ipow(h1, copies);
}

Integer level_root_bound(std::span<const Integer> h, std::int64_t m, std::int64_t t) {
  if (h.empty()) throw InvalidArgument("level_root_bound needs at least one level");
  require_positive(m, "m");
  require_positive(t, "t");
  const auto k = static_cast<std::int64_t>(h.size());
  Integer lower(0);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) lower += h[i];
  return 2 * h.back() + 4 * lower + 2 * from_i64(m) * from_i64(2 * k - 1) * from_i64(t - 1) - from_i64(k);
}

Integer naive_bound(std::int64_t k, std::int64_t m, std::int64_t t, const Integer& h1) {
  require_positive(k, "k");
  std::vector<Integer> h;
  for (std::int64_t n = 1; n <= k; ++n) h.push_back(h_bound_naive(n, m, t, h1));
  return level_root_bound(h, m, t);
}

IntSet support_base_set(const SpsExpression& expr, std::size_t cap) {
  require_valid(expr);
  IntSet acc{Integer(0)};
  for (const auto& f : expr.factors) acc = sumset(acc, support(f), cap);
  return shift(acc, Integer(-1));
}

Integer binomial_sumset_bound(std::int64_t s, std::int64_t p) {
  if (s < 0) throw InvalidArgument("set size must be >= 0");
  require_positive(p, "p");
  return binomial(from_i64(p + s), from_i64(p));
}

double binomial_sumset_estimate(std::int64_t s, std::int64_t p) {
  require_positive(p, "p");
  return std::pow(std::exp(1.0) * (1.0 + double(s) / double(p)), double(p));
}

Integer support_bound(std::int64_t k, std::int64_t m, std::int64_t t) {
  require_positive(k, "k");
  require_positive(m, "m");
  require_positive(t, "t");
  if (k == 1) return sps1_bound(Integer(1), m, t);
  const Integer s = ipow(from_i64(t), static_cast<std::uint64_t>(m));
  std::vector<Integer> h;
  for (std::int64_t n = 1; n <= k; ++n) {
    const Integer p(static_cast<unsigned long>(level_copies(n) - 1));
    h.push_back(binomial(p + s, p));
  }
  return level_root_bound(h, m, t);
}

SupportBound support_bound_exact(const SpsExpression& expr, const BoundOptions& options) {
  require_valid(expr);
  const auto k = static_cast<std::int64_t>(expr.k());
  const auto m = static_cast<std::int64_t>(expr.m());
  const auto t = static_cast<std::int64_t>(expr.max_factor_sparsity());
  const IntSet s = support_base_set(expr, options.sumset_cap);
  const IntSet sg = multiplier_support(expr);

  SupportBound out;
  auto binomial_levels = [&] {
    std::vector<Integer> h;
    for (std::int64_t n = 1; n <= k; ++n) {
      const std::uint64_t copies = level_copies(n);
      const Integer q(static_cast<unsigned long>(copies));
      const Integer p = q - 1;
      const Integer multiset_g = binomial(q + static_cast<unsigned long>(sg.size()) - 1, q);
      h.push_back(multiset_g * binomial(p + static_cast<unsigned long>(s.size()), p));
    }
    return h;
  };

  if (options.exact_sumsets) {
    try {
      std::vector<Integer> sizes;
      for (std::int64_t n = 1; n <= k; ++n) {
        const std::uint64_t copies = level_copies(n);
        const IntSet level_set =
            sumset(sumset_power(sg, static_cast<std::int64_t>(copies), options.sumset_cap),
                   sumset_power(s, static_cast<std::int64_t>(copies - 1), options.sumset_cap), options.sumset_cap);
        sizes.emplace_back(static_cast<unsigned long>(level_set.size()));
      }
      out.h_sequence = sizes;
      out.exact_sumset_sizes = std::move(sizes);
    } catch (const CapExceeded&) {
      out.cap_exceeded = true;
      out.h_sequence = binomial_levels();
    }
  } else {
    out.h_sequence = binomial_levels();
  }
  out.bound = level_root_bound(out.h_sequence, m, t);
  return out;
}

BoundReport evaluate_bounds(const SpsExpression& expr, const BoundOptions& options) {
  require_valid(expr);
  BoundReport r;
  r.k = expr.k();
  r.m = expr.m();
  r.t = expr.max_factor_sparsity();
  r.h = std::max<std::size_t>(1, expr.max_multiplier_sparsity());
  const auto k = static_cast<std::int64_t>(r.k);
  const auto m = static_cast<std::int64_t>(r.m);
  const auto t = static_cast<std::int64_t>(r.t);
  const Integer h(static_cast<unsigned long>(r.h));

  if (r.k == 1) {
    const auto& term = expr.terms.front();
    Integer d = 2 * Integer(static_cast<unsigned long>(std::max<std::size_t>(1, term.g.sparsity())) - 1) + 1;
    for (std::size_t j = 0; j < expr.factors.size(); ++j) {
      if (term.alphas[j] != 0) d += 2 * Integer(static_cast<unsigned long>(expr.factors[j].sparsity() - 1));
    }
    r.descartes = d;
  }
  r.sps1_bound = sps1_bound(h, m, t);
  for (std::int64_t n = 1; n <= k; ++n) r.h_sequence_naive.push_back(h_bound_naive(n, m, t, h));
  r.naive_bound = level_root_bound(r.h_sequence_naive, m, t);

  const SupportBound sb = support_bound_exact(expr, options);
  r.support_set_size = support_base_set(expr, options.sumset_cap).size();
  r.h_sequence_support = sb.h_sequence;
  r.support_bound_formula = support_bound(k, m, t);
  r.support_bound = sb.bound;
  r.exact_sumset_sizes = sb.exact_sumset_sizes;
  r.sumset_cap_exceeded = sb.cap_exceeded;
  r.support_le_naive = r.support_bound <= r.naive_bound;
  return r;
}

}  // namespace sps
