#include "sps/sumset.hpp"

#include "sps/errors.hpp"

#include <algorithm>
#include <string>

namespace sps {

IntSet make_int_set(std::vector<Integer> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

IntSet set_union(const IntSet& a, const IntSet& b) {
  IntSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IntSet shift(const IntSet& a, const Integer& delta) {
  IntSet out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(x + delta);
  return out;
}

bool is_subset(const IntSet& a, const IntSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntSet sumset(const IntSet& a, const IntSet& b, std::size_t cap) {
  if (a.empty() || b.empty()) return {};
  const Integer lo = a.front() + b.front();
  const Integer span = a.back() + b.back() - lo + 1;
  Integer possible = Integer(static_cast<unsigned long>(a.size())) * static_cast<unsigned long>(b.size());
  if (span < possible) possible = span;
  if (possible > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceeded("sumset cap exceeded: up to " + to_string(possible) + " elements, cap " +
                      std::to_string(cap));
  }

  // Dense bitmap when the result span is small, sort/unique otherwise.
  if (span.fits_ulong_p() && span.get_ui() <= 4 * possible.get_ui() + 64) {
    const unsigned long width = span.get_ui();
    std::vector<unsigned long> offsets_b;
    offsets_b.reserve(b.size());
    for (const auto& y : b) offsets_b.push_back(Integer(y - b.front()).get_ui());
    std::vector<bool> hit(width, false);
    for (const auto& x : a) {
      const unsigned long base = Integer(x - a.front()).get_ui();
      for (unsigned long ob : offsets_b) hit[base + ob] = true;
    }
    IntSet out;
    for (unsigned long i = 0; i < width; ++i) {
      if (hit[i]) out.emplace_back(lo + i);
    }
    return out;
  }

  std::vector<Integer> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) sums.emplace_back(x + y);
  }
  return make_int_set(std::move(sums));
}

IntSet sumset_power(const IntSet& s, std::int64_t p, std::size_t cap) {
  if (p < 0) throw InvalidArgument("sumset_power: p must be >= 0, got " + std::to_string(p));
  IntSet result{Integer(0)};
  if (p == 0) return result;
  if (s.empty()) return {};
  IntSet square = s;
  for (std::int64_t e = p;;) {
    if (e & 1) result = sumset(result, square, cap);
    e >>= 1;
    if (e == 0) break;
    square = sumset(square, square, cap);
  }
  return result;
}

}  // namespace sps
