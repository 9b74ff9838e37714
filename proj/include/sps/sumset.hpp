#pragma once

#include "sps/coefficient.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sps {

/// Finite set of integers, stored sorted ascending without duplicates.
using IntSet = std::vector<Integer>;

inline constexpr std::size_t kDefaultSumsetCap = 1'000'000;

/// Sorts and deduplicates in place.
IntSet make_int_set(std::vector<Integer> values);

IntSet set_union(const IntSet& a, const IntSet& b);

/// { x + delta : x in a }
IntSet shift(const IntSet& a, const Integer& delta);

bool is_subset(const IntSet& a, const IntSet& b);

/// { x + y : x in a, y in b }. Refuses with CapExceeded when the result could
/// hold more than `cap` elements (min of |a||b| and the span of the result).
IntSet sumset(const IntSet& a, const IntSet& b, std::size_t cap = kDefaultSumsetCap);

/// p-fold sumset p x S; 0 x S = {0}. Computed by repeated doubling.
IntSet sumset_power(const IntSet& s, std::int64_t p, std::size_t cap = kDefaultSumsetCap);

}  // namespace sps
