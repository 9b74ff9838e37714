#pragma once

// Dense exact polynomials used by the verification oracles. Kept apart from
// SparsePoly's arithmetic so expansion-based checks do not reuse the code
// paths they are checking.

#include "sps/coefficient.hpp"
#include "sps/sparse_poly.hpp"

#include <cstddef>
#include <vector>

namespace sps::dense {

using IntPoly = std::vector<Integer>;  // coefficient of X^i at index i, no trailing zeros

/// sum_i num[i]/den X^i
struct RatPoly {
  IntPoly num;
  Integer den = 1;
};

void trim(IntPoly& p);
inline bool is_zero(const IntPoly& p) { return p.empty(); }
inline std::size_t degree(const IntPoly& p) { return p.size() - 1; }
int sign(const Integer& v);

IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& p);
/// Divides by the positive gcd of the coefficients; signs are preserved.
IntPoly primitive(IntPoly p);
/// r = c * a mod b for some positive integer c (b nonzero). If `quotient` is
/// given it receives q with c * a = q * b + r.
IntPoly positive_prem(const IntPoly& a, const IntPoly& b, IntPoly* quotient = nullptr);
/// Primitive gcd, positive leading coefficient.
IntPoly gcd(IntPoly a, IntPoly b);

RatPoly from_sparse(const SparsePoly& p);
SparsePoly to_sparse(const RatPoly& p);
void reduce(RatPoly& p);
RatPoly one();
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly derivative(const RatPoly& p);
RatPoly pow(const RatPoly& p, unsigned long n);
bool equal(const RatPoly& a, const RatPoly& b);

}  // namespace sps::dense
