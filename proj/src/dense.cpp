#include "dense.hpp"

#include "sps/errors.hpp"

namespace sps::dense {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int sign(const Integer& v) { return sgn(v); }

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

IntPoly primitive(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  Integer g(0);
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return p;
  }
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

IntPoly positive_prem(const IntPoly& a, const IntPoly& b, IntPoly* quotient) {
  if (b.empty()) throw InvalidArgument("division by the zero polynomial");
  IntPoly r = a;
  trim(r);
  const std::size_t db = degree(b);
  const Integer lb_abs = abs(b.back());
  const int lb_sign = sign(b.back());
  IntPoly q;
  if (quotient != nullptr && r.size() > db) q.assign(r.size() - db, Integer(0));
  Integer c;
  while (!r.empty() && r.size() > db) {
    const std::size_t shift = r.size() - 1 - db;
    c = r.back() * lb_sign;
    // r <- |lb| r - c X^shift b ; the leading terms cancel.
    if (lb_abs != 1) {
      for (auto& x : r) x *= lb_abs;
      if (quotient != nullptr) {
        for (auto& x : q) x *= lb_abs;
      }
    }
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(r[i + shift].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    if (quotient != nullptr) q[shift] += c;
    trim(r);
  }
  if (quotient != nullptr) {
    trim(q);
    *quotient = std::move(q);
  }
  return r;
}

IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive(positive_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

RatPoly from_sparse(const SparsePoly& p) {
  RatPoly out;
  if (p.is_zero()) return out;
  if (!p.degree().fits_ulong_p()) throw CapExceeded("degree too large for a dense polynomial");
  Integer den(1);
  for (const auto& m : p.monomials()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.coeff.get_den_mpz_t());
  out.num.assign(p.degree().get_ui() + 1, Integer(0));
  for (const auto& m : p.monomials()) {
    Integer& slot = out.num[m.exponent.get_ui()];
    slot = m.coeff.get_num() * (den / m.coeff.get_den());
  }
  out.den = den;
  return out;
}

SparsePoly to_sparse(const RatPoly& p) {
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < p.num.size(); ++i) {
    if (p.num[i] == 0) continue;
    Rational c(p.num[i], p.den);
    c.canonicalize();
    terms.push_back({c, Integer(static_cast<unsigned long>(i))});
  }
  return SparsePoly::from_terms(std::move(terms));
}

void reduce(RatPoly& p) {
  trim(p.num);
  if (p.num.empty()) {
    p.den = 1;
    return;
  }
  if (p.den == 1) return;
  Integer g = p.den;
  for (const auto& c : p.num) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : p.num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(p.den.get_mpz_t(), p.den.get_mpz_t(), g.get_mpz_t());
}

RatPoly one() { return RatPoly{{Integer(1)}, Integer(1)}; }

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  RatPoly out{mul(a.num, b.num), a.den * b.den};
  reduce(out);
  return out;
}

namespace {

RatPoly combine(const RatPoly& a, const RatPoly& b, bool subtract) {
  RatPoly out;
  const bool same = a.den == b.den;
  out.den = same ? a.den : Integer(a.den * b.den);
  out.num.assign(std::max(a.num.size(), b.num.size()), Integer(0));
  for (std::size_t i = 0; i < a.num.size(); ++i) out.num[i] = same ? a.num[i] : Integer(a.num[i] * b.den);
  for (std::size_t i = 0; i < b.num.size(); ++i) {
    Integer v = same ? b.num[i] : Integer(b.num[i] * a.den);
    if (subtract) out.num[i] -= v; else out.num[i] += v;
  }
  reduce(out);
  return out;
}

}  // namespace

RatPoly add(const RatPoly& a, const RatPoly& b) { return combine(a, b, false); }
RatPoly sub(const RatPoly& a, const RatPoly& b) { return combine(a, b, true); }

RatPoly derivative(const RatPoly& p) {
  RatPoly out{derivative(p.num), p.den};
  reduce(out);
  return out;
}

RatPoly pow(const RatPoly& p, unsigned long n) {
  RatPoly result = one();
  RatPoly base = p;
  while (n != 0) {
    if (n & 1UL) result = mul(result, base);
    n >>= 1;
    if (n != 0) base = mul(base, base);
  }
  return result;
}

bool equal(const RatPoly& a, const RatPoly& b) {
  IntPoly x = a.num, y = b.num;
  trim(x);
  trim(y);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] * b.den != y[i] * a.den) return false;
  }
  return true;
}

}  // namespace sps::dense
