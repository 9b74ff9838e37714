#include "sps/sparse_poly.hpp"

#include "sps/errors.hpp"

#include <algorithm>

namespace sps {

bool operator==(const Monomial& a, const Monomial& b) {
  return a.exponent == b.exponent && a.coeff == b.coeff;
}

SparsePoly SparsePoly::from_canonical(std::vector<Monomial> terms) {
  SparsePoly p;
  p.terms_ = std::move(terms);
  return p;
}

SparsePoly SparsePoly::constant(const Rational& c) { return monomial(c, Integer(0)); }

SparsePoly SparsePoly::monomial(const Rational& c, const Integer& exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent " + to_string(exponent));
  SparsePoly p;
  if (c != 0) p.terms_.push_back({c, exponent});
  return p;
}

SparsePoly SparsePoly::x() { return monomial(Rational(1), Integer(1)); }

SparsePoly SparsePoly::from_terms(std::vector<Monomial> terms) {
  for (const auto& t : terms) {
    if (t.exponent < 0) throw InvalidArgument("negative exponent " + to_string(t.exponent));
  }
  std::sort(terms.begin(), terms.end(),
            [](const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; });
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return from_canonical(std::move(out));
}

SparsePoly SparsePoly::from_dense(const std::vector<Rational>& coeffs) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.push_back({coeffs[i], Integer(static_cast<unsigned long>(i))});
  }
  return from_canonical(std::move(out));
}

bool SparsePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

bool SparsePoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Monomial& m) { return m.coeff.get_den() == 1; });
}

const Integer& SparsePoly::degree() const {
  if (terms_.empty()) throw InvalidArgument("degree of the zero polynomial");
  return terms_.back().exponent;
}

const Integer& SparsePoly::order() const {
  if (terms_.empty()) throw InvalidArgument("order of the zero polynomial");
  return terms_.front().exponent;
}

const Rational& SparsePoly::leading_coeff() const {
  if (terms_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return terms_.back().coeff;
}

Rational SparsePoly::coefficient(const Integer& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Monomial& m, const Integer& e) { return m.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return Rational(0);
}

namespace {

template <class Combine>
std::vector<Monomial> merge(const std::vector<Monomial>& a, const std::vector<Monomial>& b,
                            Combine combine_b) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({combine_b(b[j].coeff), b[j].exponent});
      ++j;
    } else {
      Rational c = a[i].coeff;
      c += combine_b(b[j].coeff);
      if (c != 0) out.push_back({std::move(c), a[i].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

// Result spans at most this many slots per product pair before the dense
// accumulator is given up in favour of sort-and-merge.
constexpr unsigned long kDenseSlack = 8;

}  // namespace

SparsePoly add(const SparsePoly& p, const SparsePoly& q) {
  return SparsePoly::from_canonical(merge(p.terms_, q.terms_, [](const Rational& c) { return c; }));
}

SparsePoly sub(const SparsePoly& p, const SparsePoly& q) {
  return SparsePoly::from_canonical(
      merge(p.terms_, q.terms_, [](const Rational& c) { return Rational(-c); }));
}

SparsePoly negate(const SparsePoly& p) { return scale(p, Rational(-1)); }

SparsePoly scale(const SparsePoly& p, const Rational& c) {
  if (c == 0) return {};
  std::vector<Monomial> out = p.terms_;
  for (auto& m : out) m.coeff *= c;
  return SparsePoly::from_canonical(std::move(out));
}

SparsePoly mul(const SparsePoly& p, const SparsePoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.terms_;
  const auto& b = q.terms_;
  const Integer low = a.front().exponent + b.front().exponent;
  const Integer span = a.back().exponent + b.back().exponent - low + 1;
  const unsigned long pairs = static_cast<unsigned long>(a.size()) * b.size();

  if (span.fits_ulong_p() && span.get_ui() <= kDenseSlack * pairs + 256) {
    const unsigned long width = span.get_ui();
    std::vector<unsigned long> off_a, off_b;
    off_a.reserve(a.size());
    off_b.reserve(b.size());
    for (const auto& m : a) off_a.push_back(Integer(m.exponent - a.front().exponent).get_ui());
    for (const auto& m : b) off_b.push_back(Integer(m.exponent - b.front().exponent).get_ui());

    std::vector<Monomial> out;
    if (p.is_integral() && q.is_integral()) {
      std::vector<Integer> acc(width);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const mpz_srcptr ai = a[i].coeff.get_num_mpz_t();
        for (std::size_t j = 0; j < b.size(); ++j) {
          mpz_addmul(acc[off_a[i] + off_b[j]].get_mpz_t(), ai, b[j].coeff.get_num_mpz_t());
        }
      }
      for (unsigned long e = 0; e < width; ++e) {
        if (acc[e] != 0) out.push_back({Rational(acc[e]), low + e});
      }
    } else {
      std::vector<Rational> acc(width);
      Rational prod;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          mpq_mul(prod.get_mpq_t(), a[i].coeff.get_mpq_t(), b[j].coeff.get_mpq_t());
          acc[off_a[i] + off_b[j]] += prod;
        }
      }
      for (unsigned long e = 0; e < width; ++e) {
        if (acc[e] != 0) out.push_back({acc[e], low + e});
      }
    }
    return SparsePoly::from_canonical(std::move(out));
  }

  std::vector<Monomial> products;
  products.reserve(pairs);
  for (const auto& ma : a) {
    for (const auto& mb : b) products.push_back({Rational(ma.coeff * mb.coeff), ma.exponent + mb.exponent});
  }
  return SparsePoly::from_terms(std::move(products));
}

SparsePoly derivative(const SparsePoly& p) {
  std::vector<Monomial> out;
  out.reserve(p.terms_.size());
  for (const auto& m : p.terms_) {
    if (m.exponent == 0) continue;
    out.push_back({Rational(m.coeff * m.exponent), m.exponent - 1});
  }
  return SparsePoly::from_canonical(std::move(out));
}

SparsePoly pow(const SparsePoly& p, const Integer& n) {
  if (n < 0) throw InvalidArgument("negative power of a polynomial");
  if (n == 0) return SparsePoly::constant(Rational(1));
  if (p.is_zero()) return {};
  if (p.sparsity() == 1) {
    const auto& m = p.monomials().front();
    return SparsePoly::monomial(pow(m.coeff, n), m.exponent * n);
  }
  if (!n.fits_ulong_p()) {
    throw CapExceeded("power " + to_string(n) + " of a " + std::to_string(p.sparsity()) +
                      "-term polynomial cannot be expanded");
  }
  SparsePoly result = SparsePoly::constant(Rational(1));
  SparsePoly base = p;
  for (unsigned long e = n.get_ui();;) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

SparsePoly product(const std::vector<SparsePoly>& polys) {
  SparsePoly out = SparsePoly::constant(Rational(1));
  for (const auto& p : polys) out = mul(out, p);
  return out;
}

IntSet support(const SparsePoly& p) {
  IntSet s;
  s.reserve(p.sparsity());
  for (const auto& m : p.monomials()) s.push_back(m.exponent);
  return s;
}

Rational evaluate(const SparsePoly& p, const Rational& x) {
  Rational sum(0);
  Rational power(1);
  Integer at(0);
  for (const auto& m : p.monomials()) {
    power *= pow(x, Integer(m.exponent - at));
    at = m.exponent;
    sum += m.coeff * power;
  }
  return sum;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& ms = p.monomials();
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
    Rational c = it->coeff;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const bool unit = c == 1;
    if (it->exponent == 0) {
      out += to_string(c);
      continue;
    }
    if (!unit) out += to_string(c) + "*";
    out += "X";
    if (it->exponent != 1) out += "^" + to_string(it->exponent);
  }
  return out;
}

}  // namespace sps
