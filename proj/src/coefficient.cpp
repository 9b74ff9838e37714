#include "sps/coefficient.hpp"

#include "sps/errors.hpp"

#include <cctype>
#include <string>

namespace sps {
namespace {

constexpr double kMaxPowerBits = 4294967296.0;

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw InvalidArgument("not a decimal integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

Integer parse_natural(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    throw InvalidArgument("expected a nonnegative integer: '" + std::string(text) + "'");
  }
  return parse_integer(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_decimal(num_text) || !is_decimal(den_text) || den_text.front() == '-') {
    throw InvalidArgument("not a rational 'p/q': '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  Rational r(Integer(std::string(num_text), 10), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

bool is_unit_or_zero(const Rational& value) {
  return value.get_den() == 1 && (value.get_num() == 0 || value.get_num() == 1 || value.get_num() == -1);
}

Rational pow(const Rational& base, const Integer& exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent in pow");
  if (exponent == 0) return Rational(1);
  if (base == 0) return Rational(0);
  if (base == 1) return Rational(1);
  if (base == -1) return Rational(mpz_even_p(exponent.get_mpz_t()) ? 1 : -1);
  if (!exponent.fits_ulong_p()) {
    throw CapExceeded("exponent " + to_string(exponent) + " too large to exponentiate exactly");
  }
  const unsigned long e = exponent.get_ui();
  if (double(bit_size(base)) * double(e) > kMaxPowerBits) {
    throw CapExceeded("power " + to_string(base) + "^" + to_string(exponent) + " too large to compute exactly");
  }
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return result;
}

std::size_t bit_size(const Rational& value) {
  return mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

}  // namespace sps
