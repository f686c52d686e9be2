#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace wfock {

/// Arbitrary-precision exact rational scalar. The only number type used by
/// the core library: every quantity downstream is an exact value of this type.
/// GMP keeps values canonical (positive denominator, coprime) after every
/// arithmetic operation.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Build num/den, accepting negative or non-reduced denominators.
inline Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  return Rational(num) / Rational(den);
}

/// Parse "num/den" or "num". Canonicalizes, so "2/4" == "1/2".
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  Rational r;
  try {
    r.assign(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  }
  if (denominator(r) == 0) throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  mpq_canonicalize(r.backend().data());
  return r;
}

/// Serialize as "num/den", with "/den" omitted when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace wfock
