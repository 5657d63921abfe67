#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kplanar {

/// Exact rational number, always kept in lowest terms.
using Rational = mpq_class;

/// "p/q" in lowest terms; integers print as "p/1".
std::string to_string(const Rational& r);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline Rational to_rational(std::uint64_t value) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return Rational(z);
}

}  // namespace kplanar
