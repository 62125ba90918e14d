#pragma once

#include <gmpxx.h>

#include <string>

namespace hallprim {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "a", "-a" or "a/b"; throws std::invalid_argument on bad input.
BigRational parse_rational(const std::string& text);

/// num/den in lowest terms; gmpxx's two-argument constructor does not reduce.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigRational pow(const BigRational& base, long exponent);

}  // namespace hallprim
