#include "hallprim/bigrational.hpp"

#include <stdexcept>

namespace hallprim {

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  BigRational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(BigRational(1) / base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

}  // namespace hallprim
