#pragma once

#include "hallprim/bigrational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hallprim {

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k;
/// trailing zeros are always stripped, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);
  Poly(const BigRational& constant);  // NOLINT: implicit scalar embedding
  Poly(long constant) : Poly(BigRational(constant)) {}  // NOLINT

  static Poly monomial(const BigRational& coeff, unsigned exponent);
  static Poly x() { return monomial(1, 1); }

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(unsigned k) const;
  const BigRational& leading() const { return coeffs_.back(); }
  /// Smallest exponent with a nonzero coefficient; 0 for the zero polynomial.
  unsigned low_degree() const;

  Poly monic() const;
  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const BigRational& s) const;

  /// Euclidean division; throws std::domain_error when divisor is zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient; throws std::logic_error if the remainder is nonzero.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic gcd (zero iff both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  BigRational eval(const BigRational& x) const;
  /// p(x^k).
  Poly inflate(unsigned k) const;
  /// x^deg * p(1/x), i.e. coefficients reversed.
  Poly reversed() const;
  /// Drops the factor x^low_degree().
  Poly shift_down(unsigned k) const;
  Poly shift_up(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Descending powers with spaced operators, e.g. "q^2 - 1".
  std::string to_string(char var) const;
  /// Ascending powers without spaces, e.g. "1-q+q^3".
  std::string to_compact_string(char var) const;
  std::string to_latex(char var) const;

 private:
  void strip();
  std::vector<BigRational> coeffs_;
};

}  // namespace hallprim
