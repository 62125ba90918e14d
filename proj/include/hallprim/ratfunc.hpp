#pragma once

#include "hallprim/bigrational.hpp"
#include "hallprim/poly.hpp"

#include <string>

namespace hallprim {

/// The formal variable a rational function is written in.
enum class Var : char { t = 't', q = 'q' };

/// Exact element of Q(t) or Q(q).
///
/// Canonical form: numerator and denominator coprime, denominator monic.
/// Negative powers of the variable live in the denominator, so equality of
/// canonical forms is equality of functions.
class RatFunc {
 public:
  explicit RatFunc(Var var = Var::t) : num_(), den_(1), var_(var) {}
  RatFunc(const BigRational& c, Var var) : num_(c), den_(1), var_(var) {}
  RatFunc(long c, Var var) : RatFunc(BigRational(c), var) {}
  RatFunc(Poly num, Var var) : num_(std::move(num)), den_(1), var_(var) {}
  /// Throws std::domain_error if den is zero.
  RatFunc(Poly num, Poly den, Var var);

  static RatFunc variable(Var var) { return RatFunc(Poly::x(), var); }
  /// c * var^k for any integer k.
  static RatFunc monomial(const BigRational& c, long k, Var var);
  /// 1 - var^k for any integer k.
  static RatFunc one_minus_power(long k, Var var);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Var var() const { return var_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == Poly(1); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  /// True when this is a polynomial with integer coefficients.
  bool is_integer_polynomial() const;
  /// Value of a constant function; throws std::logic_error otherwise.
  BigRational constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error on division by zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  RatFunc scaled(const BigRational& s) const;
  RatFunc pow(long e) const;

  /// Throws std::domain_error naming the value when it is a pole.
  BigRational eval(const BigRational& value) const;

  /// Replaces t by q^{-m}; requires var() == t and m >= 1.
  RatFunc substitute_t_to_q_power(unsigned m) const;
  /// Replaces the variable x by x^{-1}, keeping the tag.
  RatFunc invert_variable() const;
  /// Same function with a different variable name.
  RatFunc retagged(Var var) const { return RatFunc(num_, den_, var); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical ASCII, e.g. "q + 1" or "(q^2 - 1)/(q)".
  std::string to_string() const;
  /// Ascending compact form used inside element renderings, e.g. "1-q".
  std::string to_compact_string() const;
  std::string to_latex() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
  Var var_;
};

/// Canonical text of a rational-function coefficient attached to a basis
/// label: "" for 1, "-" for -1, "3" or "(3/2)" for constants, "(1-q)" otherwise.
std::string coefficient_prefix(const RatFunc& c);

/// Parses the canonical ASCII form produced by RatFunc::to_string.
RatFunc parse_ratfunc(const std::string& text, Var var);

}  // namespace hallprim
