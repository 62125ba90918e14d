#pragma once

#include "hallprim/bigrational.hpp"
#include "hallprim/ratfunc.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hallprim {

/// scalar * v^v_exp with v^2 = q.
struct HalfPower {
  BigRational scalar = 1;
  long v_exp = 0;

  friend HalfPower operator*(const HalfPower& a, const HalfPower& b) {
    return {a.scalar * b.scalar, a.v_exp + b.v_exp};
  }
  friend bool operator==(const HalfPower& a, const HalfPower& b) {
    return a.scalar == b.scalar && a.v_exp == b.v_exp;
  }

  bool has_integral_q_power() const { return v_exp % 2 == 0; }

  /// scalar * q^(v_exp/2); nullopt when v_exp is odd.
  std::optional<RatFunc> to_ratfunc() const {
    if (!has_integral_q_power()) return std::nullopt;
    return RatFunc::monomial(scalar, v_exp / 2, Var::q);
  }

  /// Value at a concrete q; throws std::domain_error when v_exp is odd.
  BigRational at(long q) const {
    if (!has_integral_q_power()) {
      throw std::domain_error("odd power v^" + std::to_string(v_exp) + " has no rational value");
    }
    return scalar * pow(BigRational(q), v_exp / 2);
  }
};

}  // namespace hallprim
