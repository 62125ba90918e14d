#include "hallprim/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallprim {

Poly::Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly::Poly(const BigRational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(const BigRational& coeff, unsigned exponent) {
  if (coeff == 0) return {};
  std::vector<BigRational> c(exponent + 1);
  c[exponent] = coeff;
  return Poly(std::move(c));
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Poly::coeff(unsigned k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

unsigned Poly::low_degree() const {
  for (unsigned k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return k;
  return 0;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(BigRational(1) / leading());
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const BigRational& s) const {
  if (s == 0) return {};
  Poly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  Poly r = big;
  for (size_t k = 0; k < small.coeffs_.size(); ++k) r.coeffs_[k] += small.coeffs_[k];
  r.strip();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<BigRational> rem = a.coeffs_;
  std::vector<BigRational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const BigRational inv_lead = BigRational(1) / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    BigRational f = rem[k] * inv_lead;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return quot;
}

Poly Poly::gcd(Poly a, Poly b) {
  // Monic remainder sequence keeps the rational coefficients small.
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigRational Poly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::inflate(unsigned k) const {
  if (k == 1 || is_zero()) return *this;
  std::vector<BigRational> c((coeffs_.size() - 1) * k + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::reversed() const {
  std::vector<BigRational> c(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(c));
}

Poly Poly::shift_down(unsigned k) const {
  if (k == 0) return *this;
  if (k >= coeffs_.size()) return {};
  return Poly(std::vector<BigRational>(coeffs_.begin() + k, coeffs_.end()));
}

Poly Poly::shift_up(unsigned k) const {
  if (k == 0 || is_zero()) return *this;
  std::vector<BigRational> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(c));
}

namespace {

std::string power_text(char var, unsigned k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

// Magnitude part of a term, without sign.
std::string term_text(const BigRational& abs_coeff, char var, unsigned k) {
  if (k == 0) return hallprim::to_string(abs_coeff);
  if (abs_coeff == 1) return power_text(var, k);
  return hallprim::to_string(abs_coeff) + "*" + power_text(var, k);
}

}  // namespace

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      out << (neg ? "-" : "");
    } else {
      out << (neg ? " - " : " + ");
    }
    out << term_text(abs(c), var, static_cast<unsigned>(k));
    first = false;
  }
  return out.str();
}

std::string Poly::to_compact_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (unsigned k = 0; k < coeffs_.size(); ++k) {
    const BigRational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    out << term_text(abs(c), var, k);
    first = false;
  }
  return out.str();
}

std::string Poly::to_latex(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    const BigRational a = abs(c);
    const bool unit = (a == 1 && k != 0);
    if (!unit) {
      if (a.get_den() == 1) {
        out << a.get_num().get_str();
      } else {
        out << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
      }
    }
    if (k == 1) out << var;
    if (k > 1) out << var << "^{" << k << "}";
    first = false;
  }
  return out.str();
}

}  // namespace hallprim
