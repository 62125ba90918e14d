#include "hallprim/ratfunc.hpp"

#include <stdexcept>

namespace hallprim {

RatFunc::RatFunc(Poly num, Poly den, Var var) : num_(std::move(num)), den_(std::move(den)), var_(var) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
  }
  if (den_.leading() != 1) {
    const BigRational s = BigRational(1) / den_.leading();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

RatFunc RatFunc::monomial(const BigRational& c, long k, Var var) {
  if (k >= 0) return RatFunc(Poly::monomial(c, static_cast<unsigned>(k)), var);
  return RatFunc(Poly(c), Poly::monomial(1, static_cast<unsigned>(-k)), var);
}

RatFunc RatFunc::one_minus_power(long k, Var var) {
  return RatFunc(1, var) - monomial(1, k, var);
}

bool RatFunc::is_integer_polynomial() const {
  if (!is_polynomial()) return false;
  for (const auto& c : num_.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

BigRational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
  return num_.coeff(0);
}

namespace {

void require_same_var(const RatFunc& a, const RatFunc& b) {
  if (a.var() != b.var()) {
    throw std::invalid_argument(std::string("mixed variables ") + static_cast<char>(a.var()) + " and " +
                                static_cast<char>(b.var()));
  }
}

}  // namespace

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  require_same_var(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, a.var_);
  if (a.den_.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, a.var_);
  if (b.den_.is_constant()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, a.var_);
  Poly g = Poly::gcd(a.den_, b.den_);
  Poly bd = Poly::exact_div(b.den_, g);
  Poly ad = Poly::exact_div(a.den_, g);
  return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd, a.var_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  require_same_var(a, b);
  if (a.is_zero() || b.is_zero()) return RatFunc(a.var_);
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, a.var_);
  // Cross-cancel before multiplying; the product of reduced pieces is reduced.
  Poly g1 = Poly::gcd(a.num_, b.den_);
  Poly g2 = Poly::gcd(b.num_, a.den_);
  RatFunc r(a.var_);
  r.num_ = Poly::exact_div(a.num_, g1) * Poly::exact_div(b.num_, g2);
  r.den_ = Poly::exact_div(a.den_, g2) * Poly::exact_div(b.den_, g1);
  const BigRational s = BigRational(1) / r.den_.leading();
  if (s != 1) {
    r.num_ = r.num_.scaled(s);
    r.den_ = r.den_.scaled(s);
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  require_same_var(a, b);
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  RatFunc inv(b.var_);
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  const BigRational s = BigRational(1) / inv.den_.leading();
  inv.num_ = inv.num_.scaled(s);
  inv.den_ = inv.den_.scaled(s);
  return a * inv;
}

RatFunc RatFunc::scaled(const BigRational& s) const {
  if (s == 0) return RatFunc(var_);
  RatFunc r = *this;
  r.num_ = r.num_.scaled(s);
  return r;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return RatFunc(1, var_) / pow(-e);
  RatFunc result(1, var_);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

BigRational RatFunc::eval(const BigRational& value) const {
  const BigRational d = den_.eval(value);
  if (d == 0) throw std::domain_error("pole at " + std::string(1, static_cast<char>(var_)) + "=" + hallprim::to_string(value));
  return num_.eval(value) / d;
}

namespace {

// p(x^{-m}) * x^{m deg p}.
Poly reflect(const Poly& p, unsigned m) { return p.reversed().inflate(m); }

}  // namespace

RatFunc RatFunc::substitute_t_to_q_power(unsigned m) const {
  if (var_ != Var::t) throw std::invalid_argument("substitute_t_to_q_power expects a function of t");
  if (m == 0) throw std::invalid_argument("substitute_t_to_q_power expects m >= 1");
  if (is_zero()) return RatFunc(Var::q);
  Poly num = reflect(num_, m);
  Poly den = reflect(den_, m);
  const long shift = static_cast<long>(m) * (den_.degree() - num_.degree());
  if (shift >= 0) {
    num = num.shift_up(static_cast<unsigned>(shift));
  } else {
    den = den.shift_up(static_cast<unsigned>(-shift));
  }
  return RatFunc(num, den, Var::q);
}

RatFunc RatFunc::invert_variable() const {
  if (var_ == Var::t) return substitute_t_to_q_power(1).retagged(Var::t);
  return retagged(Var::t).substitute_t_to_q_power(1);
}

std::string RatFunc::to_string() const {
  const char v = static_cast<char>(var_);
  if (is_polynomial()) return num_.to_string(v);
  return "(" + num_.to_string(v) + ")/(" + den_.to_string(v) + ")";
}

std::string RatFunc::to_compact_string() const {
  const char v = static_cast<char>(var_);
  if (is_polynomial()) return num_.to_compact_string(v);
  return "(" + num_.to_compact_string(v) + ")/(" + den_.to_compact_string(v) + ")";
}

std::string RatFunc::to_latex() const {
  const char v = static_cast<char>(var_);
  if (is_polynomial()) return num_.to_latex(v);
  return "\\frac{" + num_.to_latex(v) + "}{" + den_.to_latex(v) + "}";
}

std::string coefficient_prefix(const RatFunc& c) {
  if (c.is_one()) return "";
  if (c.is_constant()) {
    const BigRational v = c.constant_value();
    if (v == -1) return "-";
    if (v.get_den() == 1) return v.get_num().get_str();
    return "(" + hallprim::to_string(v) + ")";
  }
  if (c.is_polynomial() && c.num().coeffs().size() == c.num().low_degree() + 1) {
    // A single monomial reads unambiguously without parentheses: "q", "-2*q^3".
    return c.to_compact_string();
  }
  return "(" + c.to_compact_string() + ")";
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string r;
  for (char ch : s)
    if (ch != ' ') r.push_back(ch);
  return r;
}

Poly parse_poly(const std::string& s, char var) {
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  Poly result;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed polynomial: '" + s + "'");
    BigRational coeff = 1;
    unsigned exponent = 0;
    const size_t vpos = term.find(var);
    if (vpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string cpart = term.substr(0, vpos);
      if (!cpart.empty()) {
        if (cpart.back() != '*') throw std::invalid_argument("malformed term: '" + term + "'");
        cpart.pop_back();
        coeff = parse_rational(cpart);
      }
      const std::string epart = term.substr(vpos + 1);
      if (!epart.empty()) {
        if (epart[0] != '^' || epart.size() < 2) throw std::invalid_argument("malformed term: '" + term + "'");
        exponent = static_cast<unsigned>(std::stoul(epart.substr(1)));
      } else {
        exponent = 1;
      }
    }
    result += Poly::monomial(coeff * sign, exponent);
    pos = end;
  }
  return result;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text, Var var) {
  const std::string s = strip_spaces(text);
  const char v = static_cast<char>(var);
  const size_t split = s.find(")/(");
  if (split != std::string::npos) {
    if (s.front() != '(' || s.back() != ')') throw std::invalid_argument("malformed rational function: '" + text + "'");
    return RatFunc(parse_poly(s.substr(1, split - 1), v), parse_poly(s.substr(split + 3, s.size() - split - 4), v),
                   var);
  }
  return RatFunc(parse_poly(s, v), var);
}

}  // namespace hallprim
