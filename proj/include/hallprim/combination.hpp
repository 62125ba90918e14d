#pragma once

#include "hallprim/ratfunc.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace hallprim {

/// Finite linear combination of basis keys with rational-function coefficients.
/// Zero coefficients are never stored; iteration follows Key's ordering.
/// Tag fixes the coefficient variable and keeps different bases from mixing.
template <class Key, class Tag>
class Combination {
 public:
  using Terms = std::map<Key, RatFunc>;
  static constexpr Var var = Tag::var;

  Combination() = default;
  Combination(const Key& key, RatFunc coeff) { add(key, std::move(coeff)); }
  static Combination basis(const Key& key) { return Combination(key, RatFunc(1, var)); }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  RatFunc coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? RatFunc(var) : it->second;
  }

  void add(const Key& key, const RatFunc& coeff) {
    if (coeff.var() != var) throw std::invalid_argument("coefficient variable does not match basis");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  Combination operator-() const { return scaled(RatFunc(-1, var)); }

  Combination scaled(const RatFunc& s) const {
    Combination r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  friend Combination operator*(const RatFunc& s, const Combination& x) { return x.scaled(s); }

  /// Applies f to every coefficient; f must keep or change the variable consistently with OtherTag.
  template <class OtherTag, class F>
  Combination<Key, OtherTag> map_coefficients(F&& f) const {
    Combination<Key, OtherTag> r;
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace hallprim

namespace hallprim {

/// Renders sum c_k * label(k) in canonical key order, e.g. "[2] + (1-q)[1,1]".
/// An empty label marks the unit basis element, which prints its coefficient alone.
template <class Key, class Tag, class LabelFn>
std::string render_combination(const Combination<Key, Tag>& x, LabelFn&& label) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    const std::string lab = label(k);
    std::string term;
    if (lab.empty()) {
      term = c.is_constant() ? hallprim::to_string(c.constant_value()) : "(" + c.to_compact_string() + ")";
    } else {
      term = coefficient_prefix(c) + lab;
    }
    const bool neg = !term.empty() && term[0] == '-';
    if (first) {
      out += term;
    } else {
      out += neg ? " - " + term.substr(1) : " + " + term;
    }
    first = false;
  }
  return out;
}

}  // namespace hallprim
