#include "hallprim/symfunc.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace hallprim {

namespace {

RatFunc tconst(const BigRational& c) { return RatFunc(c, Var::t); }

}  // namespace

SymFunc power_sum(const Partition& lambda) { return SymFunc::basis(lambda); }

SymFunc sym_constant(const RatFunc& c) { return SymFunc(Partition(), c); }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.add(ka.join(kb), ca * cb);
  return r;
}

CExpr operator*(const CExpr& a, const CExpr& b) {
  CExpr r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.add(ka.join(kb), ca * cb);
  return r;
}

SymTensor operator*(const SymTensor& a, const SymTensor& b) {
  SymTensor r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r.add({ka.first.join(kb.first), ka.second.join(kb.second)}, ca * cb);
  return r;
}

SymFunc c_in_p(int n) {
  if (n < 0) throw std::invalid_argument("c_in_p expects n >= 0");
  static std::shared_mutex mutex;
  static std::vector<SymFunc> cache;
  {
    std::shared_lock lock(mutex);
    if (n < static_cast<int>(cache.size())) return cache[n];
  }
  std::unique_lock lock(mutex);
  if (cache.empty()) cache.push_back(sym_constant(tconst(1)));
  while (static_cast<int>(cache.size()) <= n) {
    const int k = static_cast<int>(cache.size());
    SymFunc acc;
    for (int a = 1; a <= k; ++a) {
      acc += RatFunc::one_minus_power(a, Var::t) * (power_sum(Partition({a})) * cache[k - a]);
    }
    cache.push_back(acc.scaled(tconst(make_rational(1, k))));
  }
  return cache[n];
}

CExpr p_from_c_closed(int n) {
  if (n < 1) throw std::invalid_argument("p_from_c_closed expects n >= 1");
  const RatFunc prefactor = RatFunc(n, Var::t) / RatFunc::one_minus_power(n, Var::t);
  CExpr r;
  for (const auto& lambda : partitions_of(n)) {
    const int len = lambda.length();
    std::vector<int> mult = lambda.multiplicities();
    BigRational c = make_rational(multinomial(len, mult), len);
    if (len % 2 == 0) c = -c;
    r.add(lambda, prefactor.scaled(c));
  }
  return r;
}

CExpr p_from_c_compositions(int n) {
  if (n < 1) throw std::invalid_argument("p_from_c_compositions expects n >= 1");
  const RatFunc prefactor = RatFunc(1, Var::t) / RatFunc::one_minus_power(n, Var::t);
  CExpr r;
  for (int k = 1; k <= n; ++k) {
    const long sign = (k % 2 == 1) ? 1 : -1;
    for (const auto& comp : compositions_of(n, k)) {
      // i_k c_{i_k} c_{i_{k-1}} ... c_{i_1}
      r.add(Partition::from_unsorted(comp), prefactor.scaled(sign * comp.back()));
    }
  }
  return r;
}

CExpr p_from_c_collected(int n) {
  if (n < 1) throw std::invalid_argument("p_from_c_collected expects n >= 1");
  const RatFunc prefactor = RatFunc(1, Var::t) / RatFunc::one_minus_power(n, Var::t);
  CExpr r;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<int> mult = lambda.multiplicities();
    BigInt sum = 0;
    for (int l = 1; l <= static_cast<int>(mult.size()); ++l) {
      if (mult[l - 1] > 0) sum += l * composition_count_g(mult, l);
    }
    const BigRational c = (lambda.length() % 2 == 1) ? BigRational(sum) : BigRational(-sum);
    r.add(lambda, prefactor.scaled(c));
  }
  return r;
}

SymFunc cexpr_to_p(const CExpr& x) {
  SymFunc r;
  for (const auto& [lambda, c] : x) {
    SymFunc term = sym_constant(c);
    for (int part : lambda.parts()) term = term * c_in_p(part);
    r += term;
  }
  return r;
}

CExpr p_to_cexpr(const SymFunc& x) {
  CExpr r;
  for (const auto& [lambda, c] : x) {
    CExpr term(Partition(), c);
    for (int part : lambda.parts()) term = term * p_from_c_closed(part);
    r += term;
  }
  return r;
}

SymFunc h_in_p(int n) {
  if (n < 0) throw std::invalid_argument("h_in_p expects n >= 0");
  SymFunc r;
  for (const auto& lambda : partitions_of(n)) r.add(lambda, tconst(BigRational(1) / BigRational(lambda.zee())));
  return r;
}

SymTensor coproduct(const SymFunc& x) {
  SymTensor r;
  for (const auto& [lambda, c] : x) {
    const std::vector<int> mult = lambda.multiplicities();
    // Choose how many copies of each part go to the left factor.
    std::vector<int> left(mult.size(), 0);
    while (true) {
      std::vector<int> lparts, rparts;
      BigInt coeff = 1;
      for (size_t i = mult.size(); i-- > 0;) {
        coeff *= binomial(static_cast<unsigned>(mult[i]), static_cast<unsigned>(left[i]));
        lparts.insert(lparts.end(), left[i], static_cast<int>(i) + 1);
        rparts.insert(rparts.end(), mult[i] - left[i], static_cast<int>(i) + 1);
      }
      r.add({Partition(lparts), Partition(rparts)}, c.scaled(BigRational(coeff)));
      size_t i = 0;
      while (i < mult.size() && left[i] == mult[i]) left[i++] = 0;
      if (i == mult.size()) break;
      ++left[i];
    }
  }
  return r;
}

RatFunc counit(const SymFunc& x) { return x.coeff(Partition()); }

SymFunc antipode(const SymFunc& x) {
  SymFunc r;
  for (const auto& [lambda, c] : x) r.add(lambda, lambda.length() % 2 == 0 ? c : -c);
  return r;
}

SymFunc counit_left(const SymTensor& x) {
  SymFunc r;
  for (const auto& [key, c] : x)
    if (key.first.empty()) r.add(key.second, c);
  return r;
}

SymFunc counit_right(const SymTensor& x) {
  SymFunc r;
  for (const auto& [key, c] : x)
    if (key.second.empty()) r.add(key.first, c);
  return r;
}

RatFunc hall_inner_product(const SymFunc& a, const SymFunc& b) {
  RatFunc acc(Var::t);
  const SymFunc& small = a.size() <= b.size() ? a : b;
  const SymFunc& other = a.size() <= b.size() ? b : a;
  for (const auto& [lambda, c] : small) {
    auto it = other.terms().find(lambda);
    if (it == other.terms().end()) continue;
    RatFunc w = tconst(BigRational(lambda.zee()));
    for (int part : lambda.parts()) w /= RatFunc::one_minus_power(part, Var::t);
    acc += c * it->second * w;
  }
  return acc;
}

SymFunc specialize_t(const SymFunc& x, const BigRational& value) {
  SymFunc r;
  for (const auto& [lambda, c] : x) r.add(lambda, tconst(c.eval(value)));
  return r;
}

namespace {

std::string bracket(const Partition& p) { return "[" + p.to_string() + "]"; }

}  // namespace

std::string to_string(const SymFunc& x) {
  return render_combination(x, [](const Partition& p) { return p.empty() ? std::string() : "p" + bracket(p); });
}

std::string to_string(const CExpr& x) {
  return render_combination(x, [](const Partition& p) { return p.empty() ? std::string() : "c" + bracket(p); });
}

std::string to_string(const SymTensor& x) {
  return render_combination(x, [](const std::pair<Partition, Partition>& k) {
    return "p" + bracket(k.first) + "(x)p" + bracket(k.second);
  });
}

namespace {

template <class Comb>
std::string latex_combination(const Comb& x, char basis) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : x) {
    std::string coeff;
    if (c.is_one() && !lambda.empty()) {
      coeff = "";
    } else if (c.is_constant() && c.constant_value() == -1 && !lambda.empty()) {
      coeff = "-";
    } else if (c.is_constant()) {
      coeff = c.to_latex();
    } else {
      coeff = "\\left(" + c.to_latex() + "\\right)";
    }
    std::string term = coeff;
    if (!lambda.empty()) term += std::string(1, basis) + "_{" + lambda.to_string() + "}";
    if (!first) out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
    else out += term;
    first = false;
  }
  return out;
}

}  // namespace

std::string to_latex(const SymFunc& x) { return latex_combination(x, 'p'); }
std::string to_latex(const CExpr& x) { return latex_combination(x, 'c'); }

}  // namespace hallprim
