#include "hallprim/hall_jordan.hpp"

#include "hallprim/hall_littlewood.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace hallprim {

namespace {

RatFunc qconst(const BigRational& c) { return RatFunc(c, Var::q); }

// P_mu * P_nu expanded in the P-basis, memoized per ordered pair.
const std::map<Partition, RatFunc>& hl_structure_constants(const Partition& mu, const Partition& nu) {
  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::map<Partition, RatFunc>> cache;
  const auto key = std::make_pair(mu, nu);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = expand_in_P(hall_littlewood_P(mu) * hall_littlewood_P(nu));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

// [I_mu][I_nu] in the iso-class basis, memoized.
const HallElem& basis_product(const Partition& mu, const Partition& nu) {
  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, Partition>, HallElem> cache;
  const auto key = std::make_pair(mu, nu);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  HallElem value;
  const auto& f = hl_structure_constants(mu, nu);
  for (const auto& [lambda, coeff] : f) {
    RatFunc g = coeff.substitute_t_to_q_power(1) *
                RatFunc::monomial(1, lambda.n_stat() - mu.n_stat() - nu.n_stat(), Var::q);
    if (!g.is_integer_polynomial()) {
      throw std::logic_error("Hall polynomial g^" + lambda.to_string() + "_{" + mu.to_string() + "," +
                             nu.to_string() + "} is not an integer polynomial: " + g.to_string());
    }
    value.add(lambda, g);
  }
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

HallElem iso_class(const Partition& lambda) { return HallElem::basis(lambda); }

RatFunc hall_polynomial(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.weight() + nu.weight() != lambda.weight()) return RatFunc(Var::q);
  return basis_product(mu, nu).coeff(lambda);
}

RatFunc aut_order(const Partition& lambda) {
  RatFunc a = RatFunc::monomial(1, lambda.weight() + 2 * lambda.n_stat(), Var::q);
  for (int m : lambda.multiplicities())
    for (int j = 1; j <= m; ++j) a *= RatFunc::one_minus_power(-j, Var::q);
  return a;
}

HallElem operator*(const HallElem& x, const HallElem& y) {
  HallElem r;
  for (const auto& [mu, a] : x)
    for (const auto& [nu, b] : y) r += basis_product(mu, nu).scaled(a * b);
  return r;
}

HallTensor operator*(const HallTensor& x, const HallTensor& y) {
  HallTensor r;
  for (const auto& [kx, a] : x) {
    for (const auto& [ky, b] : y) {
      const RatFunc ab = a * b;
      for (const auto& [l, c1] : basis_product(kx.first, ky.first))
        for (const auto& [r2, c2] : basis_product(kx.second, ky.second)) r.add({l, r2}, ab * c1 * c2);
    }
  }
  return r;
}

HallTensor coproduct(const HallElem& x) {
  HallTensor r;
  for (const auto& [lambda, c] : x) {
    const int n = lambda.weight();
    const RatFunc inv_a = RatFunc(1, Var::q) / aut_order(lambda);
    for (int k = 0; k <= n; ++k) {
      for (const auto& mu : partitions_of(k)) {
        for (const auto& nu : partitions_of(n - k)) {
          const RatFunc g = hall_polynomial(mu, nu, lambda);
          if (g.is_zero()) continue;
          r.add({mu, nu}, c * g * aut_order(mu) * aut_order(nu) * inv_a);
        }
      }
    }
  }
  return r;
}

RatFunc counit(const HallElem& x) { return x.coeff(Partition()); }

namespace {

template <bool Left>
HallTriple apply_coproduct(const HallTensor& x) {
  HallTriple r;
  for (const auto& [key, c] : x) {
    const HallTensor d = coproduct(iso_class(Left ? key.first : key.second));
    for (const auto& [k2, c2] : d) {
      if constexpr (Left) {
        r.add({k2.first, k2.second, key.second}, c * c2);
      } else {
        r.add({key.first, k2.first, k2.second}, c * c2);
      }
    }
  }
  return r;
}

}  // namespace

HallTriple coproduct_left(const HallTensor& x) { return apply_coproduct<true>(x); }
HallTriple coproduct_right(const HallTensor& x) { return apply_coproduct<false>(x); }

HallElem phi(const SymFunc& x) {
  HallElem r;
  for (const auto& [lambda, a] : expand_in_P(x)) {
    // a P_lambda = a t^{-n(lambda)} (t^{n(lambda)} P_lambda) -> a(q^{-1}) q^{n(lambda)} [I_lambda]
    r.add(lambda, a.substitute_t_to_q_power(1) * RatFunc::monomial(1, lambda.n_stat(), Var::q));
  }
  return r;
}

HallElem phi(const CExpr& x) { return phi(cexpr_to_p(x)); }

HallElem z_generator(int r) {
  if (r < 1) throw std::invalid_argument("z_generator expects r >= 1");
  return HallElem(Partition({r}), RatFunc::one_minus_power(-1, Var::q));
}

HallElem primitive_center(int n, int vertices) {
  if (n < 1) throw std::invalid_argument("primitive_center expects n >= 1");
  if (vertices != 1) throw std::invalid_argument("symbolic primitive_center supports the Jordan quiver (m = 1) only");
  const RatFunc prefactor = RatFunc(n, Var::q) / RatFunc::one_minus_power(-static_cast<long>(vertices) * n, Var::q);
  HallElem r;
  for (const auto& lambda : partitions_of(n)) {
    const int len = lambda.length();
    BigRational c = make_rational(multinomial(len, lambda.multiplicities()), len);
    if (len % 2 == 0) c = -c;
    HallElem z_lambda = iso_class(Partition());
    for (int part : lambda.parts()) z_lambda = z_lambda * z_generator(part);
    r += z_lambda.scaled(qconst(c));
  }
  return r.scaled(prefactor);
}

HallElem primitive_macdonald_image(int n) {
  if (n < 1) throw std::invalid_argument("primitive_macdonald_image expects n >= 1");
  HallElem r;
  for (const auto& lambda : partitions_of(n)) {
    RatFunc c(1, Var::q);
    for (int j = 1; j < lambda.length(); ++j) c *= RatFunc::one_minus_power(j, Var::q);
    r.add(lambda, c);
  }
  return r;
}

bool is_primitive(const HallElem& x) {
  HallTensor expected;
  for (const auto& [lambda, c] : x) {
    expected.add({lambda, Partition()}, c);
    expected.add({Partition(), lambda}, c);
  }
  return (coproduct(x) - expected).is_zero();
}

HallIdentityCheck verify_hall_identity(int n, const Partition& lambda) {
  if (lambda.weight() != n) throw std::invalid_argument("verify_hall_identity expects lambda |- n");
  HallIdentityCheck out;
  out.lhs = RatFunc(1, Var::q);
  for (int j = 1; j < lambda.length(); ++j) out.lhs *= RatFunc::one_minus_power(j, Var::q);

  const RatFunc one_minus_inv_q = RatFunc::one_minus_power(-1, Var::q);
  RatFunc sum(Var::q);
  for (const auto& mu : partitions_of(n)) {
    const int len = mu.length();
    BigRational c = make_rational(multinomial(len, mu.multiplicities()), len);
    if (len % 2 == 0) c = -c;
    // f^lambda: coefficient of [I_lambda] in prod_i [I_(i)]^{m_i(mu)}.
    HallElem product = iso_class(Partition());
    for (int part : mu.parts()) product = product * iso_class(Partition({part}));
    sum += product.coeff(lambda).scaled(c) * one_minus_inv_q.pow(len);
  }
  out.rhs = sum * RatFunc(n, Var::q) / RatFunc::one_minus_power(-n, Var::q);
  out.holds = (out.lhs == out.rhs);
  return out;
}

namespace {

std::string bracket(const Partition& p) { return "[" + p.to_string() + "]"; }

}  // namespace

std::string to_string(const HallElem& x) { return render_combination(x, bracket); }

std::string to_string(const HallTensor& x) {
  return render_combination(x, [](const std::pair<Partition, Partition>& k) {
    return bracket(k.first) + "(x)" + bracket(k.second);
  });
}

std::string to_latex(const HallElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : x) {
    std::string coeff;
    if (c.is_one()) {
      coeff = "";
    } else if (c.is_constant() && c.constant_value() == -1) {
      coeff = "-";
    } else if (c.is_constant()) {
      coeff = c.to_latex();
    } else {
      coeff = "\\left(" + c.to_latex() + "\\right)";
    }
    std::string term = coeff + "[I_{(" + lambda.to_string() + ")}]";
    if (!first) out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
    else out += term;
    first = false;
  }
  return out;
}

}  // namespace hallprim
