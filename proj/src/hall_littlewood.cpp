#include "hallprim/hall_littlewood.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace hallprim {

namespace {

RatFunc tconst(const BigRational& c) { return RatFunc(c, Var::t); }

// Number of maps f: parts(mu) -> {1..l(lambda)} whose fibres sum to lambda,
// i.e. the coefficient of m_lambda in p_mu.
BigInt power_sum_to_monomial(const Partition& mu, const Partition& lambda) {
  std::map<std::vector<int>, BigInt> states{{lambda.parts(), BigInt(1)}};
  for (int part : mu.parts()) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [cap, count] : states) {
      for (size_t j = 0; j < cap.size(); ++j) {
        if (cap[j] < part) continue;
        auto c = cap;
        c[j] -= part;
        next[c] += count;
      }
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [cap, count] : states) total += count;  // all remaining caps are zero
  return total;
}

// All per-degree data, built once.
struct DegreeTable {
  std::vector<Partition> parts;                  // reverse lexicographic
  std::map<Partition, size_t> index;
  std::vector<std::vector<BigRational>> p_to_m;  // p_to_m[mu][lambda]
  std::vector<SymFunc> monomials;                // m_lambda in the p-basis
  std::vector<SymFunc> P;                        // P_lambda in the p-basis
  std::vector<std::map<Partition, RatFunc>> P_m;  // P_lambda in the m-basis
};

std::vector<std::vector<BigRational>> invert(std::vector<std::vector<BigRational>> a) {
  const size_t n = a.size();
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular basis-change matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const BigRational s = BigRational(1) / a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::map<Partition, RatFunc> monomial_coords(const DegreeTable& tab, const SymFunc& x) {
  std::map<Partition, RatFunc> out;
  for (const auto& [mu, c] : x) {
    const auto& row = tab.p_to_m[tab.index.at(mu)];
    for (size_t j = 0; j < tab.parts.size(); ++j) {
      if (row[j] == 0) continue;
      auto [it, inserted] = out.try_emplace(tab.parts[j], c.scaled(row[j]));
      if (!inserted) it->second += c.scaled(row[j]);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::shared_ptr<const DegreeTable> build_table(int n) {
  auto tab = std::make_shared<DegreeTable>();
  tab->parts = partitions_of(n);
  const size_t size = tab->parts.size();
  for (size_t i = 0; i < size; ++i) tab->index[tab->parts[i]] = i;

  tab->p_to_m.assign(size, std::vector<BigRational>(size));
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j < size; ++j)
      tab->p_to_m[i][j] = BigRational(power_sum_to_monomial(tab->parts[i], tab->parts[j]));
  // p_mu = sum_lambda A[mu][lambda] m_lambda, so m = A^{-1} p.
  const auto a_inv = invert(tab->p_to_m);
  tab->monomials.resize(size);
  for (size_t l = 0; l < size; ++l) {
    SymFunc m;
    for (size_t mu = 0; mu < size; ++mu)
      if (a_inv[l][mu] != 0) m.add(tab->parts[mu], tconst(a_inv[l][mu]));
    tab->monomials[l] = std::move(m);
  }

  // Gram-Schmidt from the bottom of the dominance order upwards.
  tab->P.resize(size);
  std::vector<RatFunc> norms(size, RatFunc(Var::t));
  for (size_t step = 0; step < size; ++step) {
    const size_t l = size - 1 - step;
    SymFunc v = tab->monomials[l];
    for (size_t prev = l + 1; prev < size; ++prev) {
      const RatFunc proj = hall_inner_product(tab->monomials[l], tab->P[prev]);
      if (proj.is_zero()) continue;
      v -= tab->P[prev].scaled(proj / norms[prev]);
    }
    norms[l] = hall_inner_product(v, v);
    tab->P[l] = std::move(v);
  }
  tab->P_m.resize(size);
  for (size_t l = 0; l < size; ++l) tab->P_m[l] = monomial_coords(*tab, tab->P[l]);
  return tab;
}

std::shared_ptr<const DegreeTable> table(int n) {
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const DegreeTable>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto built = build_table(n);
  std::unique_lock lock(mutex);
  return cache.try_emplace(n, std::move(built)).first->second;
}

void check_cap(int degree, int cap) {
  if (degree > cap) {
    throw std::invalid_argument("degree " + std::to_string(degree) + " exceeds Hall-Littlewood degree cap " +
                                std::to_string(cap));
  }
}

}  // namespace

SymFunc monomial_in_p(const Partition& lambda) {
  auto tab = table(lambda.weight());
  return tab->monomials[tab->index.at(lambda)];
}

std::map<Partition, RatFunc> to_monomial_basis(const SymFunc& x) {
  std::map<int, SymFunc> by_degree;
  for (const auto& [mu, c] : x) by_degree[mu.weight()].add(mu, c);
  std::map<Partition, RatFunc> out;
  for (const auto& [d, part] : by_degree) out.merge(monomial_coords(*table(d), part));
  return out;
}

SymFunc hall_littlewood_P(const Partition& lambda, int degree_cap) {
  check_cap(lambda.weight(), degree_cap);
  auto tab = table(lambda.weight());
  return tab->P[tab->index.at(lambda)];
}

std::map<Partition, RatFunc> hall_littlewood_P_monomial(const Partition& lambda, int degree_cap) {
  check_cap(lambda.weight(), degree_cap);
  auto tab = table(lambda.weight());
  return tab->P_m[tab->index.at(lambda)];
}

std::map<Partition, RatFunc> expand_in_P(const SymFunc& x, int degree_cap) {
  std::map<int, SymFunc> by_degree;
  for (const auto& [mu, c] : x) by_degree[mu.weight()].add(mu, c);
  std::map<Partition, RatFunc> out;
  for (const auto& [d, part] : by_degree) {
    check_cap(d, degree_cap);
    auto tab = table(d);
    auto residual = monomial_coords(*tab, part);
    // Reverse lexicographic order visits dominance-maximal partitions first.
    for (size_t l = 0; l < tab->parts.size(); ++l) {
      auto it = residual.find(tab->parts[l]);
      if (it == residual.end()) continue;
      const RatFunc a = it->second;
      for (const auto& [nu, c] : tab->P_m[l]) {
        auto [r, inserted] = residual.try_emplace(nu, -(c * a));
        if (!inserted) {
          r->second -= c * a;
          if (r->second.is_zero()) residual.erase(r);
        }
      }
      out.emplace(tab->parts[l], a);
    }
    if (!residual.empty()) throw std::logic_error("P-basis expansion left a residual");
  }
  return out;
}

SymFunc macdonald_primitive(int n, int degree_cap) {
  if (n < 1) throw std::invalid_argument("macdonald_primitive expects n >= 1");
  check_cap(n, degree_cap);
  SymFunc r;
  for (const auto& lambda : partitions_of(n)) {
    RatFunc c = RatFunc::monomial(1, lambda.n_stat(), Var::t);
    for (int i = 1; i < lambda.length(); ++i) c *= RatFunc::one_minus_power(-i, Var::t);
    r += hall_littlewood_P(lambda, degree_cap).scaled(c);
  }
  return r;
}

}  // namespace hallprim
