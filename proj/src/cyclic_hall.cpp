#include "hallprim/cyclic_hall.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace hallprim {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

BigInt int_pow(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

BigRational q_power(int q, long e) { return pow(BigRational(q), e); }

/// Memo table tolerating concurrent idempotent fills.
template <class Key, class Value>
class Memo {
 public:
  template <class F>
  const Value& get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mu_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, Value> table_;
};

/// The complex C^0 -> C^1 computing Hom and Ext^1 from M to N. Row i of d is the
/// image of the elementary map in cell c0[i]; cells are (row in N, column in M).
struct HomComplex {
  std::vector<std::pair<int, int>> c0;
  std::vector<std::pair<int, int>> c1;
  FqMatrix d;
};

HomComplex hom_complex(const FqModule& M, const FqModule& N) {
  if (M.vertices() != N.vertices() || M.q() != N.q()) throw std::invalid_argument("modules over different quivers or fields");
  const int m = M.vertices();
  const int q = M.q();
  const int nm = M.total_dim();
  const int nn = N.total_dim();
  auto vm = M.vertex_of_basis();
  auto vn = N.vertex_of_basis();
  HomComplex hc;
  std::vector<int> c1_index(static_cast<size_t>(nn) * nm, -1);
  for (int b = 0; b < nn; ++b) {
    for (int a = 0; a < nm; ++a) {
      if (vn[b] == vm[a]) hc.c0.emplace_back(b, a);
      if (vn[b] == mod(vm[a] - 1, m)) {
        c1_index[static_cast<size_t>(b) * nm + a] = static_cast<int>(hc.c1.size());
        hc.c1.emplace_back(b, a);
      }
    }
  }
  hc.d = FqMatrix(static_cast<int>(hc.c0.size()), static_cast<int>(hc.c1.size()), q);
  const FqMatrix& xn = N.x();
  const FqMatrix& xm = M.x();
  for (size_t i = 0; i < hc.c0.size(); ++i) {
    auto [b, a] = hc.c0[i];
    // X_N E_{ba} - E_{ba} X_M
    for (int b2 = 0; b2 < nn; ++b2) {
      if (xn(b2, b) == 0) continue;
      int j = c1_index[static_cast<size_t>(b2) * nm + a];
      hc.d.set(static_cast<int>(i), j, hc.d(static_cast<int>(i), j) + xn(b2, b));
    }
    for (int a2 = 0; a2 < nm; ++a2) {
      if (xm(a, a2) == 0) continue;
      int j = c1_index[static_cast<size_t>(b) * nm + a2];
      hc.d.set(static_cast<int>(i), j, hc.d(static_cast<int>(i), j) - xm(a, a2));
    }
  }
  return hc;
}

/// Basis of Hom(M, N) as nn x nm matrices.
std::vector<FqMatrix> hom_basis(const FqModule& M, const FqModule& N) {
  HomComplex hc = hom_complex(M, N);
  const int q = M.q();
  const int c0 = static_cast<int>(hc.c0.size());
  // Kernel of v -> v d, i.e. the null space of d^T.
  Echelon e = rref(hc.d.transposed());
  std::vector<bool> is_pivot(c0, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<FqMatrix> basis;
  for (int f = 0; f < c0; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> v(c0, 0);
    v[f] = 1;
    for (int i = 0; i < e.dim(); ++i) v[e.pivots[i]] = -e.rows(i, f);
    FqMatrix phi(N.total_dim(), M.total_dim(), q);
    for (int k = 0; k < c0; ++k) phi.set(hc.c0[k].first, hc.c0[k].second, v[k]);
    basis.push_back(phi);
  }
  return basis;
}

/// Calls f(U) for every tuple U of subspaces U_h of V_h (all dimensions).
void for_each_graded_subspace(const std::vector<int>& dims, int q, const std::function<void(const std::vector<const Echelon*>&)>& f) {
  const int m = static_cast<int>(dims.size());
  std::vector<const Echelon*> cur(m, nullptr);
  std::function<void(int)> rec = [&](int h) {
    if (h == m) {
      f(cur);
      return;
    }
    for (int k = 0; k <= dims[h]; ++k) {
      for (const auto& e : subspaces(dims[h], k, q)) {
        cur[h] = &e;
        rec(h + 1);
      }
    }
  };
  rec(0);
}

std::vector<int> row_of(const FqMatrix& a, int i) {
  std::vector<int> v(a.cols());
  for (int j = 0; j < a.cols(); ++j) v[j] = a(i, j);
  return v;
}

/// A_h applied to a vector of V_h.
std::vector<int> mat_vec(const FqMatrix& a, const std::vector<int>& v) {
  std::vector<int> w(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    w[i] = s % a.prime();
  }
  return w;
}

bool is_invariant(const std::vector<FqMatrix>& arrows, const std::vector<const Echelon*>& u) {
  const int m = static_cast<int>(u.size());
  for (int h = 0; h < m; ++h) {
    const Echelon& target = *u[mod(h - 1, m)];
    for (int i = 0; i < u[h]->dim(); ++i) {
      if (!coordinates_in(target, mat_vec(arrows[h], row_of(u[h]->rows, i)))) return false;
    }
  }
  return true;
}

void check_count_cap(const CyclicIsoClass& R) {
  if (R.dimension() > kCountDimCap) {
    throw std::invalid_argument("total dimension " + std::to_string(R.dimension()) + " exceeds the counting cap " +
                                std::to_string(kCountDimCap));
  }
}

std::map<ClassPair, long> build_census(const CyclicIsoClass& R, int q) {
  check_count_cap(R);
  FqModule mod_r = realize(R, q);
  const int m = R.vertices();
  std::vector<FqMatrix> arrows;
  for (int h = 0; h < m; ++h) arrows.push_back(mod_r.arrow(h));
  std::map<ClassPair, long> census;
  for_each_graded_subspace(mod_r.dims(), q, [&](const std::vector<const Echelon*>& u) {
    if (!is_invariant(arrows, u)) return;
    std::vector<int> sub_dims(m), quot_dims(m), sub_off(m, 0), quot_off(m, 0);
    std::vector<std::vector<int>> nonpivots(m);
    for (int h = 0; h < m; ++h) {
      sub_dims[h] = u[h]->dim();
      quot_dims[h] = mod_r.dims()[h] - sub_dims[h];
      std::vector<bool> is_pivot(mod_r.dims()[h], false);
      for (int p : u[h]->pivots) is_pivot[p] = true;
      for (int j = 0; j < mod_r.dims()[h]; ++j) {
        if (!is_pivot[j]) nonpivots[h].push_back(j);
      }
      if (h > 0) {
        sub_off[h] = sub_off[h - 1] + sub_dims[h - 1];
        quot_off[h] = quot_off[h - 1] + quot_dims[h - 1];
      }
    }
    int ns = sub_off[m - 1] + sub_dims[m - 1];
    int nq = quot_off[m - 1] + quot_dims[m - 1];
    FqMatrix xs(ns, ns, q), xq(nq, nq, q);
    for (int h = 0; h < m; ++h) {
      int t = mod(h - 1, m);
      const Echelon& target = *u[t];
      for (int i = 0; i < u[h]->dim(); ++i) {
        auto coords = *coordinates_in(target, mat_vec(arrows[h], row_of(u[h]->rows, i)));
        for (int k = 0; k < target.dim(); ++k) xs.set(sub_off[t] + k, sub_off[h] + i, coords[k]);
      }
      for (size_t c = 0; c < nonpivots[h].size(); ++c) {
        int j = nonpivots[h][c];
        std::vector<int> w(arrows[h].rows());
        for (int i = 0; i < arrows[h].rows(); ++i) w[i] = arrows[h](i, j);
        for (int i = 0; i < target.dim(); ++i) {
          int coef = w[target.pivots[i]];
          if (coef == 0) continue;
          for (size_t k = 0; k < w.size(); ++k) w[k] = ((w[k] - coef * target.rows(i, static_cast<int>(k))) % q + q) % q;
        }
        for (size_t k = 0; k < nonpivots[t].size(); ++k) {
          xq.set(quot_off[t] + static_cast<int>(k), quot_off[h] + static_cast<int>(c), w[nonpivots[t][k]]);
        }
      }
    }
    CyclicIsoClass sub = decompose(FqModule(m, q, sub_dims, xs));
    CyclicIsoClass quot = decompose(FqModule(m, q, quot_dims, xq));
    ++census[{sub, quot}];
  });
  return census;
}

Memo<std::pair<CyclicIsoClass, int>, std::map<ClassPair, long>> census_memo;
Memo<std::pair<CyclicIsoClass, int>, BigInt> aut_memo;
Memo<std::tuple<CyclicIsoClass, CyclicIsoClass, int>, std::map<CyclicIsoClass, BigInt>> product_memo;

BigInt gl_order(int n, int q) {
  BigInt r = 1;
  for (int k = 0; k < n; ++k) r *= int_pow(q, n) - int_pow(q, k);
  return r;
}

void check_same(const NumHallElem& x, const NumHallElem& y) {
  if (x.vertices() != y.vertices() || x.q() != y.q()) throw std::invalid_argument("elements over different quivers or fields");
}

}  // namespace

const std::map<ClassPair, long>& submodule_census(const CyclicIsoClass& R, int q) {
  return census_memo.get({R, q}, [&] { return build_census(R, q); });
}

long submodule_count(const CyclicIsoClass& R, const CyclicIsoClass& sub, const CyclicIsoClass& quot, int q) {
  if (sub.vertices() != R.vertices() || quot.vertices() != R.vertices()) throw std::invalid_argument("classes over different quivers");
  auto ds = sub.dimension_vector();
  auto dq = quot.dimension_vector();
  auto dr = R.dimension_vector();
  for (size_t h = 0; h < dr.size(); ++h) {
    if (ds[h] + dq[h] != dr[h]) throw std::invalid_argument("dim(sub) + dim(quot) must equal dim(R) at every vertex");
  }
  const auto& census = submodule_census(R, q);
  auto it = census.find({sub, quot});
  return it == census.end() ? 0 : it->second;
}

long invariant_subspace_count(const CyclicIsoClass& R, int q) {
  check_count_cap(R);
  FqModule mod_r = realize(R, q);
  std::vector<FqMatrix> arrows;
  for (int h = 0; h < R.vertices(); ++h) arrows.push_back(mod_r.arrow(h));
  long count = 0;
  for_each_graded_subspace(mod_r.dims(), q, [&](const std::vector<const Echelon*>& u) {
    if (is_invariant(arrows, u)) ++count;
  });
  return count;
}

HomExtDims hom_ext_dims(const FqModule& M, const FqModule& N) {
  HomComplex hc = hom_complex(M, N);
  int r = rank(hc.d);
  return {static_cast<int>(hc.c0.size()) - r, static_cast<int>(hc.c1.size()) - r};
}

int end_dim(const CyclicIsoClass& cls, int q) {
  FqModule mod_m = realize(cls, q, kProductDimCap);
  return hom_ext_dims(mod_m, mod_m).hom;
}

BigInt aut_count(const CyclicIsoClass& cls, int q) {
  check_count_cap(cls);
  FqModule mod_m = realize(cls, q);
  auto basis = hom_basis(mod_m, mod_m);
  BigInt size = int_pow(q, static_cast<long>(basis.size()));
  if (size > kEndEnumerationCap) {
    throw std::invalid_argument("|End| = " + size.get_str() + " exceeds the enumeration cap " + std::to_string(kEndEnumerationCap));
  }
  const int n = mod_m.total_dim();
  std::vector<int> digits(basis.size(), 0);
  long count = 0;
  while (true) {
    FqMatrix phi(n, n, q);
    for (size_t i = 0; i < basis.size(); ++i) {
      if (digits[i] == 0) continue;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) phi.set(r, c, phi(r, c) + digits[i] * basis[i](r, c));
      }
    }
    if (rank(phi) == n) ++count;
    size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return count;
}

BigInt aut_count_mobius(const CyclicIsoClass& cls, int q) {
  check_count_cap(cls);
  FqModule mod_m = realize(cls, q);
  auto basis = hom_basis(mod_m, mod_m);
  const int e = static_cast<int>(basis.size());
  const int n = mod_m.total_dim();
  BigInt total = 0;
  for_each_graded_subspace(mod_m.dims(), q, [&](const std::vector<const Echelon*>& u) {
    // Row i: the endomorphism basis[i] evaluated on a basis of U.
    std::vector<std::vector<int>> u_vectors;
    long mu_exp = 0;
    int sign = 1;
    for (int h = 0; h < mod_m.vertices(); ++h) {
      int k = u[h]->dim();
      mu_exp += static_cast<long>(k) * (k - 1) / 2;
      if (k % 2) sign = -sign;
      for (int i = 0; i < k; ++i) {
        std::vector<int> v(n, 0);
        for (int j = 0; j < mod_m.dims()[h]; ++j) v[mod_m.offset(h) + j] = u[h]->rows(i, j);
        u_vectors.push_back(std::move(v));
      }
    }
    FqMatrix constraints(e, static_cast<int>(u_vectors.size()) * n, q);
    for (int i = 0; i < e; ++i) {
      for (size_t k = 0; k < u_vectors.size(); ++k) {
        auto w = mat_vec(basis[i], u_vectors[k]);
        for (int r = 0; r < n; ++r) constraints.set(i, static_cast<int>(k) * n + r, w[r]);
      }
    }
    BigInt term = int_pow(q, mu_exp) * int_pow(q, e - rank(constraints));
    if (sign > 0) {
      total += term;
    } else {
      total -= term;
    }
  });
  return total;
}

BigInt count_automorphisms(const CyclicIsoClass& cls, int q) {
  if (int_pow(q, end_dim(cls, q)) <= kEndEnumerationCap) return aut_count(cls, q);
  return aut_count_mobius(cls, q);
}

BigInt aut_order_structural(const CyclicIsoClass& cls, int q) {
  return aut_memo.get({cls, q}, [&] {
    int e = end_dim(cls, q);
    std::map<std::pair<int, int>, int> mult;
    for (const auto& s : cls.summands()) ++mult[{s.top, s.length}];
    long sq = 0;
    BigInt r = 1;
    for (const auto& [key, n] : mult) {
      sq += static_cast<long>(n) * n;
      r *= gl_order(n, q);
    }
    return BigInt(r * int_pow(q, e - sq));
  });
}

const std::map<CyclicIsoClass, BigInt>& extension_hall_numbers(const CyclicIsoClass& M, const CyclicIsoClass& N, int q) {
  return product_memo.get({M, N, q}, [&] {
    if (M.vertices() != N.vertices()) throw std::invalid_argument("classes over different quivers");
    if (M.dimension() + N.dimension() > kProductDimCap) {
      throw std::invalid_argument("product of total dimension " + std::to_string(M.dimension() + N.dimension()) +
                                  " exceeds the cap " + std::to_string(kProductDimCap));
    }
    const int m = M.vertices();
    FqModule fm = realize(M, q, kProductDimCap);
    FqModule fn = realize(N, q, kProductDimCap);
    HomComplex hc = hom_complex(fm, fn);
    Echelon image = rref(hc.d);
    const int c1 = static_cast<int>(hc.c1.size());
    std::vector<bool> is_pivot(c1, false);
    for (int p : image.pivots) is_pivot[p] = true;
    std::vector<int> complement;
    for (int j = 0; j < c1; ++j) {
      if (!is_pivot[j]) complement.push_back(j);
    }
    const int hom = static_cast<int>(hc.c0.size()) - image.dim();

    // Basis of R = N (+) M regrouped by vertex.
    std::vector<int> dims(m), base(m, 0);
    for (int h = 0; h < m; ++h) {
      dims[h] = fn.dims()[h] + fm.dims()[h];
      if (h > 0) base[h] = base[h - 1] + dims[h - 1];
    }
    auto vn = fn.vertex_of_basis();
    auto vm = fm.vertex_of_basis();
    std::vector<int> new_n(vn.size()), new_m(vm.size());
    for (size_t b = 0; b < vn.size(); ++b) new_n[b] = base[vn[b]] + static_cast<int>(b) - fn.offset(vn[b]);
    for (size_t a = 0; a < vm.size(); ++a) new_m[a] = base[vm[a]] + fn.dims()[vm[a]] + static_cast<int>(a) - fm.offset(vm[a]);
    const int n = fn.total_dim() + fm.total_dim();
    FqMatrix skeleton(n, n, q);
    for (int i = 0; i < fn.total_dim(); ++i) {
      for (int j = 0; j < fn.total_dim(); ++j) skeleton.set(new_n[i], new_n[j], fn.x()(i, j));
    }
    for (int i = 0; i < fm.total_dim(); ++i) {
      for (int j = 0; j < fm.total_dim(); ++j) skeleton.set(new_m[i], new_m[j], fm.x()(i, j));
    }

    std::map<CyclicIsoClass, long> ext_count;
    std::vector<int> digits(complement.size(), 0);
    while (true) {
      FqMatrix x = skeleton;
      for (size_t k = 0; k < complement.size(); ++k) {
        auto [b, a] = hc.c1[complement[k]];
        x.set(new_n[b], new_m[a], digits[k]);
      }
      ++ext_count[decompose(FqModule(m, q, dims, x))];
      size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
      if (k == digits.size()) break;
    }

    BigInt denom = aut_order_structural(M, q) * aut_order_structural(N, q) * int_pow(q, hom);
    std::map<CyclicIsoClass, BigInt> out;
    for (const auto& [R, count] : ext_count) {
      BigInt num = BigInt(count) * aut_order_structural(R, q);
      if (num % denom != 0) throw std::logic_error("non-integral Hall number for " + R.to_string());
      out.emplace(R, BigInt(num / denom));
    }
    return out;
  });
}

NumHallElem::NumHallElem(int m, int q) : m_(m), q_(q) {
  if (m < 1) throw std::invalid_argument("vertex count must be positive");
  if (!is_supported_prime(q)) throw std::invalid_argument("unsupported field size q=" + std::to_string(q) + " (use 2, 3 or 5)");
}

NumHallElem NumHallElem::basis(const CyclicIsoClass& cls, int q) {
  NumHallElem x(cls.vertices(), q);
  x.add(cls, 1);
  return x;
}

BigRational NumHallElem::coeff(const CyclicIsoClass& cls) const {
  auto it = terms_.find(cls);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void NumHallElem::add(const CyclicIsoClass& cls, const BigRational& c, long v_exp) {
  if (cls.vertices() != m_) throw std::invalid_argument("class over a different quiver");
  if (c == 0) return;
  int parity = static_cast<int>(((v_exp % 2) + 2) % 2);
  if (!terms_.empty() && parity != v_parity_) {
    throw std::domain_error("terms with odd and even powers of v cannot share one element");
  }
  v_parity_ = parity;
  BigRational value = c * q_power(q_, (v_exp - parity) / 2);
  auto [it, inserted] = terms_.try_emplace(cls, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.empty()) v_parity_ = 0;
}

NumHallElem NumHallElem::scaled(const BigRational& s) const {
  NumHallElem r(m_, q_);
  for (const auto& [k, c] : terms_) r.add(k, c * s, v_parity_);
  return r;
}

NumHallElem& NumHallElem::operator+=(const NumHallElem& o) {
  check_same(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, c, o.v_parity_);
  return *this;
}

NumHallElem& NumHallElem::operator-=(const NumHallElem& o) {
  check_same(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, -c, o.v_parity_);
  return *this;
}

NumHallElem operator*(const NumHallElem& x, const NumHallElem& y) {
  check_same(x, y);
  NumHallElem r(x.vertices(), x.q());
  for (const auto& [M, a] : x.terms()) {
    for (const auto& [N, b] : y.terms()) {
      long twist = euler_form(M.dimension_vector(), N.dimension_vector()) + x.v_parity() + y.v_parity();
      for (const auto& [R, g] : extension_hall_numbers(M, N, x.q())) r.add(R, a * b * BigRational(g), twist);
    }
  }
  return r;
}

void NumHallTensor::add(const ClassPair& key, const BigRational& c, long v_exp) {
  if (c == 0) return;
  int parity = static_cast<int>(((v_exp % 2) + 2) % 2);
  BigRational value = c * q_power(q_, (v_exp - parity) / 2);
  auto [it, inserted] = terms_.try_emplace(key, HalfPower{value, parity});
  if (inserted) return;
  if (it->second.v_exp != parity) throw std::domain_error("mixed powers of v on one tensor term");
  it->second.scalar += value;
  if (it->second.scalar == 0) terms_.erase(it);
}

NumHallTensor& NumHallTensor::operator-=(const NumHallTensor& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c.scalar, c.v_exp);
  return *this;
}

NumHallTensor coproduct_numeric(const NumHallElem& x) {
  NumHallTensor t(x.vertices(), x.q());
  const int q = x.q();
  for (const auto& [R, c] : x.terms()) {
    BigInt a_r = aut_order_structural(R, q);
    for (const auto& [key, g] : submodule_census(R, q)) {
      const auto& [N, M] = key;
      BigRational coef = c * BigRational(g) * BigRational(aut_order_structural(M, q) * aut_order_structural(N, q)) / BigRational(a_r);
      t.add({M, N}, coef, x.v_parity() + euler_form(M.dimension_vector(), N.dimension_vector()));
    }
  }
  return t;
}

BigRational counit_numeric(const NumHallElem& x) { return x.coeff(CyclicIsoClass(x.vertices())); }

bool is_primitive_numeric(const NumHallElem& x) {
  if (counit_numeric(x) != 0) return false;
  NumHallTensor diff = coproduct_numeric(x);
  NumHallTensor expected(x.vertices(), x.q());
  CyclicIsoClass zero(x.vertices());
  for (const auto& [M, c] : x.terms()) {
    expected.add({M, zero}, c, x.v_parity());
    expected.add({zero, M}, c, x.v_parity());
  }
  diff -= expected;
  return diff.is_zero();
}

std::optional<CyclicIsoClass> centrality_witness(const NumHallElem& x, int dim_cap) {
  for (const auto& M : enumerate_iso_up_to(x.vertices(), dim_cap)) {
    NumHallElem b = NumHallElem::basis(M, x.q());
    if (!(x * b == b * x)) return M;
  }
  return std::nullopt;
}

bool is_central(const NumHallElem& x, int dim_cap) { return !centrality_witness(x, dim_cap).has_value(); }

std::string to_string(ZSign s) {
  return s == ZSign::vertex_power ? "(-q^{-1})^{rm}" : "(-1)^r q^{-rm}";
}

NumHallElem z_r_numeric(int m, int r, int q, ZSign sign) {
  if (r < 1) throw std::invalid_argument("z_r needs r >= 1");
  if (r * m > kCountDimCap) {
    throw std::invalid_argument("z_r with r*m = " + std::to_string(r * m) + " exceeds the cap " + std::to_string(kCountDimCap));
  }
  long e = static_cast<long>(r) * m;
  BigRational pref = q_power(q, -e);
  if ((sign == ZSign::vertex_power ? e : r) % 2) pref = -pref;
  NumHallElem z(m, q);
  for (const auto& M : enumerate_iso_degree(m, r)) {
    if (!socle_squarefree(M)) continue;
    BigRational c = pref * BigRational(aut_order_structural(M, q));
    if (end_dim(M, q) % 2) c = -c;
    z.add(M, c);
  }
  return z;
}

NumHallElem z_product_numeric(int m, const Partition& lambda, int q, ZSign sign) {
  NumHallElem acc = NumHallElem::basis(CyclicIsoClass(m), q);
  for (int part : lambda.parts()) acc = acc * z_r_numeric(m, part, q, sign);
  return acc;
}

NumHallElem primitive_center_numeric(int m, int n, int q, ZSign sign) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  NumHallElem sum(m, q);
  for (const auto& lambda : partitions_of(n)) {
    int len = lambda.length();
    BigRational c = make_rational(multinomial(len, lambda.multiplicities()), len);
    if (len % 2 == 0) c = -c;
    sum += z_product_numeric(m, lambda, q, sign).scaled(c);
  }
  BigRational pref = BigRational(n) / (BigRational(1) - q_power(q, -static_cast<long>(m) * n));
  return sum.scaled(pref);
}

NumHallElem c_recursion_residual(int m, int r, int q) {
  NumHallElem res = z_r_numeric(m, r, q).scaled(r);
  for (int a = 1; a <= r; ++a) {
    NumHallElem rest = (a == r) ? NumHallElem::basis(CyclicIsoClass(m), q) : z_r_numeric(m, r - a, q);
    BigRational c = BigRational(1) - q_power(q, -static_cast<long>(m) * a);
    res -= (primitive_center_numeric(m, a, q) * rest).scaled(c);
  }
  return res;
}

DisplayMatch match_up_to_sign(const NumHallElem& computed, const NumHallElem& expected) {
  DisplayMatch dm;
  dm.expected = expected;
  if (computed == expected) {
    dm.sign = 1;
    return dm;
  }
  if (computed == expected.scaled(-1)) {
    dm.sign = -1;
    return dm;
  }
  if (computed.v_parity() != expected.v_parity()) dm.differences.push_back("powers of v differ in parity");
  std::map<CyclicIsoClass, int> support;
  for (const auto& [k, c] : computed.terms()) support[k] = 1;
  for (const auto& [k, c] : expected.terms()) support[k] = 1;
  for (const auto& [k, unused] : support) {
    BigRational a = computed.coeff(k);
    BigRational b = expected.coeff(k);
    if (a == b) continue;
    dm.differences.push_back(k.summands_string() + ": computed " + to_string(a) + ", displayed " + to_string(b));
  }
  return dm;
}

NumHallElem two_vertex_z_defining(int n, int q) {
  BigRational pref = q_power(q, -2L * n);
  if (n % 2) pref = -pref;
  NumHallElem z(2, q);
  for (const auto& M : enumerate_iso_degree(2, n)) {
    if (!socle_squarefree(M)) continue;
    BigRational c = pref * BigRational(count_automorphisms(M, q));
    if (end_dim(M, q) % 2) c = -c;
    z.add(M, c);
  }
  return z;
}

NumHallElem two_vertex_z_closed_form(int n, int q) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  BigRational one_minus = BigRational(1) - q_power(q, -1);
  BigRational pref = q_power(q, -n) * one_minus * one_minus;
  if (n % 2) pref = -pref;
  auto pair_class = [](int l1, int l0) {
    std::vector<StringModule> s;
    if (l1 > 0) s.push_back({1, l1});
    if (l0 > 0) s.push_back({0, l0});
    return CyclicIsoClass(2, s);
  };
  NumHallElem z(2, q);
  for (int a = 1; a <= n; ++a) {
    z.add(pair_class(2 * a, 2 * (n - a)), pref);
    z.add(pair_class(2 * a - 1, 2 * (n - a) + 1), -pref * q);
  }
  return z;
}

TwoVertexZReport compare_two_vertex_z(int n, int q) {
  TwoVertexZReport rep;
  rep.n = n;
  rep.q = q;
  rep.computed = z_r_numeric(2, n, q, ZSign::vertex_power);
  rep.defining = match_up_to_sign(rep.computed, two_vertex_z_defining(n, q));
  rep.closed_form = match_up_to_sign(rep.computed, two_vertex_z_closed_form(n, q));
  rep.closed_form_central = is_central(rep.closed_form.expected, 4);
  return rep;
}

namespace {

std::string join_terms(const std::vector<std::pair<BigRational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, label] : terms) {
    BigRational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += to_string(a) + "*";
    out += label;
    first = false;
  }
  return out;
}

std::string brace(const CyclicIsoClass& c) { return "{" + c.summands_string() + "}"; }

}  // namespace

std::string to_string(const NumHallElem& x) {
  std::vector<std::pair<BigRational, std::string>> terms;
  for (const auto& [k, c] : x.terms()) terms.emplace_back(c, brace(k));
  std::string body = join_terms(terms);
  if (x.v_parity() == 1) return "v*(" + body + ")";
  return body;
}

std::string to_string(const NumHallTensor& x) {
  std::vector<std::pair<BigRational, std::string>> terms;
  for (const auto& [k, c] : x.terms()) {
    std::string label = brace(k.first) + "(x)" + brace(k.second);
    if (c.v_exp == 1) label = "v*" + label;
    terms.emplace_back(c.scalar, label);
  }
  return join_terms(terms);
}

}  // namespace hallprim
