#pragma once

#include "hallprim/combination.hpp"
#include "hallprim/partition.hpp"
#include "hallprim/ratfunc.hpp"

#include <string>
#include <utility>

namespace hallprim {

struct PowerSumTag {
  static constexpr Var var = Var::t;
};
struct CyclicTag {
  static constexpr Var var = Var::t;
};
struct PowerSumTensorTag {
  static constexpr Var var = Var::t;
};

/// Element of Lambda[t] in the power-sum basis: key lambda stands for p_lambda.
using SymFunc = Combination<Partition, PowerSumTag>;
/// Element of Lambda[t] in the cyclic basis: key lambda stands for c_lambda.
using CExpr = Combination<Partition, CyclicTag>;
/// Element of Lambda[t] (x) Lambda[t] in the basis p_lambda (x) p_mu.
using SymTensor = Combination<std::pair<Partition, Partition>, PowerSumTensorTag>;

SymFunc power_sum(const Partition& lambda);
SymFunc sym_constant(const RatFunc& c);

/// Products concatenate basis indices in both the p- and c-bases.
SymFunc operator*(const SymFunc& a, const SymFunc& b);
CExpr operator*(const CExpr& a, const CExpr& b);
/// Untwisted product on the tensor square.
SymTensor operator*(const SymTensor& a, const SymTensor& b);

/// c_n(X;t) in the p-basis, from n c_n = sum_a (1 - t^a) p_a c_{n-a}. Memoized.
SymFunc c_in_p(int n);

/// p_n in the c-basis by the closed partition sum.
CExpr p_from_c_closed(int n);
/// p_n in the c-basis by summing directly over compositions of n.
CExpr p_from_c_compositions(int n);
/// p_n in the c-basis by collecting compositions into multiplicity classes
/// with composition_count_g.
CExpr p_from_c_collected(int n);

SymFunc cexpr_to_p(const CExpr& x);
CExpr p_to_cexpr(const SymFunc& x);

/// h_n = sum_{lambda |- n} p_lambda / zee(lambda).
SymFunc h_in_p(int n);

SymTensor coproduct(const SymFunc& x);
RatFunc counit(const SymFunc& x);
SymFunc antipode(const SymFunc& x);
/// (epsilon (x) id) applied to a tensor.
SymFunc counit_left(const SymTensor& x);
SymFunc counit_right(const SymTensor& x);

/// <p_lambda, p_mu>_t = delta * zee(lambda) * prod_i 1/(1 - t^{lambda_i}).
RatFunc hall_inner_product(const SymFunc& a, const SymFunc& b);

/// Homogeneous component of degree d.
template <class Key, class Tag>
Combination<Key, Tag> degree_part(const Combination<Key, Tag>& x, int d) {
  Combination<Key, Tag> r;
  for (const auto& [k, c] : x)
    if (k.weight() == d) r.add(k, c);
  return r;
}

/// Sets t to a rational value in every coefficient.
SymFunc specialize_t(const SymFunc& x, const BigRational& value);

std::string to_string(const SymFunc& x);
std::string to_string(const CExpr& x);
std::string to_string(const SymTensor& x);
std::string to_latex(const SymFunc& x);
std::string to_latex(const CExpr& x);

}  // namespace hallprim
