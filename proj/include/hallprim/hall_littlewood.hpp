#pragma once

#include "hallprim/partition.hpp"
#include "hallprim/symfunc.hpp"

#include <map>

namespace hallprim {

/// Degree cap applied to every Hall-Littlewood computation unless overridden.
inline constexpr int kDefaultDegreeCap = 10;

/// m_lambda in the p-basis (rational coefficients, embedded in Q(t)).
SymFunc monomial_in_p(const Partition& lambda);

/// Coefficients of x in the monomial basis, per partition.
std::map<Partition, RatFunc> to_monomial_basis(const SymFunc& x);

/// Hall-Littlewood P_lambda(X;t) in the p-basis, obtained by Gram-Schmidt on
/// the monomial basis in increasing dominance order under the t-inner product.
/// Throws std::invalid_argument when |lambda| exceeds degree_cap.
SymFunc hall_littlewood_P(const Partition& lambda, int degree_cap = kDefaultDegreeCap);

/// P_lambda in the monomial basis (unitriangular by construction of the family).
std::map<Partition, RatFunc> hall_littlewood_P_monomial(const Partition& lambda,
                                                         int degree_cap = kDefaultDegreeCap);

/// Coefficients a_lambda with x = sum a_lambda P_lambda.
std::map<Partition, RatFunc> expand_in_P(const SymFunc& x, int degree_cap = kDefaultDegreeCap);

/// sum_{lambda |- n} t^{n(lambda)} prod_{i=1}^{l-1} (1 - t^{-i}) P_lambda, in the p-basis.
SymFunc macdonald_primitive(int n, int degree_cap = kDefaultDegreeCap);

}  // namespace hallprim
