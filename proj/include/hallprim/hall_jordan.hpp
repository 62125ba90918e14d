#pragma once

#include "hallprim/combination.hpp"
#include "hallprim/partition.hpp"
#include "hallprim/symfunc.hpp"

#include <string>
#include <tuple>
#include <utility>

namespace hallprim {

struct HallTag {
  static constexpr Var var = Var::q;
};
struct HallTensorTag {
  static constexpr Var var = Var::q;
};
struct HallTripleTag {
  static constexpr Var var = Var::q;
};

/// Element of the Hall algebra of nilpotent Jordan-quiver representations:
/// key lambda stands for the iso class [I_lambda]; the empty partition is the unit [0].
using HallElem = Combination<Partition, HallTag>;
using HallTensor = Combination<std::pair<Partition, Partition>, HallTensorTag>;
using HallTriple = Combination<std::tuple<Partition, Partition, Partition>, HallTripleTag>;

HallElem iso_class(const Partition& lambda);

/// Number of submodules N of I_lambda with N ~ I_nu and I_lambda/N ~ I_mu, as a
/// polynomial in q. Zero unless |mu| + |nu| = |lambda|. Throws std::logic_error
/// if the Hall-Littlewood route yields a non-integral polynomial.
RatFunc hall_polynomial(const Partition& mu, const Partition& nu, const Partition& lambda);

/// |Aut(I_lambda)| = q^{|lambda| + 2 n(lambda)} prod_i phi_{m_i}(q^{-1}).
RatFunc aut_order(const Partition& lambda);

/// [I_mu][I_nu] = sum_lambda g^lambda_{mu nu}(q) [I_lambda]; the Euler twist is 1.
HallElem operator*(const HallElem& x, const HallElem& y);
HallTensor operator*(const HallTensor& x, const HallTensor& y);

/// Green's coproduct: [I_lambda] -> sum g^lambda_{mu nu} a_mu a_nu / a_lambda [I_mu] (x) [I_nu].
HallTensor coproduct(const HallElem& x);
RatFunc counit(const HallElem& x);
HallTriple coproduct_left(const HallTensor& x);   // (Delta (x) id)
HallTriple coproduct_right(const HallTensor& x);  // (id (x) Delta)

/// Transport from Lambda[t]: t -> q^{-1}, t^{n(lambda)} P_lambda -> [I_lambda].
HallElem phi(const SymFunc& x);
HallElem phi(const CExpr& x);

/// z_r = (1 - q^{-1}) [I_(r)].
HallElem z_generator(int r);

/// n/(1 - q^{-mn}) sum_{lambda |- n} (-1)^{l+1} (1/l) multinomial z_lambda, for the
/// Jordan quiver (m = 1 only).
HallElem primitive_center(int n, int vertices = 1);

/// sum_{lambda |- n} prod_{j=1}^{l-1} (1 - q^j) [I_lambda].
HallElem primitive_macdonald_image(int n);

/// coproduct(x) == x (x) [0] + [0] (x) x, exactly.
bool is_primitive(const HallElem& x);

struct HallIdentityCheck {
  RatFunc lhs{Var::q};
  RatFunc rhs{Var::q};
  bool holds = false;
};

/// Both sides of the Hall-number identity for lambda |- n.
HallIdentityCheck verify_hall_identity(int n, const Partition& lambda);

std::string to_string(const HallElem& x);
std::string to_string(const HallTensor& x);
std::string to_latex(const HallElem& x);

}  // namespace hallprim
