#pragma once

#include "hallprim/bigrational.hpp"
#include "hallprim/cyclic_module.hpp"
#include "hallprim/halfpower.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hallprim {

/// Largest total dimension for exhaustive submodule enumeration.
inline constexpr int kCountDimCap = 6;
/// Largest |End| for which aut_count enumerates endomorphisms directly.
inline constexpr long kEndEnumerationCap = 1000000;
/// Largest total dimension of a product term computed from extensions.
inline constexpr int kProductDimCap = 10;

using ClassPair = std::pair<CyclicIsoClass, CyclicIsoClass>;

/// Exhaustive census of the arrow-invariant graded subspaces U of R, keyed by
/// (iso class of U, iso class of R/U). Throws std::invalid_argument above kCountDimCap.
const std::map<ClassPair, long>& submodule_census(const CyclicIsoClass& R, int q);

/// Number of submodules U of R with U ~ sub and R/U ~ quot.
long submodule_count(const CyclicIsoClass& R, const CyclicIsoClass& sub, const CyclicIsoClass& quot, int q);

/// Number of arrow-invariant graded subspaces of R, counted without classifying them.
long invariant_subspace_count(const CyclicIsoClass& R, int q);

/// Dimensions of Hom(M, N) and Ext^1(M, N), from the two-term complex
/// C^0 = (+)_h Hom(M_h, N_h) -> C^1 = (+)_h Hom(M_h, N_{h-1}).
struct HomExtDims {
  int hom = 0;
  int ext = 0;
};
HomExtDims hom_ext_dims(const FqModule& M, const FqModule& N);

int end_dim(const CyclicIsoClass& cls, int q);

/// |Aut| by enumerating all endomorphisms; throws std::invalid_argument when
/// q^{dim End} exceeds kEndEnumerationCap.
BigInt aut_count(const CyclicIsoClass& cls, int q);

/// |Aut| by Moebius inversion over the lattice of graded subspaces: an
/// endomorphism is invertible iff its kernel is 0, and the endomorphisms killing a
/// given subspace form a subspace whose dimension is a rank computation.
/// Throws std::invalid_argument above kCountDimCap.
BigInt aut_count_mobius(const CyclicIsoClass& cls, int q);

/// aut_count when it is within its cap, otherwise aut_count_mobius.
BigInt count_automorphisms(const CyclicIsoClass& cls, int q);

/// q^{dim End - sum n_i^2} prod_i |GL_{n_i}(F_q)|, n_i the multiplicities of the
/// distinct strings. Memoized; valid up to kProductDimCap.
BigInt aut_order_structural(const CyclicIsoClass& cls, int q);

/// F^R_{M,N} for every R: the number of submodules of R isomorphic to N with
/// quotient isomorphic to M, obtained from the middle terms of all extensions
/// 0 -> N -> R -> M -> 0 as |Ext(M,N)_R| a_R / (a_M a_N |Hom(M,N)|). Memoized.
const std::map<CyclicIsoClass, BigInt>& extension_hall_numbers(const CyclicIsoClass& M, const CyclicIsoClass& N, int q);

/// Finite combination of iso classes with rational coefficients times a common
/// power of v (v^2 = q). The v-exponent is stored reduced to 0 or 1; even parts are
/// folded into the coefficients.
class NumHallElem {
 public:
  explicit NumHallElem(int m = 1, int q = 2);
  static NumHallElem basis(const CyclicIsoClass& cls, int q);

  int vertices() const { return m_; }
  int q() const { return q_; }
  int v_parity() const { return v_parity_; }
  const std::map<CyclicIsoClass, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coeff(const CyclicIsoClass& cls) const;

  /// Adds c * v^v_exp * [cls]. Throws std::domain_error if the parity of v_exp
  /// differs from the parity already carried by nonzero terms.
  void add(const CyclicIsoClass& cls, const BigRational& c, long v_exp = 0);

  NumHallElem scaled(const BigRational& s) const;
  NumHallElem& operator+=(const NumHallElem& o);
  NumHallElem& operator-=(const NumHallElem& o);
  friend NumHallElem operator+(NumHallElem a, const NumHallElem& b) { return a += b; }
  friend NumHallElem operator-(NumHallElem a, const NumHallElem& b) { return a -= b; }
  friend bool operator==(const NumHallElem&, const NumHallElem&) = default;

 private:
  int m_;
  int q_;
  int v_parity_ = 0;
  std::map<CyclicIsoClass, BigRational> terms_;
};

/// [M][N] = v^{<dim M, dim N>} sum_R F^R_{M,N} [R]. Throws std::invalid_argument
/// when vertex counts or q differ, std::domain_error on mixed v-parities.
NumHallElem operator*(const NumHallElem& x, const NumHallElem& y);

/// Element of H (x) H; each key carries its own reduced v-exponent.
class NumHallTensor {
 public:
  NumHallTensor(int m, int q) : m_(m), q_(q) {}
  int vertices() const { return m_; }
  int q() const { return q_; }
  const std::map<ClassPair, HalfPower>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ClassPair& key, const BigRational& c, long v_exp = 0);
  NumHallTensor& operator-=(const NumHallTensor& o);
  friend bool operator==(const NumHallTensor&, const NumHallTensor&) = default;

 private:
  int m_;
  int q_;
  std::map<ClassPair, HalfPower> terms_;
};

/// Green's coproduct: [R] -> sum v^{<M,N>} F^R_{M,N} a_M a_N / a_R [M] (x) [N],
/// from the direct submodule census of each R.
NumHallTensor coproduct_numeric(const NumHallElem& x);
/// Coefficient of the zero module.
BigRational counit_numeric(const NumHallElem& x);
bool is_primitive_numeric(const NumHallElem& x);

/// A class M of total dimension <= dim_cap with x[M] != [M]x, if any.
std::optional<CyclicIsoClass> centrality_witness(const NumHallElem& x, int dim_cap);
bool is_central(const NumHallElem& x, int dim_cap);

/// Global sign convention for the central generators.
enum class ZSign {
  vertex_power,  // prefactor (-q^{-1})^{r m}
  degree_sign,   // prefactor (-1)^r q^{-r m}
};
std::string to_string(ZSign s);

/// z_r = prefactor * sum over classes M of dimension r(1,...,1) with square-free
/// socle of (-1)^{dim End M} a_M [M].
NumHallElem z_r_numeric(int m, int r, int q, ZSign sign = ZSign::vertex_power);

/// z_lambda = z_{lambda_1} ... z_{lambda_l}; the empty partition gives [0].
NumHallElem z_product_numeric(int m, const Partition& lambda, int q, ZSign sign = ZSign::vertex_power);

/// n/(1 - q^{-mn}) sum_{lambda |- n} (-1)^{l+1} (1/l) multinomial(l; m(lambda)) z_lambda.
NumHallElem primitive_center_numeric(int m, int n, int q, ZSign sign = ZSign::vertex_power);

/// r z_r - sum_{a=1}^r (1 - q^{-ma}) p_a z_{r-a}, with p_a from primitive_center_numeric.
/// Zero exactly when the cyclic recursion survives the substitution t -> q^{-m}.
NumHallElem c_recursion_residual(int m, int r, int q);

/// Comparison of a computed element with a displayed formula, up to a global sign.
struct DisplayMatch {
  NumHallElem expected;
  int sign = 0;  // +1 or -1 when computed = sign * expected, else 0
  std::vector<std::string> differences;
};
DisplayMatch match_up_to_sign(const NumHallElem& computed, const NumHallElem& expected);

/// For the 2-cycle: z_n (vertex_power convention) against the defining sum with
/// prefactor (-1)^n q^{-2n}, and against the case-split closed form
/// (-q^{-1})^n (1-q^{-1})^2 sum_{a=1}^n ([I_[1;2a] + I_[0;2(n-a)]] - q[I_[1;2a-1] + I_[0;2(n-a)+1]]).
struct TwoVertexZReport {
  int n = 0;
  int q = 0;
  NumHallElem computed{2, 2};
  DisplayMatch defining;
  DisplayMatch closed_form;
  bool closed_form_central = false;
};
NumHallElem two_vertex_z_defining(int n, int q);
NumHallElem two_vertex_z_closed_form(int n, int q);
TwoVertexZReport compare_two_vertex_z(int n, int q);

std::string to_string(const NumHallElem& x);
std::string to_string(const NumHallTensor& x);

}  // namespace hallprim
