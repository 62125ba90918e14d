#pragma once

// Small random generators for property tests. Every test seeds its own engine so
// failures reproduce.

#include "hallprim/cyclic_hall.hpp"
#include "hallprim/cyclic_module.hpp"
#include "hallprim/partition.hpp"
#include "hallprim/ratfunc.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace testgen {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline hallprim::BigRational small_rational(std::mt19937& rng) {
  hallprim::BigRational r(uniform(rng, -9, 9), uniform(rng, 1, 6));
  r.canonicalize();
  return r;
}

inline hallprim::Poly small_poly(std::mt19937& rng, int max_degree) {
  std::vector<hallprim::BigRational> c(uniform(rng, 1, max_degree + 1));
  for (auto& x : c) x = small_rational(rng);
  return hallprim::Poly(c);
}

inline hallprim::Poly nonzero_poly(std::mt19937& rng, int max_degree) {
  hallprim::Poly p;
  do {
    p = small_poly(rng, max_degree);
  } while (p.is_zero());
  return p;
}

inline hallprim::RatFunc small_ratfunc(std::mt19937& rng, hallprim::Var var) {
  return hallprim::RatFunc(small_poly(rng, 3), nonzero_poly(rng, 2), var);
}

/// Uniform over partitions of a weight drawn from [lo, hi].
inline hallprim::Partition partition(std::mt19937& rng, int lo, int hi) {
  auto all = hallprim::partitions_of(uniform(rng, lo, hi));
  return all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
}

inline hallprim::CyclicIsoClass cyclic_class(std::mt19937& rng, int m, int max_dim) {
  auto all = hallprim::enumerate_iso_up_to(m, max_dim);
  return all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
}

}  // namespace testgen

namespace hallprim {

inline void PrintTo(const NumHallElem& x, std::ostream* os) { *os << to_string(x); }
inline void PrintTo(const CyclicIsoClass& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace hallprim
