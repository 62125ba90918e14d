#pragma once

#include "hallprim/fq_matrix.hpp"
#include "hallprim/partition.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace hallprim {

/// Largest total dimension realize() accepts unless a caller passes its own cap.
inline constexpr int kRealizeDimCap = 8;

/// The string module I_[top;length] of the cyclic quiver with m vertices: basis
/// e_{top+1-length}, ..., e_top with e_j at vertex j mod m and x(e_j) = e_{j-1}.
struct StringModule {
  int top = 0;
  int length = 1;
  friend bool operator==(const StringModule&, const StringModule&) = default;
};

/// Vertex of the one-dimensional socle of a string, (top + 1 - length) mod m.
int socle_vertex(const StringModule& s, int m);

/// Iso class of a nilpotent representation of the cyclic quiver: a multiset of
/// strings. Summands are kept sorted by length, then top, both descending.
class CyclicIsoClass {
 public:
  explicit CyclicIsoClass(int m = 1);
  CyclicIsoClass(int m, std::vector<StringModule> summands);
  /// Jordan quiver (m = 1): the partition lists the string lengths.
  static CyclicIsoClass from_partition(const Partition& lambda);
  /// Accepts "m=2: [1;2]+[0;1]", or "[1;2]+[0;1]" / "0" when m > 0 is given,
  /// or a partition such as "2,1" when m = 1. Throws std::invalid_argument.
  static CyclicIsoClass parse(const std::string& text, int m = 0);

  int vertices() const { return m_; }
  const std::vector<StringModule>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  std::vector<int> dimension_vector() const;
  int dimension() const;
  /// Only for m = 1.
  std::optional<Partition> to_partition() const;
  CyclicIsoClass direct_sum(const CyclicIsoClass& other) const;

  /// "m=2: [1;2]+[0;1]"; the zero module is "m=2: 0".
  std::string to_string() const;
  /// The part after "m=..: ".
  std::string summands_string() const;

  friend bool operator==(const CyclicIsoClass&, const CyclicIsoClass&) = default;
  /// Vertex count, total dimension, dimension vector, then summands.
  friend std::strong_ordering operator<=>(const CyclicIsoClass& a, const CyclicIsoClass& b);

 private:
  int m_;
  std::vector<StringModule> summands_;
};

std::vector<int> dimension_vector(const StringModule& s, int m);

/// True iff no two summands have their socle at the same vertex.
bool socle_squarefree(const CyclicIsoClass& cls);

/// Additive Euler form sum_h d_h e_h - sum_h d_h e_{h-1} for the arrows h -> h-1.
long euler_form(const std::vector<int>& d, const std::vector<int>& e);

/// All iso classes with dimension vector d (d.size() is the vertex count).
std::vector<CyclicIsoClass> enumerate_iso(const std::vector<int>& d);
/// All iso classes of dimension vector r * (1, ..., 1).
std::vector<CyclicIsoClass> enumerate_iso_degree(int m, int r);
/// All iso classes of total dimension at most max_dim, the zero module included.
std::vector<CyclicIsoClass> enumerate_iso_up_to(int m, int max_dim);

/// Explicit representation over F_q. The basis of the total space is grouped by
/// vertex (all of V_0, then V_1, ...); x is the total matrix acting on columns and
/// maps V_h into V_{h-1}.
class FqModule {
 public:
  /// Throws std::invalid_argument if x has entries outside the arrow blocks or is
  /// not nilpotent.
  FqModule(int m, int q, std::vector<int> dims, FqMatrix x);

  int vertices() const { return static_cast<int>(dims_.size()); }
  int q() const { return x_.prime(); }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return x_.rows(); }
  int offset(int h) const { return offsets_[h]; }
  const FqMatrix& x() const { return x_; }
  /// The arrow V_h -> V_{h-1} as a dims[h-1] x dims[h] matrix.
  FqMatrix arrow(int h) const;
  /// Vertex of each basis vector of the total space.
  std::vector<int> vertex_of_basis() const;

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  FqMatrix x_;
};

/// Block-direct sum of string modules. Throws std::invalid_argument when the
/// total dimension exceeds dim_cap.
FqModule realize(const CyclicIsoClass& cls, int q, int dim_cap = kRealizeDimCap);

/// Recovers the string multiset from ranks of powers of x: the number of strings
/// with top h and length at least k is rank(x^{k-1}|V_h) - rank(x^k|V_{h+1}).
CyclicIsoClass decompose(const FqModule& module);

}  // namespace hallprim
