#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hallprim {

/// Dense matrix over the prime field F_p; only p in {2, 3, 5} is accepted.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols, int p);
  static FqMatrix identity(int n, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int prime() const { return p_; }

  int operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  /// Stores value mod p (negative values allowed).
  void set(int i, int j, int value);

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  bool is_zero() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  FqMatrix block(int r0, int nr, int c0, int nc) const;
  FqMatrix transposed() const;
  /// Rows of this followed by rows of o; column counts must agree.
  FqMatrix stacked(const FqMatrix& o) const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<std::uint8_t> data_;
};

int inverse_mod(int a, int p);
bool is_supported_prime(int p);

/// Reduced row echelon form of the row space: nonzero rows only, with pivot columns.
struct Echelon {
  FqMatrix rows;
  std::vector<int> pivots;
  int dim() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(const FqMatrix& m);
int rank(const FqMatrix& m);

/// Coordinates of v (a row vector of length cols) in the echelon basis, or
/// nullopt when v is not in the row space.
std::optional<std::vector<int>> coordinates_in(const Echelon& e, const std::vector<int>& v);

/// Every k-dimensional subspace of F_p^n exactly once, as its reduced echelon basis.
/// The list is memoized per (n, k, p).
const std::vector<Echelon>& subspaces(int n, int k, int p);

/// Number of k-dimensional subspaces of F_p^n (Gaussian binomial).
long long gaussian_binomial(int n, int k, int p);

}  // namespace hallprim
