#include "hallprim/fq_matrix.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hallprim {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5; }

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  throw std::domain_error("0 has no inverse mod " + std::to_string(p));
}

FqMatrix::FqMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  if (!is_supported_prime(p)) throw std::invalid_argument("unsupported field size q=" + std::to_string(p) + " (use 2, 3 or 5)");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, 0);
}

FqMatrix FqMatrix::identity(int n, int p) {
  FqMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FqMatrix::set(int i, int j, int value) {
  int v = value % p_;
  if (v < 0) v += p_;
  data_[static_cast<size_t>(i) * cols_ + j] = static_cast<std::uint8_t>(v);
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix shapes or fields do not match");
  FqMatrix r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.data_[static_cast<size_t>(i) * r.cols_ + j] =
            static_cast<std::uint8_t>((r(i, j) + a * o(k, j)) % p_);
      }
    }
  }
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix shapes or fields do not match");
  FqMatrix r(rows_, cols_, p_);
  for (size_t i = 0; i < data_.size(); ++i) {
    r.data_[i] = static_cast<std::uint8_t>((data_[i] + p_ - o.data_[i]) % p_);
  }
  return r;
}

bool FqMatrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

FqMatrix FqMatrix::block(int r0, int nr, int c0, int nc) const {
  FqMatrix r(nr, nc, p_);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) r.set(i, j, (*this)(r0 + i, c0 + j));
  }
  return r;
}

FqMatrix FqMatrix::transposed() const {
  FqMatrix r(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
  }
  return r;
}

FqMatrix FqMatrix::stacked(const FqMatrix& o) const {
  if (cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix shapes or fields do not match");
  FqMatrix r(rows_ + o.rows_, cols_, p_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + static_cast<long>(data_.size()));
  return r;
}

Echelon rref(const FqMatrix& m) {
  const int p = m.prime();
  std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    int inv = inverse_mod(a[row][col], p);
    for (auto& v : a[row]) v = v * inv % p;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      int f = a[i][col];
      for (int j = 0; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  Echelon e{FqMatrix(row, m.cols(), p), pivots};
  for (int i = 0; i < row; ++i) {
    for (int j = 0; j < m.cols(); ++j) e.rows.set(i, j, a[i][j]);
  }
  return e;
}

int rank(const FqMatrix& m) { return rref(m).dim(); }

std::optional<std::vector<int>> coordinates_in(const Echelon& e, const std::vector<int>& v) {
  const int p = e.rows.prime();
  std::vector<int> coords(e.dim());
  std::vector<int> rest = v;
  for (int i = 0; i < e.dim(); ++i) {
    int c = ((rest[e.pivots[i]] % p) + p) % p;
    coords[i] = c;
    if (c == 0) continue;
    for (int j = 0; j < e.rows.cols(); ++j) rest[j] = ((rest[j] - c * e.rows(i, j)) % p + p) % p;
  }
  for (int x : rest) {
    if (x % p != 0) return std::nullopt;
  }
  return coords;
}

namespace {

void pivot_sets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < n; ++c) {
    cur.push_back(c);
    pivot_sets(n, k, c + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Echelon> build_subspaces(int n, int k, int p) {
  std::vector<Echelon> out;
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  pivot_sets(n, k, 0, cur, sets);
  for (const auto& piv : sets) {
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < k; ++i) {
      for (int j = piv[i] + 1; j < n; ++j) {
        if (!is_pivot[j]) free_cells.emplace_back(i, j);
      }
    }
    std::vector<int> digits(free_cells.size(), 0);
    while (true) {
      FqMatrix rows(k, n, p);
      for (int i = 0; i < k; ++i) rows.set(i, piv[i], 1);
      for (size_t f = 0; f < free_cells.size(); ++f) rows.set(free_cells[f].first, free_cells[f].second, digits[f]);
      out.push_back(Echelon{rows, piv});
      size_t f = 0;
      while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
      if (f == digits.size()) break;
    }
  }
  return out;
}

}  // namespace

const std::vector<Echelon>& subspaces(int n, int k, int p) {
  if (!is_supported_prime(p)) throw std::invalid_argument("unsupported field size q=" + std::to_string(p) + " (use 2, 3 or 5)");
  if (k < 0 || k > n) throw std::invalid_argument("subspace dimension out of range");
  static std::shared_mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Echelon>> cache;
  auto key = std::make_tuple(n, k, p);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = build_subspaces(n, k, p);
  std::unique_lock lock(mu);
  return cache.try_emplace(key, std::move(built)).first->second;
}

long long gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  return gaussian_binomial(n - 1, k - 1, p) + pk * gaussian_binomial(n - 1, k, p);
}

}  // namespace hallprim
