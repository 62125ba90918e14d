#include "hallprim/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hallprim {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty() || s == "0") return {};
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed partition '" + text + "'; expected e.g. 2,1,1");
    }
    parts.push_back(std::stoi(item));
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("malformed partition '" + text + "': " + e.what());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) ++m[p - 1];
  return m;
}

int Partition::n_stat() const {
  int n = 0;
  for (size_t i = 0; i < parts_.size(); ++i) n += static_cast<int>(i) * parts_[i];
  return n;
}

BigInt Partition::zee() const {
  BigInt z = 1;
  const auto m = multiplicities();
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), i + 1, m[i]);
    z *= p * factorial(m[i]);
  }
  return z;
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(merged),
             std::greater<>());
  Partition r;
  r.parts_ = std::move(merged);
  return r;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  // Reverse lexicographic within a weight: larger leading parts come first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

bool dominates(const Partition& lambda, const Partition& mu) {
  int sl = 0, sm = 0;
  const size_t n = std::max(lambda.parts().size(), mu.parts().size());
  for (size_t i = 0; i < n; ++i) {
    sl += i < lambda.parts().size() ? lambda[i] : 0;
    sm += i < mu.parts().size() ? mu[i] : 0;
    if (sl < sm) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

void compositions_rec(int remaining, int slots, Composition& current, std::vector<Composition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int p = 1; p <= remaining - (slots - 1); ++p) {
    current.push_back(p);
    compositions_rec(remaining - p, slots - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of expects n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Composition> compositions_of(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("compositions_of expects 1 <= k <= n");
  std::vector<Composition> out;
  Composition current;
  compositions_rec(n, k, current, out);
  return out;
}

BigInt multinomial(int total, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial parts must be nonnegative");
    sum += p;
  }
  if (sum != total) {
    throw std::invalid_argument("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(total));
  }
  BigInt r = factorial(static_cast<unsigned>(total));
  for (int p : parts) r /= factorial(static_cast<unsigned>(p));
  return r;
}

BigInt composition_count_g(const std::vector<int>& r, int l) {
  if (l < 1 || l > static_cast<int>(r.size()) || r[l - 1] < 1) {
    throw std::invalid_argument("composition_count_g: no tuple can end with part " + std::to_string(l));
  }
  std::vector<int> reduced = r;
  --reduced[l - 1];
  const int k = std::accumulate(reduced.begin(), reduced.end(), 0);
  return multinomial(k, reduced);
}

}  // namespace hallprim
