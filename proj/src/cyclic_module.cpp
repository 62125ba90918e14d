#include "hallprim/cyclic_module.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hallprim {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool summand_before(const StringModule& a, const StringModule& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.top > b.top;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad_class(const std::string& text, const std::string& why) {
  throw std::invalid_argument("cannot parse iso class '" + text + "': " + why +
                              " (expected e.g. 'm=2: [1;2]+[0;1]', '[1;2]+[0;1]' with --m, '2,1' for m=1, or '0')");
}

int parse_int(const std::string& s, const std::string& text) {
  std::string t = trim(s);
  if (t.empty()) bad_class(text, "missing integer");
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    bad_class(text, "'" + t + "' is not an integer");
  }
  if (pos != t.size()) bad_class(text, "'" + t + "' is not an integer");
  return v;
}

}  // namespace

int socle_vertex(const StringModule& s, int m) { return mod(s.top + 1 - s.length, m); }

std::vector<int> dimension_vector(const StringModule& s, int m) {
  std::vector<int> d(m, 0);
  for (int j = s.top + 1 - s.length; j <= s.top; ++j) ++d[mod(j, m)];
  return d;
}

CyclicIsoClass::CyclicIsoClass(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("vertex count must be positive");
}

CyclicIsoClass::CyclicIsoClass(int m, std::vector<StringModule> summands) : m_(m), summands_(std::move(summands)) {
  if (m < 1) throw std::invalid_argument("vertex count must be positive");
  for (const auto& s : summands_) {
    if (s.top < 0 || s.top >= m) {
      throw std::invalid_argument("string top " + std::to_string(s.top) + " is not a vertex of the " + std::to_string(m) + "-cycle");
    }
    if (s.length < 1) throw std::invalid_argument("string length must be positive");
  }
  std::sort(summands_.begin(), summands_.end(), summand_before);
}

CyclicIsoClass CyclicIsoClass::from_partition(const Partition& lambda) {
  std::vector<StringModule> s;
  for (int part : lambda.parts()) s.push_back({0, part});
  return CyclicIsoClass(1, std::move(s));
}

CyclicIsoClass CyclicIsoClass::parse(const std::string& text, int m) {
  std::string body = trim(text);
  if (body.rfind("m=", 0) == 0) {
    size_t colon = body.find(':');
    if (colon == std::string::npos) bad_class(text, "missing ':' after the vertex count");
    int given = parse_int(body.substr(2, colon - 2), text);
    if (given < 1) bad_class(text, "vertex count must be positive");
    if (m > 0 && m != given) bad_class(text, "vertex count disagrees with m=" + std::to_string(m));
    m = given;
    body = trim(body.substr(colon + 1));
  }
  if (m < 1) bad_class(text, "vertex count unknown");
  if (body.empty() || body == "0") return CyclicIsoClass(m);
  if (body.find('[') == std::string::npos) {
    if (m != 1) bad_class(text, "partition syntax is only valid for m=1");
    try {
      return from_partition(Partition::parse(body));
    } catch (const std::invalid_argument&) {
      bad_class(text, "not a partition");
    }
  }
  std::vector<StringModule> summands;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok = trim(tok);
    if (tok.size() < 5 || tok.front() != '[' || tok.back() != ']') bad_class(text, "summand '" + tok + "' is not of the form [i;l]");
    std::string inner = tok.substr(1, tok.size() - 2);
    size_t semi = inner.find(';');
    if (semi == std::string::npos) bad_class(text, "summand '" + tok + "' is not of the form [i;l]");
    int top = parse_int(inner.substr(0, semi), text);
    int length = parse_int(inner.substr(semi + 1), text);
    if (top < 0 || top >= m) bad_class(text, "vertex " + std::to_string(top) + " out of range 0.." + std::to_string(m - 1));
    if (length < 1) bad_class(text, "string length must be positive");
    summands.push_back({top, length});
  }
  return CyclicIsoClass(m, std::move(summands));
}

std::vector<int> CyclicIsoClass::dimension_vector() const {
  std::vector<int> d(m_, 0);
  for (const auto& s : summands_) {
    auto e = hallprim::dimension_vector(s, m_);
    for (int h = 0; h < m_; ++h) d[h] += e[h];
  }
  return d;
}

int CyclicIsoClass::dimension() const {
  int n = 0;
  for (const auto& s : summands_) n += s.length;
  return n;
}

std::optional<Partition> CyclicIsoClass::to_partition() const {
  if (m_ != 1) return std::nullopt;
  std::vector<int> parts;
  for (const auto& s : summands_) parts.push_back(s.length);
  return Partition(parts);
}

CyclicIsoClass CyclicIsoClass::direct_sum(const CyclicIsoClass& other) const {
  if (other.m_ != m_) throw std::invalid_argument("direct sum of classes with different vertex counts");
  auto s = summands_;
  s.insert(s.end(), other.summands_.begin(), other.summands_.end());
  return CyclicIsoClass(m_, std::move(s));
}

std::string CyclicIsoClass::summands_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += "+";
    out += "[" + std::to_string(summands_[i].top) + ";" + std::to_string(summands_[i].length) + "]";
  }
  return out;
}

std::string CyclicIsoClass::to_string() const { return "m=" + std::to_string(m_) + ": " + summands_string(); }

std::strong_ordering operator<=>(const CyclicIsoClass& a, const CyclicIsoClass& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
  if (auto c = a.dimension_vector() <=> b.dimension_vector(); c != 0) return c;
  size_t n = std::min(a.summands_.size(), b.summands_.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& x = a.summands_[i];
    const auto& y = b.summands_[i];
    if (x == y) continue;
    return summand_before(x, y) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.summands_.size() <=> b.summands_.size();
}

bool socle_squarefree(const CyclicIsoClass& cls) {
  std::vector<bool> seen(cls.vertices(), false);
  for (const auto& s : cls.summands()) {
    int v = socle_vertex(s, cls.vertices());
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

long euler_form(const std::vector<int>& d, const std::vector<int>& e) {
  if (d.size() != e.size() || d.empty()) throw std::invalid_argument("dimension vectors of different lengths");
  const int m = static_cast<int>(d.size());
  long s = 0;
  for (int h = 0; h < m; ++h) s += static_cast<long>(d[h]) * e[h] - static_cast<long>(d[h]) * e[mod(h - 1, m)];
  return s;
}

namespace {

std::vector<StringModule> strings_up_to(int m, int max_len) {
  std::vector<StringModule> out;
  for (int l = 1; l <= max_len; ++l) {
    for (int i = 0; i < m; ++i) out.push_back({i, l});
  }
  return out;
}

}  // namespace

std::vector<CyclicIsoClass> enumerate_iso(const std::vector<int>& d) {
  const int m = static_cast<int>(d.size());
  if (m < 1) throw std::invalid_argument("empty dimension vector");
  for (int x : d) {
    if (x < 0) throw std::invalid_argument("negative dimension");
  }
  const int total = std::accumulate(d.begin(), d.end(), 0);
  auto strings = strings_up_to(m, total);
  std::vector<std::vector<int>> dims;
  for (const auto& s : strings) dims.push_back(dimension_vector(s, m));
  std::vector<CyclicIsoClass> out;
  std::vector<StringModule> cur;
  std::vector<int> rest = d;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
      out.emplace_back(m, cur);
      return;
    }
    for (size_t k = start; k < strings.size(); ++k) {
      bool fits = true;
      for (int h = 0; h < m; ++h) fits = fits && dims[k][h] <= rest[h];
      if (!fits) continue;
      for (int h = 0; h < m; ++h) rest[h] -= dims[k][h];
      cur.push_back(strings[k]);
      rec(k);
      cur.pop_back();
      for (int h = 0; h < m; ++h) rest[h] += dims[k][h];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicIsoClass> enumerate_iso_degree(int m, int r) {
  if (m < 1 || r < 0) throw std::invalid_argument("need m >= 1 and r >= 0");
  return enumerate_iso(std::vector<int>(m, r));
}

std::vector<CyclicIsoClass> enumerate_iso_up_to(int m, int max_dim) {
  if (m < 1) throw std::invalid_argument("vertex count must be positive");
  auto strings = strings_up_to(m, max_dim);
  std::vector<CyclicIsoClass> out;
  std::vector<StringModule> cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    out.emplace_back(m, cur);
    for (size_t k = start; k < strings.size(); ++k) {
      if (strings[k].length > left) continue;
      cur.push_back(strings[k]);
      rec(k, left - strings[k].length);
      cur.pop_back();
    }
  };
  rec(0, max_dim);
  std::sort(out.begin(), out.end());
  return out;
}

FqModule::FqModule(int m, int q, std::vector<int> dims, FqMatrix x) : dims_(std::move(dims)), x_(std::move(x)) {
  if (m < 1 || static_cast<int>(dims_.size()) != m) throw std::invalid_argument("need one dimension per vertex");
  if (x_.prime() != q) throw std::invalid_argument("matrix field does not match q");
  offsets_.assign(m + 1, 0);
  for (int h = 0; h < m; ++h) {
    if (dims_[h] < 0) throw std::invalid_argument("negative dimension");
    offsets_[h + 1] = offsets_[h] + dims_[h];
  }
  const int n = offsets_[m];
  if (x_.rows() != n || x_.cols() != n) throw std::invalid_argument("matrix size does not match the dimension vector");
  auto vert = vertex_of_basis();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (x_(i, j) != 0 && vert[i] != mod(vert[j] - 1, m)) {
        throw std::invalid_argument("matrix entry outside the arrow blocks V_h -> V_{h-1}");
      }
    }
  }
  FqMatrix power = FqMatrix::identity(n, q);
  for (int k = 0; k < n; ++k) power = power * x_;
  if (!power.is_zero()) throw std::invalid_argument("representation is not nilpotent");
}

FqMatrix FqModule::arrow(int h) const {
  const int m = vertices();
  int t = mod(h - 1, m);
  return x_.block(offsets_[t], dims_[t], offsets_[h], dims_[h]);
}

std::vector<int> FqModule::vertex_of_basis() const {
  std::vector<int> v;
  for (int h = 0; h < vertices(); ++h) v.insert(v.end(), dims_[h], h);
  return v;
}

FqModule realize(const CyclicIsoClass& cls, int q, int dim_cap) {
  const int m = cls.vertices();
  const int n = cls.dimension();
  if (n > dim_cap) {
    throw std::invalid_argument("total dimension " + std::to_string(n) + " exceeds the realization cap " + std::to_string(dim_cap));
  }
  auto dims = cls.dimension_vector();
  std::vector<int> next(m, 0);
  std::vector<int> offsets(m, 0);
  for (int h = 1; h < m; ++h) offsets[h] = offsets[h - 1] + dims[h - 1];
  FqMatrix x(n, n, q);
  for (const auto& s : cls.summands()) {
    // Global index of e_j for j = bottom .. top.
    std::vector<int> idx;
    for (int j = s.top + 1 - s.length; j <= s.top; ++j) {
      int h = mod(j, m);
      idx.push_back(offsets[h] + next[h]++);
    }
    for (size_t k = 1; k < idx.size(); ++k) x.set(idx[k - 1], idx[k], 1);
  }
  return FqModule(m, q, dims, x);
}

CyclicIsoClass decompose(const FqModule& module) {
  const int m = module.vertices();
  const int n = module.total_dim();
  const int q = module.q();
  // rk[k][h] = rank of x^k restricted to V_h, for k = 0 .. n+1.
  std::vector<std::vector<int>> rk(n + 2, std::vector<int>(m, 0));
  FqMatrix power = FqMatrix::identity(n, q);
  for (int k = 0; k <= n + 1; ++k) {
    for (int h = 0; h < m; ++h) {
      rk[k][h] = (k == 0) ? module.dims()[h] : rank(power.block(0, n, module.offset(h), module.dims()[h]));
    }
    if (k == 0 || !power.is_zero()) power = power * module.x();
  }
  auto at_least = [&](int h, int k) { return rk[k - 1][h] - rk[k][mod(h + 1, m)]; };
  std::vector<StringModule> summands;
  for (int h = 0; h < m; ++h) {
    for (int l = 1; l <= n; ++l) {
      int count = at_least(h, l) - at_least(h, l + 1);
      if (count < 0) throw std::logic_error("inconsistent rank data in decompose");
      for (int c = 0; c < count; ++c) summands.push_back({h, l});
    }
  }
  CyclicIsoClass cls(m, std::move(summands));
  if (cls.dimension() != n) throw std::logic_error("decompose did not account for every basis vector");
  return cls;
}

}  // namespace hallprim
