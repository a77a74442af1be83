#include "pleth/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace pleth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view s) {
  std::vector<int> parts;
  bool has_sep = s.find(',') != std::string_view::npos;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) parts.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
      if (!has_sep) flush();
    } else if (c == ',' || c == ' ') {
      flush();
    } else if (c != '[' && c != ']' && c != '(' && c != ')') {
      throw std::invalid_argument("Partition::parse: bad character in '" + std::string(s) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 0; j < parts_[0]; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p > j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> c;
  c.reserve(static_cast<size_t>(size_));
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j) c.emplace_back(i, j);
  return c;
}

int Partition::leg(int i, int j) const {
  int cnt = 0;
  for (int p : parts_)
    if (p > j) ++cnt;
  return cnt - i - 1;
}

std::vector<int> Partition::hooks() const {
  std::vector<int> h;
  for (auto [i, j] : cells()) h.push_back(hook(i, j));
  std::sort(h.begin(), h.end());
  return h;
}

int Partition::n() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[static_cast<size_t>(i)];
  return s;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<size_t>(parts_.empty() ? 1 : parts_[0] + 1), 0);
  for (int p : parts_) ++m[static_cast<size_t>(p)];
  return m;
}

Rational Partition::z() const {
  Rational r(1);
  auto m = multiplicities();
  for (size_t k = 1; k < m.size(); ++k)
    for (int i = 1; i <= m[k]; ++i) r *= Rational(static_cast<int64_t>(k) * i);
  return r;
}

bool Partition::dominated_by(const Partition& o) const {
  if (size_ != o.size_) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), o.length()); ++i) {
    a += (*this)[i];
    b += o[i];
    if (a > b) return false;
  }
  return true;
}

Partition Partition::join(const Partition& o) const {
  std::vector<int> p;
  p.reserve(parts_.size() + o.parts_.size());
  std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(p), std::greater<>());
  return Partition(std::move(p));
}

Partition Partition::scaled(int k) const {
  std::vector<int> p(parts_);
  for (int& x : p) x *= k;
  return Partition(std::move(p));
}

Partition Partition::remove_part(int k) const {
  std::vector<int> p(parts_);
  auto it = std::find(p.begin(), p.end(), k);
  if (it == p.end()) throw std::invalid_argument("remove_part: part not present");
  p.erase(it);
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return b.parts() < a.parts();
}

const std::vector<Partition>& partitions(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
  } else if (n > 0) {
    // Standard reverse-lex successor.
    std::vector<int> a{n};
    while (true) {
      out.emplace_back(a);
      size_t k = a.size();
      int rem = 0;
      while (k > 0 && a[k - 1] == 1) {
        ++rem;
        --k;
      }
      if (k == 0) break;
      int v = a[k - 1] - 1;
      rem += 1;
      a.resize(k - 1);
      a.push_back(v);
      while (rem > v) {
        a.push_back(v);
        rem -= v;
      }
      if (rem > 0) a.push_back(rem);
    }
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : partitions(k)) out.push_back(p);
  return out;
}

long partition_count(int n) {
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
  return p[static_cast<size_t>(n)];
}

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

// Window length: a multiple of r at least the number of parts.
int window(const Partition& p, int r) { return ((p.length() + r - 1) / r + 1) * r; }

}  // namespace

bool is_core(const Partition& p, int r) {
  for (int h : p.hooks())
    if (h % r == 0) return false;
  return true;
}

std::vector<int> core_vector(const Partition& p, int r) {
  int L = window(p, r);
  std::vector<int> c(static_cast<size_t>(r), 0);
  for (int i = 1; i <= L; ++i) ++c[static_cast<size_t>(mod(p[i - 1] - i, r))];
  std::vector<int> n(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) n[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] - L / r;
  return n;
}

Partition core_from_vector(const std::vector<int>& n, int r) {
  if (static_cast<int>(n.size()) != r) throw std::invalid_argument("core_from_vector: wrong length");
  int sum = 0;
  for (int x : n) sum += x;
  if (sum != 0) throw std::invalid_argument("core_from_vector: entries must sum to zero");
  // Beads on runner k occupy all positions <= r(n_k - 1) + k.
  std::vector<int> tops(static_cast<size_t>(r));
  int lo = 0;
  for (int k = 0; k < r; ++k) {
    tops[static_cast<size_t>(k)] = r * (n[static_cast<size_t>(k)] - 1) + k;
    lo = std::min(lo, tops[static_cast<size_t>(k)]);
  }
  std::vector<int> s;
  int start = lo - 2 * r;
  for (int x = std::max(*std::max_element(tops.begin(), tops.end()), 0); x >= start; --x)
    if (x <= tops[static_cast<size_t>(mod(x, r))]) s.push_back(x);
  return from_maya(s);
}

Partition core_of(const Partition& p, int r) { return core_from_vector(core_vector(p, r), r); }

int core_size_from_vector(const std::vector<int>& n, int r) {
  long sq = 0, lin = 0;
  for (int k = 0; k < r; ++k) {
    sq += static_cast<long>(n[static_cast<size_t>(k)]) * n[static_cast<size_t>(k)];
    lin += static_cast<long>(k) * n[static_cast<size_t>(k)];
  }
  return static_cast<int>(r * sq / 2 + lin);
}

std::vector<Partition> cores_up_to(int r, int max_size) {
  // Enumerate sum-zero vectors with bounded entries; |n_k| <= sqrt(2 max/r) + 1.
  int bound = 1;
  while (r * bound * bound <= 2 * max_size + 2 * r * bound) ++bound;
  std::set<Partition, PartitionOrder> out;
  std::vector<int> n(static_cast<size_t>(r), -bound);
  while (true) {
    int sum = 0;
    for (int x : n) sum += x;
    if (sum == 0 && core_size_from_vector(n, r) <= max_size) out.insert(core_from_vector(n, r));
    size_t k = 0;
    while (k < n.size() && n[k] == bound) n[k++] = -bound;
    if (k == n.size()) break;
    ++n[k];
  }
  return {out.begin(), out.end()};
}

std::vector<int> core_v_vector(const Partition& p, int r) {
  if (r % 2 == 0) throw std::invalid_argument("core_v_vector: r must be odd");
  if (!is_core(p, r)) throw std::invalid_argument("core_v_vector: not an r-core");
  auto n = core_vector(p, r);
  int k = (r - 1) / 2;
  for (int i = 0; i < r; ++i) n[static_cast<size_t>(i)] = r * n[static_cast<size_t>(i)] + (i - k);
  return n;
}

Partition core_from_v_vector(const std::vector<int>& v, int r) {
  if (r % 2 == 0) throw std::invalid_argument("core_from_v_vector: r must be odd");
  if (static_cast<int>(v.size()) != r) throw std::invalid_argument("core_from_v_vector: wrong length");
  int k = (r - 1) / 2;
  std::vector<int> n(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    int d = v[static_cast<size_t>(i)] - (i - k);
    if (mod(d, r) != 0) throw std::invalid_argument("core_from_v_vector: v_i must be i mod r");
    n[static_cast<size_t>(i)] = d / r;
  }
  return core_from_vector(n, r);
}

std::vector<int> maya(const Partition& p, int count) {
  std::vector<int> s;
  for (int i = 1; i <= std::max(count, p.length()); ++i) s.push_back(p[i - 1] - i);
  return s;
}

Partition from_maya(const std::vector<int>& s) {
  std::vector<int> parts;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i && s[i] >= s[i - 1]) throw std::invalid_argument("from_maya: sequence must decrease strictly");
    int part = s[i] + static_cast<int>(i) + 1;
    if (part < 0) throw std::invalid_argument("from_maya: not a partition");
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<int> maya_set(const Partition& p, int count) {
  std::vector<int> s;
  for (int i = 1; i <= std::max(count, p.length()); ++i) s.push_back(p[i - 1] - i + 1);
  return s;
}

std::optional<std::pair<Partition, int>> maya_insert(const Partition& mu, int i) {
  int count = std::max(mu.length(), i < 0 ? -i : 0) + 2;
  std::vector<int> shifted = maya(mu, count);
  int above = 0;
  for (int x : shifted) {
    if (x == i) return std::nullopt;
    if (x > i) ++above;
  }
  shifted.insert(shifted.begin() + above, i);
  std::vector<int> parts;
  for (size_t j = 0; j < shifted.size(); ++j) parts.push_back(shifted[j] + static_cast<int>(j));
  return std::make_pair(Partition::from_unsorted(parts), (above % 2) ? -1 : 1);
}

}  // namespace pleth
