#include "pleth/report.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "pleth/factor.hpp"

namespace pleth {

namespace {

std::atomic<EqualityMode> g_mode{EqualityMode::exact};
std::atomic<int> g_workers{1};

constexpr int kProbePoints = 4;

}  // namespace

void set_equality_mode(EqualityMode m) { g_mode = m; }
EqualityMode equality_mode() { return g_mode; }

bool rat_equal(const RatFunc& a, const RatFunc& b) {
  if (g_mode == EqualityMode::exact) return a == b;
  // Fixed seed so repeated runs report identically.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int64_t> num(-997, 997), den(1, 97);
  int done = 0;
  for (int attempt = 0; attempt < 8 * kProbePoints && done < kProbePoints; ++attempt) {
    std::map<int, Rational> point;
    for (int v = 0; v < variable_count(); ++v) {
      int64_t n = num(rng);
      point[v] = Rational(n ? n : 1, den(rng));
    }
    try {
      if (a.evaluate_full(point) != b.evaluate_full(point)) return false;
      ++done;
    } catch (const PoleError&) {
    }
  }
  return done == kProbePoints;
}

Report& Report::param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
  return *this;
}

bool Report::check(const std::string& label, const RatFunc& lhs, const RatFunc& rhs) {
  bool ok = rat_equal(lhs, rhs);
  CheckItem item{label, ok, "", ""};
  if (!ok) {
    item.lhs = lhs.str();
    item.rhs = rhs.str();
  }
  items.push_back(std::move(item));
  pass = pass && ok;
  return ok;
}

bool Report::check_true(const std::string& label, bool ok, const std::string& detail) {
  items.push_back(CheckItem{label, ok, ok ? "" : detail, ""});
  pass = pass && ok;
  return ok;
}

void Report::merge(const Report& o, const std::string& prefix) {
  for (const auto& it : o.items) {
    CheckItem c = it;
    c.label = prefix + c.label;
    items.push_back(std::move(c));
  }
  pass = pass && o.pass;
  authoritative = authoritative && o.authoritative;
  order_checked = std::max(order_checked, o.order_checked);
}

const CheckItem* Report::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return &it;
  return nullptr;
}

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& it : items) n += it.pass ? 0 : 1;
  return n;
}

void set_worker_count(int n) { g_workers = std::max(1, n); }
int worker_count() { return g_workers; }

void parallel_for(size_t n, const std::function<void(size_t)>& f) {
  int w = std::min<int>(g_workers, static_cast<int>(n));
  if (w <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace pleth
