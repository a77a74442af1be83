#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pleth/ratfunc.hpp"

namespace pleth {

enum class EqualityMode { exact, probabilistic };

/// Process-wide comparison mode used by Report::check.
void set_equality_mode(EqualityMode m);
EqualityMode equality_mode();
/// Exact comparison, or agreement at random rational points of all variables.
bool rat_equal(const RatFunc& a, const RatFunc& b);

struct CheckItem {
  std::string label;
  bool pass = true;
  std::string lhs;
  std::string rhs;
};

/// Result of one verification suite.
struct Report {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  int order_checked = 0;
  bool pass = true;
  bool authoritative = true;
  std::vector<CheckItem> items;

  Report() = default;
  explicit Report(std::string name) : identity(std::move(name)), authoritative(equality_mode() == EqualityMode::exact) {}

  Report& param(const std::string& key, const std::string& value);
  Report& param(const std::string& key, int value) { return param(key, std::to_string(value)); }
  /// Records lhs == rhs under the current equality mode.
  bool check(const std::string& label, const RatFunc& lhs, const RatFunc& rhs);
  /// Records a boolean property; detail is shown on failure.
  bool check_true(const std::string& label, bool ok, const std::string& detail = "");
  /// Appends the items of another report (labels prefixed).
  void merge(const Report& o, const std::string& prefix = "");
  const CheckItem* first_failure() const;
  size_t failures() const;
};

/// Worker count for parallel_map (1 = sequential).
void set_worker_count(int n);
int worker_count();

/// out[i] = f(i) for i < n, evaluated by the worker pool; order of results is fixed.
void parallel_for(size_t n, const std::function<void(size_t)>& f);

template <class T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& f) {
  std::vector<std::optional<T>> slots(n);
  parallel_for(n, [&](size_t i) { slots[i].emplace(f(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace pleth
