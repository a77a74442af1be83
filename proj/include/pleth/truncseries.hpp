#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "pleth/ratfunc.hpp"

namespace pleth {

/// Moebius function.
inline int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Power series sum_{n <= N} c_n T^n in a formal grading variable T, with
/// coefficients in a ring C supporting +, -, *, scaling by RatFunc and
/// adams(C, k). Adams acts on T by T -> T^k.
template <class C>
class TruncSeries {
 public:
  TruncSeries(int order, C zero) : zero_(zero), c_(static_cast<size_t>(order) + 1, zero) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
  C& operator[](int n) { return c_[static_cast<size_t>(n)]; }
  const C& zero() const { return zero_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    for (int n = 0; n <= std::min(order(), o.order()); ++n) (*this)[n] += o[n];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    for (int n = 0; n <= std::min(order(), o.order()); ++n) (*this)[n] -= o[n];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int N = std::min(a.order(), b.order());
    TruncSeries r(N, a.zero_);
    for (int i = 0; i <= N; ++i) {
      if (is_zero_coeff(a[i])) continue;
      for (int j = 0; i + j <= N; ++j) {
        if (is_zero_coeff(b[j])) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  /// a(T^k) with coefficients mapped by adams(., k).
  TruncSeries adams(int k) const {
    TruncSeries r(order(), zero_);
    for (int n = 0; n * k <= order(); ++n) r[n * k] = pleth_adams(c_[static_cast<size_t>(n)], k);
    return r;
  }

  /// Plethystic exponential Exp(a) = exp(sum_k adams(a, k) / k); a_0 must vanish.
  TruncSeries exp(const C& one) const {
    if (!is_zero_coeff(c_[0])) throw std::invalid_argument("plethystic Exp: series has a constant term");
    int N = order();
    std::vector<C> s(static_cast<size_t>(N) + 1, zero_);  // s_m = m * [T^m] log Exp(a)
    for (int m = 1; m <= N; ++m)
      for (int k = 1; k <= m; ++k)
        if (m % k == 0 && !is_zero_coeff(c_[static_cast<size_t>(m / k)]))
          s[static_cast<size_t>(m)] += pleth_adams(c_[static_cast<size_t>(m / k)], k) * RatFunc(Rational(m / k));
    TruncSeries e(N, zero_);
    e[0] = one;
    for (int n = 1; n <= N; ++n) {
      C acc = zero_;
      for (int j = 1; j <= n; ++j)
        if (!is_zero_coeff(s[static_cast<size_t>(j)]) && !is_zero_coeff(e[n - j])) acc += s[static_cast<size_t>(j)] * e[n - j];
      e[n] = acc * RatFunc(Rational(1, n));
    }
    return e;
  }

  /// Plethystic logarithm; requires c_0 == one.
  TruncSeries log(const C& one) const {
    if (!(c_[0] == one)) throw std::invalid_argument("plethystic Log: constant term must be 1");
    int N = order();
    std::vector<C> u(static_cast<size_t>(N) + 1, zero_);  // u_n = n [T^n] log F
    for (int n = 1; n <= N; ++n) {
      C acc = c_[static_cast<size_t>(n)] * RatFunc(Rational(n));
      for (int j = 1; j < n; ++j)
        if (!is_zero_coeff(u[static_cast<size_t>(j)]) && !is_zero_coeff(c_[static_cast<size_t>(n - j)]))
          acc -= u[static_cast<size_t>(j)] * c_[static_cast<size_t>(n - j)];
      u[static_cast<size_t>(n)] = acc;
    }
    TruncSeries v(N, zero_);
    for (int n = 1; n <= N; ++n) {
      C acc = zero_;
      for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = moebius(d);
        if (!mu || is_zero_coeff(u[static_cast<size_t>(n / d)])) continue;
        acc += pleth_adams(u[static_cast<size_t>(n / d)], d) * RatFunc(Rational(mu));
      }
      v[n] = acc * RatFunc(Rational(1, n));
    }
    return v;
  }

 private:
  template <class X>
  static auto pleth_adams(const X& x, int k) {
    return x.adams(k);
  }
  template <class X>
  static bool is_zero_coeff(const X& x) {
    return x.is_zero();
  }

  C zero_;
  std::vector<C> c_;
};

}  // namespace pleth
