#pragma once

// Truncated formal power series in one variable q with exact coefficients,
// plus the standard q-objects built from them: (q)_n, tail products
// prod_{j>=k} 1/(1-q^j), and Gaussian binomials.

#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "arcpart/numbers.hpp"

namespace arcpart {

/// Formal power series in q cut at a fixed order N (inclusive). The
/// coefficient vector always has exactly N+1 entries. Arithmetic between
/// series of different orders is rejected, never silently truncated.
template <typename T = Int>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
  }

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }

  static TruncatedSeries constant(T value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(value);
    return s;
  }

  static TruncatedSeries one(int order) { return constant(T(1), order); }

  /// q^k; the zero series when k exceeds the order.
  static TruncatedSeries q_power(int k, int order) {
    if (k < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = T(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const T& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
  T& coeff(int n) { return coeffs_[static_cast<size_t>(n)]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const T& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    require_same_order(o);
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return out;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const {
    require_same_order(o);
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return out;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = -coeffs_[n];
    return out;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }

  /// Schoolbook product; exponents above the order are discarded.
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    require_same_order(o);
    const int N = order();
    TruncatedSeries out(N);
    for (int i = 0; i <= N; ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= N; ++j) {
        if (o.coeffs_[j] == 0) continue;
        out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return out;
  }

  TruncatedSeries operator*(const T& scalar) const {
    TruncatedSeries out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] * scalar;
    return out;
  }

  /// Multiplication by q^k.
  TruncatedSeries shifted(int k) const {
    if (k < 0) throw std::invalid_argument("TruncatedSeries: negative shift");
    TruncatedSeries out(order());
    for (int n = 0; n + k <= order(); ++n) out.coeffs_[n + k] = coeffs_[n];
    return out;
  }

  /// Multiplicative inverse up to the order. The constant term must be +1
  /// or -1; anything else is rejected.
  TruncatedSeries invert() const {
    const T& c0 = coeffs_[0];
    if (!(c0 == T(1) || c0 == T(-1)))
      throw std::domain_error("TruncatedSeries: constant term must be a unit (+1 or -1)");
    const int N = order();
    TruncatedSeries out(N);
    out.coeffs_[0] = c0;  // 1/c0 == c0 when c0 is +-1
    for (int n = 1; n <= N; ++n) {
      T acc{};
      for (int j = 1; j <= n; ++j) {
        if (coeffs_[j] == 0) continue;
        acc += coeffs_[j] * out.coeffs_[n - j];
      }
      out.coeffs_[n] = -(c0 * acc);
    }
    return out;
  }

  bool operator==(const TruncatedSeries& o) const {
    require_same_order(o);
    return coeffs_ == o.coeffs_;
  }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  void require_same_order(const TruncatedSeries& o) const {
    if (order() != o.order())
      throw std::invalid_argument("TruncatedSeries: order mismatch");
  }

  std::vector<T> coeffs_;
};

template <typename T>
TruncatedSeries<T> operator*(const T& scalar, const TruncatedSeries<T>& s) {
  return s * scalar;
}

/// Smallest exponent where two series of equal order disagree, with both
/// coefficients; empty when they agree everywhere.
template <typename T>
std::optional<std::tuple<int, T, T>> first_divergence(const TruncatedSeries<T>& a,
                                                      const TruncatedSeries<T>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("first_divergence: order mismatch");
  for (int n = 0; n <= a.order(); ++n)
    if (a[n] != b[n]) return std::make_tuple(n, a[n], b[n]);
  return std::nullopt;
}

/// 1 - q^k.
template <typename T = Int>
TruncatedSeries<T> one_minus_q_power(int k, int order) {
  auto s = TruncatedSeries<T>::one(order);
  if (k <= order) s.coeff(k) -= T(1);
  return s;
}

/// (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1.
template <typename T = Int>
TruncatedSeries<T> pochhammer(int n, int order) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  auto s = TruncatedSeries<T>::one(order);
  for (int j = 1; j <= n && j <= order; ++j) s = s - s.shifted(j);
  return s;
}

/// prod_{j>=k} 1/(1-q^j): the coefficient of q^n counts partitions of n with
/// every part >= k. Factors beyond the order contribute nothing.
template <typename T = Int>
TruncatedSeries<T> prod_inv_tail(int k, int order) {
  if (k < 1) throw std::invalid_argument("prod_inv_tail: k must be >= 1");
  auto s = TruncatedSeries<T>::one(order);
  for (int j = k; j <= order; ++j)
    for (int n = j; n <= order; ++n) s.coeff(n) += s[n - j];
  return s;
}

/// Generating series of all partitions: H = sum p(n) q^n = prod 1/(1-q^j).
template <typename T = Int>
TruncatedSeries<T> partition_gf(int order) {
  return prod_inv_tail<T>(1, order);
}

/// Gaussian binomial [a choose b]_q = (q)_a / ((q)_b (q)_{a-b}), truncated.
template <typename T = Int>
TruncatedSeries<T> q_binomial(int a, int b, int order) {
  if (b < 0 || b > a) throw std::invalid_argument("q_binomial: need 0 <= b <= a");
  auto num = pochhammer<T>(a, order);
  auto den = pochhammer<T>(b, order) * pochhammer<T>(a - b, order);
  return num * den.invert();
}

}  // namespace arcpart
