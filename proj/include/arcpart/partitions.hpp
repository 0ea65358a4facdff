#pragma once

// Integer partitions: enumeration (the brute-force oracle everything else is
// checked against), the Gordon families B/A/b/G, and successive Durfee
// square/rectangle decompositions.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arcpart/series.hpp"

namespace arcpart {

/// Non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be non-increasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }

  int weight() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  int largest() const { return parts_.front(); }
  int smallest() const { return parts_.back(); }

  /// k-th smallest part counted with multiplicity (1-based); needs length() >= k.
  int kth_smallest(int k) const { return parts_[parts_.size() - static_cast<size_t>(k)]; }

  int multiplicity(int value) const {
    int c = 0;
    for (int p : parts_) c += (p == value);
    return c;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

namespace detail {

template <typename F>
void emit_partitions(int remaining, int max_part, int min_part, int max_len,
                     std::vector<int>& acc, F& visit) {
  if (remaining == 0) {
    visit(static_cast<const std::vector<int>&>(acc));
    return;
  }
  if (max_len == 0) return;
  int hi = std::min(remaining, max_part);
  for (int p = hi; p >= min_part; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, min_part, max_len - 1, acc, visit);
    acc.pop_back();
  }
}

}  // namespace detail

/// Visit the part vector of every partition of n with parts in
/// [min_part, max_part] and at most max_len parts. Emission order is the
/// canonical one used everywhere in this library: lexicographic, largest
/// parts first, e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
template <typename F>
void for_each_partition(int n, int max_part, int min_part, int max_len, F&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
  std::vector<int> acc;
  detail::emit_partitions(n, max_part, std::max(min_part, 1), max_len, acc, visit);
}

template <typename F>
void for_each_partition(int n, F&& visit) {
  for_each_partition(n, n, 1, n, visit);
}

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
  return out;
}

/// p(n) by dynamic programming; cross-checked against enumeration in tests.
inline long partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
  std::vector<long> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = k; j <= n; ++j) dp[j] += dp[j - k];
  return dp[n];
}

// ---------------------------------------------------------------------------
// Gordon families
// ---------------------------------------------------------------------------

namespace detail {

inline void check_gordon_params(int r, int i) {
  if (r < 2) throw std::invalid_argument("Gordon family: r must be >= 2");
  if (i < 1 || i > r) throw std::invalid_argument("Gordon family: need 1 <= i <= r");
}

}  // namespace detail

/// lambda_j - lambda_{j+r-1} >= 2 for every valid j.
inline bool gordon_difference_ok(const std::vector<int>& parts, int r) {
  int L = static_cast<int>(parts.size());
  for (int j = 0; j + r - 1 < L; ++j)
    if (parts[j] - parts[j + r - 1] < 2) return false;
  return true;
}

/// Membership in B_{r,i}: the difference condition plus at most i-1 parts
/// equal to 1.
inline bool in_B(const Partition& lambda, int r, int i) {
  detail::check_gordon_params(r, i);
  if (!gordon_difference_ok(lambda.parts(), r)) return false;
  return lambda.multiplicity(1) <= i - 1;
}

/// Membership in A_{r,i}: no part congruent to 0, i or 2r+1-i mod 2r+1.
inline bool in_A(const Partition& lambda, int r, int i) {
  detail::check_gordon_params(r, i);
  int mod = 2 * r + 1;
  for (int p : lambda.parts()) {
    int res = p % mod;
    if (res == 0 || res == i || res == mod - i) return false;
  }
  return true;
}

inline std::vector<Partition> enumerate_B(int r, int i, int n) {
  detail::check_gordon_params(r, i);
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    Partition lambda(parts);
    if (in_B(lambda, r, i)) out.push_back(std::move(lambda));
  });
  return out;
}

inline long count_B(int r, int i, int n) {
  detail::check_gordon_params(r, i);
  long c = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    if (gordon_difference_ok(parts, r)) {
      int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
      if (ones <= i - 1) ++c;
    }
  });
  return c;
}

inline long count_A(int r, int i, int n) {
  detail::check_gordon_params(r, i);
  long c = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    int mod = 2 * r + 1;
    for (int p : parts) {
      int res = p % mod;
      if (res == 0 || res == i || res == mod - i) return;
    }
    ++c;
  });
  return c;
}

/// Members of B_{r,i}(n) with exactly m parts. i = 0 is allowed and counts
/// nothing, matching the b_{r,0} = 0 convention.
inline long count_b(int r, int i, int m, int n) {
  if (i == 0) {
    detail::check_gordon_params(r, 1);
    return 0;
  }
  detail::check_gordon_params(r, i);
  if (m < 0) throw std::invalid_argument("count_b: m must be >= 0");
  long c = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    if (static_cast<int>(parts.size()) != m) return;
    if (!gordon_difference_ok(parts, r)) return;
    if (std::count(parts.begin(), parts.end(), 1) <= i - 1) ++c;
  });
  return c;
}

/// Members of B_{r,r}(n) with at most ell parts different from 1.
inline long count_G(int r, int ell, int n) {
  detail::check_gordon_params(r, r);
  if (ell < 0) throw std::invalid_argument("count_G: ell must be >= 0");
  long c = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    if (!gordon_difference_ok(parts, r)) return;
    int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (ones > r - 1) return;
    if (static_cast<int>(parts.size()) - ones <= ell) ++c;
  });
  return c;
}

// ---------------------------------------------------------------------------
// Successive Durfee squares / horizontal Durfee rectangles
// ---------------------------------------------------------------------------

/// Shape sides of a successive Durfee decomposition: rectangle_count
/// horizontal rectangles followed by square_count squares, sides listed
/// largest-side-first. A side d for a rectangle means a (d-1) x d shape
/// (d = 1 is the degenerate empty rectangle used up when only parts equal
/// to 1 remain); a side d for a square means d x d.
struct DurfeeProfile {
  std::vector<int> sides;
  int rectangle_count = 0;
  int square_count = 0;

  /// Number of rows consumed by the shapes; equals the length of the
  /// decomposed partition. A zero side (empty shape) consumes nothing.
  int implied_length() const {
    int L = 0;
    for (int j = 0; j < static_cast<int>(sides.size()); ++j)
      L += (j < rectangle_count) ? std::max(sides[j] - 1, 0) : sides[j];
    return L;
  }
};

/// Greedy successive decomposition into r-i horizontal Durfee rectangles
/// followed by i-1 Durfee squares. Each step removes the largest shape that
/// fits the top-left corner of the remaining rows; membership in D_{r,i}
/// means no rows are left after the last shape. The empty partition uses no
/// shapes at all and reports an all-zero profile.
inline std::optional<DurfeeProfile> durfee_profile(const Partition& lambda, int r, int i) {
  detail::check_gordon_params(r, i);
  DurfeeProfile prof;
  prof.rectangle_count = r - i;
  prof.square_count = i - 1;
  if (lambda.empty()) {
    prof.sides.assign(static_cast<size_t>(r - 1), 0);
    return prof;
  }
  const std::vector<int>& parts = lambda.parts();
  const int L = lambda.length();
  int row = 0;
  for (int j = 0; j < r - 1; ++j) {
    bool rectangle = j < prof.rectangle_count;
    // Largest d with the next d rows at least d+1 (rectangle) or d (square) wide.
    int d = 0;
    while (row + d < L && parts[row + d] >= d + 1 + (rectangle ? 1 : 0)) ++d;
    prof.sides.push_back(rectangle ? d + 1 : d);
    row += d;
  }
  if (row != L) return std::nullopt;
  return prof;
}

/// Members of D_{r,i}(n) with exactly m parts.
inline long count_d(int r, int i, int m, int n) {
  detail::check_gordon_params(r, i);
  if (m < 0) throw std::invalid_argument("count_d: m must be >= 0");
  long c = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    if (static_cast<int>(parts.size()) != m) return;
    if (durfee_profile(Partition(parts), r, i)) ++c;
  });
  return c;
}

// ---------------------------------------------------------------------------
// Enumeration-backed generating series. These are the independent oracles the
// closed forms are compared against; none of them touch the closed-form code.
// ---------------------------------------------------------------------------

inline TruncatedSeries<Int> series_partition_count(int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n)
    for_each_partition(n, [&](const std::vector<int>&) { s.coeff(n) += 1; });
  return s;
}

/// Non-empty partitions with at most k parts.
inline TruncatedSeries<Int> series_length_at_most(int k, int N) {
  if (k < 1) throw std::invalid_argument("series_length_at_most: k must be >= 1");
  TruncatedSeries<Int> s(N);
  for (int n = 1; n <= N; ++n)
    for_each_partition(n, n, 1, k, [&](const std::vector<int>&) { s.coeff(n) += 1; });
  return s;
}

/// Partitions whose smallest part equals k.
inline TruncatedSeries<Int> series_smallest_part(int k, int N) {
  if (k < 1) throw std::invalid_argument("series_smallest_part: k must be >= 1");
  TruncatedSeries<Int> s(N);
  for (int n = k; n <= N; ++n)
    for_each_partition(n, n, k, n, [&](const std::vector<int>& parts) {
      if (parts.back() == k) s.coeff(n) += 1;
    });
  return s;
}

/// Partitions with at least k parts whose k-th smallest part equals ik.
inline TruncatedSeries<Int> series_kth_smallest(int k, int ik, int N) {
  if (k < 1 || ik < 1)
    throw std::invalid_argument("series_kth_smallest: k and ik must be >= 1");
  TruncatedSeries<Int> s(N);
  for (int n = 1; n <= N; ++n)
    for_each_partition(n, [&](const std::vector<int>& parts) {
      int L = static_cast<int>(parts.size());
      if (L >= k && parts[L - k] == ik) s.coeff(n) += 1;
    });
  return s;
}

inline TruncatedSeries<Int> series_count_B(int r, int i, int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n) s.coeff(n) = count_B(r, i, n);
  return s;
}

inline TruncatedSeries<Int> series_count_b(int r, int i, int m, int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n) s.coeff(n) = count_b(r, i, m, n);
  return s;
}

inline TruncatedSeries<Int> series_count_G(int r, int ell, int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n) s.coeff(n) = count_G(r, ell, n);
  return s;
}

inline TruncatedSeries<Int> series_count_d(int r, int i, int m, int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n) s.coeff(n) = count_d(r, i, m, n);
  return s;
}

}  // namespace arcpart
