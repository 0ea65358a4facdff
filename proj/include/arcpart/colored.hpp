#pragma once

// Partitions in three colors (black, red, green), their statistics, and the
// two equivalent descriptions of the family F_r. Green sub-partitions are
// always constrained to the Gordon family B_{r,r}; the black/red interaction
// is governed by the smallest black part k and the k-th smallest red part.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arcpart/partitions.hpp"

namespace arcpart {

struct ColoredPartition {
  Partition black, red, green;

  int weight() const { return black.weight() + red.weight() + green.weight(); }

  bool operator==(const ColoredPartition& o) const {
    return black == o.black && red == o.red && green == o.green;
  }
};

/// Derived statistics: color lengths, the smallest black part k (absent when
/// there is no black part), the k-th smallest red part (present only when
/// there are at least k red parts), and the number of green 1s.
struct ColorStats {
  int ell_b = 0, ell_r = 0, ell_g = 0;
  std::optional<int> smallest_black;
  std::optional<int> kth_smallest_red;
  int green_ones = 0;
};

inline ColorStats stats(const ColoredPartition& cp) {
  ColorStats st;
  st.ell_b = cp.black.length();
  st.ell_r = cp.red.length();
  st.ell_g = cp.green.length();
  st.green_ones = cp.green.multiplicity(1);
  if (!cp.black.empty()) {
    int k = cp.black.smallest();
    st.smallest_black = k;
    if (st.ell_r >= k) st.kth_smallest_red = cp.red.kth_smallest(k);
  }
  return st;
}

namespace detail {

inline void check_r(int r) {
  if (r < 2) throw std::invalid_argument("F_r: r must be >= 2");
}

inline int color_count(const ColorStats& st) {
  return (st.ell_b > 0) + (st.ell_r > 0) + (st.ell_g > 0);
}

}  // namespace detail

/// Membership classes of F_r members; a member matches exactly one. The
/// "few reds" classes have fewer red parts than the smallest black part k,
/// the "many reds" classes have at least k red parts with k + i_k large
/// enough (and, with green present, a capped count of green parts above 1).
enum class FType {
  not_member = 0,
  one_color,             // empty, or a single color
  two_color_with_green,  // exactly two colors, one of them green
  black_red_few_reds,
  black_red_many_reds,
  three_color_few_reds,
  three_color_many_reds,
};

inline constexpr int kFTypeCount = 7;

inline const char* ftype_name(FType t) {
  switch (t) {
    case FType::not_member: return "not_member";
    case FType::one_color: return "one_color";
    case FType::two_color_with_green: return "two_color_with_green";
    case FType::black_red_few_reds: return "black_red_few_reds";
    case FType::black_red_many_reds: return "black_red_many_reds";
    case FType::three_color_few_reds: return "three_color_few_reds";
    case FType::three_color_many_reds: return "three_color_many_reds";
  }
  return "?";
}

/// First description of F_r: one global green constraint, then a three-way
/// case split on the colors present.
inline bool in_F_intro(const ColoredPartition& cp, const ColorStats& st, int r) {
  detail::check_r(r);
  if (!cp.green.empty() && !in_B(cp.green, r, r)) return false;
  int colors = detail::color_count(st);
  // Case 1: empty, a single color, or exactly two colors with green among them.
  if (colors <= 1) return true;
  if (colors == 2 && st.ell_g > 0) return true;
  int k = *st.smallest_black;
  if (colors == 2) {
    // Case 2: black and red.
    if (st.ell_r <= k - 1) return true;
    return k + *st.kth_smallest_red >= r;
  }
  // Case 3: all three colors.
  if (st.ell_r <= k - 1) return true;
  int ik = *st.kth_smallest_red;
  return k + ik >= r && st.ell_g - st.green_ones < k + ik - r + 1;
}

inline bool in_F_intro(const ColoredPartition& cp, int r) {
  return in_F_intro(cp, stats(cp), r);
}

/// Second description of F_r: four mutually exclusive types. Returns the
/// type, or not_member.
inline FType classify_member(const ColoredPartition& cp, const ColorStats& st, int r) {
  detail::check_r(r);
  bool green_ok = cp.green.empty() || in_B(cp.green, r, r);
  int colors = detail::color_count(st);
  if (colors == 0) return FType::one_color;
  if (colors == 1) {
    if (st.ell_g > 0 && !green_ok) return FType::not_member;
    return FType::one_color;
  }
  if (colors == 2 && st.ell_g > 0)
    return green_ok ? FType::two_color_with_green : FType::not_member;
  int k = *st.smallest_black;
  if (colors == 2) {
    if (st.ell_r <= k - 1) return FType::black_red_few_reds;
    if (k + *st.kth_smallest_red >= r) return FType::black_red_many_reds;
    return FType::not_member;
  }
  if (!green_ok) return FType::not_member;
  if (st.ell_r <= k - 1) return FType::three_color_few_reds;
  int ik = *st.kth_smallest_red;
  if (k + ik >= r && st.ell_g - st.green_ones < k + ik - r + 1)
    return FType::three_color_many_reds;
  return FType::not_member;
}

inline FType classify_member(const ColoredPartition& cp, int r) {
  return classify_member(cp, stats(cp), r);
}

inline bool in_F_sec2(const ColoredPartition& cp, const ColorStats& st, int r) {
  return classify_member(cp, st, r) != FType::not_member;
}

inline bool in_F_sec2(const ColoredPartition& cp, int r) {
  return in_F_sec2(cp, stats(cp), r);
}

/// Visit every 3-colored partition of n, ordered by (|black|, |red|, |green|)
/// lexicographically and canonically within each color.
template <typename F>
void for_each_colored(int n, F&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_colored: n must be >= 0");
  std::vector<std::vector<Partition>> by_weight(static_cast<size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) by_weight[w] = enumerate_partitions(w);
  ColoredPartition cp;
  for (int wb = 0; wb <= n; ++wb)
    for (int wr = 0; wb + wr <= n; ++wr) {
      int wg = n - wb - wr;
      for (const Partition& b : by_weight[wb]) {
        cp.black = b;
        for (const Partition& rp : by_weight[wr]) {
          cp.red = rp;
          for (const Partition& g : by_weight[wg]) {
            cp.green = g;
            visit(static_cast<const ColoredPartition&>(cp));
          }
        }
      }
    }
}

inline std::vector<ColoredPartition> enumerate_colored(int n) {
  std::vector<ColoredPartition> out;
  for_each_colored(n, [&](const ColoredPartition& cp) { out.push_back(cp); });
  return out;
}

inline long count_colored(int n) {
  long c = 0;
  for_each_colored(n, [&](const ColoredPartition&) { ++c; });
  return c;
}

inline long count_F(int r, int n) {
  detail::check_r(r);
  long c = 0;
  for_each_colored(n, [&](const ColoredPartition& cp) {
    if (in_F_intro(cp, stats(cp), r)) ++c;
  });
  return c;
}

/// Member counts of F_r(n) bucketed by type (indexed by FType; slot 0 counts
/// the non-members).
inline std::array<long, kFTypeCount> count_F_by_type(int r, int n) {
  detail::check_r(r);
  std::array<long, kFTypeCount> counts{};
  for_each_colored(n, [&](const ColoredPartition& cp) {
    ++counts[static_cast<size_t>(classify_member(cp, stats(cp), r))];
  });
  return counts;
}

// ---------------------------------------------------------------------------
// The common value of the main identity: partitions where the part 1 comes in
// three colors and every larger part in two.
// ---------------------------------------------------------------------------

/// Closed form H^2 / (q)_1.
inline TruncatedSeries<Int> series_target(int N) {
  auto H = partition_gf(N);
  return H * H * pochhammer(1, N).invert();
}

struct TargetCount {
  long by_enumeration;
  Int by_series;
};

/// Counts partitions of n with part 1 in three colors and larger parts in
/// two, by direct enumeration (colored partitions whose green parts are all
/// 1) and independently as a series coefficient. Both values are returned.
inline TargetCount target_count(int n) {
  long c = 0;
  for_each_colored(n, [&](const ColoredPartition& cp) {
    if (cp.green.empty() || cp.green.largest() == 1) ++c;
  });
  return TargetCount{c, series_target(n)[n]};
}

inline TruncatedSeries<Int> series_count_F(int r, int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n) s.coeff(n) = count_F(r, n);
  return s;
}

/// Brute-force generating series of one membership class.
inline TruncatedSeries<Int> series_count_F_type(FType t, int r, int N) {
  TruncatedSeries<Int> s(N);
  for (int n = 0; n <= N; ++n) s.coeff(n) = count_F_by_type(r, n)[static_cast<size_t>(t)];
  return s;
}

}  // namespace arcpart
