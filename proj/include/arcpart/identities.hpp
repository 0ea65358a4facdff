#pragma once

// Closed-form q-series builders (the Durfee-profile tuple sums, the
// membership-class series S1..S4b and their total) and a catalogue of
// coefficientwise identity checks, each comparing a closed form against an
// independent route: either another closed form or a brute-force enumeration.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcpart/colored.hpp"
#include "arcpart/partitions.hpp"
#include "arcpart/series.hpp"

namespace arcpart {

namespace detail {

/// Lazily grown table of 1/(q)_d.
class InvPochTable {
 public:
  explicit InvPochTable(int order) : order_(order) {}
  const TruncatedSeries<Int>& get(int d) {
    while (static_cast<int>(tab_.size()) <= d)
      tab_.push_back(pochhammer(static_cast<int>(tab_.size()), order_).invert());
    return tab_[static_cast<size_t>(d)];
  }

 private:
  int order_;
  std::vector<TruncatedSeries<Int>> tab_;
};

/// Lazily grown table of (q)_d.
class PochTable {
 public:
  explicit PochTable(int order) : order_(order) {}
  const TruncatedSeries<Int>& get(int d) {
    while (static_cast<int>(tab_.size()) <= d)
      tab_.push_back(pochhammer(static_cast<int>(tab_.size()), order_));
    return tab_[static_cast<size_t>(d)];
  }

 private:
  int order_;
  std::vector<TruncatedSeries<Int>> tab_;
};

}  // namespace detail

/// Generating series of D_{r,i}(n): sum over non-increasing profiles
/// (s_1 >= ... >= s_{r-1} >= 0) of
///   q^{s_1^2+...+s_{r-1}^2 - s_1-...-s_{r-i}} (1 - q^{s_{r-i}})
///     / ((q)_{s_1-s_2} ... (q)_{s_{r-2}-s_{r-1}} (q)_{s_{r-1}}),
/// the final factor being absent (together with the linear exponent part)
/// when i = r. Profiles whose exponent exceeds N are pruned; profiles with a
/// zero rectangle side contribute nothing and are skipped outright.
inline TruncatedSeries<Int> series_D(int r, int i, int N) {
  detail::check_gordon_params(r, i);
  const int L = r - 1;
  const int R = r - i;  // rectangle slots carrying the linear exponent part
  detail::InvPochTable invP(N);
  TruncatedSeries<Int> acc(N);
  std::vector<int> sides(static_cast<size_t>(L));

  std::function<void(int, int, const TruncatedSeries<Int>&)> rec =
      [&](int j, int e, const TruncatedSeries<Int>& prod) {
        if (j == L) {
          auto term = prod * invP.get(sides[static_cast<size_t>(L - 1)]);
          for (int n = 0; n + e <= N; ++n) acc.coeff(n + e) += term[n];
          if (R > 0) {
            int v = sides[static_cast<size_t>(R - 1)];
            for (int n = 0; n + e + v <= N; ++n) acc.coeff(n + e + v) -= term[n];
          }
          return;
        }
        int lo = (j < R) ? 1 : 0;
        int hi = (j == 0) ? N + 1 : sides[static_cast<size_t>(j - 1)];
        for (int v = lo; v <= hi; ++v) {
          int c = v * v - (j < R ? v : 0);
          if (e + c > N) break;
          sides[static_cast<size_t>(j)] = v;
          if (j == 0)
            rec(1, e + c, prod);
          else
            rec(j + 1, e + c, prod * invP.get(sides[static_cast<size_t>(j - 1)] - v));
        }
      };
  rec(0, 0, TruncatedSeries<Int>::one(N));
  return acc;
}

/// G_r = sum B_{r,r}(n) q^n, realized as the i = r profile sum.
inline TruncatedSeries<Int> series_G(int r, int N) { return series_D(r, r, N); }

/// X_m: the i = r profile sum restricted to profiles with side sum m.
inline TruncatedSeries<Int> series_X(int m, int r, int N) {
  detail::check_gordon_params(r, r);
  if (m < 0) throw std::invalid_argument("series_X: m must be >= 0");
  const int L = r - 1;
  detail::InvPochTable invP(N);
  TruncatedSeries<Int> acc(N);
  std::vector<int> sides(static_cast<size_t>(L));

  std::function<void(int, int, int, const TruncatedSeries<Int>&)> rec =
      [&](int j, int e, int sum, const TruncatedSeries<Int>& prod) {
        if (j == L) {
          if (sum != m) return;
          auto term = prod * invP.get(sides[static_cast<size_t>(L - 1)]);
          for (int n = 0; n + e <= N; ++n) acc.coeff(n + e) += term[n];
          return;
        }
        int hi = (j == 0) ? m : std::min(sides[static_cast<size_t>(j - 1)], m - sum);
        // The later slots cannot exceed v, so v must leave a reachable remainder.
        for (int v = 0; v <= hi; ++v) {
          if (static_cast<long>(v) * (L - j) < m - sum) continue;
          int c = v * v;
          if (e + c > N) break;
          sides[static_cast<size_t>(j)] = v;
          if (j == 0)
            rec(1, e + c, v, prod);
          else
            rec(j + 1, e + c, sum + v,
                prod * invP.get(sides[static_cast<size_t>(j - 1)] - v));
        }
      };
  rec(0, 0, 0, TruncatedSeries<Int>::one(N));
  return acc;
}

/// Two-term series of G_{r,l}(n): the i = r profile sums with side sum at
/// most l+r-1, minus the side-sum l+r correction
///   q^{s_1^2+...+s_{r-1}^2 - (l+r)} (1 - q^{l+r}) / (...same denominators...).
inline TruncatedSeries<Int> series_Gl(int r, int ell, int N) {
  detail::check_gordon_params(r, r);
  if (ell < 0) throw std::invalid_argument("series_Gl: ell must be >= 0");
  const int L = r - 1;
  detail::InvPochTable invP(N);
  TruncatedSeries<Int> acc(N);
  std::vector<int> sides(static_cast<size_t>(L));

  // First sum: side sum <= ell + r - 1.
  int cap = ell + r - 1;
  std::function<void(int, int, int, const TruncatedSeries<Int>&)> rec1 =
      [&](int j, int e, int sum, const TruncatedSeries<Int>& prod) {
        if (j == L) {
          auto term = prod * invP.get(sides[static_cast<size_t>(L - 1)]);
          for (int n = 0; n + e <= N; ++n) acc.coeff(n + e) += term[n];
          return;
        }
        int hi = (j == 0) ? cap : std::min(sides[static_cast<size_t>(j - 1)], cap - sum);
        for (int v = 0; v <= hi; ++v) {
          int c = v * v;
          if (e + c > N) break;
          sides[static_cast<size_t>(j)] = v;
          if (j == 0)
            rec1(1, e + c, v, prod);
          else
            rec1(j + 1, e + c, sum + v,
                 prod * invP.get(sides[static_cast<size_t>(j - 1)] - v));
        }
      };
  rec1(0, 0, 0, TruncatedSeries<Int>::one(N));

  // Correction: side sum exactly ell + r, exponent lowered by ell + r and the
  // whole term carrying the factor (1 - q^{ell+r}).
  int target = ell + r;
  std::function<void(int, int, int, const TruncatedSeries<Int>&)> rec2 =
      [&](int j, int e, int sum, const TruncatedSeries<Int>& prod) {
        if (j == L) {
          if (sum != target) return;
          auto term = prod * invP.get(sides[static_cast<size_t>(L - 1)]);
          int shift = e - target;
          for (int n = 0; n + shift <= N; ++n) acc.coeff(n + shift) -= term[n];
          for (int n = 0; n + e <= N; ++n) acc.coeff(n + e) += term[n];
          return;
        }
        int hi = (j == 0) ? target : std::min(sides[static_cast<size_t>(j - 1)], target - sum);
        for (int v = 0; v <= hi; ++v) {
          if (static_cast<long>(v) * (L - j) < target - sum) continue;
          int c = v * v;
          if (e + c - target > N) break;
          sides[static_cast<size_t>(j)] = v;
          if (j == 0)
            rec2(1, e + c, v, prod);
          else
            rec2(j + 1, e + c, sum + v,
                 prod * invP.get(sides[static_cast<size_t>(j - 1)] - v));
        }
      };
  rec2(0, 0, 0, TruncatedSeries<Int>::one(N));
  return acc;
}

/// Fixed-length form: sum b_{r,i}(m, n) q^n as the profile sum with side sum
/// m + r - i (the i < r summand keeps the (1 - q^{s_{r-i}}) factor).
inline TruncatedSeries<Int> series_fixed_length(int r, int i, int m, int N) {
  detail::check_gordon_params(r, i);
  if (m < 0) throw std::invalid_argument("series_fixed_length: m must be >= 0");
  const int L = r - 1;
  const int R = r - i;
  const int target = m + R;
  detail::InvPochTable invP(N);
  TruncatedSeries<Int> acc(N);
  std::vector<int> sides(static_cast<size_t>(L));

  std::function<void(int, int, int, const TruncatedSeries<Int>&)> rec =
      [&](int j, int e, int sum, const TruncatedSeries<Int>& prod) {
        if (j == L) {
          if (sum != target) return;
          auto term = prod * invP.get(sides[static_cast<size_t>(L - 1)]);
          for (int n = 0; n + e <= N; ++n) acc.coeff(n + e) += term[n];
          if (R > 0) {
            int v = sides[static_cast<size_t>(R - 1)];
            for (int n = 0; n + e + v <= N; ++n) acc.coeff(n + e + v) -= term[n];
          }
          return;
        }
        int lo = (j < R) ? 1 : 0;
        int hi = (j == 0) ? target : std::min(sides[static_cast<size_t>(j - 1)], target - sum);
        for (int v = lo; v <= hi; ++v) {
          if (static_cast<long>(v) * (L - j) < target - sum) continue;
          int c = v * v - (j < R ? v : 0);
          if (e + c > N) break;
          sides[static_cast<size_t>(j)] = v;
          if (j == 0)
            rec(1, e + c, v, prod);
          else
            rec(j + 1, e + c, sum + v,
                prod * invP.get(sides[static_cast<size_t>(j - 1)] - v));
        }
      };
  rec(0, 0, 0, TruncatedSeries<Int>::one(N));
  return acc;
}

// ---------------------------------------------------------------------------
// Membership-class series
// ---------------------------------------------------------------------------

enum class SComponent { S1, S2, S3a, S3b, S3, S4a, S4b, Total, Target };

/// All class series of one (r, N) at once; cheaper than building components
/// one by one and the natural unit for the identity checks.
struct STable {
  int r, N;
  TruncatedSeries<Int> H, G, inv_q1;
  TruncatedSeries<Int> S1, S2, S3a, S3b, S3, S4a, S4b, total, target;

  STable(int r_, int N_)
      : r(r_),
        N(N_),
        H(partition_gf(N_)),
        G(series_G(r_, N_)),
        inv_q1(pochhammer(1, N_).invert()),
        S1(N_), S2(N_), S3a(N_), S3b(N_), S3(N_), S4a(N_), S4b(N_),
        total(N_), target(N_) {
    auto one = TruncatedSeries<Int>::one(N);
    // 2q - 1
    auto two_q_minus_one = TruncatedSeries<Int>::q_power(1, N) * Int(2) - one;
    S1 = H * Int(2) + G - TruncatedSeries<Int>::constant(Int(2), N);
    S2 = (H - one) * (G - one) * Int(2);
    S3a = H * two_q_minus_one * inv_q1 + one;
    S3b = (H * H * pochhammer(r - 1, N) - H) * inv_q1;
    S3 = S3a + S3b;
    S4a = (G - one) * S3a;
    S4b = (H * H - H * G) * inv_q1 - S3b;
    total = S1 + S2 + S3 + S4a + S4b;
    target = H * H * inv_q1;
  }
};

inline TruncatedSeries<Int> series_S(SComponent c, int r, int N) {
  STable t(r, N);
  switch (c) {
    case SComponent::S1: return t.S1;
    case SComponent::S2: return t.S2;
    case SComponent::S3a: return t.S3a;
    case SComponent::S3b: return t.S3b;
    case SComponent::S3: return t.S3;
    case SComponent::S4a: return t.S4a;
    case SComponent::S4b: return t.S4b;
    case SComponent::Total: return t.total;
    case SComponent::Target: return t.target;
  }
  throw std::invalid_argument("series_S: unknown component");
}

// ---------------------------------------------------------------------------
// Defining double sums for the black/red(/green) classes. These follow the
// decomposition by (k, i_k) = (smallest black part, k-th smallest red part)
// literally and are compared against the closed forms above.
// ---------------------------------------------------------------------------

/// sum_{k>=2} q^k prod_{j>=k} 1/(1-q^j) * (1/(q)_{k-1} - 1).
inline TruncatedSeries<Int> series_type3a_defining(int N) {
  detail::InvPochTable invP(N);
  auto one = TruncatedSeries<Int>::one(N);
  TruncatedSeries<Int> acc(N);
  for (int k = 2; k + 1 <= N; ++k) {
    auto black = prod_inv_tail(k, N).shifted(k);
    acc += black * (invP.get(k - 1) - one);
  }
  return acc;
}

/// sum over k >= 1, i_k >= max(1, r-k) of
///   q^k prod_{j>=k} 1/(1-q^j) * H q^{k+i_k-1} (q)_{k+i_k-2} / (q)_{k-1}.
inline TruncatedSeries<Int> series_type3b_defining(int r, int N) {
  detail::check_r(r);
  detail::InvPochTable invP(N);
  detail::PochTable poch(N);
  auto H = partition_gf(N);
  TruncatedSeries<Int> acc(N);
  for (int k = 1; 2 * k + std::max(1, r - k) - 1 <= N; ++k) {
    auto base = prod_inv_tail(k, N) * H * invP.get(k - 1);
    for (int ik = std::max(1, r - k); 2 * k + ik - 1 <= N; ++ik) {
      auto term = base * poch.get(k + ik - 2);
      int shift = k + (k + ik - 1);
      for (int n = 0; n + shift <= N; ++n) acc.coeff(n + shift) += term[n];
    }
  }
  return acc;
}

/// Same double sum with the extra green factor (G_{r, k+i_k-r} - 1).
inline TruncatedSeries<Int> series_type4b_defining(int r, int N) {
  detail::check_r(r);
  detail::InvPochTable invP(N);
  detail::PochTable poch(N);
  auto H = partition_gf(N);
  auto one = TruncatedSeries<Int>::one(N);
  std::map<int, TruncatedSeries<Int>> gl_cache;
  auto gl_minus_one = [&](int ell) -> const TruncatedSeries<Int>& {
    auto it = gl_cache.find(ell);
    if (it == gl_cache.end())
      it = gl_cache.emplace(ell, series_Gl(r, ell, N) - one).first;
    return it->second;
  };
  TruncatedSeries<Int> acc(N);
  // The green factor has positive valuation, so terms matter up to 2k+i_k <= N.
  for (int k = 1; 2 * k + std::max(1, r - k) <= N; ++k) {
    auto base = prod_inv_tail(k, N) * H * invP.get(k - 1);
    for (int ik = std::max(1, r - k); 2 * k + ik <= N; ++ik) {
      auto term = base * poch.get(k + ik - 2) * gl_minus_one(k + ik - r);
      int shift = k + (k + ik - 1);
      for (int n = 0; n + shift <= N; ++n) acc.coeff(n + shift) += term[n];
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Identity catalogue
// ---------------------------------------------------------------------------

struct Divergence {
  int exponent;
  Int lhs, rhs;
};

struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, long>> params;
  int order = 0;          // requested truncation order
  int compare_order = 0;  // order actually compared (enumeration-backed checks cap it)
  bool informational = false;
  bool equal = false;
  std::optional<Divergence> divergence;
};

/// Enumeration over 3-colored partitions becomes infeasible long before the
/// series side does; checks backed by it compare up to this order.
inline constexpr int kColoredOrderCap = 14;

struct IdentityParams {
  int r = 2;
  std::optional<int> i, m, k, ell;
};

namespace detail {

inline IdentityReport compare_series(std::string name,
                                     std::vector<std::pair<std::string, long>> params,
                                     int requested_order,
                                     const TruncatedSeries<Int>& lhs,
                                     const TruncatedSeries<Int>& rhs,
                                     bool informational = false) {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.params = std::move(params);
  rep.order = requested_order;
  rep.compare_order = lhs.order();
  rep.informational = informational;
  auto d = first_divergence(lhs, rhs);
  rep.equal = !d.has_value();
  if (d) rep.divergence = Divergence{std::get<0>(*d), std::get<1>(*d), std::get<2>(*d)};
  return rep;
}

}  // namespace detail

inline const std::vector<std::string>& identity_catalogue() {
  static const std::vector<std::string> names = {
      "length_bounded",         // 1/(q)_k - 1 vs partitions with at most k parts
      "smallest_part",          // q^k prod 1/(1-q^j) vs partitions with smallest part k
      "poch_tail_sum",          // sum q^k (q)_{k-1} telescoped against 1/H
      "kth_smallest_part",      // H q^{k+i-1} (q)_{k+i-2}/(q)_{k-1} vs enumeration
      "fixed_length_gordon",    // fixed-side-sum profile series vs length-filtered counts
      "bounded_nonone_gordon",  // two-term G_{r,l} series vs filtered counts
      "xsum_telescope",         // the X_m partial-sum identity
      "type3a_closed_form",     // black/red few-reds defining sum vs closed form
      "type3b_closed_form",     // black/red many-reds defining sum vs closed form
      "type3_sum",              // S3a + S3b vs 1 - 2H + H^2 (q)_{r-1}/(q)_1
      "type4a_brute",           // (G_r - 1) S3a vs enumerated three-color few-reds counts
      "type4b_closed_form",     // green-weighted defining sum vs (H^2 - H G_r)/(q)_1 - S3b
      "type_counts_vs_series",  // every class series vs enumerated class counts
      "theorem_main",           // S1+S2+S3+S4a+S4b vs H^2/(q)_1
      "rdp_printed_form",       // informational: the printed product vs H^2/(q)_1
  };
  return names;
}

inline bool is_identity_name(const std::string& name) {
  for (const auto& n : identity_catalogue())
    if (n == name) return true;
  return false;
}

inline std::vector<IdentityReport> verify_identity(const std::string& name,
                                                   const IdentityParams& p, int N) {
  using detail::compare_series;
  std::vector<IdentityReport> out;

  auto sweep_or = [](const std::optional<int>& v, std::vector<int> def) {
    return v ? std::vector<int>{*v} : std::move(def);
  };

  if (name == "length_bounded") {
    for (int k : sweep_or(p.k, {1, 2, 3, 4, 5, 6})) {
      auto lhs = pochhammer(k, N).invert() - TruncatedSeries<Int>::one(N);
      out.push_back(compare_series(name, {{"k", k}}, N, lhs, series_length_at_most(k, N)));
    }
  } else if (name == "smallest_part") {
    for (int k : sweep_or(p.k, {1, 2, 3, 4, 5, 6})) {
      auto lhs = prod_inv_tail(k, N).shifted(k);
      out.push_back(compare_series(name, {{"k", k}}, N, lhs, series_smallest_part(k, N)));
    }
  } else if (name == "poch_tail_sum") {
    detail::PochTable poch(N);
    for (int m : sweep_or(p.m, {1, 2, 3, 4, 5, 6})) {
      if (m < 1) throw std::invalid_argument("poch_tail_sum: m must be >= 1");
      TruncatedSeries<Int> lhs(N);
      for (int k = m; k <= N; ++k) {
        const auto& pk = poch.get(k - 1);
        for (int n = 0; n + k <= N; ++n) lhs.coeff(n + k) += pk[n];
      }
      auto rhs = poch.get(m - 1) - partition_gf(N).invert();
      out.push_back(compare_series(name, {{"m", m}}, N, lhs, rhs));
    }
  } else if (name == "kth_smallest_part") {
    auto H = partition_gf(N);
    for (int k : sweep_or(p.k, {1, 2, 3})) {
      for (int ik : sweep_or(p.i, {1, 2, 3})) {
        auto lhs = (H * pochhammer(k + ik - 2, N) * pochhammer(k - 1, N).invert())
                       .shifted(k + ik - 1);
        out.push_back(compare_series(name, {{"k", k}, {"i", ik}}, N, lhs,
                                     series_kth_smallest(k, ik, N)));
      }
    }
  } else if (name == "fixed_length_gordon") {
    detail::check_gordon_params(p.r, 1);
    for (int i : sweep_or(p.i, [&] {
           std::vector<int> v;
           for (int i = 1; i <= p.r; ++i) v.push_back(i);
           return v;
         }())) {
      for (int m : sweep_or(p.m, {0, 1, 2, 3, 4})) {
        out.push_back(compare_series(name, {{"r", p.r}, {"i", i}, {"m", m}}, N,
                                     series_fixed_length(p.r, i, m, N),
                                     series_count_b(p.r, i, m, N)));
      }
    }
  } else if (name == "bounded_nonone_gordon") {
    for (int ell : sweep_or(p.ell, {0, 1, 2, 3})) {
      out.push_back(compare_series(name, {{"r", p.r}, {"l", ell}}, N,
                                   series_Gl(p.r, ell, N), series_count_G(p.r, ell, N)));
    }
  } else if (name == "xsum_telescope") {
    detail::check_gordon_params(p.r, p.r);
    const int r = p.r;
    detail::PochTable poch(N);
    // X_m vanishes once the balanced profile exponent passes N.
    auto min_exponent = [&](int m) {
      int a = m / (r - 1), b = m % (r - 1);
      return (r - 1 - b) * a * a + b * (a + 1) * (a + 1);
    };
    int m_max = 0;
    while (min_exponent(m_max + 1) <= N) ++m_max;
    std::vector<TruncatedSeries<Int>> X;
    for (int m = 0; m <= m_max; ++m) X.push_back(series_X(m, r, N));
    auto prefix = [&](int M) {
      TruncatedSeries<Int> s(N);
      for (int m = 0; m <= std::min(M, m_max); ++m) s += X[static_cast<size_t>(m)];
      return s;
    };
    TruncatedSeries<Int> lhs(N);
    TruncatedSeries<Int> running = prefix(r - 2);
    for (int ell = 0; r + ell <= N; ++ell) {
      int M = ell + r - 1;
      if (M <= m_max) running += X[static_cast<size_t>(M)];
      auto term = poch.get(r + ell - 1) * running;
      for (int n = 0; n + r + ell <= N; ++n) lhs.coeff(n + r + ell) += term[n];
    }
    auto G = series_G(r, N);
    auto rhs = TruncatedSeries<Int>::one(N) - G * partition_gf(N).invert();
    for (int m = r; m <= m_max; ++m) rhs += X[static_cast<size_t>(m)] * poch.get(m);
    out.push_back(compare_series(name, {{"r", r}}, N, lhs, rhs));
  } else if (name == "type3a_closed_form") {
    auto H = partition_gf(N);
    auto closed = H * (TruncatedSeries<Int>::q_power(1, N) * Int(2) -
                       TruncatedSeries<Int>::one(N)) *
                      pochhammer(1, N).invert() +
                  TruncatedSeries<Int>::one(N);
    out.push_back(compare_series(name, {}, N, series_type3a_defining(N), closed));
  } else if (name == "type3b_closed_form") {
    STable t(p.r, N);
    out.push_back(
        compare_series(name, {{"r", p.r}}, N, series_type3b_defining(p.r, N), t.S3b));
  } else if (name == "type3_sum") {
    STable t(p.r, N);
    auto closed = TruncatedSeries<Int>::one(N) - t.H * Int(2) +
                  t.H * t.H * pochhammer(p.r - 1, N) * t.inv_q1;
    out.push_back(compare_series(name, {{"r", p.r}}, N, t.S3a + t.S3b, closed));
  } else if (name == "type4a_brute") {
    int cap = std::min(N, kColoredOrderCap);
    STable t(p.r, cap);
    out.push_back(compare_series(name, {{"r", p.r}}, N, t.S4a,
                                 series_count_F_type(FType::three_color_few_reds, p.r, cap)));
  } else if (name == "type4b_closed_form") {
    STable t(p.r, N);
    out.push_back(
        compare_series(name, {{"r", p.r}}, N, series_type4b_defining(p.r, N), t.S4b));
  } else if (name == "type_counts_vs_series") {
    int cap = std::min(N, kColoredOrderCap);
    STable t(p.r, cap);
    std::vector<std::pair<FType, const TruncatedSeries<Int>*>> pairs = {
        {FType::one_color, &t.S1},
        {FType::two_color_with_green, &t.S2},
        {FType::black_red_few_reds, &t.S3a},
        {FType::black_red_many_reds, &t.S3b},
        {FType::three_color_few_reds, &t.S4a},
        {FType::three_color_many_reds, &t.S4b},
    };
    std::vector<TruncatedSeries<Int>> brute(
        static_cast<size_t>(kFTypeCount), TruncatedSeries<Int>(cap));
    for (int n = 0; n <= cap; ++n) {
      auto counts = count_F_by_type(p.r, n);
      for (int tix = 0; tix < kFTypeCount; ++tix)
        brute[static_cast<size_t>(tix)].coeff(n) = counts[static_cast<size_t>(tix)];
    }
    for (auto& [ft, closed] : pairs) {
      auto rep = compare_series(name, {{"r", p.r}, {"class", static_cast<long>(ft)}},
                                N, *closed, brute[static_cast<size_t>(ft)]);
      out.push_back(std::move(rep));
    }
  } else if (name == "theorem_main") {
    STable t(p.r, N);
    out.push_back(compare_series(name, {{"r", p.r}}, N, t.total, t.target));
  } else if (name == "rdp_printed_form") {
    auto lhs = one_minus_q_power<Int>(3, N).invert() * prod_inv_tail(2, N);
    out.push_back(compare_series(name, {}, N, lhs, series_target(N), /*informational=*/true));
  } else {
    throw std::invalid_argument("verify_identity: unknown identity '" + name + "'");
  }
  return out;
}

inline std::vector<IdentityReport> verify_all_identities(const IdentityParams& p, int N) {
  std::vector<IdentityReport> out;
  for (const auto& name : identity_catalogue()) {
    auto reps = verify_identity(name, p, N);
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

}  // namespace arcpart
