#pragma once

// Monomials in K[x_i, y_i, z_i : i >= 1] graded by weight(v_i) = i, the
// monomial ideals I_r and J_r, their standard monomials, and the bijection
// with 3-colored partitions (x -> black, y -> red, z -> green).

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcpart/colored.hpp"

namespace arcpart {

enum class VarFamily : int { x = 0, y = 1, z = 2 };

inline char family_letter(VarFamily f) { return "xyz"[static_cast<int>(f)]; }

struct Var {
  VarFamily family;
  int index;  // >= 1

  auto operator<=>(const Var&) const = default;
};

/// Sparse exponent map; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }

  Monomial& mul_var(Var v, int e = 1) {
    if (v.index < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
    if (e < 0) throw std::invalid_argument("Monomial: exponent must be >= 0");
    if (e > 0) e_[v] += e;
    return *this;
  }

  int exponent(Var v) const {
    auto it = e_.find(v);
    return it == e_.end() ? 0 : it->second;
  }

  const std::map<Var, int>& exponents() const { return e_; }

  bool is_one() const { return e_.empty(); }

  int weight() const {
    int w = 0;
    for (const auto& [v, e] : e_) w += v.index * e;
    return w;
  }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial out = *this;
    for (const auto& [v, e] : o.e_) out.e_[v] += e;
    return out;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Container ordering only; monomial orders live in the arc lab.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  std::string str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : e_) {
      if (!s.empty()) s += "*";
      s += family_letter(v.family);
      s += std::to_string(v.index);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<Var, int> e_;
};

/// x_i -> black part i, y_i -> red part i, z_i -> green part i, with
/// multiplicities given by the exponents.
inline ColoredPartition to_colored(const Monomial& m) {
  std::vector<int> parts[3];
  for (const auto& [v, e] : m.exponents())
    for (int t = 0; t < e; ++t) parts[static_cast<int>(v.family)].push_back(v.index);
  for (auto& ps : parts) std::sort(ps.begin(), ps.end(), std::greater<int>());
  return ColoredPartition{Partition(std::move(parts[0])), Partition(std::move(parts[1])),
                          Partition(std::move(parts[2]))};
}

inline Monomial from_colored(const ColoredPartition& cp) {
  Monomial m;
  for (int p : cp.black.parts()) m.mul_var({VarFamily::x, p});
  for (int p : cp.red.parts()) m.mul_var({VarFamily::y, p});
  for (int p : cp.green.parts()) m.mul_var({VarFamily::z, p});
  return m;
}

/// Membership in I_r = (z_i^a z_{i+1}^{r-a} : i >= 1, 1 <= a <= r):
/// some z_i occurs and e(z_i) + e(z_{i+1}) >= r.
inline bool in_I(const Monomial& m, int r) {
  detail::check_r(r);
  for (const auto& [v, e] : m.exponents()) {
    if (v.family != VarFamily::z) continue;
    if (e >= r) return true;
    if (e + m.exponent({VarFamily::z, v.index + 1}) >= r) return true;
  }
  return false;
}

/// Membership in J_r. Beyond I_r, the generators are
///   x_k y_{i_1}...y_{i_k}                        with k + i_k <= r - 1, and
///   x_k y_{i_1}...y_{i_k} z_{j_1}...z_{j_{k+i_k-r+1}}  (all j >= 2) with k + i_k >= r.
/// For a fixed black index k, taking the k smallest red indices minimizes
/// i_k, which is optimal for both generator classes; every black index
/// occurring in the monomial is tried.
inline bool in_J(const Monomial& m, int r) {
  detail::check_r(r);
  if (in_I(m, r)) return true;
  std::vector<int> reds;  // ascending with multiplicity (map order is ascending)
  int greens_above_one = 0;
  for (const auto& [v, e] : m.exponents()) {
    if (v.family == VarFamily::y)
      for (int t = 0; t < e; ++t) reds.push_back(v.index);
    else if (v.family == VarFamily::z && v.index >= 2)
      greens_above_one += e;
  }
  for (const auto& [v, e] : m.exponents()) {
    if (v.family != VarFamily::x) continue;
    int k = v.index;
    if (static_cast<int>(reds.size()) < k) continue;
    int ik = reds[static_cast<size_t>(k - 1)];
    if (k + ik <= r - 1) return true;
    if (greens_above_one >= k + ik - r + 1) return true;
  }
  return false;
}

/// Visit every monomial of the given weight, in the canonical colored order.
template <typename F>
void for_each_monomial(int n, F&& visit) {
  for_each_colored(n, [&](const ColoredPartition& cp) { visit(from_colored(cp)); });
}

/// Weight-n monomials outside J_r, per weight 0..N.
inline std::vector<std::vector<Monomial>> standard_monomials(int r, int N) {
  detail::check_r(r);
  if (N < 0) throw std::invalid_argument("standard_monomials: N must be >= 0");
  std::vector<std::vector<Monomial>> out(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n)
    for_each_monomial(n, [&](const Monomial& m) {
      if (!in_J(m, r)) out[static_cast<size_t>(n)].push_back(m);
    });
  return out;
}

/// Hilbert function of S/J_r: the number of standard monomials per weight.
inline std::vector<long> hilbert_J(int r, int N) {
  detail::check_r(r);
  if (N < 0) throw std::invalid_argument("hilbert_J: N must be >= 0");
  std::vector<long> out(static_cast<size_t>(N) + 1, 0);
  for (int n = 0; n <= N; ++n)
    for_each_monomial(n, [&](const Monomial& m) {
      if (!in_J(m, r)) ++out[static_cast<size_t>(n)];
    });
  return out;
}

/// Hilbert function of K[z_1, z_2, ...]/(I_r, products of ell+1 variables of
/// index >= 2): counts z-monomials per weight that avoid I_r and carry at
/// most ell factors (with multiplicity) of index >= 2.
inline std::vector<long> hilbert_Gl_quotient(int r, int ell, int N) {
  detail::check_r(r);
  if (ell < 0) throw std::invalid_argument("hilbert_Gl_quotient: ell must be >= 0");
  if (N < 0) throw std::invalid_argument("hilbert_Gl_quotient: N must be >= 0");
  std::vector<long> out(static_cast<size_t>(N) + 1, 0);
  for (int n = 0; n <= N; ++n)
    for_each_partition(n, [&](const std::vector<int>& parts) {
      Monomial m;
      int above_one = 0;
      for (int p : parts) {
        m.mul_var({VarFamily::z, p});
        if (p >= 2) ++above_one;
      }
      if (above_one <= ell && !in_I(m, r)) ++out[static_cast<size_t>(n)];
    });
  return out;
}

}  // namespace arcpart
