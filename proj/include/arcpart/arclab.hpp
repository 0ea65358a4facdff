#pragma once

// Arc equations of z^r - xy through the origin, weight-graded initial-ideal
// extraction by exact elimination under configurable weighted monomial
// orders, and the comparison against J_r.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arcpart/monomials.hpp"
#include "arcpart/series.hpp"

namespace arcpart {

/// Weight-graded monomial order: total weight first, then a tie-break that
/// is either lexicographic or reverse-lexicographic with respect to a
/// variable precedence given by a family permutation refined by index.
struct MonomialOrder {
  std::array<VarFamily, 3> families;  // families[0] is the greatest family
  bool higher_index_greater = true;
  bool revlex = true;

  std::string name() const {
    std::string s;
    for (VarFamily f : families) s += family_letter(f);
    s += higher_index_greater ? "-up" : "-down";
    s += revlex ? "-revlex" : "-lex";
    return s;
  }

  int family_rank(VarFamily f) const {
    for (int i = 0; i < 3; ++i)
      if (families[static_cast<size_t>(i)] == f) return i;
    throw std::logic_error("MonomialOrder: invalid family permutation");
  }

  /// a strictly greater than b in the variable precedence.
  bool var_greater(Var a, Var b) const {
    int ra = family_rank(a.family), rb = family_rank(b.family);
    if (ra != rb) return ra < rb;
    return higher_index_greater ? a.index > b.index : a.index < b.index;
  }

  /// Strict comparison of monomials (any weights).
  bool mono_greater(const Monomial& a, const Monomial& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa > wb;
    // Merge the supports in precedence order.
    std::vector<Var> support;
    for (const auto& [v, e] : a.exponents()) support.push_back(v);
    for (const auto& [v, e] : b.exponents()) support.push_back(v);
    std::sort(support.begin(), support.end(),
              [&](Var x, Var y) { return var_greater(x, y); });
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (!revlex) {
      // lex: first difference scanning from the greatest variable down.
      for (Var v : support) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea > eb;
      }
      return false;
    }
    // revlex: first difference scanning from the least variable up; the
    // smaller exponent there belongs to the greater monomial.
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
      int ea = a.exponent(*it), eb = b.exponent(*it);
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

inline MonomialOrder default_order() {
  return MonomialOrder{{VarFamily::z, VarFamily::y, VarFamily::x}, true, true};
}

/// The twelve orders the sweep runs: every family permutation with both index
/// directions, reverse-lexicographic tie-break. Index direction is the axis
/// that decides the J_r comparison at desk scale; lex tie-breaks stay
/// reachable through the order flags.
inline std::vector<MonomialOrder> built_in_orders() {
  std::vector<MonomialOrder> out;
  std::array<VarFamily, 3> fams = {VarFamily::x, VarFamily::y, VarFamily::z};
  std::sort(fams.begin(), fams.end());
  do {
    out.push_back(MonomialOrder{fams, true, true});
    out.push_back(MonomialOrder{fams, false, true});
  } while (std::next_permutation(fams.begin(), fams.end()));
  return out;
}

inline std::optional<MonomialOrder> parse_order(const std::string& family_order,
                                                const std::string& index_dir,
                                                const std::string& tie_break) {
  if (family_order.size() != 3) return std::nullopt;
  std::array<VarFamily, 3> fams{};
  bool seen[3] = {false, false, false};
  for (int i = 0; i < 3; ++i) {
    char c = family_order[static_cast<size_t>(i)];
    int f = (c == 'x') ? 0 : (c == 'y') ? 1 : (c == 'z') ? 2 : -1;
    if (f < 0 || seen[f]) return std::nullopt;
    seen[f] = true;
    fams[static_cast<size_t>(i)] = static_cast<VarFamily>(f);
  }
  MonomialOrder ord{fams, true, true};
  if (index_dir == "up") ord.higher_index_greater = true;
  else if (index_dir == "down") ord.higher_index_greater = false;
  else return std::nullopt;
  if (tie_break == "revlex") ord.revlex = true;
  else if (tie_break == "lex") ord.revlex = false;
  else return std::nullopt;
  return ord;
}

// ---------------------------------------------------------------------------
// Arc equations
// ---------------------------------------------------------------------------

/// Weighted homogeneous polynomial: every monomial has the declared weight.
struct ArcPolynomial {
  int weight = 0;
  std::map<Monomial, Rat> terms;
};

namespace detail {

inline void add_term(ArcPolynomial& p, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = p.terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

}  // namespace detail

/// Coefficients of t^i, i = 2..N, in z(t)^r - x(t)y(t) where each coordinate
/// series starts at t^1 (arcs through the origin). In adapted mode every
/// variable v_j enters as v_j/j!, which matches the divided-power convention
/// making the full arc ideal differential. Index 0 and 1 of the result are
/// kept empty; weight i is at index i.
inline std::vector<ArcPolynomial> arc_equations(int r, int N, bool adapted) {
  detail::check_r(r);
  if (N < 2) throw std::invalid_argument("arc_equations: N must be >= 2");
  std::vector<ArcPolynomial> eqs(static_cast<size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) eqs[static_cast<size_t>(i)].weight = i;

  // -x(t) y(t)
  for (int i = 2; i <= N; ++i) {
    for (int a = 1; a <= i - 1; ++a) {
      int b = i - a;
      Monomial m;
      m.mul_var({VarFamily::x, a}).mul_var({VarFamily::y, b});
      Rat c(-1);
      if (adapted) c /= Rat(factorial(static_cast<unsigned long>(a)) *
                            factorial(static_cast<unsigned long>(b)));
      detail::add_term(eqs[static_cast<size_t>(i)], m, c);
    }
  }

  // z(t)^r: enumerate exponent multisets as partitions of i into exactly r
  // parts >= 1; the ordered-expansion multiplicity is r!/prod(mult_v!).
  for (int i = r; i <= N; ++i) {
    for_each_partition(i, i, 1, r, [&](const std::vector<int>& parts) {
      if (static_cast<int>(parts.size()) != r) return;
      Monomial m;
      Int ways = factorial(static_cast<unsigned long>(r));
      Int denom_fact = 1;
      int run = 1;
      for (size_t t = 0; t < parts.size(); ++t) {
        m.mul_var({VarFamily::z, parts[t]});
        if (t + 1 < parts.size() && parts[t + 1] == parts[t]) {
          ++run;
        } else {
          ways /= factorial(static_cast<unsigned long>(run));
          run = 1;
        }
        if (adapted) denom_fact *= factorial(static_cast<unsigned long>(parts[t]));
      }
      Rat c(ways);
      if (adapted) c /= Rat(denom_fact);
      detail::add_term(eqs[static_cast<size_t>(i)], m, c);
    });
  }
  return eqs;
}

/// The derivation v_i -> v_{i+1} extended by the Leibniz rule; raises the
/// weight by one.
inline ArcPolynomial apply_derivation(const ArcPolynomial& p) {
  ArcPolynomial out;
  out.weight = p.weight + 1;
  for (const auto& [m, c] : p.terms) {
    for (const auto& [v, e] : m.exponents()) {
      Monomial d;
      for (const auto& [w, f] : m.exponents()) {
        int keep = f - (w == v ? 1 : 0);
        if (keep > 0) d.mul_var(w, keep);
      }
      d.mul_var({v.family, v.index + 1});
      detail::add_term(out, d, c * e);
    }
  }
  return out;
}

/// Spanning set of the weight-n piece of the arc ideal: every product
/// m * Hbar_j with j = 2..n and m a monomial of weight n - j.
inline std::vector<ArcPolynomial> weight_piece_basis(int r, int n,
                                                     const std::vector<ArcPolynomial>& eqs) {
  detail::check_r(r);
  if (n < 0 || n >= static_cast<int>(eqs.size()))
    throw std::invalid_argument("weight_piece_basis: weight out of range");
  std::vector<ArcPolynomial> rows;
  for (int j = 2; j <= n; ++j) {
    const ArcPolynomial& eq = eqs[static_cast<size_t>(j)];
    if (eq.terms.empty()) continue;
    for_each_monomial(n - j, [&](const Monomial& m) {
      ArcPolynomial row;
      row.weight = n;
      for (const auto& [mono, c] : eq.terms) row.terms.emplace(m * mono, c);
      rows.push_back(std::move(row));
    });
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Initial ideal by exact elimination
// ---------------------------------------------------------------------------

struct WeightReport {
  int weight = 0;
  long monomial_count = 0;
  long ideal_dim = 0;
  long quotient_dim = 0;
  std::vector<Monomial> lead_monomials;  // descending in the chosen order
  std::optional<bool> agrees_with_J;
  std::vector<Monomial> only_in_arc;  // leading monomials absent from J_r
  std::vector<Monomial> only_in_J;    // J_r monomials that are no leading monomial
};

struct InitialIdealReport {
  int r = 0;
  int max_weight = 0;
  std::string order_name;
  bool adapted = false;
  std::vector<WeightReport> weights;  // index = weight
};

/// Default guard for the CLI: 3-colored partition counts grow quickly and
/// the elimination above this weight stops being a desk-scale run.
inline constexpr int kArcWeightCap = 12;

namespace detail {

using SparseRow = std::vector<std::pair<int, Int>>;  // sorted by column, ascending

/// Divide out the content and make the leading coefficient positive.
inline void normalize_row(SparseRow& row) {
  if (row.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : row) {
    g = int_gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

/// row <- (pl/g) * row - (rl/g) * pivot, where rl/pl are the leading
/// coefficients and g their gcd; the leading column of row cancels.
inline void eliminate_lead(SparseRow& row, const SparseRow& pivot) {
  const Int rl = row.front().second;
  const Int pl = pivot.front().second;
  Int g = int_gcd(rl, pl);
  Int row_scale = pl / g;
  Int piv_scale = rl / g;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.emplace_back(row[a].first, row[a].second * row_scale);
      ++a;
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -(pivot[b].second * piv_scale));
      ++b;
    } else {
      Int v = row[a].second * row_scale - pivot[b].second * piv_scale;
      if (v != 0) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

}  // namespace detail

/// Per weight n <= N: columns are the weight-n monomials sorted descending in
/// the order; the spanning rows are reduced to row echelon form over exact
/// integers (rows scaled by their denominator lcm, gcd-normalized after every
/// combination). The pivot columns are the weight-n monomials of the initial
/// ideal. Fully deterministic for a fixed order.
inline InitialIdealReport initial_ideal(int r, int N, const MonomialOrder& order,
                                        bool adapted) {
  detail::check_r(r);
  if (N < 0) throw std::invalid_argument("initial_ideal: N must be >= 0");
  InitialIdealReport rep;
  rep.r = r;
  rep.max_weight = N;
  rep.order_name = order.name();
  rep.adapted = adapted;
  rep.weights.resize(static_cast<size_t>(N) + 1);

  auto eqs = N >= 2 ? arc_equations(r, N, adapted) : std::vector<ArcPolynomial>{};

  for (int n = 0; n <= N; ++n) {
    WeightReport& wr = rep.weights[static_cast<size_t>(n)];
    wr.weight = n;

    std::vector<Monomial> cols;
    for_each_monomial(n, [&](const Monomial& m) { cols.push_back(m); });
    std::sort(cols.begin(), cols.end(),
              [&](const Monomial& a, const Monomial& b) { return order.mono_greater(a, b); });
    wr.monomial_count = static_cast<long>(cols.size());
    std::map<Monomial, int> col_of;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
      col_of.emplace(cols[static_cast<size_t>(c)], c);

    std::vector<detail::SparseRow> rows;
    if (n >= 2) {
      for (const ArcPolynomial& poly : weight_piece_basis(r, n, eqs)) {
        // Clear denominators; scaling a row changes neither the row space
        // nor the leading monomial.
        Int denom_lcm = 1;
        for (const auto& [m, c] : poly.terms)
          denom_lcm = int_lcm(denom_lcm, c.get_den());
        detail::SparseRow row;
        row.reserve(poly.terms.size());
        for (const auto& [m, c] : poly.terms) {
          Rat scaled = c * Rat(denom_lcm);
          row.emplace_back(col_of.at(m), Int(scaled.get_num()));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        detail::normalize_row(row);
        rows.push_back(std::move(row));
      }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.front().first < b.front().first;
    });

    std::unordered_map<int, detail::SparseRow> pivots;
    for (auto& row : rows) {
      while (!row.empty()) {
        auto it = pivots.find(row.front().first);
        if (it == pivots.end()) break;
        detail::eliminate_lead(row, it->second);
        detail::normalize_row(row);
      }
      if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
    }

    std::vector<int> pivot_cols;
    pivot_cols.reserve(pivots.size());
    for (const auto& [c, row] : pivots) pivot_cols.push_back(c);
    std::sort(pivot_cols.begin(), pivot_cols.end());
    for (int c : pivot_cols) wr.lead_monomials.push_back(cols[static_cast<size_t>(c)]);
    wr.ideal_dim = static_cast<long>(pivot_cols.size());
    wr.quotient_dim = wr.monomial_count - wr.ideal_dim;
  }
  return rep;
}

/// Fill the per-weight agreement flags against J_r, with witness monomials
/// in both directions at any divergent weight.
inline void compare_with_J(InitialIdealReport& rep) {
  for (WeightReport& wr : rep.weights) {
    std::vector<Monomial> in_j;
    for_each_monomial(wr.weight, [&](const Monomial& m) {
      if (in_J(m, rep.r)) in_j.push_back(m);
    });
    std::sort(in_j.begin(), in_j.end());
    std::vector<Monomial> leads = wr.lead_monomials;
    std::sort(leads.begin(), leads.end());
    wr.only_in_arc.clear();
    wr.only_in_J.clear();
    std::set_difference(leads.begin(), leads.end(), in_j.begin(), in_j.end(),
                        std::back_inserter(wr.only_in_arc));
    std::set_difference(in_j.begin(), in_j.end(), leads.begin(), leads.end(),
                        std::back_inserter(wr.only_in_J));
    wr.agrees_with_J = wr.only_in_arc.empty() && wr.only_in_J.empty();
  }
}

/// Expected quotient dimensions: the coefficients of H^2/(q)_1.
inline std::vector<Int> arc_quotient_target(int N) {
  auto s = series_target(N);
  return s.coeffs();
}

}  // namespace arcpart
