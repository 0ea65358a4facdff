#include "arcpart/monomials.hpp"

#include "test_support.hpp"

using namespace arcpart;

namespace {

Monomial parse_like(std::initializer_list<std::pair<Var, int>> vs) {
  Monomial m;
  for (const auto& [v, e] : vs) m.mul_var(v, e);
  return m;
}

constexpr VarFamily X = VarFamily::x;
constexpr VarFamily Y = VarFamily::y;
constexpr VarFamily Z = VarFamily::z;

}  // namespace

TEST_CASE("monomial basics", "[monomials]") {
  auto m = parse_like({{{X, 2}, 2}, {{Y, 2}, 1}, {{Z, 3}, 1}, {{Z, 4}, 1}});
  REQUIRE(m.weight() == 2 * 2 + 2 + 3 + 4);
  REQUIRE(m.degree() == 5);
  REQUIRE(m.str() == "x2^2*y2*z3*z4");
  REQUIRE(Monomial::one().is_one());
  REQUIRE(Monomial::one().weight() == 0);
  REQUIRE_THROWS_AS(Monomial().mul_var({X, 0}), std::invalid_argument);
}

TEST_CASE("monomials and colored partitions translate both ways", "[monomials]") {
  SECTION("the worked example x2^2 y2 z3 z4") {
    auto m = parse_like({{{X, 2}, 2}, {{Y, 2}, 1}, {{Z, 3}, 1}, {{Z, 4}, 1}});
    auto cp = to_colored(m);
    REQUIRE(cp.black.parts() == std::vector<int>({2, 2}));
    REQUIRE(cp.red.parts() == std::vector<int>({2}));
    REQUIRE(cp.green.parts() == std::vector<int>({4, 3}));
    REQUIRE(from_colored(cp) == m);
  }
  SECTION("the empty monomial") {
    REQUIRE(to_colored(Monomial::one()).weight() == 0);
    REQUIRE(from_colored(ColoredPartition{}) == Monomial::one());
  }
  SECTION("round trip over all small weights") {
    for (int n = 0; n <= 12; ++n)
      for_each_monomial(n, [&](const Monomial& m) {
        REQUIRE(m.weight() == n);
        auto cp = to_colored(m);
        REQUIRE(cp.weight() == n);
        REQUIRE(from_colored(cp) == m);
      });
  }
  SECTION("weight-n monomials are counted by the three-color series") {
    const int N = 12;
    auto H = partition_gf(N);
    auto h3 = H * H * H;
    for (int n = 0; n <= N; ++n) {
      long c = 0;
      for_each_monomial(n, [&](const Monomial&) { ++c; });
      REQUIRE(h3[n] == c);
    }
  }
}

TEST_CASE("membership in the green ideal", "[monomials]") {
  REQUIRE(in_I(parse_like({{{Z, 1}, 1}, {{Z, 2}, 1}}), 2));
  REQUIRE_FALSE(in_I(parse_like({{{Z, 1}, 1}, {{Z, 3}, 1}}), 2));
  REQUIRE(in_I(parse_like({{{Z, 5}, 3}}), 3));
  REQUIRE_FALSE(in_I(parse_like({{{Z, 5}, 2}}), 3));
  REQUIRE_FALSE(in_I(Monomial::one(), 2));
  SECTION("green-only monomials track the difference condition") {
    for (int n = 0; n <= 16; ++n)
      for_each_partition(n, [&](const std::vector<int>& parts) {
        Monomial m;
        for (int p : parts) m.mul_var({Z, p});
        Partition lambda(parts);
        for (int r = 2; r <= 4; ++r) {
          bool avoid = !in_I(m, r);
          REQUIRE(avoid == gordon_difference_ok(parts, r));
          REQUIRE(avoid == in_B(lambda, r, r));
        }
      });
  }
}

TEST_CASE("membership in the full ideal", "[monomials]") {
  REQUIRE(in_J(parse_like({{{X, 1}, 1}, {{Y, 1}, 1}}), 3));
  REQUIRE_FALSE(in_J(parse_like({{{X, 1}, 1}, {{Y, 1}, 1}}), 2));
  REQUIRE(in_J(parse_like({{{Z, 1}, 2}}), 2));
  REQUIRE_FALSE(in_J(Monomial::one(), 2));
  REQUIRE_FALSE(in_J(Monomial::one(), 5));
  // x1 y2 z2 at r = 2: the mixed generator class needs k+i_k-r+1 = 2 green
  // factors of index >= 2; a single z2 is not enough.
  REQUIRE_FALSE(in_J(parse_like({{{X, 1}, 1}, {{Y, 2}, 1}, {{Z, 2}, 1}}), 2));
  REQUIRE(in_J(parse_like({{{X, 1}, 1}, {{Y, 2}, 1}, {{Z, 2}, 2}}), 2));
}

TEST_CASE("ideal membership complements family membership", "[monomials]") {
  for (int n = 0; n <= 10; ++n)
    for_each_monomial(n, [&](const Monomial& m) {
      auto cp = to_colored(m);
      auto st = stats(cp);
      for (int r = 2; r <= 4; ++r)
        REQUIRE(in_J(m, r) == !in_F_intro(cp, st, r));
    });
}

TEST_CASE("Hilbert function of the quotient by the full ideal", "[monomials]") {
  auto dims = hilbert_J(2, 4);
  REQUIRE(dims == std::vector<long>({1, 3, 8, 18, 38}));
  for (int r = 2; r <= 4; ++r) {
    auto d = hilbert_J(r, 14);
    for (int n = 0; n <= 14; ++n) REQUIRE(d[static_cast<size_t>(n)] == count_F(r, n));
  }
  auto std_monos = standard_monomials(2, 3);
  REQUIRE(std_monos[0].size() == 1);
  REQUIRE(std_monos[0][0].is_one());
  REQUIRE(std_monos[2].size() == 8);
}

TEST_CASE("Hilbert function of the bounded-nonone quotient", "[monomials]") {
  REQUIRE(hilbert_Gl_quotient(2, 0, 0)[0] == 1);
  for (int r = 2; r <= 4; ++r)
    for (int ell = 0; ell <= 4; ++ell) {
      auto dims = hilbert_Gl_quotient(r, ell, 14);
      for (int n = 0; n <= 14; ++n)
        REQUIRE(dims[static_cast<size_t>(n)] == count_G(r, ell, n));
    }
  auto d1 = hilbert_Gl_quotient(2, 0, 10);
  for (int n = 0; n <= 10; ++n) REQUIRE(d1[static_cast<size_t>(n)] == count_G(2, 0, n));
  auto d2 = hilbert_Gl_quotient(3, 2, 15);
  for (int n = 0; n <= 15; ++n) REQUIRE(d2[static_cast<size_t>(n)] == count_G(3, 2, n));
}
