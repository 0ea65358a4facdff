#include "arcpart/partitions.hpp"

#include "test_support.hpp"

using namespace arcpart;

TEST_CASE("partition validation", "[partitions]") {
  REQUIRE_THROWS_AS(Partition({0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  Partition p({5, 3, 3, 1});
  REQUIRE(p.weight() == 12);
  REQUIRE(p.length() == 4);
  REQUIRE(p.smallest() == 1);
  REQUIRE(p.kth_smallest(1) == 1);
  REQUIRE(p.kth_smallest(2) == 3);
  REQUIRE(p.kth_smallest(4) == 5);
  REQUIRE(p.multiplicity(3) == 2);
}

TEST_CASE("enumeration order and counts", "[partitions]") {
  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  REQUIRE(zero[0].empty());

  auto four = enumerate_partitions(4);
  std::vector<std::vector<int>> expected = {
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(four.size() == expected.size());
  for (size_t t = 0; t < expected.size(); ++t) REQUIRE(four[t].parts() == expected[t]);

  REQUIRE(enumerate_partitions(10).size() == 42);
  REQUIRE(partition_count(10) == 42);
  for (int n = 0; n <= 25; ++n)
    REQUIRE(partition_count(n) == static_cast<long>(enumerate_partitions(n).size()));
}

TEST_CASE("Gordon family membership", "[partitions]") {
  SECTION("difference condition") {
    REQUIRE(gordon_difference_ok({4}, 2));
    REQUIRE(gordon_difference_ok({3, 1}, 2));
    REQUIRE_FALSE(gordon_difference_ok({2, 2}, 2));
    REQUIRE(gordon_difference_ok({2, 2}, 3));
  }
  SECTION("counts match the enumerated sets") {
    REQUIRE(count_B(2, 2, 4) == 2);
    auto set = enumerate_B(2, 2, 4);
    REQUIRE(set.size() == 2);
    REQUIRE(set[0].parts() == std::vector<int>{4});
    REQUIRE(set[1].parts() == std::vector<int>({3, 1}));
    REQUIRE(count_B(2, 1, 4) == 1);
    REQUIRE(count_B(3, 1, 0) == 1);
    REQUIRE(count_B(5, 5, 0) == 1);
  }
  SECTION("residue-avoiding counts") {
    REQUIRE(count_A(2, 2, 4) == 2);  // 4 and 1+1+1+1
    REQUIRE(count_A(4, 4, 0) == 1);
    REQUIRE(count_A(2, 1, 7) == count_B(2, 1, 7));
  }
  SECTION("parameter validation") {
    REQUIRE_THROWS_AS(count_B(1, 1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(count_B(2, 3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(count_A(2, 0, 3), std::invalid_argument);
  }
}

TEST_CASE("the two Gordon counts coincide", "[partitions]") {
  for (int n = 0; n <= 30; ++n)
    for (int r = 2; r <= 5; ++r)
      for (int i = 1; i <= r; ++i) REQUIRE(count_A(r, i, n) == count_B(r, i, n));
}

TEST_CASE("length-refined counts sum back to the family", "[partitions]") {
  REQUIRE(count_b(2, 2, 1, 4) == 1);
  REQUIRE(count_b(2, 2, 2, 4) == 1);
  REQUIRE(count_b(3, 3, 0, 0) == 1);
  REQUIRE(count_b(4, 0, 2, 6) == 0);  // the i = 0 convention
  for (int n = 0; n <= 18; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int i = 1; i <= r; ++i) {
        long total = 0;
        for (int m = 0; m <= n; ++m) total += count_b(r, i, m, n);
        REQUIRE(total == count_B(r, i, n));
      }
}

TEST_CASE("bounded-nonone counts", "[partitions]") {
  REQUIRE(count_G(2, 0, 0) == 1);
  REQUIRE(count_G(2, 0, 1) == 1);
  REQUIRE(count_G(2, 0, 3) == 0);
  REQUIRE(count_G(3, 1, 3) == 2);  // 3 and 2+1; 1+1+1 has too many ones
  SECTION("monotone in l and stabilizes at the full family") {
    for (int r = 2; r <= 4; ++r)
      for (int n = 0; n <= 18; ++n) {
        long prev = -1;
        for (int ell = 0; ell <= n + 1; ++ell) {
          long c = count_G(r, ell, n);
          REQUIRE(c >= prev);
          prev = c;
        }
        REQUIRE(prev == count_B(r, r, n));
      }
  }
}

TEST_CASE("successive Durfee decomposition", "[partitions]") {
  SECTION("the worked seven-row example") {
    Partition lambda({7, 7, 6, 4, 3, 3, 2});
    auto prof = durfee_profile(lambda, 4, 2);
    REQUIRE(prof.has_value());
    REQUIRE(prof->sides == std::vector<int>({4, 3, 2}));
    REQUIRE(prof->rectangle_count == 2);
    REQUIRE(prof->square_count == 1);
    REQUIRE(prof->implied_length() == lambda.length());
    REQUIRE(durfee_profile(lambda, 6, 4).has_value());
  }
  SECTION("empty partition") {
    for (int r = 2; r <= 5; ++r)
      for (int i = 1; i <= r; ++i) {
        auto prof = durfee_profile(Partition(), r, i);
        REQUIRE(prof.has_value());
        REQUIRE(prof->sides == std::vector<int>(static_cast<size_t>(r - 1), 0));
      }
  }
  SECTION("non-members have leftover rows") {
    REQUIRE_FALSE(durfee_profile(Partition({1, 1}), 2, 2).has_value());
    REQUIRE_FALSE(durfee_profile(Partition({1}), 2, 1).has_value());
  }
  SECTION("profiles are non-increasing with the right shape counts") {
    for (int n = 0; n <= 16; ++n)
      for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition lambda(parts);
        for (int r = 2; r <= 5; ++r)
          for (int i = 1; i <= r; ++i) {
            auto prof = durfee_profile(lambda, r, i);
            if (!prof) continue;
            REQUIRE(static_cast<int>(prof->sides.size()) == r - 1);
            for (size_t t = 1; t < prof->sides.size(); ++t)
              REQUIRE(prof->sides[t - 1] >= prof->sides[t]);
            if (!prof->sides.empty()) REQUIRE(prof->sides.back() >= 0);
            REQUIRE(prof->implied_length() == lambda.length());
          }
      });
  }
  SECTION("short partitions always decompose into squares") {
    for (int n = 0; n <= 18; ++n)
      for_each_partition(n, [&](const std::vector<int>& parts) {
        for (int r = 2; r <= 5; ++r)
          if (static_cast<int>(parts.size()) <= r - 1)
            REQUIRE(durfee_profile(Partition(parts), r, r).has_value());
      });
  }
}

TEST_CASE("length-refined Gordon and Durfee counts agree", "[partitions]") {
  for (int n = 0; n <= 14; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int m = 0; m <= n; ++m) REQUIRE(count_b(r, r, m, n) == count_d(r, r, m, n));
  // The refinement also holds with the ones cap active (i < r).
  for (int n = 0; n <= 12; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int i = 1; i < r; ++i)
        for (int m = 0; m <= n; ++m) REQUIRE(count_b(r, i, m, n) == count_d(r, i, m, n));
}

TEST_CASE("enumeration-backed series have the promised low coefficients", "[partitions]") {
  auto s = series_length_at_most(2, 10);
  REQUIRE(s[0] == 0);  // non-empty only
  REQUIRE(s[1] == 1);
  REQUIRE(s[4] == 3);  // 4, 3+1, 2+2
  auto sp = series_smallest_part(2, 10);
  REQUIRE(sp[2] == 1);  // 2
  REQUIRE(sp[4] == 1);  // 2+2
  REQUIRE(sp[6] == 2);  // 4+2 and 2+2+2
}
