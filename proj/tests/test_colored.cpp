#include "arcpart/colored.hpp"

#include <set>

#include "arcpart/identities.hpp"
#include "test_support.hpp"

using namespace arcpart;

namespace {

ColoredPartition make(std::vector<int> b, std::vector<int> r, std::vector<int> g) {
  return ColoredPartition{Partition(std::move(b)), Partition(std::move(r)),
                          Partition(std::move(g))};
}

}  // namespace

TEST_CASE("color statistics", "[colored]") {
  SECTION("the running example 7b+6r+3b+3r+1r") {
    auto cp = make({7, 3}, {6, 3, 1}, {});
    REQUIRE(cp.weight() == 20);
    auto st = stats(cp);
    REQUIRE(st.ell_b == 2);
    REQUIRE(st.ell_r == 3);
    REQUIRE(st.ell_g == 0);
    REQUIRE(st.smallest_black == 3);
    REQUIRE(st.kth_smallest_red == 6);  // reds ascending: 1, 3, 6
    REQUIRE(st.green_ones == 0);
  }
  SECTION("empty") {
    auto st = stats(make({}, {}, {}));
    REQUIRE(st.ell_b == 0);
    REQUIRE_FALSE(st.smallest_black.has_value());
    REQUIRE_FALSE(st.kth_smallest_red.has_value());
  }
  SECTION("1b+1r") {
    auto st = stats(make({1}, {1}, {}));
    REQUIRE(st.smallest_black == 1);
    REQUIRE(st.kth_smallest_red == 1);
  }
  SECTION("too few reds leaves the red statistic empty") {
    auto st = stats(make({2}, {5}, {}));
    REQUIRE(st.smallest_black == 2);
    REQUIRE_FALSE(st.kth_smallest_red.has_value());
  }
}

TEST_CASE("colored enumeration of weight two", "[colored]") {
  auto all = enumerate_colored(2);
  REQUIRE(all.size() == 9);
  std::set<std::string> got;
  for (const auto& cp : all) {
    std::string key;
    for (int p : cp.black.parts()) key += std::to_string(p) + "b";
    for (int p : cp.red.parts()) key += std::to_string(p) + "r";
    for (int p : cp.green.parts()) key += std::to_string(p) + "g";
    got.insert(key);
  }
  std::set<std::string> expected = {"2b", "2r", "2g", "1b1b", "1b1r",
                                    "1b1g", "1r1g", "1r1r", "1g1g"};
  REQUIRE(got == expected);
  REQUIRE(count_colored(0) == 1);
  REQUIRE(count_colored(5) == 108);
}

TEST_CASE("membership rules", "[colored]") {
  SECTION("two green ones fail the green constraint at r = 2") {
    REQUIRE_FALSE(in_F_intro(make({}, {}, {1, 1}), 2));
    REQUIRE(in_F_intro(make({}, {}, {1, 1}), 3));
  }
  SECTION("1b+1r flips between r = 2 and r = 3") {
    auto cp = make({1}, {1}, {});
    REQUIRE(in_F_intro(cp, 2));
    REQUIRE_FALSE(in_F_intro(cp, 3));
    REQUIRE(classify_member(cp, 2) == FType::black_red_many_reds);
    REQUIRE(classify_member(cp, 3) == FType::not_member);
  }
  SECTION("empty belongs for every r") {
    for (int r = 2; r <= 7; ++r) REQUIRE(in_F_intro(make({}, {}, {}), r));
  }
  SECTION("counts at weight two") {
    REQUIRE(count_F(2, 2) == 8);
    REQUIRE(count_F(3, 2) == 8);
    REQUIRE(count_F(4, 0) == 1);
  }
  SECTION("type examples") {
    REQUIRE(classify_member(make({3}, {}, {}), 2) == FType::one_color);
    REQUIRE(classify_member(make({2}, {}, {1}), 2) == FType::two_color_with_green);
    REQUIRE(classify_member(make({2}, {1}, {}), 2) == FType::black_red_few_reds);
    REQUIRE(classify_member(make({2}, {1}, {2}), 3) == FType::three_color_few_reds);
    // k = 1, i_1 = 2, r = 2: green budget is k+i_1-r = 1 part above one.
    REQUIRE(classify_member(make({1}, {2}, {2}), 2) == FType::three_color_many_reds);
    // Same black/red pair, but two green parts above one exhaust the budget.
    REQUIRE(classify_member(make({1}, {2}, {4, 2}), 2) == FType::not_member);
  }
}

TEST_CASE("the two descriptions agree", "[colored]") {
  for (int n = 0; n <= 12; ++n)
    for_each_colored(n, [&](const ColoredPartition& cp) {
      auto st = stats(cp);
      for (int r = 2; r <= 6; ++r)
        REQUIRE(in_F_intro(cp, st, r) == in_F_sec2(cp, st, r));
    });
}

TEST_CASE("class counts match the class series", "[colored]") {
  const int N = 10;
  for (int r : {2, 3, 4}) {
    STable t(r, N);
    std::vector<std::pair<FType, const TruncatedSeries<Int>*>> pairs = {
        {FType::one_color, &t.S1},
        {FType::two_color_with_green, &t.S2},
        {FType::black_red_few_reds, &t.S3a},
        {FType::black_red_many_reds, &t.S3b},
        {FType::three_color_few_reds, &t.S4a},
        {FType::three_color_many_reds, &t.S4b},
    };
    for (int n = 0; n <= N; ++n) {
      auto counts = count_F_by_type(r, n);
      for (const auto& [ft, series] : pairs)
        REQUIRE((*series)[n] == counts[static_cast<size_t>(ft)]);
    }
  }
}

TEST_CASE("green parts of three-color many-red members stay within budget", "[colored]") {
  for (int n = 0; n <= 12; ++n)
    for_each_colored(n, [&](const ColoredPartition& cp) {
      for (int r = 2; r <= 4; ++r) {
        if (classify_member(cp, r) != FType::three_color_many_reds) continue;
        auto st = stats(cp);
        int budget = *st.smallest_black + *st.kth_smallest_red - r;
        REQUIRE(in_B(cp.green, r, r));
        REQUIRE(st.ell_g - st.green_ones <= budget);
      }
    });
}

TEST_CASE("the common value: three colors for ones, two otherwise", "[colored]") {
  auto t0 = target_count(0);
  REQUIRE(t0.by_enumeration == 1);
  auto t1 = target_count(1);
  REQUIRE(t1.by_enumeration == 3);
  long expected[5] = {1, 3, 8, 18, 38};
  for (int n = 0; n <= 4; ++n) {
    auto tc = target_count(n);
    REQUIRE(tc.by_enumeration == expected[n]);
    REQUIRE(tc.by_series == expected[n]);
  }
  for (int n = 0; n <= 16; ++n) {
    auto tc = target_count(n);
    REQUIRE(tc.by_series == tc.by_enumeration);
  }
}

TEST_CASE("every family has the same counting function", "[colored]") {
  for (int n = 0; n <= 12; ++n) {
    long target = target_count(n).by_enumeration;
    for (int r = 2; r <= 5; ++r) REQUIRE(count_F(r, n) == target);
  }
}
