#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "ar/error.hpp"
#include "ar/word.hpp"

using namespace ar;

TEST_CASE("parikh vectors") {
  CHECK(parikh(W("")).counts() == std::vector<std::int64_t>{0, 0, 0});
  CHECK(parikh(W("12131212")).counts() == std::vector<std::int64_t>{4, 3, 1});
  CHECK(parikh(W("2322")).counts() == std::vector<std::int64_t>{0, 3, 1});
}

TEST_CASE("window counts") {
  const auto w = W("1213");
  CHECK(window_count(w, 0, 2, 1) == 1);
  CHECK(window_count(w, 2, 2, 3) == 1);
  CHECK(window_count(w, 4, 0, 2) == 0);
  CHECK(window_count(w, 1, 0, 1) == 0);
  CHECK_THROWS_AS(window_count(w, 3, 2, 1), RangeError);
  CHECK_THROWS_AS(window_count(w, 5, 0, 1), RangeError);
}

TEST_CASE("parsing and validation") {
  CHECK(W("").empty());
  CHECK(W("123").to_string() == "123");
  CHECK_THROWS_AS(W("124"), InputError);
  CHECK_THROWS_AS(W("1a"), InputError);
  CHECK_THROWS_AS(W("0"), InputError);
  CHECK_THROWS_AS(Alphabet{1}, InputError);
  CHECK(FiniteWord::parse("1212", Alphabet{2}).size() == 4);
  CHECK_THROWS_AS(FiniteWord(Alphabet{2}, {1, 3}), InputError);
}

TEST_CASE("parikh differences") {
  const auto d = W("1123").parikh() - W("233").parikh();
  CHECK(d.to_string() == "(2,0,-1)");
  CHECK(d.total() == 1);
  CHECK(d.max_abs() == 2);
}

TEST_CASE("find_factor") {
  CHECK(find_factor(W("121312"), W("131")) == std::optional<std::size_t>{2});
  CHECK(find_factor(W("121312"), W("33")) == std::nullopt);
  CHECK(find_factor(W("12"), W("")) == std::optional<std::size_t>{0});
  CHECK(find_factor(W("12"), W("121")) == std::nullopt);
}

TEST_CASE("word invariants on random words") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 3), len(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::string s, t;
    for (int k = len(rng); k > 0; --k) s += static_cast<char>('0' + letter(rng));
    for (int k = len(rng); k > 0; --k) t += static_cast<char>('0' + letter(rng));
    const auto u = W(s), v = W(t);
    CHECK(u.parikh().total() == static_cast<std::int64_t>(u.size()));
    CHECK((u + v).parikh() == u.parikh() + v.parikh());
    CHECK((u.parikh() - v.parikh()).total() == static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(t.size()));
    const auto expect = oracle::parikh(s);
    for (Letter j = 1; j <= 3; ++j) {
      CHECK(window_count(u, 0, u.size(), j) == static_cast<std::size_t>(expect[j - 1]));
      const auto p = u.prefix_counts(j);
      REQUIRE(p.size() == u.size() + 1);
      CHECK(p[0] == 0);
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::uint32_t step = 0;
      for (Letter j = 1; j <= 3; ++j) {
        const auto inc = u.prefix_counts(j)[i + 1] - u.prefix_counts(j)[i];
        CHECK(inc <= 1);
        step += inc;
      }
      CHECK(step == 1);
    }
  }
}
