#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "ar/balance.hpp"
#include "ar/directive.hpp"
#include "ar/error.hpp"
#include "ar/substitution.hpp"
#include "ar/witness.hpp"

using namespace ar;

namespace {
ParikhDiff diff_of(const FiniteWord& u, const FiniteWord& v) { return u.parikh() - v.parikh(); }
}

TEST_CASE("lift_pair examples") {
  auto p = lift_pair(W("2"), W(""), 1, 0);
  CHECK(p.u.to_string() == "21");
  CHECK(p.v.empty());
  CHECK(diff_of(p.u, p.v).to_string() == "(1,1,0)");
  p = lift_pair(W("2"), W("3"), 1, 2);
  CHECK(p.u.to_string() == "121");
  CHECK(p.v.to_string() == "3");
  CHECK(diff_of(p.u, p.v).to_string() == "(2,1,-1)");
  p = lift_pair(W("1"), W(""), 3, -2);
  CHECK(p.u.to_string() == "1");
  CHECK(p.v.to_string() == "3");
  CHECK(diff_of(p.u, p.v).to_string() == "(1,0,-1)");
  CHECK_THROWS_AS(lift_pair(W("1"), W(""), 2, 2), PreconditionError);
  CHECK_THROWS_AS(lift_pair(W(""), W("1"), 2, -2), PreconditionError);
  CHECK_THROWS_AS(lift_pair(W("1"), W("2"), 2, 3), PreconditionError);
}

TEST_CASE("stabilizing deltas") {
  CHECK(stabilizing_delta(ParikhDiff({1, 0, -1}), 3) == std::optional<int>{-1});
  CHECK_FALSE(stabilizing_delta(ParikhDiff({1, 2, -2}), 3).has_value());
  CHECK(stabilizing_delta(ParikhDiff({-1, 3, -2}), 3) == std::optional<int>{-2});
  CHECK(stabilizing_delta(ParikhDiff({1, 2, -2}), 1) == std::optional<int>{0});
}

TEST_CASE("abelianized lift law") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> letter(1, 3), len(0, 12), delta(-2, 2);
  auto random_word = [&] {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += static_cast<char>('0' + letter(rng));
    return W(s);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = random_word(), v = random_word();
    const auto i = static_cast<Letter>(letter(rng));
    const int d = delta(rng);
    if ((d == 2 && v.empty()) || (d == -2 && u.empty())) continue;
    const auto p = lift_pair(u, v, i, d);
    const auto before = diff_of(u, v);
    CHECK(diff_of(p.u, p.v) == lifted_diff(before, i, d));
    CHECK(diff_of(p.u, p.v)[i] == before.total() + d);
    if (const auto s = stabilizing_delta(before, i)) {
      if ((*s == 2 && v.empty()) || (*s == -2 && u.empty())) continue;
      const auto q = lift_pair(u, v, i, *s);
      CHECK(diff_of(q.u, q.v) == before);
    }
  }
}

TEST_CASE("witness chains") {
  for (const char* spec : {"12121:(231)", "112213:(123)", "1122:(123)", "312121:(123)", "23232:(312)"}) {
    CAPTURE(spec);
    const auto dir = parse_directive(spec);
    const auto chain = construct_theorem3_witness(dir);
    const auto& m = chain.match;
    CHECK(chain.u().size() == chain.v().size());
    ParikhDiff canonical(std::vector<std::int64_t>(3));
    for (Letter k = 1; k <= 3; ++k) canonical[k] = chain.final_diff[m.map(k)];
    CHECK(canonical.to_string() == "(-1,3,-2)");
    CHECK(diff_of(chain.u(), chain.v()) == chain.final_diff);
    const auto w = generate_prefix(dir, SubstitutionKind::plain, chain.verified_prefix_length);
    CHECK(find_factor(w, chain.u()).has_value());
    CHECK(find_factor(w, chain.v()).has_value());
    for (const auto& step : chain.steps) {
      const auto wm = generate_prefix(dir.shifted(step.level), SubstitutionKind::plain, 200000);
      if (step.u.size() < 5000) {
        CHECK(find_factor(wm, step.u).has_value());
        CHECK(find_factor(wm, step.v).has_value());
      }
      CHECK(diff_of(step.u, step.v) == step.diff);
    }
    const auto& loc = chain.located;
    CHECK(std::abs(loc.diff) == 3);
    CHECK(static_cast<std::int64_t>(w.window_count(loc.u_start, loc.length, loc.letter)) -
              static_cast<std::int64_t>(w.window_count(loc.v_start, loc.length, loc.letter)) == loc.diff);
  }
  CHECK_THROWS_AS(construct_theorem3_witness(parse_directive("(123)")), PreconditionError);
}

TEST_CASE("brute force witness") {
  CHECK_FALSE(brute_force_witness(W("111"), 0, 2).has_value());
  const auto trib = generate_prefix(parse_directive("(123)"), SubstitutionKind::plain, 20000);
  CHECK_FALSE(brute_force_witness(trib, 2, 500).has_value());
  const auto w = generate_prefix(parse_directive("12121:(231)"), SubstitutionKind::plain, 20000);
  const auto found = brute_force_witness(w, 2, 500);
  REQUIRE(found);
  CHECK(std::abs(found->diff) == 3);
  CHECK(static_cast<std::int64_t>(w.window_count(found->u_start, found->length, found->letter)) -
            static_cast<std::int64_t>(w.window_count(found->v_start, found->length, found->letter)) == found->diff);
  const auto viaProfile = check_c_balance(w, 2, 500);
  REQUIRE(is_violation(viaProfile));
  CHECK(std::get<WitnessPair>(viaProfile).length == found->length);
}
