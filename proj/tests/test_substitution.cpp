#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "ar/directive.hpp"
#include "ar/error.hpp"
#include "ar/substitution.hpp"

using namespace ar;

namespace {
const DirectiveSequence kTribonacci{Alphabet{3}, {}, {1, 2, 3}};
}

TEST_CASE("substitution images") {
  CHECK(apply_substitution(SubstitutionKind::plain, 1, W("23")).to_string() == "2131");
  CHECK(apply_substitution(SubstitutionKind::plain, 1, W("2322")).to_string() == "21312121");
  CHECK(apply_substitution(SubstitutionKind::standard, 1, W("23")).to_string() == "1213");
  CHECK(apply_substitution(SubstitutionKind::plain, 2, W("")).empty());
  CHECK_THROWS_AS(apply_substitution(SubstitutionKind::plain, 4, W("12")), InputError);
}

TEST_CASE("substitution kind names") {
  CHECK(parse_substitution_kind("plain") == SubstitutionKind::plain);
  CHECK(parse_substitution_kind("standard") == SubstitutionKind::standard);
  CHECK(to_string(SubstitutionKind::standard) == "standard");
  CHECK_THROWS_AS(parse_substitution_kind("other"), InputError);
}

TEST_CASE("generate_prefix examples") {
  CHECK(generate_prefix(kTribonacci, SubstitutionKind::plain, 1).to_string() == "1");
  CHECK(generate_prefix(kTribonacci, SubstitutionKind::standard, 9).to_string() == "121312112");
  CHECK(generate_prefix(kTribonacci, SubstitutionKind::standard, 5000).to_string() == oracle::tribonacci(5000));
  const auto dir = parse_directive("2:(123)");
  const std::string composed = oracle::compose({2, 1, 2, 3, 1, 2});
  CHECK(generate_prefix(dir, SubstitutionKind::plain, 2).to_string() == composed.substr(0, 2));
  CHECK_THROWS_AS(generate_prefix(kTribonacci, SubstitutionKind::plain, 0), InputError);
}

TEST_CASE("generate_prefix matches explicit composition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 3), plen(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Letter> prefix, period{1, 2, 3};
    for (int k = plen(rng); k > 0; --k) prefix.push_back(static_cast<Letter>(letter(rng)));
    std::shuffle(period.begin(), period.end(), rng);
    if (trial % 2) period.push_back(static_cast<Letter>(letter(rng)));
    const DirectiveSequence dir{Alphabet{3}, prefix, period};
    for (bool standard : {false, true}) {
      // Deepen by whole periods until two successive compositions agree on 300 letters.
      std::string previous;
      std::size_t agree = 0;
      for (std::size_t depth = prefix.size() + period.size(); agree < 300; depth += period.size()) {
        std::vector<int> deep;
        for (std::size_t m = 0; m < depth; ++m) deep.push_back(dir.at(m));
        const std::string composed = oracle::compose(deep, standard);
        agree = 0;
        while (agree < 300 && agree < composed.size() && agree < previous.size() && composed[agree] == previous[agree]) ++agree;
        previous = composed;
        REQUIRE(composed.size() < 5'000'000);
      }
      const auto kind = standard ? SubstitutionKind::standard : SubstitutionKind::plain;
      CHECK(generate_prefix(dir, kind, 300).to_string() == previous.substr(0, 300));
    }
  }
}

TEST_CASE("finite directives") {
  const DirectiveSequence finite{Alphabet{3}, {1, 2, 3, 1, 2, 3, 1, 2, 3}};
  const std::string composed = oracle::compose({1, 2, 3, 1, 2, 3, 1, 2, 3});
  CHECK(generate_prefix(finite, SubstitutionKind::plain, 20).to_string() == composed.substr(0, 20));
  CHECK_THROWS_AS(generate_prefix(finite, SubstitutionKind::plain, composed.size() + 1), HorizonError);
  const DirectiveSequence stalled{Alphabet{3}, {}, {1}};
  CHECK_THROWS_AS(generate_prefix(stalled, SubstitutionKind::plain, 100), HorizonError);
}

TEST_CASE("directive sequence access") {
  const DirectiveSequence dir{Alphabet{3}, {2, 1}, {1, 2, 3}};
  CHECK(dir.at(0) == 2);
  CHECK(dir.at(4) == 3);
  CHECK(dir.at(302) == 1);
  CHECK(dir.valid());
  CHECK(dir.shifted(2) == DirectiveSequence(Alphabet{3}, {}, {1, 2, 3}));
  CHECK(dir.shifted(3).take(4) == std::vector<Letter>{2, 3, 1, 2});
  CHECK(dir.to_spec() == "21:(123)");
  const DirectiveSequence finite{Alphabet{3}, {1, 2}};
  CHECK_FALSE(finite.valid());
  CHECK(finite.horizon() == std::optional<std::size_t>{2});
  CHECK_THROWS_AS(finite.at(2), HorizonError);
}

TEST_CASE("incidence matrices") {
  const auto m1 = incidence_matrix(Alphabet{3}, 1);
  CHECK(m1(1, 1) == 1);
  CHECK(m1(1, 2) == 1);
  CHECK(m1(2, 2) == 1);
  CHECK(m1(1, 3) == 1);
  CHECK(m1(3, 3) == 1);
  CHECK(m1(2, 1) == 0);
  const auto m2 = incidence_matrix(Alphabet{3}, 2);
  CHECK(m2(1, 1) == 1);
  CHECK(m2(2, 1) == 1);
  CHECK(m2(2, 2) == 1);
  CHECK(m2(2, 3) == 1);
  CHECK(m2(3, 3) == 1);
  for (Letter i = 1; i <= 3; ++i) {
    for (auto kind : {SubstitutionKind::plain, SubstitutionKind::standard}) {
      const auto m = incidence_matrix(Alphabet{3}, i, kind);
      CHECK(std::abs(m.determinant()) == 1);
      for (int c = 1; c <= 3; ++c) {
        std::int64_t sum = 0;
        for (int r = 1; r <= 3; ++r) sum += m(r, c);
        CHECK(sum == (c == i ? 1 : 2));
      }
    }
  }
}

TEST_CASE("substitution properties") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(1, 3), len(0, 40);
  auto random_word = [&] {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += static_cast<char>('0' + letter(rng));
    return W(s);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = random_word(), v = random_word();
    const auto i = static_cast<Letter>(letter(rng));
    for (auto kind : {SubstitutionKind::plain, SubstitutionKind::standard}) {
      CHECK(apply_substitution(kind, i, u + v) == apply_substitution(kind, i, u) + apply_substitution(kind, i, v));
      CHECK(apply_substitution(kind, i, u).parikh() == incidence_matrix(Alphabet{3}, i, kind) * u.parikh());
    }
    const auto image = apply_substitution(SubstitutionKind::plain, i, u);
    CHECK(image.size() == u.size() + (u.size() - u.count(i)));
    if (!u.empty()) CHECK(image.back() == i);
    if (!u.empty()) CHECK(apply_substitution(SubstitutionKind::standard, i, u).front() == i);
  }
}

TEST_CASE("abelianization of compositions") {
  const std::vector<Letter> seq{2, 1, 1, 3, 2, 3, 1};
  auto product = IncidenceMatrix::identity(3);
  for (Letter i : seq) product = product * incidence_matrix(Alphabet{3}, i);
  const std::string composed = oracle::compose(std::vector<int>(seq.begin(), seq.end()));
  CHECK(product * W("1").parikh() == W(composed).parikh());
}

TEST_CASE("prefix stability and factor sets") {
  const auto long_plain = generate_prefix(kTribonacci, SubstitutionKind::plain, 20000).to_string();
  for (std::size_t L : {1u, 7u, 100u, 4321u}) {
    CHECK(long_plain.substr(0, L) == generate_prefix(kTribonacci, SubstitutionKind::plain, L).to_string());
  }
  const auto long_standard = generate_prefix(kTribonacci, SubstitutionKind::standard, 20000).to_string();
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(oracle::factors(long_plain, n) == oracle::factors(long_standard, n));
  }
}
