#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "ar/complexity.hpp"
#include "ar/directive.hpp"
#include "ar/error.hpp"
#include "ar/substitution.hpp"
#include "ar/suffix_automaton.hpp"

using namespace ar;

namespace {
std::set<std::string> as_strings(const std::vector<FiniteWord>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.to_string());
  return out;
}
}  // namespace

TEST_CASE("factor counts") {
  CHECK(factor_count(W("1213"), 2) == 3);
  CHECK(factor_count(W("111"), 1) == 1);
  const auto trib = generate_prefix(parse_directive("(123)"), SubstitutionKind::plain, 20000);
  CHECK(factor_count(trib, 10) == 21);
  CHECK_THROWS_AS(factor_count(W("12"), 3), RangeError);
  CHECK_THROWS_AS(factor_count(W("12"), 0), RangeError);
}

TEST_CASE("special factors") {
  auto s = special_factors(W("1213"), 1);
  CHECK(as_strings(s.right) == std::set<std::string>{"1"});
  s = special_factors(W("111"), 1);
  CHECK(s.left.empty());
  CHECK(s.right.empty());
  CHECK_THROWS_AS(special_factors(W("12"), 2), RangeError);
  const auto w = generate_prefix(parse_directive("211213:(123)"), SubstitutionKind::plain, 30000);
  for (std::size_t n = 1; n <= 30; ++n) {
    s = special_factors(w, n);
    CHECK(s.left.size() == 1);
    CHECK(s.right.size() == 1);
  }
}

TEST_CASE("suffix automaton against naive enumeration") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> letter(1, 3), len(1, 300);
  for (int trial = 0; trial < 60; ++trial) {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += static_cast<char>('0' + letter(rng));
    const auto w = W(s);
    const std::size_t max_n = std::min<std::size_t>(20, s.size());
    const SuffixAutomaton sa(w.letters(), 3);
    const auto counts = sa.factor_counts(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
      CHECK(counts[n] == oracle::factors(s, n).size());
      CHECK(factor_count(w, n) == oracle::factors(s, n).size());
      if (n < s.size()) {
        const auto sp = special_factors(w, n);
        CHECK(as_strings(sp.right) == oracle::right_specials(s, n));
        CHECK(as_strings(sp.left) == oracle::left_specials(s, n));
      }
    }
  }
}

TEST_CASE("factor sets of long AR prefixes") {
  const auto w = generate_prefix(parse_directive("1^3 2 3:(132)"), SubstitutionKind::plain, 5000);
  const auto s = w.to_string();
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(factor_count(w, n) == oracle::factors(s, n).size());
    CHECK(factor_count(w, n) <= 2 * n + 1);
  }
}

TEST_CASE("signature verdicts") {
  const auto r = check_ar_signature(parse_directive("(123)"), 20000, 30);
  CHECK(r.verdict == SignatureStatus::pass);
  REQUIRE(r.lengths.size() == 30);
  for (const auto& l : r.lengths) {
    CHECK(l.factor_count == 2 * l.n + 1);
    CHECK(l.status == SignatureStatus::pass);
  }
  for (std::size_t k = 0; k + 1 < r.lengths.size(); ++k) {
    CHECK(r.lengths[k + 1].factor_count - r.lengths[k].factor_count == r.lengths[k].right_surplus);
  }
  CHECK_THROWS_AS(check_ar_signature(parse_directive("12:(12)"), 1000, 5), InputError);
  const auto shortp = check_ar_signature(parse_directive("(123)"), 30, 30);
  CHECK(shortp.verdict != SignatureStatus::fail);
  CHECK(shortp.lengths.back().status == SignatureStatus::inconclusive);
}

TEST_CASE("non-AR words fail the signature") {
  const auto r = analyze_signature(W("123123123123123123123123"), 3);
  CHECK(r.verdict == SignatureStatus::fail);
  const auto periodic = analyze_signature(W(std::string(200, '1') + "2"), 2);
  CHECK(periodic.verdict != SignatureStatus::pass);
}
