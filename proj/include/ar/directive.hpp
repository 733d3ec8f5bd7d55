#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ar/substitution.hpp"

namespace ar {

// Grammar (whitespace ignored):
//   spec   := block* [ ":" ] [ "(" block+ ")" ]      (at least one block)
//   block  := letter [ "^" count ]
// "1^3 2 3:(123)" is 11123 followed by 123 forever; "(123)" has an empty
// prefix; a spec without parentheses is a finite directive.
DirectiveSequence parse_directive(std::string_view spec, Alphabet alphabet = Alphabet{3});

struct WeakQuotient {
  Letter letter = 1;
  std::size_t power = 0;

  friend bool operator==(const WeakQuotient&, const WeakQuotient&) = default;
};

// i_0 i_1 ... = j_0^{k_0} j_1^{k_1} ...: the first `count` pairs (j_n, k_n).
// A trailing run of a finite directive counts as complete.
std::vector<WeakQuotient> weak_partial_quotients(const DirectiveSequence& directive, std::size_t count);

struct StrongQuotients {
  std::vector<std::size_t> anchors;    // n_0 = 0, n_1, ..., n_count
  std::vector<std::size_t> quotients;  // n_{l+1} - n_l

  friend bool operator==(const StrongQuotients&, const StrongQuotients&) = default;
};

// n_{l+1} is the first index at which i_{n_l} ... i_{n_{l+1}} covers the alphabet.
StrongQuotients strong_partial_quotients(const DirectiveSequence& directive, std::size_t count);

struct Theorem1Report {
  std::optional<std::size_t> h;      // largest run; nullopt when a run never ends
  std::optional<std::size_t> bound;  // 2h + 1
  std::size_t horizon = 0;           // directive letters examined
  bool decisive = false;             // horizon covers every run of the directive
};

Theorem1Report check_theorem1(const DirectiveSequence& directive, std::size_t horizon = 0);

struct ConditionViolation {
  std::size_t m = 0;
  int clause = 0;                // 1: i_{m-1} = i_m != i_{m+1};  2: i_{m-2} = i_m != i_{m+1} = i_{m-1}
  std::size_t window_start = 0;  // start of the offending directive factor
  std::vector<Letter> factor;

  friend bool operator==(const ConditionViolation&, const ConditionViolation&) = default;
};

struct ConditionReport {
  std::string theorem;
  bool pass = true;
  std::vector<ConditionViolation> violations;
  std::size_t horizon = 0;
  bool decisive = false;
  // Smallest s such that the shifted directive (i_n)_{n >= s} has no
  // violation; nullopt when violations recur in the periodic part.
  std::optional<std::size_t> clean_from_shift;
};

// Letters scanned by check_theorem2 for a requested horizon: eventually
// periodic directives are always scanned far enough to decide every m.
std::size_t theorem2_horizon(const DirectiveSequence& directive, std::size_t requested);

// The two independent routes behind check_theorem2, scanning `horizon` letters.
std::vector<ConditionViolation> theorem2_clause_scan(const DirectiveSequence& directive, std::size_t horizon);
std::vector<ConditionViolation> theorem2_forbidden_factor_scan(const DirectiveSequence& directive, std::size_t horizon);

// {1121, 1122, 12121, 12122} and their images under letter permutations.
const std::vector<std::vector<Letter>>& theorem2_forbidden_factors();

// Runs both scans (they must agree) and assembles the report. d = 3 only.
ConditionReport check_theorem2(const DirectiveSequence& directive, std::size_t horizon = 0);

// A prefix of the directive in pi({1,3}* 1 2* 1 2 {1,2}) for a letter
// permutation pi. Segments are counted in directive letters.
struct Theorem3Match {
  std::array<Letter, 3> permutation{1, 2, 3};  // permutation[k-1] = pi(k)
  std::size_t lead_length = 0;                 // the {1,3}* segment
  std::size_t run_length = 0;                  // the 2* segment
  Letter terminal = 1;                         // last letter, before applying pi (1 or 2)
  std::size_t length = 0;                      // lead_length + run_length + 4

  Letter map(Letter canonical) const { return permutation[canonical - 1u]; }
  std::string describe() const;

  friend bool operator==(const Theorem3Match&, const Theorem3Match&) = default;
};

// Shortest matching prefix over all six permutations (ties: lexicographically
// first permutation). d = 3 only.
std::optional<Theorem3Match> detect_theorem3_prefix(const DirectiveSequence& directive, std::size_t horizon = 0);

}  // namespace ar
