#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ar/balance.hpp"
#include "ar/directive.hpp"
#include "ar/substitution.hpp"
#include "ar/word.hpp"

namespace ar {

struct LiftedPair {
  FiniteWord u;
  FiniteWord v;
};

// Builds u^, v^ from sigma_i(u), sigma_i(v) by prepending i and/or removing
// the trailing i, so that
//   |u^|_i - |v^|_i = |u| - |v| + delta,  |u^|_j - |v^|_j = |u|_j - |v|_j (j != i).
// delta in -2..2; +2 needs v nonempty, -2 needs u nonempty.
LiftedPair lift_pair(const FiniteWord& u, const FiniteWord& v, Letter i, int delta);

// delta = D_i - sum(D) when |delta| <= 2: lifting through sigma_i with it
// leaves the difference vector D unchanged.
std::optional<int> stabilizing_delta(const ParikhDiff& diff, Letter i);

// Difference vector after a lift through sigma_i with offset delta.
ParikhDiff lifted_diff(const ParikhDiff& diff, Letter i, int delta);

struct LiftStep {
  std::size_t level = 0;  // the pair below is a pair of factors of omega^(level)
  Letter letter = 1;      // i_level
  int delta = 0;
  bool anchor = false;    // a prescribed transition rather than a stabilizing lift
  ParikhDiff diff;
  FiniteWord u;
  FiniteWord v;
};

struct WitnessChain {
  Theorem3Match match;
  std::vector<std::size_t> anchors;  // the four tail anchor positions, deepest last
  std::size_t seed_level = 0;
  FiniteWord seed_u;
  FiniteWord seed_v;
  std::vector<LiftStep> steps;       // from seed_level - 1 down to level 0
  ParikhDiff final_diff;
  // Level-0 pair located in the generated prefix; it has equal lengths.
  WitnessPair located;
  std::size_t verified_prefix_length = 0;

  const FiniteWord& u() const { return steps.empty() ? seed_u : steps.back().u; }
  const FiniteWord& v() const { return steps.empty() ? seed_v : steps.back().v; }
};

struct ChainOptions {
  std::size_t initial_prefix = 4096;
  std::size_t max_prefix = 1'000'000;
  // Check every intermediate pair against a prefix of omega^(level).
  bool verify_levels = true;
};

// Requires a detect_theorem3_prefix match (PreconditionError otherwise) and a valid
// directive. Locates the tail anchors 2..2..3..3 (or 3..3..2..2), seeds
// ("1","") or ("","1") past the last one and lifts down to level 0, solving
// each anchor's delta from its target vector. Throws HorizonError if a pair
// cannot be found as a factor within max_prefix letters.
WitnessChain construct_theorem3_witness(const DirectiveSequence& directive, const ChainOptions& options = {});

// Search of every window length n <= max_window for two windows whose counts
// of some letter differ by more than C. Independent of balance_profile:
// collects the distinct Parikh vectors of each length with a sliding window
// and compares all pairs of them.
std::optional<WitnessPair> brute_force_witness(const FiniteWord& w, std::int64_t c, std::size_t max_window);

}  // namespace ar
