#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ar/word.hpp"

namespace ar {

// Suffix automaton of a letter sequence over 1..d, built online in linear
// time. Each state stands for the factors whose lengths lie in
// (len(link), len], all sharing one set of end positions.
class SuffixAutomaton {
 public:
  struct State {
    std::size_t len = 0;
    std::int64_t link = -1;
    std::size_t first_end = 0;    // end index (inclusive) of the first occurrence
    std::size_t occurrences = 0;  // size of the end-position set
  };

  SuffixAutomaton(std::span<const Letter> text, int d);

  std::size_t state_count() const noexcept { return states_.size(); }
  const State& state(std::size_t s) const { return states_.at(s); }
  std::size_t min_length(std::size_t s) const;  // shortest factor of state s
  // Target state, or -1.
  std::int64_t transition(std::size_t s, Letter l) const;
  std::size_t out_degree(std::size_t s) const;

  // Entry n is the number of distinct factors of length n, n = 0..max_n.
  std::vector<std::size_t> factor_counts(std::size_t max_n) const;

 private:
  int d_;
  std::vector<State> states_;
  std::vector<std::int64_t> next_;  // state * d + (letter - 1)
};

}  // namespace ar
