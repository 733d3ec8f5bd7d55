#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ar/word.hpp"

namespace ar {

// Multi-pattern matcher over letters 1..d (Aho-Corasick automaton). Reports
// every occurrence of every pattern, overlapping ones included.
class FactorScanner {
 public:
  struct Match {
    std::size_t start = 0;
    std::size_t pattern = 0;  // index into the pattern list

    friend bool operator==(const Match&, const Match&) = default;
  };

  FactorScanner(const Alphabet& alphabet, std::vector<std::vector<Letter>> patterns);

  const std::vector<std::vector<Letter>>& patterns() const noexcept { return patterns_; }
  std::size_t state_count() const noexcept { return output_.size(); }

  // Matches ordered by end position, then by pattern length (longest first).
  std::vector<Match> scan(std::span<const Letter> text) const;

 private:
  int d_;
  std::vector<std::vector<Letter>> patterns_;
  std::vector<std::size_t> delta_;                // state * d + (letter - 1)
  std::vector<std::vector<std::size_t>> output_;  // pattern ids ending at a state
};

}  // namespace ar
