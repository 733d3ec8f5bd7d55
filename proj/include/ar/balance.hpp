#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "ar/word.hpp"

namespace ar {

// Two equal-length windows of an analysed word differing in one letter count.
struct WitnessPair {
  std::size_t u_start = 0;
  std::size_t v_start = 0;
  std::size_t length = 0;
  Letter letter = 1;
  std::int64_t diff = 0;  // count in u-window minus count in v-window

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct SpreadCell {
  std::uint32_t spread = 0;
  std::uint32_t max_count = 0;
  std::uint32_t min_count = 0;
  std::size_t max_start = 0;  // smallest start realizing max_count
  std::size_t min_start = 0;  // smallest start realizing min_count
};

// For every window length n in 1..max_window and letter j, the max - min
// occurrence count of j over all length-n windows of the word.
class BalanceProfile {
 public:
  BalanceProfile(std::size_t prefix_length, std::size_t max_window, int d);

  std::size_t prefix_length() const noexcept { return prefix_length_; }
  std::size_t max_window() const noexcept { return max_window_; }
  int alphabet_size() const noexcept { return d_; }

  const SpreadCell& cell(std::size_t n, Letter j) const { return cells_.at(index(n, j)); }
  SpreadCell& cell(std::size_t n, Letter j) { return cells_.at(index(n, j)); }
  std::uint32_t spread(std::size_t n, Letter j) const { return cell(n, j).spread; }
  std::uint32_t max_spread() const noexcept;

  // The recorded max/min windows as a witness pair.
  WitnessPair witness(std::size_t n, Letter j) const;

  friend bool operator==(const BalanceProfile&, const BalanceProfile&) = default;

 private:
  std::size_t index(std::size_t n, Letter j) const;

  std::size_t prefix_length_;
  std::size_t max_window_;
  int d_;
  std::vector<SpreadCell> cells_;
};

// Exact spreads over all windows of length <= max_window inside w.
// Requires 1 <= max_window <= |w|; window lengths are split across workers.
BalanceProfile balance_profile(const FiniteWord& w, std::size_t max_window);

// Finite evidence only: the scan covers windows of length <= max_window in a
// prefix of prefix_length letters and says nothing beyond them.
struct NoViolationFound {
  std::size_t prefix_length = 0;
  std::size_t max_window = 0;

  friend bool operator==(const NoViolationFound&, const NoViolationFound&) = default;
};

using BalanceVerdict = std::variant<WitnessPair, NoViolationFound>;

inline bool is_violation(const BalanceVerdict& v) { return std::holds_alternative<WitnessPair>(v); }

// Violation for the smallest window length n (then smallest letter) whose
// spread exceeds C.
BalanceVerdict check_c_balance(const FiniteWord& w, std::int64_t c, std::size_t max_window);

struct EqualLengthPair {
  FiniteWord u_hat;
  FiniteWord v_hat;
  std::size_t u_offset = 0;  // position of u_hat inside u
  std::size_t v_offset = 0;
};

// Requires |u|_j - |v|_j > C + max(0, |u| - |v|). Returns factors of length
// min(|u|, |v|) whose j-counts differ by more than C.
EqualLengthPair extract_equal_length_v1(const FiniteWord& u, const FiniteWord& v, Letter j, std::int64_t c);

// Requires j != i, u and v decodable as sigma_i factors (no two adjacent
// letters other than i), |u| >= |v| and |u|_j - |v|_j > C + ceil((|u|-|v|)/2).
// Returns the length-|v| prefix of u (suffix as fallback) and v.
EqualLengthPair extract_equal_length_v2(const FiniteWord& u, const FiniteWord& v, Letter j, std::int64_t c, Letter i);

}  // namespace ar
