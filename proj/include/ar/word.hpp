#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ar {

using Letter = std::uint8_t;

// Letters are 1..size().
class Alphabet {
 public:
  explicit Alphabet(int d = 3);

  int size() const noexcept { return d_; }
  bool contains(int letter) const noexcept { return letter >= 1 && letter <= d_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int d_;
};

class ParikhDiff;

class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {}

  int dimension() const noexcept { return static_cast<int>(counts_.size()); }
  // 1-based letter access.
  std::int64_t operator[](Letter j) const { return counts_.at(j - 1u); }
  std::int64_t total() const noexcept;
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

  ParikhVector operator+(const ParikhVector& other) const;
  ParikhDiff operator-(const ParikhVector& other) const;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

class ParikhDiff {
 public:
  ParikhDiff() = default;
  explicit ParikhDiff(std::vector<std::int64_t> deltas) : deltas_(std::move(deltas)) {}

  int dimension() const noexcept { return static_cast<int>(deltas_.size()); }
  std::int64_t operator[](Letter j) const { return deltas_.at(j - 1u); }
  std::int64_t& operator[](Letter j) { return deltas_.at(j - 1u); }
  // Equals |u| - |v| for a diff of parikh(u) - parikh(v).
  std::int64_t total() const noexcept;
  std::int64_t max_abs() const noexcept;
  const std::vector<std::int64_t>& deltas() const noexcept { return deltas_; }
  std::string to_string() const;

  friend bool operator==(const ParikhDiff&, const ParikhDiff&) = default;

 private:
  std::vector<std::int64_t> deltas_;
};

// Immutable word over an alphabet with per-letter prefix counts, so that
// the number of occurrences of any letter in any window is O(1).
class FiniteWord {
 public:
  explicit FiniteWord(Alphabet alphabet = Alphabet{});
  FiniteWord(Alphabet alphabet, std::vector<Letter> letters);

  // Digit text form: "12131212". Requires d <= 9.
  static FiniteWord parse(std::string_view text, Alphabet alphabet = Alphabet{});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  // |w|_j
  std::size_t count(Letter j) const;
  // Occurrences of j in letters [start, start + len).
  std::size_t window_count(std::size_t start, std::size_t len, Letter j) const;
  // P_j as a contiguous table of size() + 1 entries.
  std::span<const std::uint32_t> prefix_counts(Letter j) const;

  ParikhVector parikh() const;
  FiniteWord substr(std::size_t start, std::size_t len) const;
  std::string to_string() const;

  FiniteWord operator+(const FiniteWord& other) const;

  // Compared letter-wise; the alphabet must match too.
  friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  void build_prefix_counts();

  Alphabet alphabet_;
  std::vector<Letter> letters_;
  std::vector<std::uint32_t> prefix_;  // d blocks of size()+1
};

ParikhVector parikh(const FiniteWord& w);
std::size_t window_count(const FiniteWord& w, std::size_t start, std::size_t len, Letter j);

// Position of the first occurrence of `needle` in `haystack`, if any.
std::optional<std::size_t> find_factor(const FiniteWord& haystack, const FiniteWord& needle);

}  // namespace ar
