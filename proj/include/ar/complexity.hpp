#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ar/substitution.hpp"
#include "ar/word.hpp"

namespace ar {

// Number of distinct length-n factors of w; requires 1 <= n <= |w|.
std::size_t factor_count(const FiniteWord& w, std::size_t n);

struct SpecialFactors {
  std::vector<FiniteWord> left;   // factors x with ax, bx in w for letters a != b
  std::vector<FiniteWord> right;  // factors x with xa, xb in w for letters a != b
};

// Length-n special factors of w, each list in lexicographic order; requires n < |w|.
SpecialFactors special_factors(const FiniteWord& w, std::size_t n);

enum class SignatureStatus { pass, fail, inconclusive };

std::string_view to_string(SignatureStatus status);

struct LengthReport {
  std::size_t n = 0;
  std::size_t factor_count = 0;
  std::size_t expected = 0;  // (d - 1) n + 1
  std::vector<FiniteWord> left_specials;
  std::vector<FiniteWord> right_specials;
  // Sum over right special factors of (number of right extensions - 1).
  std::size_t right_surplus = 0;
  // Fewest occurrences of any length-n factor in the prefix.
  std::size_t min_occurrences = 0;
  SignatureStatus status = SignatureStatus::inconclusive;
};

struct FactorReport {
  std::size_t prefix_length = 0;
  std::vector<LengthReport> lengths;  // n = 1..max_n
  SignatureStatus verdict = SignatureStatus::inconclusive;
};

// Factor counts and special factors of a finite word for n = 1..max_n,
// judged against the Arnoux-Rauzy signature. Excess factors or specials are
// failures. A shortfall is a failure only when every length-n factor occurs
// at least twice; otherwise the prefix may just be too short (inconclusive).
FactorReport analyze_signature(const FiniteWord& w, std::size_t max_n);

// analyze_signature on the first `length` letters of the plain-generated word.
// Throws InputError for a directive that does not use every letter infinitely often.
FactorReport check_ar_signature(const DirectiveSequence& directive, std::size_t length, std::size_t max_n);

}  // namespace ar
