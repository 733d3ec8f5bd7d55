#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ar/word.hpp"

namespace ar {

// plain is sigma_i (i -> i, j -> ji); standard is sigma'_i (i -> i, j -> ij).
enum class SubstitutionKind { plain, standard };

std::string_view to_string(SubstitutionKind kind);
SubstitutionKind parse_substitution_kind(std::string_view text);

// An eventually periodic sequence i_0 i_1 ... = prefix period period ...
// An empty period makes the sequence finite (usable only up to its length).
class DirectiveSequence {
 public:
  DirectiveSequence(Alphabet alphabet, std::vector<Letter> prefix, std::vector<Letter> period = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& prefix() const noexcept { return prefix_; }
  const std::vector<Letter>& period() const noexcept { return period_; }

  bool is_finite() const noexcept { return period_.empty(); }
  // Number of addressable terms; nullopt when unbounded.
  std::optional<std::size_t> horizon() const;
  bool has(std::size_t m) const noexcept { return !is_finite() || m < prefix_.size(); }
  Letter at(std::size_t m) const;
  std::vector<Letter> take(std::size_t count) const;

  // Every letter occurs infinitely often, i.e. the period uses the whole alphabet.
  bool valid() const;

  // Directive (i_n)_{n >= k}.
  DirectiveSequence shifted(std::size_t k) const;

  // Length of the prefix followed by `periods` copies of the period (for a
  // finite directive, its length).
  std::size_t span_length(std::size_t periods) const noexcept;

  // Canonical text form "prefix:(period)", "(period)" or "prefix".
  std::string to_spec() const;

  friend bool operator==(const DirectiveSequence&, const DirectiveSequence&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> prefix_;
  std::vector<Letter> period_;
};

FiniteWord apply_substitution(SubstitutionKind kind, Letter i, const FiniteWord& w);

// First `length` letters of lim sigma_{i_0} sigma_{i_1} ... sigma_{i_n}(1).
// Throws HorizonError when the directive cannot fix that many letters.
FiniteWord generate_prefix(const DirectiveSequence& directive, SubstitutionKind kind, std::size_t length);

class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(int d);
  static IncidenceMatrix identity(int d);

  int dimension() const noexcept { return d_; }
  // 1-based row and column.
  std::int64_t operator()(int row, int col) const { return entries_.at(index(row, col)); }
  std::int64_t& operator()(int row, int col) { return entries_.at(index(row, col)); }

  IncidenceMatrix operator*(const IncidenceMatrix& other) const;
  ParikhVector operator*(const ParikhVector& v) const;
  std::int64_t determinant() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t index(int row, int col) const;

  int d_;
  std::vector<std::int64_t> entries_;
};

// Column j is parikh(sigma_i(j)); identical for both kinds.
IncidenceMatrix incidence_matrix(const Alphabet& alphabet, Letter i, SubstitutionKind kind = SubstitutionKind::plain);

}  // namespace ar
