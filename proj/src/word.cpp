#include "ar/word.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ar/error.hpp"

namespace ar {

Alphabet::Alphabet(int d) : d_(d) {
  if (d < 2 || d > 255) {
    throw InputError("alphabet size must be in 2..255, got " + std::to_string(d));
  }
}

std::int64_t ParikhVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

ParikhVector ParikhVector::operator+(const ParikhVector& other) const {
  if (other.counts_.size() != counts_.size()) throw InputError("Parikh vector dimension mismatch");
  std::vector<std::int64_t> out(counts_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = counts_[k] + other.counts_[k];
  return ParikhVector(std::move(out));
}

ParikhDiff ParikhVector::operator-(const ParikhVector& other) const {
  if (other.counts_.size() != counts_.size()) throw InputError("Parikh vector dimension mismatch");
  std::vector<std::int64_t> out(counts_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = counts_[k] - other.counts_[k];
  return ParikhDiff(std::move(out));
}

std::int64_t ParikhDiff::total() const noexcept {
  return std::accumulate(deltas_.begin(), deltas_.end(), std::int64_t{0});
}

std::int64_t ParikhDiff::max_abs() const noexcept {
  std::int64_t m = 0;
  for (auto x : deltas_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::string ParikhDiff::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < deltas_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(deltas_[k]);
  }
  return s + ")";
}

FiniteWord::FiniteWord(Alphabet alphabet) : alphabet_(alphabet) { build_prefix_counts(); }

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!alphabet_.contains(letters_[i])) {
      throw InputError("letter " + std::to_string(letters_[i]) + " at position " + std::to_string(i) +
                       " is outside the alphabet 1.." + std::to_string(alphabet_.size()));
    }
  }
  build_prefix_counts();
}

FiniteWord FiniteWord::parse(std::string_view text, Alphabet alphabet) {
  if (alphabet.size() > 9) throw InputError("digit text form needs an alphabet of at most 9 letters");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '1' || c > '0' + alphabet.size()) {
      throw InputError(std::string("invalid letter '") + c + "' at position " + std::to_string(i));
    }
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return FiniteWord(alphabet, std::move(letters));
}

void FiniteWord::build_prefix_counts() {
  const std::size_t stride = letters_.size() + 1;
  prefix_.assign(static_cast<std::size_t>(alphabet_.size()) * stride, 0);
  for (int j = 0; j < alphabet_.size(); ++j) {
    std::uint32_t* row = prefix_.data() + static_cast<std::size_t>(j) * stride;
    const Letter letter = static_cast<Letter>(j + 1);
    for (std::size_t i = 0; i < letters_.size(); ++i) row[i + 1] = row[i] + (letters_[i] == letter ? 1u : 0u);
  }
}

std::span<const std::uint32_t> FiniteWord::prefix_counts(Letter j) const {
  if (!alphabet_.contains(j)) throw InputError("letter " + std::to_string(j) + " is outside the alphabet");
  const std::size_t stride = letters_.size() + 1;
  return {prefix_.data() + static_cast<std::size_t>(j - 1) * stride, stride};
}

std::size_t FiniteWord::count(Letter j) const { return prefix_counts(j).back(); }

std::size_t FiniteWord::window_count(std::size_t start, std::size_t len, Letter j) const {
  if (start > letters_.size() || len > letters_.size() - start) {
    throw RangeError("window [" + std::to_string(start) + ", " + std::to_string(start) + "+" + std::to_string(len) +
                     ") exceeds word length " + std::to_string(letters_.size()));
  }
  const auto p = prefix_counts(j);
  return p[start + len] - p[start];
}

ParikhVector FiniteWord::parikh() const {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(alphabet_.size()));
  for (int j = 0; j < alphabet_.size(); ++j) counts[static_cast<std::size_t>(j)] = count(static_cast<Letter>(j + 1));
  return ParikhVector(std::move(counts));
}

FiniteWord FiniteWord::substr(std::size_t start, std::size_t len) const {
  if (start > letters_.size() || len > letters_.size() - start) {
    throw RangeError("substring out of range");
  }
  return FiniteWord(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                                   letters_.begin() + static_cast<std::ptrdiff_t>(start + len)));
}

std::string FiniteWord::to_string() const {
  if (alphabet_.size() > 9) throw InputError("digit text form needs an alphabet of at most 9 letters");
  std::string s(letters_.size(), '0');
  std::transform(letters_.begin(), letters_.end(), s.begin(), [](Letter l) { return static_cast<char>('0' + l); });
  return s;
}

FiniteWord FiniteWord::operator+(const FiniteWord& other) const {
  if (!(alphabet_ == other.alphabet_)) throw InputError("cannot concatenate words over different alphabets");
  std::vector<Letter> out;
  out.reserve(letters_.size() + other.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return FiniteWord(alphabet_, std::move(out));
}

ParikhVector parikh(const FiniteWord& w) { return w.parikh(); }

std::size_t window_count(const FiniteWord& w, std::size_t start, std::size_t len, Letter j) {
  return w.window_count(start, len, j);
}

std::optional<std::size_t> find_factor(const FiniteWord& haystack, const FiniteWord& needle) {
  if (needle.empty()) return 0;
  const auto hay = haystack.letters();
  const auto pat = needle.letters();
  const auto it = std::search(hay.begin(), hay.end(), std::boyer_moore_horspool_searcher(pat.begin(), pat.end()));
  if (it == hay.end()) return std::nullopt;
  return static_cast<std::size_t>(it - hay.begin());
}

}  // namespace ar
