#include "ar/substitution.hpp"

#include <algorithm>

#include "ar/error.hpp"

namespace ar {

std::string_view to_string(SubstitutionKind kind) {
  return kind == SubstitutionKind::plain ? "plain" : "standard";
}

SubstitutionKind parse_substitution_kind(std::string_view text) {
  if (text == "plain") return SubstitutionKind::plain;
  if (text == "standard") return SubstitutionKind::standard;
  throw InputError("unknown substitution kind '" + std::string(text) + "' (expected plain or standard)");
}

DirectiveSequence::DirectiveSequence(Alphabet alphabet, std::vector<Letter> prefix, std::vector<Letter> period)
    : alphabet_(alphabet), prefix_(std::move(prefix)), period_(std::move(period)) {
  for (const auto* seq : {&prefix_, &period_}) {
    for (Letter l : *seq) {
      if (!alphabet_.contains(l)) {
        throw InputError("directive letter " + std::to_string(l) + " exceeds alphabet size " +
                         std::to_string(alphabet_.size()));
      }
    }
  }
}

std::optional<std::size_t> DirectiveSequence::horizon() const {
  if (is_finite()) return prefix_.size();
  return std::nullopt;
}

Letter DirectiveSequence::at(std::size_t m) const {
  if (m < prefix_.size()) return prefix_[m];
  if (is_finite()) {
    throw HorizonError("directive index " + std::to_string(m) + " beyond finite horizon " +
                       std::to_string(prefix_.size()));
  }
  return period_[(m - prefix_.size()) % period_.size()];
}

std::vector<Letter> DirectiveSequence::take(std::size_t count) const {
  std::vector<Letter> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) out.push_back(at(m));
  return out;
}

bool DirectiveSequence::valid() const {
  for (int j = 1; j <= alphabet_.size(); ++j) {
    if (std::find(period_.begin(), period_.end(), static_cast<Letter>(j)) == period_.end()) return false;
  }
  return true;
}

DirectiveSequence DirectiveSequence::shifted(std::size_t k) const {
  if (k <= prefix_.size()) {
    return DirectiveSequence(alphabet_, std::vector<Letter>(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()),
                             period_);
  }
  if (is_finite()) throw HorizonError("cannot shift a finite directive past its end");
  const std::size_t r = (k - prefix_.size()) % period_.size();
  std::vector<Letter> rotated(period_.begin() + static_cast<std::ptrdiff_t>(r), period_.end());
  rotated.insert(rotated.end(), period_.begin(), period_.begin() + static_cast<std::ptrdiff_t>(r));
  return DirectiveSequence(alphabet_, {}, std::move(rotated));
}

std::size_t DirectiveSequence::span_length(std::size_t periods) const noexcept {
  return prefix_.size() + periods * period_.size();
}

std::string DirectiveSequence::to_spec() const {
  auto digits = [](const std::vector<Letter>& s) {
    std::string out;
    for (Letter l : s) out += std::to_string(l);
    return out;
  };
  if (is_finite()) return digits(prefix_);
  if (prefix_.empty()) return "(" + digits(period_) + ")";
  return digits(prefix_) + ":(" + digits(period_) + ")";
}

FiniteWord apply_substitution(SubstitutionKind kind, Letter i, const FiniteWord& w) {
  if (!w.alphabet().contains(i)) throw InputError("substitution index " + std::to_string(i) + " outside the alphabet");
  std::vector<Letter> out;
  out.reserve(2 * w.size());
  for (Letter l : w.letters()) {
    if (l == i) {
      out.push_back(i);
    } else if (kind == SubstitutionKind::plain) {
      out.push_back(l);
      out.push_back(i);
    } else {
      out.push_back(i);
      out.push_back(l);
    }
  }
  return FiniteWord(w.alphabet(), std::move(out));
}

namespace {

std::size_t common_prefix_length(const std::vector<std::vector<Letter>>& images) {
  std::size_t n = images.front().size();
  for (const auto& img : images) n = std::min(n, img.size());
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& img : images) {
      if (img[k] != images.front()[k]) return k;
    }
  }
  return n;
}

}  // namespace

FiniteWord generate_prefix(const DirectiveSequence& directive, SubstitutionKind kind, std::size_t length) {
  if (length == 0) throw InputError("prefix length must be at least 1");
  const int d = directive.alphabet().size();

  // images[a-1] is the first `length` letters of sigma_{i_0}...sigma_{i_{m-1}}(a).
  // Truncating to `length` is exact: the first `length` letters of xy depend
  // only on the first `length` letters of x and of y.
  std::vector<std::vector<Letter>> images(static_cast<std::size_t>(d));
  for (int a = 1; a <= d; ++a) images[static_cast<std::size_t>(a - 1)] = {static_cast<Letter>(a)};

  // Plain images of 1 only ever get extended on the right, so their length is
  // the number of fixed letters. Standard images all start with the image of
  // the last index, so every later image of 1 starts with their common prefix.
  auto fixed_letters = [&] {
    return kind == SubstitutionKind::plain ? images.front().size() : common_prefix_length(images);
  };

  std::size_t fixed = fixed_letters();
  std::size_t last_progress_step = 0;
  const std::size_t stall_limit = directive.prefix().size() + 2 * std::max<std::size_t>(1, directive.period().size()) + 1;
  for (std::size_t m = 0; fixed < length; ++m) {
    if (!directive.has(m)) {
      throw HorizonError("finite directive of length " + std::to_string(m) + " fixes only " + std::to_string(fixed) +
                         " of " + std::to_string(length) + " letters");
    }
    const Letter i = directive.at(m);
    const auto& img_i = images[i - 1u];
    for (int a = 1; a <= d; ++a) {
      if (a == i) continue;
      auto& img = images[static_cast<std::size_t>(a - 1)];
      if (kind == SubstitutionKind::plain) {
        const std::size_t room = length > img.size() ? length - img.size() : 0;
        img.insert(img.end(), img_i.begin(), img_i.begin() + static_cast<std::ptrdiff_t>(std::min(room, img_i.size())));
      } else {
        std::vector<Letter> next;
        next.reserve(std::min(length, img_i.size() + img.size()));
        next.insert(next.end(), img_i.begin(), img_i.end());
        const std::size_t room = length > next.size() ? length - next.size() : 0;
        next.insert(next.end(), img.begin(), img.begin() + static_cast<std::ptrdiff_t>(std::min(room, img.size())));
        img = std::move(next);
      }
    }
    const std::size_t now = fixed_letters();
    if (now > fixed) {
      fixed = now;
      last_progress_step = m;
    } else if (m - last_progress_step > stall_limit) {
      throw HorizonError("directive " + directive.to_spec() + " stops producing new letters after " +
                         std::to_string(fixed) + " letters");
    }
  }
  std::vector<Letter> word = std::move(images.front());
  word.resize(length);
  return FiniteWord(directive.alphabet(), std::move(word));
}

IncidenceMatrix::IncidenceMatrix(int d) : d_(d), entries_(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0) {
  if (d < 1) throw InputError("matrix dimension must be positive");
}

IncidenceMatrix IncidenceMatrix::identity(int d) {
  IncidenceMatrix m(d);
  for (int k = 1; k <= d; ++k) m(k, k) = 1;
  return m;
}

std::size_t IncidenceMatrix::index(int row, int col) const {
  if (row < 1 || row > d_ || col < 1 || col > d_) throw RangeError("matrix index out of range");
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(col - 1);
}

IncidenceMatrix IncidenceMatrix::operator*(const IncidenceMatrix& other) const {
  if (other.d_ != d_) throw InputError("matrix dimension mismatch");
  IncidenceMatrix out(d_);
  for (int r = 1; r <= d_; ++r) {
    for (int c = 1; c <= d_; ++c) {
      std::int64_t s = 0;
      for (int k = 1; k <= d_; ++k) s += (*this)(r, k) * other(k, c);
      out(r, c) = s;
    }
  }
  return out;
}

ParikhVector IncidenceMatrix::operator*(const ParikhVector& v) const {
  if (v.dimension() != d_) throw InputError("vector dimension mismatch");
  std::vector<std::int64_t> out(static_cast<std::size_t>(d_), 0);
  for (int r = 1; r <= d_; ++r) {
    for (int c = 1; c <= d_; ++c) out[static_cast<std::size_t>(r - 1)] += (*this)(r, c) * v[static_cast<Letter>(c)];
  }
  return ParikhVector(std::move(out));
}

// Fraction-free Bareiss elimination; exact on integers.
std::int64_t IncidenceMatrix::determinant() const {
  std::vector<std::int64_t> a = entries_;
  const auto n = static_cast<std::size_t>(d_);
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * n + c]; };
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IncidenceMatrix incidence_matrix(const Alphabet& alphabet, Letter i, SubstitutionKind /*kind*/) {
  if (!alphabet.contains(i)) throw InputError("substitution index " + std::to_string(i) + " outside the alphabet");
  const int d = alphabet.size();
  IncidenceMatrix m(d);
  for (int j = 1; j <= d; ++j) {
    m(j, j) += 1;
    if (j != i) m(i, j) += 1;
  }
  return m;
}

}  // namespace ar
