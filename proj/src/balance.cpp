#include "ar/balance.hpp"

#include <algorithm>
#include <atomic>

#include "ar/error.hpp"
#include "ar/parallel.hpp"

namespace ar {

BalanceProfile::BalanceProfile(std::size_t prefix_length, std::size_t max_window, int d)
    : prefix_length_(prefix_length),
      max_window_(max_window),
      d_(d),
      cells_(max_window * static_cast<std::size_t>(d)) {}

std::size_t BalanceProfile::index(std::size_t n, Letter j) const {
  if (n < 1 || n > max_window_ || j < 1 || j > d_) throw RangeError("profile cell out of range");
  return (n - 1) * static_cast<std::size_t>(d_) + (j - 1u);
}

std::uint32_t BalanceProfile::max_spread() const noexcept {
  std::uint32_t m = 0;
  for (const auto& c : cells_) m = std::max(m, c.spread);
  return m;
}

WitnessPair BalanceProfile::witness(std::size_t n, Letter j) const {
  const SpreadCell& c = cell(n, j);
  return WitnessPair{c.max_start, c.min_start, n, j,
                     static_cast<std::int64_t>(c.max_count) - static_cast<std::int64_t>(c.min_count)};
}

namespace {

SpreadCell scan_cell(std::span<const std::uint32_t> p, std::size_t n) {
  const std::size_t last = p.size() - 1 - n;  // last valid start
  SpreadCell cell;
  cell.max_count = cell.min_count = p[n] - p[0];
  for (std::size_t s = 1; s <= last; ++s) {
    const std::uint32_t c = p[s + n] - p[s];
    if (c > cell.max_count) {
      cell.max_count = c;
      cell.max_start = s;
    } else if (c < cell.min_count) {
      cell.min_count = c;
      cell.min_start = s;
    }
  }
  cell.spread = cell.max_count - cell.min_count;
  return cell;
}

void fill_rows(const FiniteWord& w, BalanceProfile& profile, std::size_t n_lo, std::size_t n_hi) {
  const int d = w.alphabet().size();
  parallel_chunks(n_lo, n_hi, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t n = lo; n < hi; ++n) {
      for (int j = 1; j <= d; ++j) {
        const auto l = static_cast<Letter>(j);
        profile.cell(n, l) = scan_cell(w.prefix_counts(l), n);
      }
    }
  });
}

void check_window_range(const FiniteWord& w, std::size_t max_window) {
  if (max_window < 1 || max_window > w.size()) {
    throw RangeError("max window " + std::to_string(max_window) + " must be in 1.." + std::to_string(w.size()));
  }
}

}  // namespace

BalanceProfile balance_profile(const FiniteWord& w, std::size_t max_window) {
  check_window_range(w, max_window);
  BalanceProfile profile(w.size(), max_window, w.alphabet().size());
  fill_rows(w, profile, 1, max_window + 1);
  return profile;
}

BalanceVerdict check_c_balance(const FiniteWord& w, std::int64_t c, std::size_t max_window) {
  if (c < 0) throw InputError("balance constant must be non-negative");
  check_window_range(w, max_window);
  const int d = w.alphabet().size();
  if (static_cast<std::uint64_t>(c) >= max_window) return NoViolationFound{w.size(), max_window};

  BalanceProfile profile(w.size(), max_window, d);
  // Blocks of window lengths, so that small violations stop the scan early.
  const std::size_t block = std::max<std::size_t>(64, worker_count() * 16);
  for (std::size_t lo = 1; lo <= max_window; lo += block) {
    const std::size_t hi = std::min(max_window + 1, lo + block);
    fill_rows(w, profile, lo, hi);
    for (std::size_t n = lo; n < hi; ++n) {
      for (int j = 1; j <= d; ++j) {
        const auto l = static_cast<Letter>(j);
        if (profile.spread(n, l) > static_cast<std::uint64_t>(c)) return profile.witness(n, l);
      }
    }
  }
  return NoViolationFound{w.size(), max_window};
}

EqualLengthPair extract_equal_length_v1(const FiniteWord& u, const FiniteWord& v, Letter j, std::int64_t c) {
  const auto du = static_cast<std::int64_t>(u.count(j));
  const auto dv = static_cast<std::int64_t>(v.count(j));
  const auto lu = static_cast<std::int64_t>(u.size());
  const auto lv = static_cast<std::int64_t>(v.size());
  if (!(du - dv > c + std::max<std::int64_t>(0, lu - lv))) {
    throw PreconditionError("need |u|_j - |v|_j > C + max(0, |u| - |v|): " + std::to_string(du - dv) +
                            " <= " + std::to_string(c + std::max<std::int64_t>(0, lu - lv)));
  }
  // The shorter word is kept whole; any same-length factor of the longer one works.
  if (lu <= lv) return EqualLengthPair{u, v.substr(0, u.size()), 0, 0};
  return EqualLengthPair{u.substr(0, v.size()), v, 0, 0};
}

EqualLengthPair extract_equal_length_v2(const FiniteWord& u, const FiniteWord& v, Letter j, std::int64_t c, Letter i) {
  if (j == i) throw PreconditionError("letter j must differ from the substitution index i");
  for (const FiniteWord* w : {&u, &v}) {
    for (std::size_t k = 0; k + 1 < w->size(); ++k) {
      if ((*w)[k] != i && (*w)[k + 1] != i) {
        throw InputError("adjacent letters " + std::to_string((*w)[k]) + std::to_string((*w)[k + 1]) + " in " +
                         w->to_string() + ": not a factor of a sigma_" + std::to_string(i) + " image");
      }
    }
  }
  if (u.size() < v.size()) throw PreconditionError("need |u| >= |v|");
  const auto excess = static_cast<std::int64_t>(u.size() - v.size());
  const auto lhs = static_cast<std::int64_t>(u.count(j)) - static_cast<std::int64_t>(v.count(j));
  const auto rhs = c + (excess + 1) / 2;
  if (!(lhs > rhs)) {
    throw PreconditionError("need |u|_j - |v|_j > C + ceil((|u|-|v|)/2): " + std::to_string(lhs) +
                            " <= " + std::to_string(rhs));
  }
  const auto vj = static_cast<std::int64_t>(v.count(j));
  for (std::size_t offset : {std::size_t{0}, u.size() - v.size()}) {
    if (static_cast<std::int64_t>(u.window_count(offset, v.size(), j)) - vj > c) {
      return EqualLengthPair{u.substr(offset, v.size()), v, offset, 0};
    }
  }
  // Unreachable: the dropped part holds at most ceil(excess / 2) letters j.
  throw std::logic_error("equal-length extraction failed despite its hypothesis");
}

}  // namespace ar
