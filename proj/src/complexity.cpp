#include "ar/complexity.hpp"

#include <algorithm>

#include "ar/error.hpp"
#include "ar/suffix_automaton.hpp"

namespace ar {

namespace {

std::vector<Letter> reversed(std::span<const Letter> s) { return std::vector<Letter>(s.rbegin(), s.rend()); }

bool lex_less(const FiniteWord& a, const FiniteWord& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end());
}

// Length-n factors of `text` with at least two right extensions, read off
// the automaton. With `mirror`, the automaton is of the reversed word and the
// factors are turned back around (left specials of the original).
std::vector<FiniteWord> branching(const SuffixAutomaton& sam, std::span<const Letter> text, std::size_t n,
                                  const Alphabet& alphabet, bool mirror, std::size_t* surplus = nullptr) {
  std::vector<FiniteWord> out;
  for (std::size_t s = 0; s < sam.state_count(); ++s) {
    const auto& st = sam.state(s);
    if (n < sam.min_length(s) || n > st.len) continue;
    const std::size_t deg = sam.out_degree(s);
    if (deg < 2) continue;
    if (surplus) *surplus += deg - 1;
    const std::size_t end = st.first_end + 1;
    std::vector<Letter> f(text.begin() + static_cast<std::ptrdiff_t>(end - n), text.begin() + static_cast<std::ptrdiff_t>(end));
    if (mirror) std::reverse(f.begin(), f.end());
    out.emplace_back(alphabet, std::move(f));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

std::string_view to_string(SignatureStatus status) {
  switch (status) {
    case SignatureStatus::pass:
      return "pass";
    case SignatureStatus::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

std::size_t factor_count(const FiniteWord& w, std::size_t n) {
  if (n < 1 || n > w.size()) throw RangeError("factor length " + std::to_string(n) + " must be in 1.." + std::to_string(w.size()));
  return SuffixAutomaton(w.letters(), w.alphabet().size()).factor_counts(n)[n];
}

SpecialFactors special_factors(const FiniteWord& w, std::size_t n) {
  if (n >= w.size()) throw RangeError("special factor length " + std::to_string(n) + " must be below " + std::to_string(w.size()));
  const auto rev = reversed(w.letters());
  const SuffixAutomaton forward(w.letters(), w.alphabet().size());
  const SuffixAutomaton backward(rev, w.alphabet().size());
  return SpecialFactors{branching(backward, rev, n, w.alphabet(), true), branching(forward, w.letters(), n, w.alphabet(), false)};
}

FactorReport analyze_signature(const FiniteWord& w, std::size_t max_n) {
  FactorReport report;
  report.prefix_length = w.size();
  const auto d = static_cast<std::size_t>(w.alphabet().size());
  const auto rev = reversed(w.letters());
  const SuffixAutomaton forward(w.letters(), w.alphabet().size());
  const SuffixAutomaton backward(rev, w.alphabet().size());
  const auto counts = forward.factor_counts(max_n);

  std::vector<std::size_t> min_occ(max_n + 1, static_cast<std::size_t>(-1));
  for (std::size_t s = 1; s < forward.state_count(); ++s) {
    const std::size_t hi = std::min(forward.state(s).len, max_n);
    for (std::size_t n = forward.min_length(s); n <= hi; ++n) min_occ[n] = std::min(min_occ[n], forward.state(s).occurrences);
  }

  bool any_fail = false;
  bool any_inconclusive = false;
  for (std::size_t n = 1; n <= max_n; ++n) {
    LengthReport r;
    r.n = n;
    r.expected = (d - 1) * n + 1;
    if (n >= w.size()) {
      r.status = SignatureStatus::inconclusive;
      any_inconclusive = true;
      report.lengths.push_back(std::move(r));
      continue;
    }
    r.factor_count = counts[n];
    r.min_occurrences = min_occ[n];
    r.right_specials = branching(forward, w.letters(), n, w.alphabet(), false, &r.right_surplus);
    r.left_specials = branching(backward, rev, n, w.alphabet(), true);
    const bool excess = r.factor_count > r.expected || r.left_specials.size() > 1 || r.right_specials.size() > 1;
    const bool exact = r.factor_count == r.expected && r.left_specials.size() == 1 && r.right_specials.size() == 1;
    if (excess) {
      r.status = SignatureStatus::fail;
    } else if (exact) {
      r.status = SignatureStatus::pass;
    } else {
      r.status = r.min_occurrences >= 2 ? SignatureStatus::fail : SignatureStatus::inconclusive;
    }
    any_fail |= r.status == SignatureStatus::fail;
    any_inconclusive |= r.status == SignatureStatus::inconclusive;
    report.lengths.push_back(std::move(r));
  }
  report.verdict = any_fail ? SignatureStatus::fail : any_inconclusive ? SignatureStatus::inconclusive : SignatureStatus::pass;
  return report;
}

FactorReport check_ar_signature(const DirectiveSequence& directive, std::size_t length, std::size_t max_n) {
  if (!directive.valid()) {
    throw InputError("directive " + directive.to_spec() + " does not contain every letter infinitely often");
  }
  return analyze_signature(generate_prefix(directive, SubstitutionKind::plain, length), max_n);
}

}  // namespace ar
