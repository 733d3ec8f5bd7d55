#include "ar/directive.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <stdexcept>

#include "ar/error.hpp"
#include "ar/factor_scanner.hpp"

namespace ar {

namespace {

constexpr std::size_t kMaxExpandedLength = 10'000'000;

class SpecParser {
 public:
  SpecParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  DirectiveSequence parse() {
    std::vector<Letter> prefix = blocks();
    std::vector<Letter> period;
    skip_space();
    const bool colon = accept(':');
    skip_space();
    if (accept('(')) {
      period = blocks();
      if (period.empty()) throw SyntaxError("empty period", pos_);
      skip_space();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
    } else if (colon) {
      throw SyntaxError("expected '(' after ':'", pos_);
    }
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    if (prefix.empty() && period.empty()) throw SyntaxError("empty directive", 0);
    return DirectiveSequence(alphabet_, std::move(prefix), std::move(period));
  }

 private:
  std::vector<Letter> blocks() {
    std::vector<Letter> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) return out;
      const std::size_t at = pos_;
      const int letter = text_[pos_++] - '0';
      if (!alphabet_.contains(letter)) {
        throw SyntaxError("letter " + std::to_string(letter) + " outside alphabet 1.." + std::to_string(alphabet_.size()),
                          at);
      }
      std::size_t count = 1;
      skip_space();
      if (accept('^')) {
        skip_space();
        const std::size_t digits_at = pos_;
        count = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          count = count * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
          if (count > kMaxExpandedLength) throw SyntaxError("exponent too large", digits_at);
        }
        if (pos_ == digits_at) throw SyntaxError("expected exponent after '^'", pos_);
        if (count == 0) throw SyntaxError("exponent must be at least 1", digits_at);
      }
      if (out.size() + count > kMaxExpandedLength) throw SyntaxError("directive too long", at);
      out.insert(out.end(), count, static_cast<Letter>(letter));
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void require_ternary(const DirectiveSequence& directive, const char* what) {
  if (directive.alphabet().size() != 3) {
    throw PreconditionError(std::string(what) + " is defined for a 3-letter alphabet only");
  }
}

std::size_t distinct_letters(const std::vector<Letter>& s) { return std::set<Letter>(s.begin(), s.end()).size(); }

// Horizon actually examined: the request, capped by a finite directive and
// raised to `decisive` letters for an eventually periodic one.
std::size_t effective_horizon(const DirectiveSequence& directive, std::size_t requested, std::size_t decisive) {
  if (directive.is_finite()) return requested == 0 ? directive.prefix().size() : std::min(requested, directive.prefix().size());
  return std::max(requested, decisive);
}

}  // namespace

DirectiveSequence parse_directive(std::string_view spec, Alphabet alphabet) {
  return SpecParser(spec, alphabet).parse();
}

std::vector<WeakQuotient> weak_partial_quotients(const DirectiveSequence& directive, std::size_t count) {
  std::vector<WeakQuotient> out;
  if (count == 0) return out;
  const bool endless_run = !directive.is_finite() && distinct_letters(directive.period()) == 1;
  std::size_t m = 0;
  while (out.size() < count) {
    if (!directive.has(m)) {
      throw HorizonError("finite directive has only " + std::to_string(out.size()) + " weak partial quotients");
    }
    const Letter l = directive.at(m);
    std::size_t k = 0;
    while (directive.has(m) && directive.at(m) == l) {
      if (endless_run && m >= directive.prefix().size()) {
        throw HorizonError("weak partial quotient " + std::to_string(out.size()) + " is infinite");
      }
      ++k;
      ++m;
    }
    out.push_back({l, k});
  }
  return out;
}

StrongQuotients strong_partial_quotients(const DirectiveSequence& directive, std::size_t count) {
  if (!directive.is_finite() && !directive.valid()) {
    throw PreconditionError("strong partial quotients need every letter in the period");
  }
  const auto d = static_cast<std::size_t>(directive.alphabet().size());
  StrongQuotients out;
  out.anchors.push_back(0);
  std::size_t anchor = 0;
  while (out.quotients.size() < count) {
    std::vector<bool> seen(d + 1, false);
    std::size_t covered = 0;
    std::size_t m = anchor;
    for (;; ++m) {
      if (!directive.has(m)) {
        throw HorizonError("finite directive has only " + std::to_string(out.quotients.size()) +
                           " strong partial quotients");
      }
      const Letter l = directive.at(m);
      if (!seen[l]) {
        seen[l] = true;
        if (++covered == d) break;
      }
    }
    out.quotients.push_back(m - anchor);
    out.anchors.push_back(m);
    anchor = m;
  }
  return out;
}

Theorem1Report check_theorem1(const DirectiveSequence& directive, std::size_t horizon) {
  require_ternary(directive, "check_theorem1");
  Theorem1Report report;
  report.horizon = effective_horizon(directive, horizon, directive.span_length(2) + 1);
  report.decisive = !directive.is_finite();
  if (!directive.is_finite() && distinct_letters(directive.period()) == 1) {
    report.decisive = true;  // the final run never ends
    return report;
  }
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t m = 0; m < report.horizon; ++m) {
    run = (m > 0 && directive.at(m) == directive.at(m - 1)) ? run + 1 : 1;
    best = std::max(best, run);
  }
  if (best > 0) {
    report.h = best;
    report.bound = 2 * best + 1;
  }
  return report;
}

std::size_t theorem2_horizon(const DirectiveSequence& directive, std::size_t requested) {
  // Every window of five letters starting in the periodic part repeats one
  // starting in the first period.
  const std::size_t decisive = std::max(directive.span_length(2), directive.span_length(1) + 5);
  return effective_horizon(directive, requested, decisive);
}

static std::vector<Letter> available(const DirectiveSequence& directive, std::size_t horizon) {
  return directive.take(std::min(horizon, directive.horizon().value_or(horizon)));
}

std::vector<ConditionViolation> theorem2_clause_scan(const DirectiveSequence& directive, std::size_t horizon) {
  const std::vector<Letter> s = available(directive, horizon);
  std::vector<ConditionViolation> out;
  for (std::size_t m = 1; m + 2 < s.size(); ++m) {
    const bool escapes = s[m + 2] != s[m] && s[m + 2] != s[m + 1];
    if (escapes) continue;
    if (s[m - 1] == s[m] && s[m] != s[m + 1]) {
      out.push_back({m, 1, m - 1, {s.begin() + static_cast<std::ptrdiff_t>(m - 1), s.begin() + static_cast<std::ptrdiff_t>(m + 3)}});
    } else if (m >= 2 && s[m - 2] == s[m] && s[m] != s[m + 1] && s[m + 1] == s[m - 1]) {
      out.push_back({m, 2, m - 2, {s.begin() + static_cast<std::ptrdiff_t>(m - 2), s.begin() + static_cast<std::ptrdiff_t>(m + 3)}});
    }
  }
  return out;
}

const std::vector<std::vector<Letter>>& theorem2_forbidden_factors() {
  static const std::vector<std::vector<Letter>> factors = [] {
    const std::vector<std::vector<Letter>> base = {{1, 1, 2, 1}, {1, 1, 2, 2}, {1, 2, 1, 2, 1}, {1, 2, 1, 2, 2}};
    std::set<std::vector<Letter>> all;
    std::array<Letter, 3> pi{1, 2, 3};
    do {
      for (const auto& w : base) {
        std::vector<Letter> img;
        for (Letter l : w) img.push_back(pi[l - 1u]);
        all.insert(std::move(img));
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::vector<std::vector<Letter>>(all.begin(), all.end());
  }();
  return factors;
}

std::vector<ConditionViolation> theorem2_forbidden_factor_scan(const DirectiveSequence& directive, std::size_t horizon) {
  static const FactorScanner scanner(Alphabet{3}, theorem2_forbidden_factors());
  const std::vector<Letter> s = available(directive, horizon);
  std::vector<ConditionViolation> out;
  for (const auto& match : scanner.scan(s)) {
    const auto& factor = scanner.patterns()[match.pattern];
    // A length-4 factor starting at p is clause (1) at m = p + 1; a length-5
    // one is clause (2) at m = p + 2.
    const int clause = factor.size() == 4 ? 1 : 2;
    out.push_back({match.start + static_cast<std::size_t>(clause), clause, match.start, factor});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
  return out;
}

ConditionReport check_theorem2(const DirectiveSequence& directive, std::size_t horizon) {
  require_ternary(directive, "check_theorem2");
  ConditionReport report;
  report.theorem = "2";
  report.horizon = theorem2_horizon(directive, horizon);
  report.decisive = !directive.is_finite();
  report.violations = theorem2_clause_scan(directive, report.horizon);
  if (report.violations != theorem2_forbidden_factor_scan(directive, report.horizon)) {
    throw std::logic_error("clause scan and forbidden-factor scan disagree on " + directive.to_spec());
  }
  report.pass = report.violations.empty();
  std::size_t clean = 0;
  bool recurring = false;
  for (const auto& v : report.violations) {
    clean = std::max(clean, v.window_start + 1);
    if (!directive.is_finite() && v.window_start >= directive.prefix().size()) recurring = true;
  }
  if (!recurring) report.clean_from_shift = clean;
  return report;
}

std::string Theorem3Match::describe() const {
  auto letters = [&](std::initializer_list<Letter> canon) {
    std::string s = "{";
    bool first = true;
    for (Letter c : canon) {
      if (!first) s += ",";
      s += std::to_string(map(c));
      first = false;
    }
    return s + "}";
  };
  return letters({1, 3}) + "^" + std::to_string(lead_length) + " " + std::to_string(map(1)) + " " +
         std::to_string(map(2)) + "^" + std::to_string(run_length) + " " + std::to_string(map(1)) + " " +
         std::to_string(map(2)) + " " + std::to_string(map(terminal));
}

std::optional<Theorem3Match> detect_theorem3_prefix(const DirectiveSequence& directive, std::size_t horizon) {
  require_ternary(directive, "detect_theorem3_prefix");
  // Once the {1,3}* segment is left (a valid directive must leave it within
  // prefix + period letters), the rest has bounded length.
  const std::size_t limit = effective_horizon(directive, horizon, directive.span_length(3) + 5);
  const std::vector<Letter> s = directive.take(limit);

  // Automaton for {a,c}* a b* a b {a,b}: states 0..4, 4 accepting. Each live
  // state keeps the segment lengths of one path reaching it.
  struct Path {
    bool live = false;
    std::size_t lead = 0;
    std::size_t run = 0;
  };
  std::optional<Theorem3Match> best;
  std::array<Letter, 3> pi{1, 2, 3};
  do {
    const Letter a = pi[0], b = pi[1], c = pi[2];
    std::array<Path, 5> cur{};
    cur[0] = {true, 0, 0};
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      if (best && pos + 1 >= best->length) break;
      const Letter l = s[pos];
      std::array<Path, 5> next{};
      auto move = [&](int to, Path p) {
        if (!next[static_cast<std::size_t>(to)].live) next[static_cast<std::size_t>(to)] = p;
      };
      if (cur[0].live) {
        if (l == a || l == c) move(0, {true, pos + 1, 0});
        if (l == a) move(1, {true, pos, 0});
      }
      if (cur[1].live) {
        if (l == b) move(1, {true, cur[1].lead, cur[1].run + 1});
        if (l == a) move(2, cur[1]);
      }
      if (cur[2].live && l == b) move(3, cur[2]);
      if (cur[3].live && (l == a || l == b)) {
        Theorem3Match m;
        m.permutation = pi;
        m.lead_length = cur[3].lead;
        m.run_length = cur[3].run;
        m.terminal = l == a ? 1 : 2;
        m.length = pos + 1;
        if (!best || m.length < best->length) best = m;
        break;
      }
      cur = next;
      if (std::none_of(cur.begin(), cur.end(), [](const Path& p) { return p.live; })) break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

}  // namespace ar
