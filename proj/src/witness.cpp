#include "ar/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "ar/error.hpp"
#include "ar/parallel.hpp"

namespace ar {

LiftedPair lift_pair(const FiniteWord& u, const FiniteWord& v, Letter i, int delta) {
  if (delta < -2 || delta > 2) throw PreconditionError("lift offset must be in -2..2, got " + std::to_string(delta));
  if (delta == 2 && v.empty()) throw PreconditionError("offset +2 needs a nonempty v (no trailing letter to strip)");
  if (delta == -2 && u.empty()) throw PreconditionError("offset -2 needs a nonempty u (no trailing letter to strip)");
  const FiniteWord letter(u.alphabet(), {i});
  const FiniteWord su = apply_substitution(SubstitutionKind::plain, i, u);
  const FiniteWord sv = apply_substitution(SubstitutionKind::plain, i, v);
  auto strip = [](const FiniteWord& w) { return w.substr(0, w.size() - 1); };
  switch (delta) {
    case 1:
      return {letter + su, sv};
    case 2:
      return {letter + su, strip(sv)};
    case -1:
      return {su, letter + sv};
    case -2:
      return {strip(su), letter + sv};
    default:
      return {su, sv};
  }
}

std::optional<int> stabilizing_delta(const ParikhDiff& diff, Letter i) {
  const std::int64_t delta = diff[i] - diff.total();
  if (delta < -2 || delta > 2) return std::nullopt;
  return static_cast<int>(delta);
}

ParikhDiff lifted_diff(const ParikhDiff& diff, Letter i, int delta) {
  ParikhDiff out = diff;
  out[i] = diff.total() + delta;
  return out;
}

namespace {

using Vec3 = std::array<std::int64_t, 3>;

ParikhDiff to_real(const Theorem3Match& match, const Vec3& canonical) {
  std::vector<std::int64_t> out(3);
  for (Letter k = 1; k <= 3; ++k) out[match.map(k) - 1u] = canonical[k - 1u];
  return ParikhDiff(std::move(out));
}

Letter to_canonical(const Theorem3Match& match, Letter real) {
  for (Letter k = 1; k <= 3; ++k) {
    if (match.map(k) == real) return k;
  }
  throw std::logic_error("letter outside the permutation");
}

std::size_t find_next(const DirectiveSequence& dir, std::size_t from, std::size_t limit,
                      const std::function<bool(Letter)>& pred) {
  for (std::size_t m = from; m < limit; ++m) {
    if (!dir.has(m)) break;
    if (pred(dir.at(m))) return m;
  }
  throw HorizonError("directive " + dir.to_spec() + " has no required anchor letter before index " +
                     std::to_string(limit));
}

// Smallest generated prefix (doubling) containing both words; returns it with
// its length, or throws HorizonError at the cap.
FiniteWord prefix_containing(const DirectiveSequence& dir, const FiniteWord& u, const FiniteWord& v,
                             const ChainOptions& options, std::size_t level) {
  std::size_t length = std::max({options.initial_prefix, 4 * (u.size() + v.size()), std::size_t{1}});
  for (;;) {
    length = std::min(length, options.max_prefix);
    FiniteWord prefix = generate_prefix(dir, SubstitutionKind::plain, length);
    if (find_factor(prefix, u) && find_factor(prefix, v)) return prefix;
    if (length >= options.max_prefix) {
      throw HorizonError("level " + std::to_string(level) + " pair not found within " +
                         std::to_string(options.max_prefix) + " letters");
    }
    length *= 2;
  }
}

}  // namespace

WitnessChain construct_theorem3_witness(const DirectiveSequence& directive, const ChainOptions& options) {
  if (directive.alphabet().size() != 3) throw PreconditionError("witness construction needs a 3-letter alphabet");
  if (!directive.valid()) throw PreconditionError("directive " + directive.to_spec() + " is not valid");
  const auto match = detect_theorem3_prefix(directive);
  if (!match) throw PreconditionError("directive " + directive.to_spec() + " has no imbalance-forcing prefix");

  WitnessChain chain;
  chain.match = *match;
  const std::size_t len = match->length;
  const std::size_t search_limit = len + directive.span_length(8) + 8;
  auto canon = [&](Letter real) { return to_canonical(*match, real); };

  // Tail anchors: first non-1 letter x, then x, y, y with {x, y} = {2, 3}.
  const std::size_t tail = match->terminal == 1 ? len : len - 1;
  const std::size_t p1 = find_next(directive, tail, search_limit, [&](Letter l) { return canon(l) != 1; });
  const Letter x = canon(directive.at(p1));
  const Letter y = x == 2 ? 3 : 2;
  const std::size_t p2 = find_next(directive, p1 + 1, search_limit, [&](Letter l) { return canon(l) == x; });
  const std::size_t p3 = find_next(directive, p2 + 1, search_limit, [&](Letter l) { return canon(l) == y; });
  const std::size_t p4 = find_next(directive, p3 + 1, search_limit, [&](Letter l) { return canon(l) == y; });
  chain.anchors = {p1, p2, p3, p4};

  // Target difference vectors (canonical letters) at anchor levels.
  std::map<std::size_t, Vec3> targets;
  if (x == 2) {
    targets[p4] = {1, 0, -1};
    targets[p3] = {1, 0, -2};
    targets[p2] = {1, 1, -2};
    targets[p1] = {1, 2, -2};
  } else {
    targets[p4] = {-1, 1, 0};
    targets[p3] = {-1, 2, 0};
    targets[p2] = {-1, 2, -1};
    targets[p1] = {-1, 2, -2};
  }
  if (match->terminal == 1) targets[len - 1] = {1, 2, -2};
  targets[len - 2] = {1, 3, -2};
  targets[len - 3] = {0, 3, -2};
  targets[match->lead_length] = {-1, 3, -2};

  const Alphabet& alphabet = directive.alphabet();
  const FiniteWord one(alphabet, {match->map(1)});
  const FiniteWord empty(alphabet);
  chain.seed_level = p4 + 1;
  chain.seed_u = x == 2 ? one : empty;
  chain.seed_v = x == 2 ? empty : one;
  if (options.verify_levels) prefix_containing(directive.shifted(chain.seed_level), chain.seed_u, chain.seed_v, options, chain.seed_level);

  FiniteWord u = chain.seed_u;
  FiniteWord v = chain.seed_v;
  ParikhDiff diff = u.parikh() - v.parikh();
  for (std::size_t level = chain.seed_level; level-- > 0;) {
    const Letter i = directive.at(level);
    LiftStep step;
    step.level = level;
    step.letter = i;
    if (const auto it = targets.find(level); it != targets.end()) {
      const ParikhDiff target = to_real(*match, it->second);
      const std::int64_t delta = target[i] - diff.total();
      if (delta < -2 || delta > 2 || lifted_diff(diff, i, static_cast<int>(delta)) != target) {
        throw std::logic_error("anchor transition to " + target.to_string() + " infeasible at level " +
                               std::to_string(level));
      }
      step.delta = static_cast<int>(delta);
      step.anchor = true;
    } else {
      const auto delta = stabilizing_delta(diff, i);
      if (!delta) throw std::logic_error("no stabilizing lift for " + diff.to_string() + " at level " + std::to_string(level));
      step.delta = *delta;
    }
    auto lifted = lift_pair(u, v, i, step.delta);
    u = std::move(lifted.u);
    v = std::move(lifted.v);
    diff = lifted_diff(diff, i, step.delta);
    if (u.parikh() - v.parikh() != diff) throw std::logic_error("lift recount mismatch at level " + std::to_string(level));
    if (options.verify_levels && level > 0) prefix_containing(directive.shifted(level), u, v, options, level);
    step.diff = diff;
    step.u = u;
    step.v = v;
    chain.steps.push_back(std::move(step));
  }

  chain.final_diff = diff;
  const FiniteWord prefix = prefix_containing(directive, u, v, options, 0);
  chain.verified_prefix_length = prefix.size();
  if (u.size() != v.size()) throw std::logic_error("final witness pair has unequal lengths");
  const Letter heavy = match->map(2);
  chain.located = WitnessPair{*find_factor(prefix, u), *find_factor(prefix, v), u.size(), heavy, diff[heavy]};
  return chain;
}

std::optional<WitnessPair> brute_force_witness(const FiniteWord& w, std::int64_t c, std::size_t max_window) {
  if (c < 0) throw InputError("balance constant must be non-negative");
  const std::size_t top = std::min(max_window, w.size());
  const auto d = static_cast<std::size_t>(w.alphabet().size());
  const auto letters = w.letters();

  auto search_length = [&](std::size_t n) -> std::optional<WitnessPair> {
    std::vector<std::uint32_t> window(d, 0);
    for (std::size_t k = 0; k < n; ++k) ++window[letters[k] - 1u];
    std::vector<std::uint32_t> classes;  // distinct count vectors, d entries each
    std::vector<std::size_t> first_start;
    for (std::size_t s = 0;; ++s) {
      bool known = false;
      for (std::size_t k = 0; k < first_start.size() && !known; ++k) {
        known = std::equal(window.begin(), window.end(), classes.begin() + static_cast<std::ptrdiff_t>(k * d));
      }
      if (!known) {
        classes.insert(classes.end(), window.begin(), window.end());
        first_start.push_back(s);
      }
      if (s + n >= letters.size()) break;
      --window[letters[s] - 1u];
      ++window[letters[s + n] - 1u];
    }
    for (std::size_t a = 0; a < first_start.size(); ++a) {
      for (std::size_t b = 0; b < first_start.size(); ++b) {
        for (std::size_t j = 0; j < d; ++j) {
          const auto diff = static_cast<std::int64_t>(classes[a * d + j]) - static_cast<std::int64_t>(classes[b * d + j]);
          if (diff > c) return WitnessPair{first_start[a], first_start[b], n, static_cast<Letter>(j + 1), diff};
        }
      }
    }
    return std::nullopt;
  };

  const std::size_t block = std::max<std::size_t>(64, worker_count() * 16);
  for (std::size_t lo = 1; lo <= top; lo += block) {
    const std::size_t hi = std::min(top + 1, lo + block);
    std::vector<std::optional<WitnessPair>> found(hi - lo);
    parallel_chunks(lo, hi, [&](std::size_t a, std::size_t b) {
      for (std::size_t n = a; n < b; ++n) found[n - lo] = search_length(n);
    });
    for (auto& f : found) {
      if (f) return f;
    }
  }
  return std::nullopt;
}

}  // namespace ar
