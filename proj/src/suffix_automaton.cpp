#include "ar/suffix_automaton.hpp"

#include <algorithm>

#include "ar/error.hpp"

namespace ar {

SuffixAutomaton::SuffixAutomaton(std::span<const Letter> text, int d) : d_(d) {
  const auto du = static_cast<std::size_t>(d);
  states_.reserve(2 * text.size() + 1);
  next_.reserve(du * (2 * text.size() + 1));
  states_.push_back(State{});
  next_.assign(du, -1);
  std::size_t last = 0;

  auto add_state = [&](State s) {
    states_.push_back(s);
    next_.resize(next_.size() + du, -1);
    return states_.size() - 1;
  };
  auto edge = [&](std::size_t s, std::size_t a) -> std::int64_t& { return next_[s * du + a]; };

  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] < 1 || text[pos] > d) throw InputError("letter outside the alphabet");
    const std::size_t a = text[pos] - 1u;
    const std::size_t cur = add_state(State{states_[last].len + 1, -1, pos, 1});
    std::int64_t p = static_cast<std::int64_t>(last);
    while (p != -1 && edge(static_cast<std::size_t>(p), a) == -1) {
      edge(static_cast<std::size_t>(p), a) = static_cast<std::int64_t>(cur);
      p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const auto q = static_cast<std::size_t>(edge(static_cast<std::size_t>(p), a));
      if (states_[static_cast<std::size_t>(p)].len + 1 == states_[q].len) {
        states_[cur].link = static_cast<std::int64_t>(q);
      } else {
        State copy = states_[q];
        copy.len = states_[static_cast<std::size_t>(p)].len + 1;
        copy.occurrences = 0;
        const std::size_t clone = add_state(copy);
        for (std::size_t b = 0; b < du; ++b) edge(clone, b) = edge(q, b);
        while (p != -1 && edge(static_cast<std::size_t>(p), a) == static_cast<std::int64_t>(q)) {
          edge(static_cast<std::size_t>(p), a) = static_cast<std::int64_t>(clone);
          p = states_[static_cast<std::size_t>(p)].link;
        }
        states_[q].link = static_cast<std::int64_t>(clone);
        states_[cur].link = static_cast<std::int64_t>(clone);
      }
    }
    last = cur;
  }

  // End-position set sizes: push counts up the suffix links, longest first.
  std::vector<std::size_t> order(states_.size());
  for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return states_[x].len > states_[y].len; });
  for (std::size_t s : order) {
    if (states_[s].link >= 0) states_[static_cast<std::size_t>(states_[s].link)].occurrences += states_[s].occurrences;
  }
}

std::size_t SuffixAutomaton::min_length(std::size_t s) const {
  const State& st = state(s);
  return st.link < 0 ? 0 : states_[static_cast<std::size_t>(st.link)].len + 1;
}

std::int64_t SuffixAutomaton::transition(std::size_t s, Letter l) const {
  if (l < 1 || l > d_) throw InputError("letter outside the alphabet");
  return next_.at(s * static_cast<std::size_t>(d_) + (l - 1u));
}

std::size_t SuffixAutomaton::out_degree(std::size_t s) const {
  std::size_t k = 0;
  for (int a = 0; a < d_; ++a) k += next_[s * static_cast<std::size_t>(d_) + static_cast<std::size_t>(a)] >= 0 ? 1 : 0;
  return k;
}

std::vector<std::size_t> SuffixAutomaton::factor_counts(std::size_t max_n) const {
  // Difference array over the length interval of every state.
  std::vector<std::int64_t> delta(max_n + 2, 0);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    const std::size_t lo = min_length(s);
    const std::size_t hi = std::min(states_[s].len, max_n);
    if (lo > hi) continue;
    delta[lo] += 1;
    delta[hi + 1] -= 1;
  }
  std::vector<std::size_t> counts(max_n + 1, 0);
  std::int64_t running = 0;
  for (std::size_t n = 0; n <= max_n; ++n) {
    running += delta[n];
    counts[n] = static_cast<std::size_t>(running);
  }
  return counts;
}

}  // namespace ar
