#include "ar/factor_scanner.hpp"

#include <algorithm>
#include <queue>

#include "ar/error.hpp"

namespace ar {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

FactorScanner::FactorScanner(const Alphabet& alphabet, std::vector<std::vector<Letter>> patterns)
    : d_(alphabet.size()), patterns_(std::move(patterns)) {
  const auto d = static_cast<std::size_t>(d_);
  // Trie.
  delta_.assign(d, kNone);
  output_.emplace_back();
  for (std::size_t p = 0; p < patterns_.size(); ++p) {
    if (patterns_[p].empty()) throw InputError("empty forbidden factor");
    std::size_t s = 0;
    for (Letter l : patterns_[p]) {
      if (!alphabet.contains(l)) throw InputError("pattern letter outside the alphabet");
      std::size_t& next = delta_[s * d + (l - 1u)];
      if (next == kNone) {
        next = output_.size();
        output_.emplace_back();
        delta_.resize(delta_.size() + d, kNone);
      }
      s = delta_[s * d + (l - 1u)];
    }
    output_[s].push_back(p);
  }
  // Failure links folded into a complete transition table, breadth first.
  std::vector<std::size_t> fail(output_.size(), 0);
  std::queue<std::size_t> queue;
  for (std::size_t a = 0; a < d; ++a) {
    std::size_t& t = delta_[a];
    if (t == kNone) {
      t = 0;
    } else {
      fail[t] = 0;
      queue.push(t);
    }
  }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop();
    auto& out = output_[s];
    const auto& inherited = output_[fail[s]];
    out.insert(out.end(), inherited.begin(), inherited.end());
    for (std::size_t a = 0; a < d; ++a) {
      std::size_t& t = delta_[s * d + a];
      if (t == kNone) {
        t = delta_[fail[s] * d + a];
      } else {
        fail[t] = delta_[fail[s] * d + a];
        queue.push(t);
      }
    }
  }
  for (auto& out : output_) {
    std::stable_sort(out.begin(), out.end(),
                     [&](std::size_t a, std::size_t b) { return patterns_[a].size() > patterns_[b].size(); });
  }
}

std::vector<FactorScanner::Match> FactorScanner::scan(std::span<const Letter> text) const {
  std::vector<Match> matches;
  std::size_t s = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const Letter l = text[pos];
    if (l < 1 || l > d_) throw InputError("text letter outside the alphabet");
    s = delta_[s * static_cast<std::size_t>(d_) + (l - 1u)];
    for (std::size_t p : output_[s]) matches.push_back({pos + 1 - patterns_[p].size(), p});
  }
  return matches;
}

}  // namespace ar
