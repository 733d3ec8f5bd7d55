// Test-only reference implementations. Deliberately naive: strings, direct
// recounts, no prefix sums, no automata.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline int count(const std::string& s, char c) { return static_cast<int>(std::count(s.begin(), s.end(), c)); }

inline std::vector<int> parikh(const std::string& s, int d = 3) {
  std::vector<int> out(d, 0);
  for (char c : s) ++out[c - '1'];
  return out;
}

// spread[n][j] for n = 1..N, j = 1..d, by recounting every window.
inline std::vector<std::vector<int>> brute_spreads(const std::string& w, std::size_t N, int d = 3) {
  std::vector<std::vector<int>> table(N + 1, std::vector<int>(d + 1, 0));
  for (std::size_t n = 1; n <= N; ++n) {
    for (int j = 1; j <= d; ++j) {
      int best = 0;
      for (std::size_t a = 0; a + n <= w.size(); ++a) {
        for (std::size_t b = 0; b + n <= w.size(); ++b) {
          const int diff = count(w.substr(a, n), static_cast<char>('0' + j)) - count(w.substr(b, n), static_cast<char>('0' + j));
          best = std::max(best, diff);
        }
      }
      table[n][j] = best;
    }
  }
  return table;
}

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t a = 0; a + n <= w.size(); ++a) out.insert(w.substr(a, n));
  return out;
}

inline std::set<std::string> right_specials(const std::string& w, std::size_t n) {
  std::map<std::string, std::set<char>> ext;
  for (std::size_t a = 0; a + n < w.size(); ++a) ext[w.substr(a, n)].insert(w[a + n]);
  std::set<std::string> out;
  for (const auto& [f, e] : ext) if (e.size() >= 2) out.insert(f);
  return out;
}

inline std::set<std::string> left_specials(const std::string& w, std::size_t n) {
  std::map<std::string, std::set<char>> ext;
  for (std::size_t a = 1; a + n <= w.size(); ++a) ext[w.substr(a, n)].insert(w[a - 1]);
  std::set<std::string> out;
  for (const auto& [f, e] : ext) if (e.size() >= 2) out.insert(f);
  return out;
}

// Fixed point of 1 -> 12, 2 -> 13, 3 -> 1.
inline std::string tribonacci(std::size_t length) {
  std::string w = "1";
  while (w.size() < length) {
    std::string next;
    for (char c : w) next += c == '1' ? "12" : c == '2' ? "13" : "1";
    w = next;
  }
  return w.substr(0, length);
}

inline std::string sigma(int i, const std::string& w, bool standard = false) {
  const char ci = static_cast<char>('0' + i);
  std::string out;
  for (char c : w) {
    if (c == ci) out += c;
    else if (standard) { out += ci; out += c; }
    else { out += c; out += ci; }
  }
  return out;
}

// sigma_{i_0} ... sigma_{i_{k-1}}(1) by explicit composition, innermost first.
inline std::string compose(const std::vector<int>& letters, bool standard = false) {
  std::string w = "1";
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = sigma(*it, w, standard);
  return w;
}

}  // namespace oracle
