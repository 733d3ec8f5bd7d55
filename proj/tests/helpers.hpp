#pragma once

#include <string>
#include <vector>

#include "ar/word.hpp"

inline ar::FiniteWord W(const std::string& s) { return ar::FiniteWord::parse(s); }

inline std::vector<ar::Letter> letters_of(const std::string& s) {
  std::vector<ar::Letter> out;
  for (char c : s) out.push_back(static_cast<ar::Letter>(c - '0'));
  return out;
}
