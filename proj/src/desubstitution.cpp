#include "ar/desubstitution.hpp"

#include <algorithm>

#include "ar/error.hpp"
#include "ar/substitution.hpp"

namespace ar {

namespace {

DesubResult decode(const FiniteWord& u, Letter i, std::size_t depth) {
  if (!u.alphabet().contains(i)) throw InputError("desubstitution letter " + std::to_string(i) + " outside the alphabet");
  DesubResult r{FiniteWord(u.alphabet())};
  r.delta = (!u.empty() && u.front() == i) ? 1 : 0;
  r.epsilon = (!u.empty() && u.back() == i) ? 0 : 1;
  r.delta_u = r.epsilon - r.delta;

  // Decode u[delta..] i^epsilon: "j i" -> j for j != i, a lone "i" -> i.
  const auto src = u.letters();
  const std::size_t end = src.size() + static_cast<std::size_t>(r.epsilon);
  auto letter_at = [&](std::size_t k) { return k < src.size() ? src[k] : i; };
  std::vector<Letter> out;
  out.reserve(src.size());
  for (std::size_t k = static_cast<std::size_t>(r.delta); k < end; ++k) {
    const Letter l = letter_at(k);
    if (l != i) {
      if (k + 1 >= end || letter_at(k + 1) != i) {
        throw NotAFactorError("letter " + std::to_string(l) + " at position " + std::to_string(k) + " of " +
                                  u.to_string() + " is not followed by " + std::to_string(i),
                              depth);
      }
      ++k;
    }
    out.push_back(l);
  }
  r.u_prime = FiniteWord(u.alphabet(), std::move(out));
  return r;
}

}  // namespace

DesubResult desubstitute(const FiniteWord& u, Letter i) { return decode(u, i, 0); }

std::vector<DesubResult> desubstitution_chain(const FiniteWord& u, std::span<const Letter> letters) {
  std::vector<DesubResult> chain;
  chain.reserve(letters.size() + 1);
  chain.push_back(DesubResult{u, 0, 0, 0});
  for (std::size_t n = 0; n < letters.size(); ++n) {
    chain.push_back(decode(chain.back().u_prime, letters[n], n));
  }
  return chain;
}

std::vector<FiniteWord> iterate_desubstitution(const FiniteWord& u, std::span<const Letter> letters) {
  std::vector<FiniteWord> words;
  for (auto& step : desubstitution_chain(u, letters)) words.push_back(std::move(step.u_prime));
  return words;
}

bool PreimageReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

PreimageReport verify_preimage_identities(const FiniteWord& u, Letter i) {
  PreimageReport report;
  report.letter = i;
  report.result = desubstitute(u, i);
  const DesubResult& r = report.result;
  const FiniteWord& up = r.u_prime;
  const auto len_u = static_cast<long long>(u.size());
  const auto len_up = static_cast<long long>(up.size());
  const auto count_i = static_cast<long long>(u.count(i));

  {
    FiniteWord lhs = apply_substitution(SubstitutionKind::plain, i, up);
    if (r.delta) lhs = FiniteWord(u.alphabet(), {i}) + lhs;
    FiniteWord rhs = r.epsilon ? u + FiniteWord(u.alphabet(), {i}) : u;
    report.checks.push_back({"boundary identity", lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()});
  }
  report.checks.push_back({"length", len_up == count_i + r.delta_u,
                           std::to_string(len_up) + " vs " + std::to_string(count_i + r.delta_u)});
  {
    bool ok = true;
    std::string detail;
    for (int j = 1; j <= u.alphabet().size(); ++j) {
      const auto l = static_cast<Letter>(j);
      const auto expected = l == i ? 2 * count_i - len_u + r.delta_u : static_cast<long long>(u.count(l));
      const auto got = static_cast<long long>(up.count(l));
      if (got != expected) {
        ok = false;
        detail += "letter " + std::to_string(j) + ": " + std::to_string(got) + " vs " + std::to_string(expected) + "; ";
      }
    }
    report.checks.push_back({"letter counts", ok, detail});
  }
  {
    const bool ok = len_u >= 2 ? len_up < len_u : (len_up == 0 || len_up == 1);
    report.checks.push_back({"shrinking", ok, std::to_string(len_up) + " from " + std::to_string(len_u)});
  }
  return report;
}

}  // namespace ar
