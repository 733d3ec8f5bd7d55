#pragma once

#include <span>
#include <string>
#include <vector>

#include "ar/word.hpp"

namespace ar {

// The unique u' with  i^delta sigma_i(u') = u i^epsilon, where delta = 1 iff
// u starts with i and epsilon = 0 iff u ends with i.
struct DesubResult {
  FiniteWord u_prime;
  int delta = 0;
  int epsilon = 0;
  int delta_u = 0;  // epsilon - delta
};

// Throws NotAFactorError when some letter other than i is not followed by i
// in the decoded region, i.e. u is not a factor of any sigma_i image under
// the boundary convention.
DesubResult desubstitute(const FiniteWord& u, Letter i);

// Step n desubstitutes with letters[n]; entry 0 of the result is u itself
// with zeroed delta fields. Errors report the failing depth.
std::vector<DesubResult> desubstitution_chain(const FiniteWord& u, std::span<const Letter> letters);

// u^(0) = u, u^(1), ..., u^(k).
std::vector<FiniteWord> iterate_desubstitution(const FiniteWord& u, std::span<const Letter> letters);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct PreimageReport {
  Letter letter = 1;
  DesubResult result;
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
};

// Recounts u and u' and checks the boundary identity plus the length, letter
// count and shrinking relations between them.
PreimageReport verify_preimage_identities(const FiniteWord& u, Letter i);

}  // namespace ar
