#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ar/balance.hpp"
#include "ar/complexity.hpp"
#include "ar/desubstitution.hpp"
#include "ar/directive.hpp"
#include "ar/witness.hpp"

namespace ar::report {

inline constexpr const char* kSchema = "ar-balance/1";

nlohmann::json to_json(const WitnessPair& w);
nlohmann::json to_json(const BalanceVerdict& verdict);
// [[n, s_1, ..., s_d], ...]
nlohmann::json profile_rows(const BalanceProfile& profile);
nlohmann::json to_json(const ParikhDiff& diff);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const Theorem1Report& report);
nlohmann::json to_json(const Theorem3Match& match);
nlohmann::json to_json(const WitnessChain& chain);
nlohmann::json to_json(const FactorReport& report);
nlohmann::json to_json(const std::vector<WeakQuotient>& weak);
nlohmann::json to_json(const StrongQuotients& strong);
nlohmann::json desub_chain_json(const FiniteWord& input, const std::vector<Letter>& letters,
                                const std::vector<DesubResult>& chain);

std::string profile_tsv(const BalanceProfile& profile);
std::string complexity_tsv(const FactorReport& report);

}  // namespace ar::report
