#include "ar/report.hpp"

#include <sstream>

namespace ar::report {

using nlohmann::json;

namespace {

json letters_json(const std::vector<Letter>& letters) {
  json out = json::array();
  for (Letter l : letters) out.push_back(static_cast<int>(l));
  return out;
}

}  // namespace

json to_json(const WitnessPair& w) {
  return {{"u_start", w.u_start}, {"v_start", w.v_start}, {"length", w.length},
          {"letter", static_cast<int>(w.letter)}, {"diff", w.diff}};
}

json to_json(const BalanceVerdict& verdict) {
  if (const auto* w = std::get_if<WitnessPair>(&verdict)) {
    return {{"status", "violation"}, {"witness", to_json(*w)}};
  }
  const auto& none = std::get<NoViolationFound>(verdict);
  return {{"status", "no_violation_found"}, {"prefix_length", none.prefix_length}, {"max_window", none.max_window}};
}

json profile_rows(const BalanceProfile& profile) {
  json rows = json::array();
  for (std::size_t n = 1; n <= profile.max_window(); ++n) {
    json row = json::array({n});
    for (int j = 1; j <= profile.alphabet_size(); ++j) row.push_back(profile.spread(n, static_cast<Letter>(j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ParikhDiff& diff) { return diff.deltas(); }

json to_json(const ConditionReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"m", v.m}, {"clause", v.clause}, {"window_start", v.window_start}, {"factor", letters_json(v.factor)}});
  }
  return {{"theorem", report.theorem},
          {"pass", report.pass},
          {"horizon", report.horizon},
          {"decisive", report.decisive},
          {"violations", violations},
          {"clean_from_shift", report.clean_from_shift ? json(*report.clean_from_shift) : json(nullptr)}};
}

json to_json(const Theorem1Report& report) {
  return {{"theorem", "1"},
          {"h", report.h ? json(*report.h) : json(nullptr)},
          {"bound", report.bound ? json(*report.bound) : json(nullptr)},
          {"horizon", report.horizon},
          {"decisive", report.decisive}};
}

json to_json(const Theorem3Match& match) {
  return {{"permutation", {match.permutation[0], match.permutation[1], match.permutation[2]}},
          {"lead_length", match.lead_length},
          {"run_length", match.run_length},
          {"terminal", match.map(match.terminal)},
          {"length", match.length},
          {"pattern", match.describe()}};
}

json to_json(const WitnessChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) {
    steps.push_back({{"level", s.level},
                     {"letter", s.letter},
                     {"delta", s.delta},
                     {"anchor", s.anchor},
                     {"diff", to_json(s.diff)},
                     {"u", s.u.to_string()},
                     {"v", s.v.to_string()}});
  }
  return {{"match", to_json(chain.match)},
          {"anchors", chain.anchors},
          {"seed", {{"level", chain.seed_level}, {"u", chain.seed_u.to_string()}, {"v", chain.seed_v.to_string()}}},
          {"steps", steps},
          {"final_diff", to_json(chain.final_diff)},
          {"located", to_json(chain.located)},
          {"verified_prefix_length", chain.verified_prefix_length}};
}

json to_json(const FactorReport& report) {
  json rows = json::array();
  for (const auto& r : report.lengths) {
    json left = json::array(), right = json::array();
    for (const auto& f : r.left_specials) left.push_back(f.to_string());
    for (const auto& f : r.right_specials) right.push_back(f.to_string());
    rows.push_back({{"n", r.n},
                    {"factors", r.factor_count},
                    {"expected", r.expected},
                    {"left_specials", left},
                    {"right_specials", right},
                    {"min_occurrences", r.min_occurrences},
                    {"status", to_string(r.status)}});
  }
  return {{"prefix_length", report.prefix_length}, {"verdict", to_string(report.verdict)}, {"lengths", rows}};
}

json to_json(const std::vector<WeakQuotient>& weak) {
  json out = json::array();
  for (const auto& q : weak) out.push_back({static_cast<int>(q.letter), q.power});
  return out;
}

json to_json(const StrongQuotients& strong) { return {{"anchors", strong.anchors}, {"quotients", strong.quotients}}; }

json desub_chain_json(const FiniteWord& input, const std::vector<Letter>& letters, const std::vector<DesubResult>& chain) {
  json steps = json::array();
  for (std::size_t n = 1; n < chain.size(); ++n) {
    steps.push_back({{"depth", n},
                     {"letter", static_cast<int>(letters[n - 1])},
                     {"u_prime", chain[n].u_prime.to_string()},
                     {"delta", chain[n].delta},
                     {"epsilon", chain[n].epsilon},
                     {"delta_u", chain[n].delta_u}});
  }
  return {{"schema", kSchema},
          {"word", input.to_string()},
          {"letters", letters_json(letters)},
          {"steps", steps},
          {"result", chain.back().u_prime.to_string()}};
}

std::string profile_tsv(const BalanceProfile& profile) {
  std::ostringstream out;
  out << "n";
  for (int j = 1; j <= profile.alphabet_size(); ++j) out << "\ts" << j;
  out << '\n';
  for (std::size_t n = 1; n <= profile.max_window(); ++n) {
    out << n;
    for (int j = 1; j <= profile.alphabet_size(); ++j) out << '\t' << profile.spread(n, static_cast<Letter>(j));
    out << '\n';
  }
  return out.str();
}

std::string complexity_tsv(const FactorReport& report) {
  std::ostringstream out;
  out << "n\tp\tleft_specials\tright_specials\tstatus\n";
  for (const auto& r : report.lengths) {
    out << r.n << '\t' << r.factor_count << '\t' << r.left_specials.size() << '\t' << r.right_specials.size() << '\t'
        << to_string(r.status) << '\n';
  }
  return out.str();
}

}  // namespace ar::report
