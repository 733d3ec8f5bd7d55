#include "ar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ar/balance.hpp"
#include "ar/complexity.hpp"
#include "ar/desubstitution.hpp"
#include "ar/directive.hpp"
#include "ar/error.hpp"
#include "ar/report.hpp"
#include "ar/substitution.hpp"
#include "ar/witness.hpp"

namespace ar::cli {

namespace {

using nlohmann::json;

struct Outcome {
  std::string text;
  int code = success;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Letter> parse_letter_list(const std::string& text, const Alphabet& alphabet) {
  std::vector<Letter> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in letter list '" + text + "'");
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(token, &used);
      if (used != token.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("invalid letter '" + token + "' in list");
    }
    if (!alphabet.contains(value)) throw InputError("letter " + token + " outside the alphabet");
    out.push_back(static_cast<Letter>(value));
  }
  if (out.empty()) throw InputError("empty letter list");
  return out;
}

json header(const RunConfig& cfg, const DirectiveSequence& dir) {
  return {{"schema", report::kSchema}, {"command", cfg.command}, {"directive", dir.to_spec()}, {"d", cfg.d}};
}

Outcome run_generate(const RunConfig& cfg) {
  const auto dir = parse_directive(cfg.directive, Alphabet{cfg.d});
  const auto kind = parse_substitution_kind(cfg.kind);
  const FiniteWord w = generate_prefix(dir, kind, cfg.length);
  if (cfg.format == "tsv") return {w.to_string() + "\n"};
  json j = header(cfg, dir);
  j["kind"] = cfg.kind;
  j["length"] = w.size();
  j["word"] = w.to_string();
  return {dump(j)};
}

Outcome run_balance(const RunConfig& cfg) {
  const auto dir = parse_directive(cfg.directive, Alphabet{cfg.d});
  const FiniteWord w = generate_prefix(dir, SubstitutionKind::plain, cfg.length);
  const BalanceProfile profile = balance_profile(w, cfg.max_window);
  std::optional<BalanceVerdict> verdict;
  if (cfg.c) verdict = check_c_balance(w, *cfg.c, cfg.max_window);
  const int code = verdict && is_violation(*verdict) ? check_failed : success;
  if (cfg.format == "tsv") {
    std::string text = report::profile_tsv(profile);
    if (verdict) text += "# verdict\t" + report::to_json(*verdict).dump() + "\n";
    return {text, code};
  }
  json j = header(cfg, dir);
  j["prefix_length"] = w.size();
  j["max_window"] = cfg.max_window;
  j["max_spread"] = profile.max_spread();
  j["profile"] = report::profile_rows(profile);
  if (verdict) {
    j["C"] = *cfg.c;
    j["verdict"] = report::to_json(*verdict);
  } else {
    j["verdict"] = nullptr;
  }
  return {dump(j), code};
}

Outcome run_desub(const RunConfig& cfg, const std::string& word, std::optional<int> letter, const std::string& iterate) {
  const Alphabet alphabet{cfg.d};
  const FiniteWord u = FiniteWord::parse(word, alphabet);
  std::vector<Letter> letters;
  if (!iterate.empty()) {
    letters = parse_letter_list(iterate, alphabet);
  } else {
    if (!alphabet.contains(*letter)) throw InputError("letter " + std::to_string(*letter) + " outside the alphabet");
    letters.push_back(static_cast<Letter>(*letter));
  }
  const auto chain = desubstitution_chain(u, letters);
  return {dump(report::desub_chain_json(u, letters, chain))};
}

Outcome run_directive_check(const RunConfig& cfg, int theorem, std::size_t horizon) {
  const auto dir = parse_directive(cfg.directive, Alphabet{cfg.d});
  json j = header(cfg, dir);
  int code = success;
  if (theorem == 1) {
    const auto r = check_theorem1(dir, horizon);
    j["report"] = report::to_json(r);
    if (!r.h) code = check_failed;
  } else if (theorem == 2) {
    const auto r = check_theorem2(dir, horizon);
    j["report"] = report::to_json(r);
    if (!r.pass) code = check_failed;
  } else {
    const auto m = detect_theorem3_prefix(dir, horizon);
    j["report"] = {{"theorem", "3"}, {"match", m ? report::to_json(*m) : json(nullptr)}};
    if (m) code = check_failed;
  }
  return {dump(j), code};
}

Outcome run_quotients(const RunConfig& cfg, std::size_t count, const std::string& kind) {
  const auto dir = parse_directive(cfg.directive, Alphabet{cfg.d});
  json j = header(cfg, dir);
  j["kind"] = kind;
  if (kind == "weak") {
    const auto weak = weak_partial_quotients(dir, count);
    if (cfg.format == "tsv") {
      std::string text = "letter\tpower\n";
      for (const auto& q : weak) text += std::to_string(q.letter) + "\t" + std::to_string(q.power) + "\n";
      return {text};
    }
    j["quotients"] = report::to_json(weak);
  } else {
    const auto strong = strong_partial_quotients(dir, count);
    if (cfg.format == "tsv") {
      std::string text = "anchor\tquotient\n";
      for (std::size_t k = 0; k < strong.quotients.size(); ++k) {
        text += std::to_string(strong.anchors[k]) + "\t" + std::to_string(strong.quotients[k]) + "\n";
      }
      return {text};
    }
    j["quotients"] = report::to_json(strong);
  }
  return {dump(j)};
}

Outcome run_complexity(const RunConfig& cfg, std::size_t max_n) {
  const auto dir = parse_directive(cfg.directive, Alphabet{cfg.d});
  const auto r = check_ar_signature(dir, cfg.length, max_n);
  const int code = r.verdict == SignatureStatus::fail ? check_failed : success;
  if (cfg.format == "tsv") return {report::complexity_tsv(r), code};
  json j = header(cfg, dir);
  j["report"] = report::to_json(r);
  return {dump(j), code};
}

Outcome run_witness(const RunConfig& cfg, bool construct) {
  const auto dir = parse_directive(cfg.directive, Alphabet{cfg.d});
  const std::int64_t c = cfg.c.value_or(2);
  const FiniteWord w = generate_prefix(dir, SubstitutionKind::plain, cfg.length);
  const std::size_t max_window = std::min(cfg.max_window, w.size());
  const auto found = brute_force_witness(w, c, max_window);
  json j = header(cfg, dir);
  j["C"] = c;
  j["prefix_length"] = w.size();
  j["max_window"] = max_window;
  j["brute_force"] = found ? report::to_json(*found) : json(nullptr);
  bool violation = found.has_value();
  if (construct) {
    const auto chain = construct_theorem3_witness(dir);
    j["chain"] = report::to_json(chain);
    violation = violation || chain.final_diff.max_abs() > c;
  }
  return {dump(j), violation ? check_failed : success};
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-d,--alphabet", cfg.d, "Alphabet size (letters 1..d)")->check(CLI::Range(2, 9));
  sub->add_option("-o,--output", cfg.output, "Write the report to this file");
}

void add_directive(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--directive", cfg.directive, "Directive spec, e.g. \"1^3 2 3:(123)\"")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arnoux-Rauzy words: generation, balance profiles, desubstitution and directive checks", "arword"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string word, iterate, quotient_kind = "weak";
  std::optional<int> letter;
  int theorem = 2;
  std::size_t horizon = 0, count = 10, max_n = 50;
  bool construct = false;
  std::int64_t c_value = 2;

  auto* generate = app.add_subcommand("generate", "Print a prefix of the word defined by a directive");
  add_directive(generate, cfg);
  add_common(generate, cfg);
  generate->add_option("--length", cfg.length, "Prefix length")->required()->check(CLI::PositiveNumber);
  generate->add_option("--kind", cfg.kind, "plain or standard substitutions")->check(CLI::IsMember({"plain", "standard"}));
  generate->add_option("--format", cfg.format, "json, or tsv for the bare word")->check(CLI::IsMember({"json", "tsv"}));

  auto* balance = app.add_subcommand("balance", "Balance profile of a generated prefix");
  add_directive(balance, cfg);
  add_common(balance, cfg);
  balance->add_option("--length", cfg.length, "Prefix length")->check(CLI::PositiveNumber);
  balance->add_option("--max-window", cfg.max_window, "Largest window length")->check(CLI::PositiveNumber);
  auto* balance_c = balance->add_option("-C,--C", c_value, "Check C-balance (exit 1 on violation)")->check(CLI::NonNegativeNumber);
  balance->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));

  auto* desub = app.add_subcommand("desub", "Desubstitute a word");
  add_common(desub, cfg);
  desub->add_option("--word", word, "Word in digit form")->required();
  auto* letter_opt = desub->add_option("--letter", letter, "Substitution index i");
  auto* iterate_opt = desub->add_option("--iterate", iterate, "Comma-separated letters i_m, i_{m+1}, ...");
  letter_opt->excludes(iterate_opt);
  iterate_opt->excludes(letter_opt);

  auto* directive = app.add_subcommand("directive", "Directive sequence analysis");
  directive->require_subcommand(1);
  auto* check = directive->add_subcommand("check", "Check a theorem's hypothesis on the directive");
  add_directive(check, cfg);
  add_common(check, cfg);
  check->add_option("--theorem", theorem, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  check->add_option("--horizon", horizon, "Directive letters to examine (raised to a decisive length when periodic)");

  auto* quotients = app.add_subcommand("quotients", "Weak or strong partial quotients");
  add_directive(quotients, cfg);
  add_common(quotients, cfg);
  quotients->add_option("--count", count, "Number of quotients")->check(CLI::PositiveNumber);
  quotients->add_option("--kind", quotient_kind, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
  quotients->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));

  auto* complexity = app.add_subcommand("complexity", "Factor complexity and special factors of a generated prefix");
  add_directive(complexity, cfg);
  add_common(complexity, cfg);
  complexity->add_option("--length", cfg.length, "Prefix length")->check(CLI::PositiveNumber);
  complexity->add_option("--max-n", max_n, "Largest factor length")->check(CLI::PositiveNumber);
  std::string complexity_format = "tsv";
  complexity->add_option("--format", complexity_format, "Report format")->check(CLI::IsMember({"json", "tsv"}));

  auto* witness = app.add_subcommand("witness", "Search (and construct) an imbalance witness");
  add_directive(witness, cfg);
  add_common(witness, cfg);
  witness->add_flag("--construct", construct, "Build the lifting chain from the directive prefix");
  auto* witness_c = witness->add_option("-C,--C", c_value, "Balance constant (default 2)")->check(CLI::NonNegativeNumber);
  witness->add_option("--length", cfg.length, "Prefix length")->check(CLI::PositiveNumber);
  witness->add_option("--max-window", cfg.max_window, "Largest window length")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("arword");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : invalid_input;
  }

  Outcome outcome;
  try {
    if (*generate) {
      cfg.command = "generate";
      outcome = run_generate(cfg);
    } else if (*balance) {
      cfg.command = "balance";
      if (balance_c->count()) cfg.c = c_value;
      outcome = run_balance(cfg);
    } else if (*desub) {
      cfg.command = "desub";
      if (!letter && iterate.empty()) throw InputError("desub needs --letter or --iterate");
      outcome = run_desub(cfg, word, letter, iterate);
    } else if (*check) {
      cfg.command = "directive check";
      outcome = run_directive_check(cfg, theorem, horizon);
    } else if (*quotients) {
      cfg.command = "quotients";
      outcome = run_quotients(cfg, count, quotient_kind);
    } else if (*complexity) {
      cfg.command = "complexity";
      cfg.format = complexity_format;
      outcome = run_complexity(cfg, max_n);
    } else if (*witness) {
      cfg.command = "witness";
      if (witness_c->count()) cfg.c = c_value;
      outcome = run_witness(cfg, construct);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return invalid_input;
  }

  if (cfg.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return invalid_input;
    }
    file << outcome.text;
  }
  return outcome.code;
}

}  // namespace ar::cli
