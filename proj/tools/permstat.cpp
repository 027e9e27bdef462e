// permstat: statistics, verification campaigns and oracles for the
// rep-versus-[321;3412] correspondence.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "permstat/bijection.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/error.hpp"
#include "permstat/pattern.hpp"
#include "permstat/reduced_word.hpp"
#include "permstat/report_json.hpp"

namespace {

using nlohmann::json;
using namespace permstat;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

struct CliConfig {
  Format format = Format::Text;
  std::string perm_text;
  int n = 0;
  std::optional<std::uint64_t> from;
  std::optional<std::uint64_t> to;
  int jobs = 1;
  bool census = false;
  int max_n = 0;
  int oracle_bound = kDefaultOracleBound;
};

template <typename Range>
std::string join(const Range &values, const char *sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto &v : values) {
    if (!first) {
      os << sep;
    }
    os << v;
    first = false;
  }
  return os.str();
}

std::string braces(const std::vector<int> &values) { return "{" + join(values) + "}"; }

int cmd_stats(const CliConfig &cfg) {
  const auto w = Permutation::parse(cfg.perm_text);
  const auto theorem = verify_main(w);
  const auto stats = patt_321_3412(w);
  std::optional<LevelReport> level;
  if (w.size() >= 2) {
    level = verify_level(w);
  }

  if (cfg.format == Format::Json) {
    json j = theorem;
    j["length"] = length(w);
    j["support"] = support(w);
    json per_top = json::object();
    for (const auto &[top, count] : stats.per_top) {
      per_top[std::to_string(top)] = count;
    }
    j["patt_per_top"] = per_top;
    j["repeat"] = json::array();
    j["xi"] = json::array();
    if (level) {
      j["repeat"] = level->assignment.repeat.indices;
      j["xi"] = level->assignment.xi;
      j["parts"] = level->assignment.parts;
      j["level"] = *level;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "w            " << w << '\n'
            << "length       " << length(w) << '\n'
            << "support      " << braces(support(w)) << '\n'
            << "rep          " << theorem.rep << '\n'
            << "patt         " << theorem.patt << '\n';
  for (const auto &[top, count] : stats.per_top) {
    std::cout << "  [321;3412]_" << top << " = " << count << '\n';
  }
  std::cout << "avoids phi   " << (theorem.avoids_phi ? "yes" : "no") << '\n'
            << "verdict      " << to_string(theorem.verdict) << '\n';
  if (level) {
    std::cout << "repeat       " << braces(level->assignment.repeat.indices) << '\n';
    for (const auto &entry : level->assignment.xi) {
      std::cout << "  xi(" << entry.k << ") = " << entry.image.label() << "  case "
                << to_string(entry.assigned.case_tag) << (entry.uses_plus ? " (p+)" : "")
                << '\n';
    }
    std::cout << "level " << w.size() << "      |Repeat| = " << level->repeat_count
              << ", [321;3412]_" << w.size() << " = " << level->patt_top << ", "
              << to_string(level->verdict) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const CliConfig &cfg) {
  const int ceiling = campaign_ceiling();
  if (cfg.n < 1 || cfg.n > ceiling) {
    std::cerr << "error: --n must be in 1.." << ceiling << '\n';
    return kExitUsage;
  }
  const auto total = factorial(cfg.n);
  const auto from = cfg.from.value_or(0);
  const auto to = cfg.to.value_or(total);
  if (from > to || to > total) {
    std::cerr << "error: rank range [" << from << ", " << to << ") outside [0, " << total
              << "]\n";
    return kExitUsage;
  }
  const auto report = run_campaign(cfg.n, cfg.jobs, from, to, ceiling);

  switch (cfg.format) {
  case Format::Json:
    std::cout << campaign_json(report).dump(2) << '\n';
    break;
  case Format::Csv:
    std::cout << census_csv_header() << '\n' << census_csv_row(report) << '\n';
    break;
  case Format::Text:
    std::cout << "n            " << report.n << '\n'
              << "range        [" << report.from << ", " << report.to << ")\n"
              << "checked      " << report.checked << '\n'
              << "equal        " << report.equal_count << '\n'
              << "strict       " << report.strict_count << '\n';
    if (cfg.census) {
      std::cout << "avoiders     " << report.avoider_count << '\n';
    }
    std::cout << "failures     " << report.failures.size() << '\n'
              << "wall time    " << report.wall_time.count() << " s\n";
    break;
  }

  if (!report.failures.empty()) {
    const auto &first = report.failures.front();
    std::cerr << "counterexample: " << first.w << '\n' << first.diagnostic << '\n';
    return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_word(const CliConfig &cfg) {
  const auto w = Permutation::parse(cfg.perm_text);
  const auto word = canonical_word(w);
  const bool round_trip = evaluate(word) == w && word.size() == length(w);
  if (cfg.format == Format::Json) {
    std::cout << json{{"w", w.to_string()},
                      {"word", word.to_string()},
                      {"length", word.size()},
                      {"round_trip", round_trip},
                      {"ok", round_trip}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << word.to_string() << '\n';
    std::cout << "evaluate round-trip: " << (round_trip ? "ok" : "FAILED") << '\n';
  }
  return round_trip ? kExitOk : kExitCounterexample;
}

int cmd_witness(const CliConfig &cfg) {
  const auto w = Permutation::parse(cfg.perm_text);
  json rows = json::array();
  const auto assignment = w.size() >= 2 ? std::optional(xi(w)) : std::nullopt;
  for (const auto &phi : phi_patterns()) {
    for (const auto &occ : top_occurrences(w, phi, w.size())) {
      rows.push_back({{"phi", phi.name()},
                      {"occurrence", occ},
                      {"witness", phi_witness(w, occ)}});
    }
  }
  if (cfg.format == Format::Json) {
    json j{{"w", w.to_string()}, {"witnesses", rows}};
    j["xi"] = assignment ? json(assignment->xi) : json::array();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  if (rows.empty()) {
    std::cout << "no " << w.size() << "-occurrence of any pattern in phi\n";
  }
  for (const auto &row : rows) {
    std::cout << row["phi"].get<std::string>() << " at "
              << join(row["occurrence"]["values"].get<std::vector<int>>(), "") << " -> "
              << join(row["witness"]["values"].get<std::vector<int>>(), "") << " ("
              << row["witness"]["pattern"].get<std::string>() << ")\n";
  }
  return kExitOk;
}

int cmd_oracle(const CliConfig &cfg) {
  if (cfg.max_n < 1 || cfg.max_n > cfg.oracle_bound) {
    std::cerr << "error: --max-n must be in 1.." << cfg.oracle_bound << '\n';
    return kExitUsage;
  }
  std::uint64_t checked = 0;
  std::optional<Permutation> failure;
  for (int n = 1; n <= cfg.max_n && !failure; ++n) {
    for (const auto &w : iter_sn(n)) {
      ++checked;
      if (!check_support_well_defined(w, cfg.oracle_bound).ok) {
        failure = w;
        break;
      }
    }
  }
  if (cfg.format == Format::Json) {
    json j{{"max_n", cfg.max_n}, {"checked", checked}, {"ok", !failure}};
    if (failure) {
      j["counterexample"] = failure->to_string();
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "checked " << checked << " permutations up to n = " << cfg.max_n << ": "
              << (failure ? "FAILED at " + failure->to_string() : std::string("ok"))
              << '\n';
  }
  return failure ? kExitCounterexample : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"permstat: repeated letters in reduced words vs 321/3412 patterns"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}},
          CLI::ignore_case));

  auto *stats = app.add_subcommand("stats", "Statistics, Repeat set and xi for one permutation");
  stats->add_option("perm", cfg.perm_text, "Permutation, e.g. 35412 or '3 5 4 1 2'")
      ->required();

  auto *verify = app.add_subcommand("verify", "Verify every permutation of S_n");
  verify->add_option("--n", cfg.n, "Permutation size")->required();
  verify->add_option("--from", cfg.from, "First lexicographic rank (inclusive)");
  verify->add_option("--to", cfg.to, "Last lexicographic rank (exclusive)");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--census", cfg.census, "Report the number of phi-avoiders");

  auto *word = app.add_subcommand("word", "Canonical reduced word");
  word->add_option("perm", cfg.perm_text, "Permutation")->required();

  auto *witness = app.add_subcommand("witness", "Phi witnesses outside the xi image");
  witness->add_option("perm", cfg.perm_text, "Permutation")->required();

  auto *oracle = app.add_subcommand("oracle", "All-words support oracle over S_1..S_max");
  oracle->add_option("--max-n", cfg.max_n, "Largest n to check")->required();
  oracle->add_option("--bound", cfg.oracle_bound, "Oracle ceiling on n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*stats) {
      return cmd_stats(cfg);
    }
    if (*verify) {
      return cmd_verify(cfg);
    }
    if (*word) {
      return cmd_word(cfg);
    }
    if (*witness) {
      return cmd_witness(cfg);
    }
    if (*oracle) {
      return cmd_oracle(cfg);
    }
  } catch (const permstat::Error &e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
