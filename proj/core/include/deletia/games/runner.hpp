#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deletia/games/gauss_collapse.hpp"

namespace deletia::games {

struct RunOptions {
  std::string exp = "evtc";  ///< tc, tcr, evtc, ladder, sgc, fact35
  std::string adv = "honest-deleter";
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  bool exact = false;
  unsigned jobs = 1;
  std::size_t pool = 1;  ///< keys drawn for the challenger
  nlohmann::json family = default_family();
  GaussCollapseParams gauss{};
  std::string aux = "none";  ///< tcr only: none or trapdoor
  std::size_t fact_dim = 4;
  bool transcripts = true;

  /// f_Delta over a 3-bit permutation: 2-to-1 with a one-bit predicate.
  static nlohmann::json default_family();
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  int b = 0;
  std::string verdict;
  std::int64_t guess = 0;

  nlohmann::json to_json() const;
};

struct GameReport {
  nlohmann::json summary;
  std::vector<TrialRecord> records;

  nlohmann::json to_json() const;  ///< summary plus transcripts
  std::string to_csv() const;      ///< trial,seed,b,verdict,guess
};

/// Names accepted by --adv for an experiment id.
std::vector<std::string> adversaries_for(const std::string& exp);

GameReport run_game(const RunOptions& options);

}  // namespace deletia::games
