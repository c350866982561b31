#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deletia/dualfhe.hpp"
#include "deletia/dualregev.hpp"
#include "deletia/games/runner.hpp"

namespace deletia {

/// Schemes with shipped parameter blocks.
std::vector<std::string> scheme_names();

/// Everything a single CLI invocation needs. Parameter fields left unset
/// fall back to the scheme's shipped block.
struct RunConfig {
  std::string scheme = "dr";
  std::optional<std::size_t> n, m;
  std::optional<zq::Modulus> q;
  std::optional<double> sigma;
  std::optional<double> alpha_q;  ///< overrides sigma as q / alpha_q
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> depth;  ///< L
  std::optional<std::size_t> t;
  std::optional<std::size_t> field_bits;
  std::optional<nlohmann::json> family;

  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::string output;  ///< empty: stdout
  std::string format = "json";
  bool exact = false;
  std::string exp = "evtc";
  std::string adv = "honest-deleter";
  std::string aux = "none";
  unsigned jobs = 1;
  std::size_t pool = 1;

  /// Sets one key from text; throws Errc::config on unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  /// `key = value` lines, '#' comments, blank lines ignored.
  void load_text(const std::string& text);
  void load_file(const std::string& path);

  dualregev::Params dr_params() const;
  fhe::Params fhe_params() const;       ///< classical evaluation block
  fhe::Params fhe_quantum_params() const;  ///< quantum deletion block
  games::GaussCollapseParams gauss_params() const;
  nlohmann::json family_descriptor() const;  ///< commit / pvd family
  std::size_t security_parameter() const;
  games::RunOptions game_options() const;

  nlohmann::json to_json() const;
};

enum class CheckStatus { pass, warn, fail };
std::string_view to_string(CheckStatus s);

struct Check {
  std::string group;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  CheckStatus overall() const;
  nlohmann::json to_json() const;
};

/// Checks the block for config.scheme, or every shipped block when the
/// scheme is "all".
ValidationReport validate(const RunConfig& config);

/// FHE evaluation window on alpha*q: sqrt(8(m+1)N) <= alpha*q <= q / (sqrt(8)(m+1)(N+1)^L).
double fhe_noise_ceiling(const fhe::Params& p);
double fhe_noise_floor(const fhe::Params& p);

}  // namespace deletia
