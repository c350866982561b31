#include <cstdlib>
#include <iostream>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "deletia/error.hpp"

namespace {

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Flags shared by every subcommand. Values are kept as text and applied
/// after the config file so that flags win.
void add_config_flags(CLI::App* app, std::string& config_path, Overrides& ov) {
  app->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  const auto forward = [&](const char* flag, const char* key, const char* help) {
    app->add_option_function<std::string>(flag, [&ov, key](const std::string& v) { ov.emplace_back(key, v); }, help);
  };
  forward("--seed", "seed", "master seed");
  forward("--n", "n", "lattice dimension");
  forward("--m", "m", "sample count");
  forward("--q", "q", "modulus");
  forward("--sigma", "sigma", "Gaussian parameter");
  forward("--alpha-q", "alpha_q", "noise magnitude alpha*q (sets sigma = q / alpha_q)");
  forward("--lambda", "lambda", "repetitions");
  forward("--t", "t", "hash family degree");
  forward("--k", "field_bits", "field bits");
  forward("--family", "family", "hash family descriptor (JSON)");
  forward("--out", "output", "write the report here instead of stdout");
  forward("--format", "format", "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deletia: publicly-verifiable deletion toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  Overrides ov;
  int bit = 0;
  std::size_t demo_trials = 1;
  std::string scheme = "all";
  std::function<int(const deletia::RunConfig&)> action;

  auto* dr = app.add_subcommand("dr", "dual-Regev encryption with deletion");
  auto* dr_rt = dr->add_subcommand("roundtrip", "keygen, encrypt, decrypt, delete, verify");
  dr->require_subcommand(1);
  add_config_flags(dr_rt, config_path, ov);
  dr_rt->add_option("--bit", bit, "plaintext bit")->check(CLI::Range(0, 1));
  dr_rt->callback([&] { action = [&](const auto& c) { return deletia::cli::dr_roundtrip(c, bit); }; });

  auto* fhe = app.add_subcommand("fhe", "dual-Regev homomorphic encryption");
  fhe->require_subcommand(1);
  auto* fhe_tree = fhe->add_subcommand("nand-tree", "evaluate random NAND trees on classical ciphertexts");
  add_config_flags(fhe_tree, config_path, ov);
  fhe_tree->add_option_function<std::string>("--depth", [&](const std::string& v) { ov.emplace_back("L", v); },
                                             "tree depth L");
  fhe_tree->add_option("--trials", demo_trials, "number of trees")->default_val(100);
  fhe_tree->callback([&] { action = [&](const auto& c) { return deletia::cli::fhe_nand_tree(c, demo_trials); }; });
  auto* fhe_del = fhe->add_subcommand("delete-roundtrip", "encrypt in superposition, delete, verify");
  add_config_flags(fhe_del, config_path, ov);
  fhe_del->add_option("--bit", bit, "plaintext bit")->check(CLI::Range(0, 1));
  fhe_del->add_option("--trials", demo_trials, "number of ciphertexts")->default_val(1);
  fhe_del->callback(
      [&] { action = [&](const auto& c) { return deletia::cli::fhe_delete_roundtrip(c, bit, demo_trials); }; });

  auto* commit = app.add_subcommand("commit", "bit commitment with deletion");
  commit->require_subcommand(1);
  auto* commit_demo = commit->add_subcommand("demo", "commit, open, delete, verify");
  add_config_flags(commit_demo, config_path, ov);
  commit_demo->add_option("--bit", bit, "committed bit")->check(CLI::Range(0, 1));
  commit_demo->callback([&] { action = [&](const auto& c) { return deletia::cli::commit_demo(c, bit); }; });

  auto* pvd = app.add_subcommand("pvd", "encryption from trapdoor phase recovery");
  pvd->require_subcommand(1);
  auto* pvd_rt = pvd->add_subcommand("roundtrip", "keygen, encrypt, decrypt, delete, verify");
  add_config_flags(pvd_rt, config_path, ov);
  pvd_rt->add_option("--bit", bit, "plaintext bit")->check(CLI::Range(0, 1));
  pvd_rt->callback([&] { action = [&](const auto& c) { return deletia::cli::pvd_roundtrip(c, bit); }; });

  auto* game = app.add_subcommand("game", "security experiments");
  game->require_subcommand(1);
  auto* run = game->add_subcommand("run", "run an experiment against a scripted adversary");
  add_config_flags(run, config_path, ov);
  struct GameFlag {
    const char* flag;
    const char* key;
    const char* help;
  };
  for (const auto& [flag, key, help] : {GameFlag{"--exp", "exp", "tc, tcr, evtc, ladder, sgc or fact35"},
                                        GameFlag{"--adv", "adv", "scripted adversary name"},
                                        GameFlag{"--trials", "trials", "Monte-Carlo trials"},
                                        GameFlag{"--jobs", "jobs", "worker threads"},
                                        GameFlag{"--pool", "pool", "number of sampled hash keys"},
                                        GameFlag{"--aux", "aux", "tcr auxiliary input: none or trapdoor"}}) {
    run->add_option_function<std::string>(flag, [&ov, key = key](const std::string& v) { ov.emplace_back(key, v); },
                                          help);
  }
  run->add_flag_callback("--exact", [&] { ov.emplace_back("exact", "true"); }, "exact advantage computation");
  run->callback([&] { action = [](const auto& c) { return deletia::cli::game_run(c); }; });

  auto* val = app.add_subcommand("validate", "check parameter blocks");
  add_config_flags(val, config_path, ov);
  val->add_option("--scheme", scheme, "dr, fhe, fhe-q, commit, pvd, sgc or all");
  val->callback([&] { action = [&](const auto& c) { return deletia::cli::validate(c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    deletia::RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    if (const char* env = std::getenv("DELETIA_SEED")) cfg.set("seed", env);
    for (const auto& [k, v] : ov) cfg.set(k, v);
    if (val->parsed()) {
      bool scheme_given = val->count("--scheme") > 0;
      if (scheme_given || config_path.empty()) cfg.scheme = scheme;
    }
    return action(cfg);
  } catch (const deletia::Error& e) {
    std::cerr << "deletia: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "deletia: " << e.what() << '\n';
    return 1;
  }
}
