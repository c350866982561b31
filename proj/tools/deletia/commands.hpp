#pragma once

#include <string>

#include "deletia/params.hpp"

namespace deletia::cli {

// Each command writes its machine report to config.output (stdout when
// empty), a one-line summary to stderr, and returns the process exit code.

int dr_roundtrip(const RunConfig& config, int bit);
int fhe_nand_tree(const RunConfig& config, std::size_t trials);
int fhe_delete_roundtrip(const RunConfig& config, int bit, std::size_t trials);
int commit_demo(const RunConfig& config, int bit);
int pvd_roundtrip(const RunConfig& config, int bit);
int game_run(const RunConfig& config);
int validate(const RunConfig& config);

}  // namespace deletia::cli
