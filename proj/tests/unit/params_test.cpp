#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "deletia/error.hpp"
#include "deletia/params.hpp"

using namespace deletia;

namespace {

const Check* find(const ValidationReport& r, const std::string& group, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.group == group && c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Config, ShippedBlocks) {
  const RunConfig cfg;
  const auto dr = cfg.dr_params();
  EXPECT_EQ(dr.q, 31);
  EXPECT_EQ(dr.m, 2u);
  EXPECT_DOUBLE_EQ(dr.sigma, 5.5);
  const auto fhe = cfg.fhe_params();
  EXPECT_EQ(fhe.q, 1073741789);
  EXPECT_EQ(fhe.depth, 2u);
  EXPECT_NEAR(static_cast<double>(fhe.q) / fhe.sigma, 150.0, 1e-9);
  EXPECT_EQ(cfg.fhe_quantum_params().columns(), 15u);
  const auto g = cfg.gauss_params();
  EXPECT_EQ(g.q, 13);
  EXPECT_DOUBLE_EQ(g.sigma, 3.0);
}

TEST(Config, TextAndOverrides) {
  RunConfig cfg;
  cfg.load_text("# comment\nscheme = fhe\nq = 1021  # inline\n\nL = 3\nalpha_q = 40\n");
  EXPECT_EQ(cfg.scheme, "fhe");
  EXPECT_EQ(cfg.fhe_params().q, 1021);
  EXPECT_EQ(cfg.fhe_params().depth, 3u);
  EXPECT_NEAR(1021.0 / cfg.fhe_params().sigma, 40.0, 1e-9);
  cfg.set("family", R"({"name": "fdelta", "params": {"base": {"name": "toy-regular-owf", "params": {"m": 5}}}})");
  EXPECT_EQ(cfg.family_descriptor()["name"], "fdelta");
  EXPECT_THROW(cfg.set("colour", "blue"), Error);
  EXPECT_THROW(cfg.set("q", "many"), Error);
  EXPECT_THROW(cfg.load_text("no equals sign"), Error);
  cfg.load_text("# sizes are q^{m+1}\nfamily = {\"name\": \"tag#1\"}\n");
  EXPECT_EQ(cfg.family_descriptor()["name"], "tag#1");
  EXPECT_THROW(cfg.load_file("/nonexistent/deletia.conf"), Error);
}

TEST(Config, GameOptionsFollowConfig) {
  RunConfig cfg;
  cfg.set("exp", "ladder");
  cfg.set("adv", "overlap-projector");
  cfg.set("seed", "5");
  cfg.set("trials", "12");
  const auto o = cfg.game_options();
  EXPECT_EQ(o.exp, "ladder");
  EXPECT_EQ(o.seed, 5u);
  EXPECT_EQ(o.trials, 12u);
}

TEST(Validate, ShippedDefaultsWarnOnly) {
  RunConfig cfg;
  cfg.scheme = "all";
  const auto r = validate(cfg);
  EXPECT_EQ(r.overall(), CheckStatus::warn);
  for (const auto& c : r.checks) EXPECT_NE(c.status, CheckStatus::fail) << c.group << "/" << c.name;
  const auto* bound = find(r, "fhe-eval", "fhe-bound");
  ASSERT_NE(bound, nullptr);
  EXPECT_EQ(bound->status, CheckStatus::pass);
}

TEST(Validate, FheWindow) {
  RunConfig cfg;
  const auto p = cfg.fhe_params();
  EXPECT_NEAR(fhe_noise_floor(p), std::sqrt(8.0 * 9 * 270), 1e-9);
  EXPECT_NEAR(fhe_noise_ceiling(p), 1073741789.0 / (std::sqrt(8.0) * 9 * 271.0 * 271.0), 1e-6);
  cfg.scheme = "fhe";
  cfg.set("L", "3");
  const auto r = validate(cfg);
  EXPECT_EQ(r.overall(), CheckStatus::fail);
  const auto* bound = find(r, "fhe-eval", "fhe-bound");
  ASSERT_NE(bound, nullptr);
  EXPECT_EQ(bound->status, CheckStatus::fail);
  EXPECT_NE(bound->detail.find("L = 3"), std::string::npos);
}

TEST(Validate, CompositeModulusFails) {
  RunConfig cfg;
  cfg.scheme = "dr";
  cfg.set("q", "33");
  EXPECT_EQ(validate(cfg).overall(), CheckStatus::fail);
  cfg.scheme = "martian";
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Validate, FamilyWithoutPredicateFails) {
  RunConfig cfg;
  cfg.scheme = "commit";
  cfg.set("family", R"({"name": "toy-regular-owf", "params": {"m": 4}})");
  const auto r = validate(cfg);
  EXPECT_EQ(r.overall(), CheckStatus::fail);
  const auto j = r.to_json();
  EXPECT_EQ(j["status"], "fail");
}
