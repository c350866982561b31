#include "deletia/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "deletia/error.hpp"
#include "deletia/gaussian.hpp"
#include "deletia/hash/descriptor.hpp"

namespace deletia {

namespace {

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream is(value);
  T out{};
  is >> out;
  if (is.fail() || !is.eof()) throw Error(Errc::config, "bad value '" + value + "' for " + key);
  if constexpr (std::is_unsigned_v<T>)
    if (!value.empty() && value.front() == '-') throw Error(Errc::config, key + " must be nonnegative");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw Error(Errc::config, "bad boolean '" + value + "' for " + key);
}

nlohmann::json toy_fdelta(std::size_t bits) {
  return {{"name", "fdelta"},
          {"params", {{"base", {{"name", "toy-regular-owf"}, {"params", {{"m", bits}, {"r", 0}}}}}}}};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

struct CheckList {
  std::string group;
  std::vector<Check>* out;

  void add(std::string name, CheckStatus s, std::string detail) {
    out->push_back({group, std::move(name), s, std::move(detail)});
  }
  void require_that(std::string name, bool ok, std::string detail) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
  }
  void warn_unless(std::string name, bool ok, std::string detail) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::warn, std::move(detail));
  }
};

void check_modulus(CheckList& c, zq::Modulus q) {
  c.require_that("q-prime", q >= 2 && q < zq::kMaxModulus && zq::is_prime(q), "q = " + std::to_string(q));
}

void check_enumerable(CheckList& c, zq::Modulus q, std::size_t slots) {
  bool ok = true;
  std::string detail = "q^" + std::to_string(slots) + " <= 2^22";
  try {
    zq::table_cells(q, slots);
  } catch (const Error&) {
    ok = false;
  }
  c.require_that("enumerable", ok, detail);
}

void check_sigma(CheckList& c, double sigma, zq::Modulus q, std::size_t m) {
  const zq::GaussianParams g(sigma, q, m);
  const double lo = std::sqrt(8.0 * static_cast<double>(m));
  c.warn_unless("sigma-duality", g.in_duality_interval(),
                "need " + fmt(lo) + " < sigma = " + fmt(sigma) + " < q/" + fmt(lo) + " = " +
                    fmt(static_cast<double>(q) / lo));
  const double lo2 = std::sqrt(2.0 * static_cast<double>(m));
  c.warn_unless("sigma-collapsing", g.in_collapsing_interval(),
                "need " + fmt(lo2) + " < sigma = " + fmt(sigma) + " < q/" + fmt(lo2) + " = " +
                    fmt(static_cast<double>(q) / lo2));
}

void validate_dr(const RunConfig& cfg, std::vector<Check>& out) {
  CheckList c{"dr", &out};
  const auto p = cfg.dr_params();
  c.require_that("dims", p.n >= 1 && p.m >= 1, "n = " + std::to_string(p.n) + ", m = " + std::to_string(p.m));
  check_modulus(c, p.q);
  if (p.q >= 2) check_enumerable(c, p.q, p.m + 1 + p.n);
  c.require_that("sigma-positive", p.sigma > 0.0, "sigma = " + fmt(p.sigma));
  if (p.sigma > 0.0 && p.q >= 2) check_sigma(c, p.sigma, p.q, p.m + 1);
}

void validate_fhe(const RunConfig& cfg, std::vector<Check>& out) {
  CheckList c{"fhe-eval", &out};
  const auto p = cfg.fhe_params();
  check_modulus(c, p.q);
  if (p.q < 2 || p.sigma <= 0.0) {
    c.require_that("sigma-positive", false, "sigma = " + fmt(p.sigma));
    return;
  }
  const double aq = static_cast<double>(p.q) / p.sigma;
  const double base = std::sqrt(8.0 * static_cast<double>(p.rows()));
  c.require_that("fhe-noise-floor", base <= aq, "sqrt(8(m+1)) = " + fmt(base) + " <= alpha*q = " + fmt(aq));
  c.require_that("fhe-theorem-floor", fhe_noise_floor(p) <= aq,
                 "sqrt(8(m+1)N) = " + fmt(fhe_noise_floor(p)) + " <= alpha*q = " + fmt(aq));
  c.require_that("fhe-bound", aq <= fhe_noise_ceiling(p),
                 "alpha*q = " + fmt(aq) + " <= q/(sqrt(8)(m+1)(N+1)^L) = " + fmt(fhe_noise_ceiling(p)) +
                     " with N = " + std::to_string(p.columns()) + ", L = " + std::to_string(p.depth));
}

void validate_fhe_quantum(const RunConfig& cfg, std::vector<Check>& out) {
  CheckList c{"fhe-delete", &out};
  const auto p = cfg.fhe_quantum_params();
  check_modulus(c, p.q);
  if (p.q < 2) return;
  check_enumerable(c, p.q, p.rows() + p.n);
  c.require_that("sigma-positive", p.sigma > 0.0, "sigma = " + fmt(p.sigma));
  if (p.sigma > 0.0) check_sigma(c, p.sigma, p.q, p.rows());
}

void validate_family(const std::string& group, const RunConfig& cfg, std::vector<Check>& out) {
  CheckList c{group, &out};
  c.require_that("lambda", cfg.security_parameter() >= 1, "lambda = " + std::to_string(cfg.security_parameter()));
  try {
    const auto family = hash::make_family(cfg.family_descriptor());
    c.require_that("predicate", family->has_predicate(), family->name() + " must carry a one-bit predicate");
    Rng rng(cfg.seed);
    const auto key = family->sample(rng);
    const auto size = key.h->domain().size();
    c.warn_unless("domain", size <= (1U << 12), "domain size " + std::to_string(size) + " <= 2^12");
    if (group == "pvd") c.require_that("trapdoor", family->has_trapdoor(), family->name() + " must carry a trapdoor");
  } catch (const Error& e) {
    c.require_that("family", false, e.what());
  } catch (const nlohmann::json::exception& e) {
    c.require_that("family", false, e.what());
  }
}

void validate_sgc(const RunConfig& cfg, std::vector<Check>& out) {
  CheckList c{"sgc", &out};
  const auto p = cfg.gauss_params();
  c.require_that("dims", p.n >= 1 && p.m >= 2, "n = " + std::to_string(p.n) + ", m = " + std::to_string(p.m));
  check_modulus(c, p.q);
  if (p.q < 2) return;
  check_enumerable(c, p.q, p.m);
  if (p.sigma > 0.0) check_sigma(c, p.sigma, p.q, p.m);
}

}  // namespace

std::vector<std::string> scheme_names() { return {"dr", "fhe", "fhe-q", "commit", "pvd", "sgc", "game"}; }

void RunConfig::set(const std::string& key, const std::string& raw) {
  const auto value = trim(raw);
  if (key == "scheme") scheme = value;
  else if (key == "n") n = parse_number<std::size_t>(key, value);
  else if (key == "m") m = parse_number<std::size_t>(key, value);
  else if (key == "q") q = parse_number<zq::Modulus>(key, value);
  else if (key == "sigma") sigma = parse_number<double>(key, value);
  else if (key == "alpha_q") alpha_q = parse_number<double>(key, value);
  else if (key == "lambda") lambda = parse_number<std::size_t>(key, value);
  else if (key == "L" || key == "depth") depth = parse_number<std::size_t>(key, value);
  else if (key == "t") t = parse_number<std::size_t>(key, value);
  else if (key == "field_bits" || key == "k") field_bits = parse_number<std::size_t>(key, value);
  else if (key == "family") {
    try {
      family = nlohmann::json::parse(value);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::config, std::string("family: ") + e.what());
    }
  } else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "trials") trials = parse_number<std::size_t>(key, value);
  else if (key == "output" || key == "out") output = value;
  else if (key == "format") {
    if (value != "json" && value != "csv") throw Error(Errc::config, "format must be json or csv");
    format = value;
  } else if (key == "exact") exact = parse_bool(key, value);
  else if (key == "exp") exp = value;
  else if (key == "adv") adv = value;
  else if (key == "aux") aux = value;
  else if (key == "jobs") jobs = std::max(1U, parse_number<unsigned>(key, value));
  else if (key == "pool") pool = std::max<std::size_t>(1, parse_number<std::size_t>(key, value));
  else throw Error(Errc::config, "unknown config key '" + key + "'");
}

void RunConfig::load_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    // '#' inside an inline JSON value is data, not a comment.
    if (const auto hash = line.find('#'); hash != std::string::npos && line.find('{') > hash) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::config, "line " + std::to_string(lineno) + ": expected key = value");
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config, "cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  load_text(ss.str());
}

dualregev::Params RunConfig::dr_params() const {
  dualregev::Params p;
  p.n = n.value_or(p.n);
  p.m = m.value_or(p.m);
  p.q = q.value_or(p.q);
  p.sigma = alpha_q ? static_cast<double>(p.q) / *alpha_q : sigma.value_or(p.sigma);
  return p;
}

fhe::Params RunConfig::fhe_params() const {
  fhe::Params p;
  p.n = n.value_or(2);
  p.m = m.value_or(8);
  p.q = q.value_or(1073741789);
  p.depth = depth.value_or(2);
  p.sigma = sigma ? *sigma : static_cast<double>(p.q) / alpha_q.value_or(150.0);
  return p;
}

fhe::Params RunConfig::fhe_quantum_params() const {
  fhe::Params p;
  p.n = n.value_or(p.n);
  p.m = m.value_or(p.m);
  p.q = q.value_or(p.q);
  p.depth = depth.value_or(p.depth);
  p.sigma = alpha_q ? static_cast<double>(p.q) / *alpha_q : sigma.value_or(p.sigma);
  return p;
}

games::GaussCollapseParams RunConfig::gauss_params() const {
  games::GaussCollapseParams p;
  p.n = n.value_or(p.n);
  p.m = m.value_or(p.m);
  p.q = q.value_or(p.q);
  p.sigma = alpha_q ? static_cast<double>(p.q) / *alpha_q : sigma.value_or(p.sigma);
  return p;
}

nlohmann::json RunConfig::family_descriptor() const {
  if (family) return *family;
  return toy_fdelta(m.value_or(4));
}

std::size_t RunConfig::security_parameter() const { return lambda.value_or(scheme == "commit" ? 6 : 8); }

games::RunOptions RunConfig::game_options() const {
  games::RunOptions o;
  o.exp = exp;
  o.adv = adv;
  o.trials = trials;
  o.seed = seed;
  o.exact = exact;
  o.jobs = jobs;
  o.pool = pool;
  o.aux = aux;
  if (family) o.family = *family;
  if (exp == "sgc") o.gauss = gauss_params();
  if (exp == "fact35" && n) o.fact_dim = *n;
  return o;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j{{"scheme", scheme}, {"seed", seed}, {"trials", trials}, {"exact", exact}};
  if (scheme == "dr") j["params"] = dr_params().to_json();
  else if (scheme == "fhe") j["params"] = fhe_params().to_json();
  else if (scheme == "fhe-q") j["params"] = fhe_quantum_params().to_json();
  else if (scheme == "sgc") j["params"] = gauss_params().to_json();
  else if (scheme == "commit" || scheme == "pvd")
    j["params"] = {{"lambda", security_parameter()}, {"family", family_descriptor()}};
  return j;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::warn: return "warn";
    case CheckStatus::fail: return "fail";
  }
  return "fail";
}

CheckStatus ValidationReport::overall() const {
  auto worst = CheckStatus::pass;
  for (const auto& c : checks)
    if (static_cast<int>(c.status) > static_cast<int>(worst)) worst = c.status;
  return worst;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"group", c.group}, {"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"status", to_string(overall())}, {"checks", arr}};
}

double fhe_noise_floor(const fhe::Params& p) {
  return std::sqrt(8.0 * static_cast<double>(p.rows()) * static_cast<double>(p.columns()));
}

double fhe_noise_ceiling(const fhe::Params& p) {
  const double n1 = static_cast<double>(p.columns() + 1);
  return static_cast<double>(p.q) /
         (std::sqrt(8.0) * static_cast<double>(p.rows()) * std::pow(n1, static_cast<double>(p.depth)));
}

ValidationReport validate(const RunConfig& cfg) {
  ValidationReport r;
  const auto& s = cfg.scheme;
  const bool all = s == "all";
  if (all || s == "dr") validate_dr(cfg, r.checks);
  if (all || s == "fhe") validate_fhe(cfg, r.checks);
  if (all || s == "fhe-q") validate_fhe_quantum(cfg, r.checks);
  if (all || s == "commit") validate_family("commit", cfg, r.checks);
  if (all || s == "pvd") validate_family("pvd", cfg, r.checks);
  if (all || s == "sgc" || s == "game") validate_sgc(cfg, r.checks);
  if (!all && r.checks.empty()) throw Error(Errc::config, "unknown scheme '" + s + "'");
  return r;
}

}  // namespace deletia
