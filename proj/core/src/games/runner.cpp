#include "deletia/games/runner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "deletia/error.hpp"
#include "deletia/games/fact35.hpp"
#include "deletia/games/ladder.hpp"
#include "deletia/hash/descriptor.hpp"
#include "deletia/hash/tcr.hpp"

namespace deletia::games {

nlohmann::json RunOptions::default_family() {
  return {{"name", "fdelta"}, {"params", {{"base", {{"name", "toy-regular-owf"}, {"params", {{"m", 3}, {"r", 0}}}}}}}};
}

nlohmann::json TrialRecord::to_json() const {
  return {{"trial", trial}, {"seed", seed}, {"b", b}, {"verdict", verdict}, {"guess", guess}};
}

nlohmann::json GameReport::to_json() const {
  auto j = summary;
  auto& arr = j["transcripts"] = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(r.to_json());
  return j;
}

std::string GameReport::to_csv() const {
  std::ostringstream os;
  os << "trial,seed,b,verdict,guess\n";
  for (const auto& r : records) os << r.trial << ',' << r.seed << ',' << r.b << ',' << r.verdict << ',' << r.guess << '\n';
  return os.str();
}

std::vector<std::string> adversaries_for(const std::string& exp) {
  if (exp == "tc") return distinguisher_names();
  if (exp == "tcr") return {"honest", "brute-force", "non-preimage", "trapdoor-inverter"};
  if (exp == "evtc" || exp == "ladder" || exp == "sgc") return adversary_pair_names();
  if (exp == "fact35") return {"checker"};
  throw Error(Errc::config, "unknown experiment '" + exp + "'");
}

namespace {

template <class Trial>
std::vector<TrialRecord> run_trials(const RunOptions& o, Trial&& trial) {
  std::vector<TrialRecord> records(o.trials);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t t = begin; t < o.trials; t += stride) {
      TrialRecord r;
      r.trial = t;
      r.seed = o.seed + t;
      r.b = static_cast<int>(t % 2);
      Rng rng(r.seed);
      trial(r, rng);
      records[t] = std::move(r);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(o.jobs, static_cast<unsigned>(std::max<std::size_t>(o.trials, 1))));
  if (jobs == 1) {
    work(0, 1);
    return records;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        try {
          work(j, jobs);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

/// Advantage and 95% half-width from per-b acceptance counts.
void summarize_sampled(nlohmann::json& s, const std::vector<TrialRecord>& records) {
  std::array<double, 2> n{}, ones{};
  std::size_t valid = 0, invalid = 0;
  for (const auto& r : records) {
    n[r.b] += 1;
    ones[r.b] += r.guess == 1 ? 1 : 0;
    valid += r.verdict == "valid";
    invalid += r.verdict == "invalid";
  }
  const double p0 = n[0] > 0 ? ones[0] / n[0] : 0.0;
  const double p1 = n[1] > 0 ? ones[1] / n[1] : 0.0;
  double var = 0.0;
  if (n[0] > 0) var += p0 * (1 - p0) / n[0];
  if (n[1] > 0) var += p1 * (1 - p1) / n[1];
  s["advantage"] = (n[0] > 0 && n[1] > 0) ? std::abs(p0 - p1) : 0.0;
  s["ci"] = 1.96 * std::sqrt(var);
  s["accept"] = {p0, p1};
  s["counts"] = {{"b0", n[0]}, {"b1", n[1]}, {"ones_b0", ones[0]}, {"ones_b1", ones[1]}, {"valid", valid},
                 {"invalid", invalid}};
}

void exact_summary(nlohmann::json& s, double p0, double p1) {
  s["advantage"] = std::abs(p0 - p1);
  s["ci"] = 0.0;
  s["accept"] = {p0, p1};
}

std::vector<GameKey> toy_pool(const RunOptions& o, const hash::HashFamily& family) {
  std::vector<GameKey> pool;
  for (const auto& k : hash::sample_pool(family, o.seed, std::max<std::size_t>(o.pool, 1))) pool.push_back(toy_key(k));
  return pool;
}

std::unique_ptr<hash::TcrAdversary> tcr_adversary(const std::string& name) {
  if (name == "honest") return hash::make_honest_tcr_adversary();
  if (name == "brute-force") return hash::make_brute_force_tcr_adversary();
  if (name == "non-preimage") return hash::make_non_preimage_tcr_adversary();
  if (name == "trapdoor-inverter") return hash::make_trapdoor_tcr_adversary();
  throw Error(Errc::config, "unknown tcr adversary '" + name + "'");
}

GameReport run_fact35(const RunOptions& o, nlohmann::json s) {
  GameReport rep;
  std::vector<double> slack(o.trials);
  rep.records = run_trials(o, [&](TrialRecord& r, Rng& rng) {
    const std::size_t parts = 2 + r.trial % 3;
    const auto inst = random_fact35_instance(std::max(o.fact_dim, parts), parts, rng);
    const auto res = fact35_check(inst.d, inst.projectors, inst.psi);
    slack[r.trial] = res.slack();
    r.b = static_cast<int>(parts);
    r.verdict = res.holds ? "holds" : "fails";
    r.guess = res.holds ? 1 : 0;
  });
  bool all = true;
  for (const auto& r : rep.records) all = all && r.verdict == "holds";
  s["instances"] = o.trials;
  s["holds_all"] = all;
  s["min_slack"] = slack.empty() ? 0.0 : *std::min_element(slack.begin(), slack.end());
  s["advantage"] = 0.0;
  s["ci"] = 0.0;
  rep.summary = std::move(s);
  return rep;
}

}  // namespace

GameReport run_game(const RunOptions& o) {
  const auto names = adversaries_for(o.exp);
  if (o.exp != "fact35" && std::find(names.begin(), names.end(), o.adv) == names.end())
    throw Error(Errc::config, "adversary '" + o.adv + "' is not available for experiment '" + o.exp + "'");

  nlohmann::json s;
  s["exp"] = o.exp;
  s["adv"] = o.exp == "fact35" ? "checker" : o.adv;
  s["seed"] = o.seed;
  s["trials"] = o.trials;
  const bool exact = o.exact || o.exp == "ladder";
  s["mode"] = exact ? "exact" : "monte-carlo";
  if (o.exp == "fact35") return run_fact35(o, std::move(s));

  GameReport rep;
  if (o.exp == "sgc") {
    s["params"] = o.gauss.to_json();
    s["pool"] = std::max<std::size_t>(o.pool, 1);
    const auto pool = gauss_pool(o.gauss, o.seed, std::max<std::size_t>(o.pool, 1));
    const auto adv = make_adversary_pair(o.adv);
    if (exact) {
      const auto e0 = ev_accept_exact(pool, adv, 0);
      const auto e1 = ev_accept_exact(pool, adv, 1);
      exact_summary(s, e0.accept, e1.accept);
      s["valid_rate"] = {e0.valid_rate, e1.valid_rate};
      s["output_distance"] = ev_output_distance(pool, adv);
    } else {
      rep.records = run_trials(o, [&](TrialRecord& r, Rng& rng) {
        const auto t = ev_trial(pool, adv, r.b, rng);
        r.verdict = t.valid ? "valid" : "invalid";
        r.guess = t.guess;
      });
      summarize_sampled(s, rep.records);
    }
    rep.summary = std::move(s);
    return rep;
  }

  const auto family = hash::make_family(o.family);
  s["family"] = family->descriptor();
  s["pool"] = std::max<std::size_t>(o.pool, 1);

  if (o.exp == "tcr") {
    if (o.exact) throw Error(Errc::config, "tcr runs in monte-carlo mode only");
    if (o.aux != "none" && o.aux != "trapdoor") throw Error(Errc::config, "aux must be none or trapdoor");
    s["aux"] = o.aux;
    const auto keys = hash::sample_pool(*family, o.seed, std::max<std::size_t>(o.pool, 1));
    const auto adversary = tcr_adversary(o.adv);
    const hash::AuxLeak leak = [](const hash::SampledHash& k) { return k.trapdoor; };
    rep.records = run_trials(o, [&](TrialRecord& r, Rng& rng) {
      const auto& key = keys[rng.uniform(keys.size())];
      const auto tr = hash::tcr_game(key, *adversary, rng, {}, o.aux == "trapdoor" ? &leak : nullptr);
      r.b = 0;
      r.verdict = tr.win ? "win" : (tr.preimage ? "preimage" : "miss");
      r.guess = static_cast<std::int64_t>(tr.answer);
    });
    std::size_t wins = 0;
    for (const auto& r : rep.records) wins += r.verdict == "win";
    const double n = static_cast<double>(rep.records.size());
    const double p = n > 0 ? static_cast<double>(wins) / n : 0.0;
    s["win_rate"] = p;
    s["advantage"] = p;
    s["ci"] = n > 0 ? 1.96 * std::sqrt(p * (1 - p) / n) : 0.0;
    s["counts"] = {{"win", wins}, {"trials", rep.records.size()}};
    rep.summary = std::move(s);
    return rep;
  }

  const auto pool = toy_pool(o, *family);
  if (o.exp == "tc") {
    const auto d = make_distinguisher(o.adv);
    if (exact) {
      exact_summary(s, tc_accept_exact(pool, *d, 0), tc_accept_exact(pool, *d, 1));
    } else {
      rep.records = run_trials(o, [&](TrialRecord& r, Rng& rng) {
        r.verdict = "-";
        r.guess = tc_trial(pool, *d, r.b, rng);
      });
      summarize_sampled(s, rep.records);
    }
  } else if (o.exp == "evtc") {
    const auto adv = make_adversary_pair(o.adv);
    if (exact) {
      const auto e0 = ev_accept_exact(pool, adv, 0);
      const auto e1 = ev_accept_exact(pool, adv, 1);
      exact_summary(s, e0.accept, e1.accept);
      s["valid_rate"] = {e0.valid_rate, e1.valid_rate};
      s["output_distance"] = ev_output_distance(pool, adv);
    } else {
      rep.records = run_trials(o, [&](TrialRecord& r, Rng& rng) {
        const auto t = ev_trial(pool, adv, r.b, rng);
        r.verdict = t.valid ? "valid" : "invalid";
        r.guess = t.guess;
      });
      summarize_sampled(s, rep.records);
    }
  } else {  // ladder
    const auto ladder = hybrid_ladder(pool, make_adversary_pair(o.adv));
    const auto lj = ladder.to_json();
    for (const auto& [k, v] : lj.items()) s[k] = v;
    exact_summary(s, ladder.accept0[0], ladder.accept1[0]);
  }
  rep.summary = std::move(s);
  return rep;
}

}  // namespace deletia::games
