#include "deletia/games/experiments.hpp"

#include <cmath>

#include "deletia/error.hpp"

namespace deletia::games {

namespace {

constexpr std::string_view kX = "X";
constexpr std::string_view kY = "__Y";
constexpr std::string_view kV = "__V";
constexpr std::string_view kFlag = "__flag";
constexpr std::string_view kMemo = "__memo";

qsim::QState prepared(const GameKey& key) {
  const auto& h = *key.h;
  qsim::RegisterLayout layout;
  layout.add(h.domain().segment(std::string(kX)));
  layout.add(h.range().segment(std::string(kY)));
  std::vector<qsim::Amplitude> amps(key.amplitudes.begin(), key.amplitudes.end());
  auto state = qsim::prepare_amplitudes(layout, kX, amps);
  return qsim::apply_classical(std::move(state), kX, kY, [&h](std::uint64_t x) { return h.eval(x); });
}

qsim::QState with_measurement(const hash::HashFunction& h, const qsim::QState& x_state) {
  const unsigned bits = hash::measurement_bits(h);
  auto v = qsim::QState(qsim::RegisterLayout{qsim::qudits(std::string(kV), bits, 2)});
  auto state = qsim::tensor(x_state, v);
  return qsim::apply_classical(std::move(state), kX, kV,
                               [&h](std::uint64_t x) { return hash::measurement_value(h, x); });
}

const GameKey& pick(const std::vector<GameKey>& pool, Rng& rng) {
  require(!pool.empty(), Errc::invalid_argument, "empty key pool");
  return pool[rng.uniform(pool.size())];
}

}  // namespace

GameKey toy_key(const hash::SampledHash& key, std::span<const double> weights) {
  const auto& h = *key.h;
  const auto size = h.domain().size();
  require(weights.empty() || weights.size() == size, Errc::dimension_mismatch, "weights must cover the domain");
  GameKey out;
  out.h = key.h;
  out.amplitudes.resize(size);
  for (std::uint64_t x = 0; x < size; ++x)
    if (h.in_domain(x)) out.amplitudes[x] = weights.empty() ? 1.0 : std::sqrt(std::max(0.0, weights[x]));
  out.accepts = [h = key.h](std::uint64_t y, std::uint64_t cert) {
    return cert < h->domain().size() && h->in_domain(cert) && h->eval(cert) == y;
  };
  return out;
}

std::vector<Branch> image_branches(const GameKey& key) {
  std::vector<Branch> out;
  for (auto& b : qsim::measurement_branches(prepared(key), kY))
    out.push_back({b.value, b.probability, qsim::remove_segment(b.post_state, kY)});
  return out;
}

Branch sample_image(const GameKey& key, Rng& rng) {
  auto r = qsim::measure(prepared(key), kY, rng);
  return {r.value, r.probability, qsim::remove_segment(r.post_state, kY)};
}

std::vector<Branch> collapse_branches(const hash::HashFunction& h, const qsim::QState& x_state) {
  std::vector<Branch> out;
  for (auto& b : qsim::measurement_branches(with_measurement(h, x_state), kV))
    out.push_back({b.value, b.probability, qsim::remove_segment(b.post_state, kV)});
  return out;
}

Branch sample_collapse(const hash::HashFunction& h, const qsim::QState& x_state, Rng& rng) {
  auto r = qsim::measure(with_measurement(h, x_state), kV, rng);
  return {r.value, r.probability, qsim::remove_segment(r.post_state, kV)};
}

Challenge make_challenge(const GameKey& key, std::uint64_t y) {
  Challenge ch;
  ch.h = key.h.get();
  ch.y = y;
  ch.amplitudes = &key.amplitudes;
  return ch;
}

// ---------------------------------------------------------------- tc

double tc_accept_exact(const std::vector<GameKey>& pool, const Distinguisher& d, int b) {
  require(!pool.empty(), Errc::invalid_argument, "empty key pool");
  double total = 0.0;
  for (const auto& key : pool) {
    for (const auto& img : image_branches(key)) {
      const auto ch = make_challenge(key, img.value);
      if (b == 0) {
        total += img.probability * d.accept_probability(ch, img.state, kX, 0);
        continue;
      }
      for (const auto& v : collapse_branches(*key.h, img.state))
        total += img.probability * v.probability * d.accept_probability(ch, v.state, kX, 0);
    }
  }
  return total / static_cast<double>(pool.size());
}

int tc_trial(const std::vector<GameKey>& pool, const Distinguisher& d, int b, Rng& rng) {
  const auto& key = pick(pool, rng);
  auto img = sample_image(key, rng);
  const auto ch = make_challenge(key, img.value);
  if (b == 1) img = sample_collapse(*key.h, img.state, rng);
  return rng.bernoulli(d.accept_probability(ch, img.state, kX, 0)) ? 1 : 0;
}

// ---------------------------------------------------------------- evtc

namespace {

template <class Visit>
void for_each_challenge_state(const GameKey& key, int b, Visit&& visit) {
  for (const auto& img : image_branches(key)) {
    if (b == 0) {
      visit(img.value, img.probability, img.state);
      continue;
    }
    for (const auto& v : collapse_branches(*key.h, img.state))
      visit(img.value, img.probability * v.probability, v.state);
  }
}

double second_stage(const GameKey& key, const Challenge& ch, const AdversaryPair& adv, const DeletionBranch& br) {
  Challenge after = ch;
  after.released = key.release;
  return adv.distinguisher->accept_probability(after, *br.joint, kX, br.memo);
}

}  // namespace

EvExact ev_accept_exact(const std::vector<GameKey>& pool, const AdversaryPair& adv, int b) {
  require(!pool.empty(), Errc::invalid_argument, "empty key pool");
  EvExact out;
  for (const auto& key : pool) {
    for_each_challenge_state(key, b, [&](std::uint64_t y, double p, const qsim::QState& state) {
      const auto ch = make_challenge(key, y);
      for (const auto& br : adv.deleter->act(ch, state, kX)) {
        const double w = p * br.probability;
        if (key.accepts(y, br.certificate)) {
          out.valid_rate += w;
          out.accept += w * second_stage(key, ch, adv, br);
        } else {
          out.accept += w * 0.5;
        }
      }
    });
  }
  out.accept /= static_cast<double>(pool.size());
  out.valid_rate /= static_cast<double>(pool.size());
  return out;
}

EvTrial ev_trial(const std::vector<GameKey>& pool, const AdversaryPair& adv, int b, Rng& rng) {
  const auto& key = pick(pool, rng);
  auto img = sample_image(key, rng);
  const auto y = img.value;
  if (b == 1) img = sample_collapse(*key.h, img.state, rng);
  const auto ch = make_challenge(key, y);
  const auto branches = adv.deleter->act(ch, img.state, kX);
  std::vector<double> weights;
  for (const auto& br : branches) weights.push_back(br.probability);
  const auto& br = branches[rng.categorical(weights)];
  EvTrial out;
  out.valid = key.accepts(y, br.certificate);
  out.guess = out.valid ? (rng.bernoulli(second_stage(key, ch, adv, br)) ? 1 : 0) : (rng.bit() ? 1 : 0);
  return out;
}

double ev_output_distance(const std::vector<GameKey>& pool, const AdversaryPair& adv) {
  require(!pool.empty(), Errc::invalid_argument, "empty key pool");
  double total = 0.0;
  for (const auto& key : pool) {
    const auto images = image_branches(key);
    for (const auto& img : images) {
      const auto ch = make_challenge(key, img.value);
      std::array<std::vector<std::pair<double, qsim::DensityOp>>, 2> parts;
      qsim::RegisterLayout out_layout;
      out_layout.add(qsim::Segment{std::string(kFlag), {2}});
      out_layout.add(qsim::Segment{std::string(kMemo), {2}});
      out_layout.add(key.h->domain().segment(std::string(kX)));
      const auto bottom = qsim::DensityOp::from_pure(qsim::QState(out_layout));
      for (int b = 0; b < 2; ++b) {
        auto states = b == 0 ? std::vector<Branch>{} : collapse_branches(*key.h, img.state);
        if (b == 0) states.push_back({img.value, 1.0, img.state});
        for (const auto& s : states) {
          for (const auto& br : adv.deleter->act(ch, s.state, kX)) {
            const double w = s.probability * br.probability;
            if (!key.accepts(img.value, br.certificate)) {
              parts[b].emplace_back(w, bottom);
              continue;
            }
            require(br.joint->layout() == qsim::RegisterLayout{key.h->domain().segment(std::string(kX))},
                    Errc::channel_not_expressible, "residual state must live on X alone");
            qsim::QState header(qsim::RegisterLayout{qsim::Segment{std::string(kFlag), {2}},
                                                     qsim::Segment{std::string(kMemo), {2}}});
            header = qsim::QState::basis(header.layout(), 2 + static_cast<std::uint64_t>(br.memo != 0));
            parts[b].emplace_back(w, qsim::DensityOp::from_pure(qsim::tensor(header, *br.joint)));
          }
        }
      }
      const auto rho0 = qsim::DensityOp::mixture(parts[0]);
      const auto rho1 = qsim::DensityOp::mixture(parts[1]);
      total += img.probability * qsim::trace_distance(rho0, rho1);
    }
  }
  return total / static_cast<double>(pool.size());
}

}  // namespace deletia::games
