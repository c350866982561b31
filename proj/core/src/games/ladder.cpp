#include "deletia/games/ladder.hpp"

#include <bit>
#include <cmath>

#include "deletia/error.hpp"

namespace deletia::games {

namespace {

constexpr std::string_view kC = "__C";
constexpr std::string_view kX = "X";
constexpr std::string_view kV = "__V";
constexpr unsigned kMaxPhaseBits = 12;

std::vector<std::int64_t> phase_vector(std::uint64_t z, unsigned bits) {
  std::vector<std::int64_t> v(bits);
  for (unsigned i = 0; i < bits; ++i) v[i] = static_cast<std::int64_t>((z >> (bits - 1 - i)) & 1U);
  return v;
}

int parity(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

qsim::QState plus_control() {
  const double s = 1.0 / std::sqrt(2.0);
  return qsim::QState(qsim::RegisterLayout{qsim::Segment{std::string(kC), {2}}}, {s, s});
}

/// |+>_C (x) psi, then controlled-Z^z computed through a scratch copy of M[h](x).
qsim::QState controlled_twirl(const hash::HashFunction& h, const qsim::QState& x_state, std::uint64_t z,
                              unsigned bits) {
  auto state = qsim::tensor(plus_control(), x_state);
  state = qsim::tensor(state, qsim::QState(qsim::RegisterLayout{qsim::qudits(std::string(kV), bits, 2)}));
  const auto m = [&h](std::uint64_t x) { return hash::measurement_value(h, x); };
  state = qsim::apply_classical(std::move(state), kX, kV, m);
  const auto zv = phase_vector(z, bits);
  state = qsim::controlled_phase_oracle(std::move(state), kC, kV, zv);
  state = qsim::apply_classical(std::move(state), kX, kV, m, -1);
  return qsim::remove_segment(state, kV);
}

qsim::QState phase_target(int sign_bit) {
  const double s = 1.0 / std::sqrt(2.0);
  return qsim::QState(qsim::RegisterLayout{qsim::Segment{std::string(kC), {2}}}, {s, sign_bit ? -s : s});
}

/// Measures C and hands the residual to A1 only when the outcome equals b.
double measure_control(const Challenge& ch, const AdversaryPair& adv, const qsim::QState& joint, std::int64_t memo,
                       int b) {
  double out = 0.0;
  for (const auto& c : qsim::measurement_branches(joint, kC))
    out += c.probability * (static_cast<int>(c.value) == b
                                ? adv.distinguisher->accept_probability(ch, c.post_state, kX, memo)
                                : 0.5);
  return out;
}

}  // namespace

double LadderReport::advantage(std::size_t level) const { return std::abs(accept0.at(level) - accept1.at(level)); }

nlohmann::json LadderReport::to_json() const {
  nlohmann::json j;
  for (std::size_t i = 0; i < 4; ++i) {
    j["adv" + std::to_string(i)] = advantage(i);
    j["accept" + std::to_string(i)] = {accept0[i], accept1[i]};
  }
  j["projection_success"] = projection_success;
  return j;
}

double ladder_accept(const std::vector<GameKey>& pool, const AdversaryPair& adv, int level, int b,
                     double* projection_success) {
  require(level >= 0 && level <= 3, Errc::invalid_argument, "hybrid level must be 0..3");
  if (level == 0) return ev_accept_exact(pool, adv, b).accept;
  require(!pool.empty(), Errc::invalid_argument, "empty key pool");

  double accept = 0.0, valid_mass = 0.0, projected_mass = 0.0;
  for (const auto& key : pool) {
    const auto& h = *key.h;
    const unsigned bits = hash::measurement_bits(h);
    if (bits > kMaxPhaseBits)
      throw Error(Errc::channel_not_expressible, "phase register of " + std::to_string(bits) + " bits is too wide");
    const double z_weight = 1.0 / static_cast<double>(1ULL << bits);

    for (const auto& img : image_branches(key)) {
      std::vector<Branch> sources;
      if (level == 3) sources = collapse_branches(h, img.state);
      else sources.push_back({img.value, 1.0, img.state});
      Challenge ch = make_challenge(key, img.value);
      Challenge after = ch;
      after.released = key.release;

      for (const auto& src : sources) {
        for (std::uint64_t z = 0; z < (1ULL << bits); ++z) {
          const double w0 = img.probability * src.probability * z_weight;
          const auto joint = controlled_twirl(h, src.state, z, bits);
          for (const auto& br : adv.deleter->act(ch, joint, kX)) {
            const double w = w0 * br.probability;
            if (!key.accepts(img.value, br.certificate)) {
              accept += 0.5 * w;
              continue;
            }
            valid_mass += w;
            if (level == 1) {
              accept += w * measure_control(after, adv, *br.joint, br.memo, b);
              continue;
            }
            const auto target = phase_target(parity(hash::measurement_value(h, br.certificate), z));
            const double ps = qsim::projection_probability(*br.joint, kC, target);
            projected_mass += w * ps;
            if (ps >= qsim::kMinProjection) {
              const auto proj = qsim::project(*br.joint, kC, target);
              accept += w * ps * measure_control(after, adv, proj.post_state, br.memo, b);
            }
            accept += w * (1.0 - ps) * 0.5;
          }
        }
      }
    }
  }
  if (projection_success) *projection_success = valid_mass > 0.0 ? projected_mass / valid_mass : 0.0;
  return accept / static_cast<double>(pool.size());
}

LadderReport hybrid_ladder(const std::vector<GameKey>& pool, const AdversaryPair& adv) {
  LadderReport r;
  for (int level = 0; level < 4; ++level) {
    double ps = 0.0;
    r.accept0[level] = ladder_accept(pool, adv, level, 0, &ps);
    r.accept1[level] = ladder_accept(pool, adv, level, 1);
    if (level >= 2) r.projection_success[level - 2] = ps;
  }
  return r;
}

}  // namespace deletia::games
