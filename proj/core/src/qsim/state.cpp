#include "deletia/qsim/state.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "deletia/error.hpp"

namespace deletia::qsim {

namespace {

void normalize_in_place(std::vector<Amplitude>& amps) {
  const double n2 = vector_norm_sq(amps);
  require(n2 > 0.0 && std::isfinite(n2), Errc::zero_probability, "cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
}

// Table of omega_d^k for k in [0, d).
std::vector<Amplitude> roots_of_unity(std::uint64_t d) {
  std::vector<Amplitude> w(d);
  for (std::uint64_t k = 0; k < d; ++k) w[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / d);
  return w;
}

std::size_t common_slot_dim(const Segment& seg) {
  const auto d = seg.dims.front();
  for (auto x : seg.dims)
    require(x == d, Errc::dimension_mismatch, "segment '" + seg.name + "' mixes slot dimensions");
  return d;
}

// Slot-wise addition of two segment-local values.
std::uint64_t add_digits(const Segment& seg, std::uint64_t a, std::uint64_t b, int sign) {
  std::uint64_t out = 0, mult = 1;
  for (std::size_t i = seg.dims.size(); i-- > 0;) {
    const auto d = seg.dims[i];
    const auto da = a % d, db = b % d;
    a /= d;
    b /= d;
    const auto digit = sign >= 0 ? (da + db) % d : (da + d - db) % d;
    out += digit * mult;
    mult *= d;
  }
  return out;
}

QState fourier(QState state, std::string_view segment, bool inverse) {
  const auto& layout = state.layout();
  const auto& seg = layout.segment(segment);
  const auto q = common_slot_dim(seg);
  const auto w = roots_of_unity(q);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Amplitude> kernel(q * q);
  for (std::uint64_t y = 0; y < q; ++y)
    for (std::uint64_t x = 0; x < q; ++x) {
      const auto k = (x * y) % q;
      kernel[y * q + x] = w[inverse ? (q - k) % q : k] * scale;
    }
  auto amps = std::move(state).release();
  std::vector<Amplitude> in(q), out(q);
  for (std::size_t slot = 0; slot < seg.dims.size(); ++slot) {
    const auto p = layout.slot_placement(segment, slot);
    const std::uint64_t block = p.stride * q;
    for (std::uint64_t base = 0; base < amps.size(); base += block) {
      for (std::uint64_t low = 0; low < p.stride; ++low) {
        bool any = false;
        for (std::uint64_t x = 0; x < q; ++x) {
          in[x] = amps[base + low + x * p.stride];
          any = any || in[x] != Amplitude{};
        }
        if (!any) continue;
        for (std::uint64_t y = 0; y < q; ++y) {
          const auto* row = kernel.data() + y * q;
          Amplitude acc{};
          for (std::uint64_t x = 0; x < q; ++x) acc += in[x] * row[x];
          out[y] = acc;
        }
        for (std::uint64_t y = 0; y < q; ++y) amps[base + low + y * p.stride] = out[y];
      }
    }
  }
  return QState(layout, std::move(amps));
}

// Vector of the "other" registers conditioned on segment value `value`
// (unnormalized), laid out over layout.without(segment).
std::vector<Amplitude> slice(const QState& state, const Placement& p, std::uint64_t value) {
  std::vector<Amplitude> out(state.dimension() / p.dim);
  const auto amps = state.amplitudes();
  const auto high_block = p.stride * p.dim;
  std::uint64_t k = 0;
  for (std::uint64_t base = 0; base < amps.size(); base += high_block)
    for (std::uint64_t low = 0; low < p.stride; ++low) out[k++] = amps[base + value * p.stride + low];
  return out;
}

std::vector<Amplitude> contract_with(const QState& state, std::string_view segment, const QState& target) {
  const auto& seg = state.layout().segment(segment);
  require(target.layout().segments().size() == 1 && target.layout().segments()[0].dims == seg.dims,
          Errc::dimension_mismatch, "projection target does not match segment dims");
  const auto p = state.layout().placement(segment);
  std::vector<Amplitude> out(state.dimension() / p.dim);
  const auto amps = state.amplitudes();
  const auto t = target.amplitudes();
  const auto high_block = p.stride * p.dim;
  std::uint64_t k = 0;
  for (std::uint64_t base = 0; base < amps.size(); base += high_block)
    for (std::uint64_t low = 0; low < p.stride; ++low) {
      Amplitude acc{};
      for (std::uint64_t v = 0; v < p.dim; ++v) acc += std::conj(t[v]) * amps[base + v * p.stride + low];
      out[k++] = acc;
    }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- QState

QState::QState(RegisterLayout layout) : layout_(std::move(layout)), amps_(layout_.dimension()) { amps_[0] = 1.0; }

QState::QState(RegisterLayout layout, std::vector<Amplitude> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
  require(amps_.size() == layout_.dimension(), Errc::dimension_mismatch, "amplitude count != layout dimension");
  normalize_in_place(amps_);
}

QState QState::basis(RegisterLayout layout, std::uint64_t index) {
  QState s(std::move(layout));
  require(index < s.dimension(), Errc::dimension_mismatch, "basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double QState::norm() const { return std::sqrt(vector_norm_sq(amps_)); }

// ---------------------------------------------------------------- preparation

QState prepare_weighted(const RegisterLayout& layout, std::string_view segment, std::span<const double> weights) {
  const auto p = layout.placement(segment);
  require(weights.size() <= p.dim, Errc::dimension_mismatch, "more weights than segment values");
  std::vector<Amplitude> amps(layout.dimension());
  bool any = false;
  for (std::uint64_t v = 0; v < weights.size(); ++v) {
    require(weights[v] >= 0.0, Errc::invalid_argument, "weights must be nonnegative");
    if (weights[v] > 0.0) any = true;
    amps[v * p.stride] = weights[v];
  }
  require(any, Errc::all_zero_weights, "prepare_weighted: all weights are zero");
  return QState(layout, std::move(amps));
}

QState prepare_weighted(const RegisterLayout& layout, std::string_view segment,
                        const std::map<std::uint64_t, double>& weights) {
  const auto p = layout.placement(segment);
  std::vector<double> dense(p.dim, 0.0);
  for (const auto& [v, w] : weights) {
    require(v < p.dim, Errc::dimension_mismatch, "weight key outside segment range");
    dense[v] = w;
  }
  return prepare_weighted(layout, segment, dense);
}

QState prepare_amplitudes(const RegisterLayout& layout, std::string_view segment,
                          std::span<const Amplitude> amplitudes) {
  const auto p = layout.placement(segment);
  require(amplitudes.size() == p.dim, Errc::dimension_mismatch, "amplitude count != segment dimension");
  std::vector<Amplitude> amps(layout.dimension());
  for (std::uint64_t v = 0; v < p.dim; ++v) amps[v * p.stride] = amplitudes[v];
  return QState(layout, std::move(amps));
}

QState tensor(const QState& first, const QState& second) {
  RegisterLayout layout = first.layout();
  for (const auto& s : second.layout().segments()) layout.add(s);
  std::vector<Amplitude> amps(layout.dimension());
  const auto a = first.amplitudes();
  const auto b = second.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (a[i] == Amplitude{}) continue;
    for (std::uint64_t j = 0; j < b.size(); ++j) amps[i * b.size() + j] = a[i] * b[j];
  }
  return QState(std::move(layout), std::move(amps));
}

// ---------------------------------------------------------------- unitaries

QState apply_classical(QState state, std::string_view src, std::string_view dst,
                       const std::function<std::uint64_t(std::uint64_t)>& f, int sign) {
  const auto layout = state.layout();
  require(src != dst, Errc::invalid_argument, "apply_classical: src and dst must differ");
  const auto ps = layout.placement(src);
  const auto pd = layout.placement(dst);
  const auto& dseg = layout.segment(dst);
  std::vector<std::uint64_t> table(ps.dim);
  for (std::uint64_t x = 0; x < ps.dim; ++x) {
    table[x] = f(x);
    require(table[x] < pd.dim, Errc::dimension_mismatch, "classical map output exceeds dst dimension");
  }
  const auto old = std::move(state).release();
  std::vector<Amplitude> amps(old.size());
  for (std::uint64_t i = 0; i < old.size(); ++i) {
    if (old[i] == Amplitude{}) continue;
    const auto x = ps.extract(i);
    const auto t = pd.extract(i);
    amps[pd.replace(i, add_digits(dseg, t, table[x], sign))] = old[i];
  }
  return QState(layout, std::move(amps));
}

QState apply_permutation(QState state, const std::function<std::uint64_t(std::uint64_t)>& perm) {
  const auto layout = state.layout();
  const auto old = std::move(state).release();
  std::vector<Amplitude> amps(old.size());
  std::vector<bool> hit(old.size(), false);
  for (std::uint64_t i = 0; i < old.size(); ++i) {
    const auto j = perm(i);
    require(j < old.size() && !hit[j], Errc::invalid_argument, "apply_permutation: map is not a bijection");
    hit[j] = true;
    amps[j] = old[i];
  }
  return QState(layout, std::move(amps));
}

QState apply_diagonal(QState state, std::string_view segment,
                      const std::function<Amplitude(std::uint64_t)>& factor) {
  const auto layout = state.layout();
  const auto p = layout.placement(segment);
  std::vector<Amplitude> table(p.dim);
  for (std::uint64_t v = 0; v < p.dim; ++v) {
    table[v] = factor(v);
    require(std::abs(std::abs(table[v]) - 1.0) < 1e-12, Errc::invalid_argument,
            "apply_diagonal: factor is not a phase");
  }
  auto amps = std::move(state).release();
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if (amps[i] != Amplitude{}) amps[i] *= table[p.extract(i)];
  return QState(layout, std::move(amps));
}

QState apply_unitary(QState state, std::string_view segment, const CMatrix& unitary) {
  const auto layout = state.layout();
  const auto p = layout.placement(segment);
  require(unitary.size() == p.dim, Errc::dimension_mismatch, "unitary size != segment dimension");
  auto amps = std::move(state).release();
  std::vector<Amplitude> in(p.dim);
  const auto block = p.stride * p.dim;
  for (std::uint64_t base = 0; base < amps.size(); base += block)
    for (std::uint64_t low = 0; low < p.stride; ++low) {
      for (std::uint64_t v = 0; v < p.dim; ++v) in[v] = amps[base + low + v * p.stride];
      const auto out = unitary.apply(in);
      for (std::uint64_t v = 0; v < p.dim; ++v) amps[base + low + v * p.stride] = out[v];
    }
  return QState(layout, std::move(amps));
}

namespace {

std::vector<Amplitude> oracle_table(const Segment& seg, std::span<const std::int64_t> v) {
  const auto d = common_slot_dim(seg);
  require(v.size() == seg.dims.size(), Errc::dimension_mismatch, "phase vector length != slot count");
  const auto w = roots_of_unity(d);
  std::vector<Amplitude> table(seg.dimension());
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    const auto digits = local_digits(seg, x);
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const auto vi = ((v[i] % static_cast<std::int64_t>(d)) + static_cast<std::int64_t>(d)) % static_cast<std::int64_t>(d);
      k = (k + static_cast<std::uint64_t>(digits[i]) * static_cast<std::uint64_t>(vi)) % d;
    }
    table[x] = w[k];
  }
  return table;
}

}  // namespace

QState phase_oracle(QState state, std::string_view segment, std::span<const std::int64_t> v) {
  const auto table = oracle_table(state.layout().segment(segment), v);
  return apply_diagonal(std::move(state), segment, [&](std::uint64_t x) { return table[x]; });
}

QState controlled_phase_oracle(QState state, std::string_view control, std::string_view segment,
                               std::span<const std::int64_t> v) {
  const auto layout = state.layout();
  const auto pc = layout.placement(control);
  require(pc.dim == 2, Errc::dimension_mismatch, "control segment must be a single qubit");
  const auto pt = layout.placement(segment);
  const auto table = oracle_table(layout.segment(segment), v);
  auto amps = std::move(state).release();
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if (pc.extract(i) == 1) amps[i] *= table[pt.extract(i)];
  return QState(layout, std::move(amps));
}

QState qft(QState state, std::string_view segment) { return fourier(std::move(state), segment, false); }
QState iqft(QState state, std::string_view segment) { return fourier(std::move(state), segment, true); }

// ---------------------------------------------------------------- measurement

std::vector<double> outcome_probabilities(const QState& state, std::string_view segment) {
  const auto p = state.layout().placement(segment);
  std::vector<double> probs(p.dim, 0.0);
  const auto amps = state.amplitudes();
  const auto block = p.stride * p.dim;
  for (std::uint64_t base = 0; base < amps.size(); base += block)
    for (std::uint64_t v = 0; v < p.dim; ++v) {
      const auto* row = amps.data() + base + v * p.stride;
      double acc = 0.0;
      for (std::uint64_t low = 0; low < p.stride; ++low) acc += std::norm(row[low]);
      probs[v] += acc;
    }
  return probs;
}

std::optional<MeasureOutcome> measurement_branch(const QState& state, std::string_view segment,
                                                 std::uint64_t value) {
  const auto p = state.layout().placement(segment);
  require(value < p.dim, Errc::dimension_mismatch, "measurement value outside segment");
  std::vector<Amplitude> amps(state.dimension());
  double prob = 0.0;
  const auto src = state.amplitudes();
  const auto block = p.stride * p.dim;
  for (std::uint64_t base = value * p.stride; base < src.size(); base += block)
    for (std::uint64_t low = 0; low < p.stride; ++low) {
      amps[base + low] = src[base + low];
      prob += std::norm(src[base + low]);
    }
  if (prob <= kMinProjection) return std::nullopt;
  return MeasureOutcome{value, local_digits(state.layout().segment(segment), value), prob,
                        QState(state.layout(), std::move(amps))};
}

MeasureOutcome measure(const QState& state, std::string_view segment, Rng& rng) {
  const auto probs = outcome_probabilities(state, segment);
  const auto value = rng.categorical(probs);
  auto branch = measurement_branch(state, segment, value);
  require(branch.has_value(), Errc::zero_probability, "sampled a zero-probability outcome");
  return std::move(*branch);
}

std::vector<MeasureOutcome> measurement_branches(const QState& state, std::string_view segment) {
  const auto probs = outcome_probabilities(state, segment);
  std::vector<MeasureOutcome> out;
  for (std::uint64_t v = 0; v < probs.size(); ++v)
    if (probs[v] > kMinProjection)
      if (auto b = measurement_branch(state, segment, v)) out.push_back(std::move(*b));
  return out;
}

QState remove_segment(const QState& state, std::string_view segment) {
  const auto probs = outcome_probabilities(state, segment);
  std::uint64_t value = 0;
  for (std::uint64_t v = 1; v < probs.size(); ++v)
    if (probs[v] > probs[value]) value = v;
  require(probs[value] > 1.0 - 1e-10, Errc::invalid_argument,
          "segment '" + std::string(segment) + "' is not in a basis state");
  return QState(state.layout().without(segment), slice(state, state.layout().placement(segment), value));
}

double projection_probability(const QState& state, std::string_view segment, const QState& target) {
  return vector_norm_sq(contract_with(state, segment, target));
}

ProjectionResult project(const QState& state, std::string_view segment, const QState& target) {
  const auto rest = contract_with(state, segment, target);
  const double prob = vector_norm_sq(rest);
  require(prob >= kMinProjection, Errc::zero_probability, "projection has probability below 1e-14");
  // Post state = |target> (x) rest, embedded at the segment's position.
  const auto& layout = state.layout();
  const auto p = layout.placement(segment);
  const auto t = target.amplitudes();
  std::vector<Amplitude> amps(state.dimension());
  const auto block = p.stride * p.dim;
  std::uint64_t k = 0;
  for (std::uint64_t base = 0; base < amps.size(); base += block)
    for (std::uint64_t low = 0; low < p.stride; ++low, ++k)
      for (std::uint64_t v = 0; v < p.dim; ++v) amps[base + v * p.stride + low] = t[v] * rest[k];
  return {prob, QState(layout, std::move(amps))};
}

ProjectionResult project_complement(const QState& state, std::string_view segment, const QState& target) {
  const auto inside = contract_with(state, segment, target);
  const auto& layout = state.layout();
  const auto p = layout.placement(segment);
  const auto t = target.amplitudes();
  std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  const auto block = p.stride * p.dim;
  std::uint64_t k = 0;
  for (std::uint64_t base = 0; base < amps.size(); base += block)
    for (std::uint64_t low = 0; low < p.stride; ++low, ++k)
      for (std::uint64_t v = 0; v < p.dim; ++v) amps[base + v * p.stride + low] -= t[v] * inside[k];
  const double prob = vector_norm_sq(amps);
  require(prob >= kMinProjection, Errc::zero_probability, "projection has probability below 1e-14");
  return {prob, QState(layout, std::move(amps))};
}

Amplitude inner_product(const QState& bra, const QState& ket) {
  require(bra.layout() == ket.layout(), Errc::dimension_mismatch, "inner_product: layout mismatch");
  return inner(bra.amplitudes(), ket.amplitudes());
}

double fidelity(const QState& a, const QState& b) { return std::norm(inner_product(a, b)); }

std::string dump(const QState& state) {
  std::string out;
  const auto amps = state.amplitudes();
  std::vector<std::size_t> dims;
  for (const auto& s : state.layout().segments()) dims.insert(dims.end(), s.dims.begin(), s.dims.end());
  std::vector<std::uint64_t> digits(dims.size());
  char buf[96];
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) > 1e-12) {
      std::uint64_t rem = i;
      for (std::size_t s = dims.size(); s-- > 0;) {
        digits[s] = rem % dims[s];
        rem /= dims[s];
      }
      for (std::size_t s = 0; s < digits.size(); ++s) {
        if (s) out += ',';
        out += std::to_string(digits[s]);
      }
      std::snprintf(buf, sizeof buf, "  %.12f  %.12f\n", clean(amps[i].real()), clean(amps[i].imag()));
      out += buf;
    }
  }
  return out;
}

}  // namespace deletia::qsim
