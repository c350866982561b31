#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deletia/qsim/cmatrix.hpp"
#include "deletia/qsim/layout.hpp"
#include "deletia/rng.hpp"

namespace deletia::qsim {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kMinProjection = 1e-14;

/// Normalized pure state over a register layout.
class QState {
 public:
  /// All-zero basis state.
  explicit QState(RegisterLayout layout);
  /// Normalizes the given amplitudes; throws on a zero vector.
  QState(RegisterLayout layout, std::vector<Amplitude> amplitudes);

  static QState basis(RegisterLayout layout, std::uint64_t index);

  const RegisterLayout& layout() const noexcept { return layout_; }
  std::uint64_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }
  double norm() const;

  /// Moves the amplitude buffer out, leaving the state empty.
  std::vector<Amplitude> release() && { return std::move(amps_); }

 private:
  RegisterLayout layout_;
  std::vector<Amplitude> amps_;
};

struct MeasureOutcome {
  std::uint64_t value;               ///< segment-local index
  std::vector<std::int64_t> digits;  ///< per-slot values
  double probability;
  QState post_state;
};

struct ProjectionResult {
  double probability;
  QState post_state;
};

// ---- preparation

/// Amplitude proportional to weights[value] on `segment`, |0> elsewhere.
QState prepare_weighted(const RegisterLayout& layout, std::string_view segment, std::span<const double> weights);
QState prepare_weighted(const RegisterLayout& layout, std::string_view segment,
                        const std::map<std::uint64_t, double>& weights);
/// Arbitrary amplitudes on `segment` (normalized), |0> elsewhere.
QState prepare_amplitudes(const RegisterLayout& layout, std::string_view segment,
                          std::span<const Amplitude> amplitudes);
QState tensor(const QState& first, const QState& second);

// ---- unitaries

/// |x>|t> -> |x>|t + sign*f(x)>, addition slot-wise modulo each slot dimension.
/// f maps src-local values to dst-local values.
QState apply_classical(QState state, std::string_view src, std::string_view dst,
                       const std::function<std::uint64_t(std::uint64_t)>& f, int sign = +1);
/// Basis permutation on global indices. Throws unless `perm` is a bijection.
QState apply_permutation(QState state, const std::function<std::uint64_t(std::uint64_t)>& perm);
/// Diagonal unitary on a segment; every factor must have unit modulus.
QState apply_diagonal(QState state, std::string_view segment,
                      const std::function<Amplitude(std::uint64_t)>& factor);
/// Dense unitary acting on a whole segment.
QState apply_unitary(QState state, std::string_view segment, const CMatrix& unitary);
/// |x> -> omega_d^{<x,v>} |x>, all slots of dimension d.
QState phase_oracle(QState state, std::string_view segment, std::span<const std::int64_t> v);
/// Same phase applied only where the single-qubit `control` segment is |1>.
QState controlled_phase_oracle(QState state, std::string_view control, std::string_view segment,
                               std::span<const std::int64_t> v);
/// q-ary Fourier transform on every slot of the segment (all slots equal q).
QState qft(QState state, std::string_view segment);
QState iqft(QState state, std::string_view segment);

// ---- measurement

std::vector<double> outcome_probabilities(const QState& state, std::string_view segment);
MeasureOutcome measure(const QState& state, std::string_view segment, Rng& rng);
/// Post-measurement branch for a fixed outcome; nullopt if it has zero weight.
std::optional<MeasureOutcome> measurement_branch(const QState& state, std::string_view segment,
                                                 std::uint64_t value);
/// Every outcome with probability above kMinProjection.
std::vector<MeasureOutcome> measurement_branches(const QState& state, std::string_view segment);
/// Drops a segment that holds a basis state; throws if it is entangled.
QState remove_segment(const QState& state, std::string_view segment);
/// Success probability of projecting `segment` onto `target` (no collapse).
double projection_probability(const QState& state, std::string_view segment, const QState& target);
/// Projects `segment` onto `target`; throws zero-probability below 1e-14.
ProjectionResult project(const QState& state, std::string_view segment, const QState& target);
/// Complement outcome I - |target><target|; throws zero-probability likewise.
ProjectionResult project_complement(const QState& state, std::string_view segment, const QState& target);

Amplitude inner_product(const QState& bra, const QState& ket);
double fidelity(const QState& a, const QState& b);

/// Lines `d0,d1,...  re  im` for |amp| > 1e-12 in index order.
std::string dump(const QState& state);

}  // namespace deletia::qsim
