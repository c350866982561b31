#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deletia/qsim/cmatrix.hpp"
#include "deletia/qsim/layout.hpp"
#include "deletia/qsim/state.hpp"

namespace deletia::qsim {

inline constexpr std::uint64_t kMaxDensityDimension = 4096;

/// Hermitian, unit-trace, PSD operator over a register layout.
class DensityOp {
 public:
  /// Validates the invariants (Hermitian and trace to 1e-10, eigenvalues
  /// above -1e-9 when `check_psd`).
  DensityOp(RegisterLayout layout, CMatrix matrix, bool check_psd = false);

  static DensityOp from_pure(const QState& state);
  /// Convex combination; weights must be nonnegative and sum to 1.
  static DensityOp mixture(const std::vector<std::pair<double, DensityOp>>& parts);

  const RegisterLayout& layout() const noexcept { return layout_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  std::uint64_t dimension() const noexcept { return matrix_.size(); }

  double expectation(const CMatrix& observable) const;
  /// <psi| rho |psi>
  double overlap(std::span<const Amplitude> psi) const;

 private:
  RegisterLayout layout_;
  CMatrix matrix_;
};

/// Reduced state on `keep` (names in any order; layout order is preserved).
DensityOp reduced_density(const QState& state, const std::vector<std::string>& keep);
DensityOp partial_trace(const DensityOp& rho, const std::vector<std::string>& keep);

/// Average of Z^z rho Z^z over all z on the (qubit) segment.
DensityOp pauli_twirl_channel(const DensityOp& rho, std::string_view segment);
/// Zeroes entries whose segment values differ (direct dephasing).
DensityOp dephase(const DensityOp& rho, std::string_view segment);

double trace_distance(const DensityOp& a, const DensityOp& b);

}  // namespace deletia::qsim
