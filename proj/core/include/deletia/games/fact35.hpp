#pragma once

#include <span>
#include <vector>

#include "deletia/qsim/cmatrix.hpp"
#include "deletia/rng.hpp"

namespace deletia::games {

/// Sides of the distinguish-to-map inequality
///   sum_i ||(sum_{j != i} P_j) D P_i psi||^2 >= (1/N)(||D psi||^2 - sum_i ||D P_i psi||^2)^2.
struct Fact35Result {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;

  double slack() const { return lhs - rhs; }
};

inline constexpr double kFactTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-10;

/// Throws non_orthogonal when two projectors overlap and outside_span when
/// psi is not in the image of their sum.
Fact35Result fact35_check(const qsim::CMatrix& d, const std::vector<qsim::CMatrix>& projectors,
                          std::span<const qsim::Amplitude> psi);

struct Fact35Instance {
  qsim::CMatrix d;
  std::vector<qsim::CMatrix> projectors;
  std::vector<qsim::Amplitude> psi;
};

/// Random instance in dimension `dim`: the projectors split a random
/// orthonormal basis into `parts` nonempty groups, D projects onto a random
/// subspace and psi is a random unit vector inside the projectors' image.
Fact35Instance random_fact35_instance(std::size_t dim, std::size_t parts, Rng& rng);

}  // namespace deletia::games
