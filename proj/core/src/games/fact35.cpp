#include "deletia/games/fact35.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deletia/error.hpp"

namespace deletia::games {

namespace {

using qsim::Amplitude;
using qsim::CMatrix;

bool is_projector(const CMatrix& p) {
  return p.is_hermitian(kOrthogonalityTolerance) && qsim::max_abs_diff(p * p, p) < kOrthogonalityTolerance;
}

Amplitude complex_normal(Rng& rng) {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - rng.uniform_real();
  const double v = rng.uniform_real();
  const double r = std::sqrt(-2.0 * std::log(u));
  return {r * std::cos(2.0 * std::numbers::pi * v), r * std::sin(2.0 * std::numbers::pi * v)};
}

/// Columns of a Haar-ish random unitary via Gram-Schmidt.
std::vector<std::vector<Amplitude>> random_basis(std::size_t dim, Rng& rng) {
  std::vector<std::vector<Amplitude>> basis;
  while (basis.size() < dim) {
    std::vector<Amplitude> v(dim);
    for (auto& a : v) a = complex_normal(rng);
    for (const auto& b : basis) {
      const auto c = qsim::inner(b, v);
      for (std::size_t i = 0; i < dim; ++i) v[i] -= c * b[i];
    }
    const double n = std::sqrt(qsim::vector_norm_sq(v));
    if (n < 1e-8) continue;
    for (auto& a : v) a /= n;
    basis.push_back(std::move(v));
  }
  return basis;
}

CMatrix span_projector(const std::vector<std::vector<Amplitude>>& vectors, std::size_t dim) {
  CMatrix p(dim);
  for (const auto& v : vectors) p = p + CMatrix::projector(v);
  return p;
}

}  // namespace

Fact35Result fact35_check(const CMatrix& d, const std::vector<CMatrix>& projectors, std::span<const Amplitude> psi) {
  const auto dim = d.size();
  require(!projectors.empty(), Errc::invalid_argument, "need at least one projector");
  require(psi.size() == dim, Errc::dimension_mismatch, "psi length must match D");
  require(is_projector(d), Errc::invalid_argument, "D is not a projector");
  for (const auto& p : projectors) {
    require(p.size() == dim, Errc::dimension_mismatch, "projector dimension mismatch");
    require(is_projector(p), Errc::invalid_argument, "Pi_i is not a projector");
  }
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j)
      if ((projectors[i] * projectors[j]).max_abs() >= kOrthogonalityTolerance)
        throw Error(Errc::non_orthogonal, "projectors " + std::to_string(i) + " and " + std::to_string(j) +
                                              " are not orthogonal");

  std::vector<std::vector<Amplitude>> parts;
  std::vector<Amplitude> covered(dim);
  for (const auto& p : projectors) {
    parts.push_back(p.apply(psi));
    for (std::size_t k = 0; k < dim; ++k) covered[k] += parts.back()[k];
  }
  double residual = 0.0;
  for (std::size_t k = 0; k < dim; ++k) residual += std::norm(psi[k] - covered[k]);
  if (std::sqrt(residual) >= kOrthogonalityTolerance) throw Error(Errc::outside_span, "psi is outside the projectors' image");

  const auto n = projectors.size();
  CMatrix total(dim);
  for (const auto& p : projectors) total = total + p;

  Fact35Result r;
  double split = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d_part = d.apply(parts[i]);
    split += qsim::vector_norm_sq(d_part);
    const auto others = total - projectors[i];
    r.lhs += qsim::vector_norm_sq(others.apply(d_part));
  }
  const double gap = qsim::vector_norm_sq(d.apply(psi)) - split;
  r.rhs = gap * gap / static_cast<double>(n);
  r.holds = r.lhs >= r.rhs - kFactTolerance;
  return r;
}

Fact35Instance random_fact35_instance(std::size_t dim, std::size_t parts, Rng& rng) {
  require(parts >= 1 && parts <= dim, Errc::invalid_argument, "need 1 <= parts <= dim");
  const auto basis = random_basis(dim, rng);

  // Every part gets one vector; the rest are scattered, and some may be left
  // out so the projectors need not sum to the identity.
  std::vector<std::vector<std::vector<Amplitude>>> groups(parts);
  for (std::size_t i = 0; i < parts; ++i) groups[i].push_back(basis[i]);
  for (std::size_t i = parts; i < dim; ++i) {
    const auto slot = rng.uniform(parts + 1);
    if (slot < parts) groups[slot].push_back(basis[i]);
  }

  Fact35Instance inst;
  std::vector<Amplitude> psi(dim);
  for (const auto& g : groups) {
    inst.projectors.push_back(span_projector(g, dim));
    for (const auto& v : g) {
      const auto c = complex_normal(rng);
      for (std::size_t k = 0; k < dim; ++k) psi[k] += c * v[k];
    }
  }
  const double norm = std::sqrt(qsim::vector_norm_sq(psi));
  for (auto& a : psi) a /= norm;
  inst.psi = std::move(psi);

  const auto d_basis = random_basis(dim, rng);
  const auto rank = 1 + rng.uniform(dim);
  inst.d = span_projector({d_basis.begin(), d_basis.begin() + static_cast<std::ptrdiff_t>(rank)}, dim);
  return inst;
}

}  // namespace deletia::games
