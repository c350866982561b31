#include "deletia/qsim/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "deletia/error.hpp"

namespace deletia::qsim {

namespace {

// Splits global indices into (kept, traced) local indices.
struct Split {
  std::vector<std::uint64_t> kept;
  std::vector<std::uint64_t> traced;
  std::uint64_t kept_dim = 1;
  std::uint64_t traced_dim = 1;
};

Split split_indices(const RegisterLayout& layout, const std::vector<std::string>& keep) {
  for (const auto& k : keep) layout.position(k);
  Split s;
  const auto dim = layout.dimension();
  s.kept.assign(dim, 0);
  s.traced.assign(dim, 0);
  for (const auto& seg : layout.segments()) {
    const bool kept = std::find(keep.begin(), keep.end(), seg.name) != keep.end();
    (kept ? s.kept_dim : s.traced_dim) *= seg.dimension();
  }
  std::vector<std::pair<Placement, bool>> parts;
  for (const auto& seg : layout.segments())
    parts.emplace_back(layout.placement(seg.name), std::find(keep.begin(), keep.end(), seg.name) != keep.end());
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t k = 0, t = 0;
    for (const auto& [p, kept] : parts) {
      const auto v = p.extract(i);
      if (kept)
        k = k * p.dim + v;
      else
        t = t * p.dim + v;
    }
    s.kept[i] = k;
    s.traced[i] = t;
  }
  return s;
}

}  // namespace

DensityOp::DensityOp(RegisterLayout layout, CMatrix matrix, bool check_psd)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  require(matrix_.size() == layout_.dimension(), Errc::dimension_mismatch, "density size != layout dimension");
  require(matrix_.size() <= kMaxDensityDimension, Errc::state_too_large, "density dimension exceeds 4096");
  require(matrix_.is_hermitian(1e-10), Errc::invalid_argument, "density matrix is not Hermitian");
  require(std::abs(matrix_.trace() - Amplitude{1.0}) < 1e-10, Errc::invalid_argument, "density trace != 1");
  if (check_psd) {
    const auto eig = hermitian_eigenvalues(matrix_);
    require(eig.front() > -1e-9, Errc::invalid_argument, "density matrix is not PSD");
  }
}

DensityOp DensityOp::from_pure(const QState& state) {
  return DensityOp(state.layout(), CMatrix::projector(state.amplitudes()));
}

DensityOp DensityOp::mixture(const std::vector<std::pair<double, DensityOp>>& parts) {
  require(!parts.empty(), Errc::invalid_argument, "mixture of nothing");
  CMatrix acc(parts.front().second.dimension());
  for (const auto& [w, rho] : parts) {
    require(w >= 0.0, Errc::invalid_argument, "mixture weight must be nonnegative");
    require(rho.layout() == parts.front().second.layout(), Errc::dimension_mismatch, "mixture layout mismatch");
    acc = acc + rho.matrix().scaled(w);
  }
  return DensityOp(parts.front().second.layout(), std::move(acc));
}

double DensityOp::expectation(const CMatrix& observable) const { return (matrix_ * observable).trace().real(); }

double DensityOp::overlap(std::span<const Amplitude> psi) const {
  require(psi.size() == dimension(), Errc::dimension_mismatch, "overlap: length mismatch");
  const auto rho_psi = matrix_.apply(psi);
  return inner(psi, rho_psi).real();
}

DensityOp reduced_density(const QState& state, const std::vector<std::string>& keep) {
  const auto s = split_indices(state.layout(), keep);
  require(s.kept_dim <= kMaxDensityDimension, Errc::state_too_large, "reduced density exceeds 4096");
  // psi as a kept_dim x traced_dim matrix.
  std::vector<Amplitude> m(s.kept_dim * s.traced_dim);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) m[s.kept[i] * s.traced_dim + s.traced[i]] = amps[i];
  CMatrix rho(s.kept_dim);
  for (std::uint64_t a = 0; a < s.kept_dim; ++a)
    for (std::uint64_t b = a; b < s.kept_dim; ++b) {
      Amplitude acc{};
      for (std::uint64_t t = 0; t < s.traced_dim; ++t)
        acc += m[a * s.traced_dim + t] * std::conj(m[b * s.traced_dim + t]);
      rho(a, b) = acc;
      rho(b, a) = std::conj(acc);
    }
  return DensityOp(state.layout().only(keep), std::move(rho));
}

DensityOp partial_trace(const DensityOp& rho, const std::vector<std::string>& keep) {
  const auto s = split_indices(rho.layout(), keep);
  CMatrix out(s.kept_dim);
  const auto& m = rho.matrix();
  for (std::uint64_t i = 0; i < m.size(); ++i)
    for (std::uint64_t j = 0; j < m.size(); ++j)
      if (s.traced[i] == s.traced[j]) out(s.kept[i], s.kept[j]) += m(i, j);
  return DensityOp(rho.layout().only(keep), std::move(out));
}

DensityOp pauli_twirl_channel(const DensityOp& rho, std::string_view segment) {
  const auto& seg = rho.layout().segment(segment);
  for (auto d : seg.dims) require(d == 2, Errc::dimension_mismatch, "twirl segment must consist of qubits");
  const auto p = rho.layout().placement(segment);
  const std::uint64_t count = std::uint64_t{1} << seg.dims.size();
  const auto& m = rho.matrix();
  CMatrix out(m.size());
  for (std::uint64_t z = 0; z < count; ++z)
    for (std::uint64_t i = 0; i < m.size(); ++i) {
      const int si = std::popcount(p.extract(i) & z) & 1;
      for (std::uint64_t j = 0; j < m.size(); ++j) {
        const int sj = std::popcount(p.extract(j) & z) & 1;
        out(i, j) += (si == sj ? 1.0 : -1.0) * m(i, j);
      }
    }
  return DensityOp(rho.layout(), out.scaled(1.0 / static_cast<double>(count)));
}

DensityOp dephase(const DensityOp& rho, std::string_view segment) {
  const auto p = rho.layout().placement(segment);
  CMatrix out = rho.matrix();
  for (std::uint64_t i = 0; i < out.size(); ++i)
    for (std::uint64_t j = 0; j < out.size(); ++j)
      if (p.extract(i) != p.extract(j)) out(i, j) = 0.0;
  return DensityOp(rho.layout(), std::move(out));
}

double trace_distance(const DensityOp& a, const DensityOp& b) {
  require(a.layout() == b.layout(), Errc::dimension_mismatch, "trace_distance: layout mismatch");
  require(a.dimension() <= kMaxDensityDimension, Errc::state_too_large, "trace_distance: dimension too large");
  const auto eig = hermitian_eigenvalues(a.matrix() - b.matrix());
  double s = 0.0;
  for (double e : eig) s += std::abs(e);
  return std::clamp(0.5 * s, 0.0, 1.0);
}

}  // namespace deletia::qsim
