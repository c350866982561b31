#include "deletia/qsim/cmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "deletia/error.hpp"

namespace deletia::qsim {

CMatrix::CMatrix(std::size_t n, std::vector<Amplitude> entries) : n_(n), a_(std::move(entries)) {
  require(a_.size() == n * n, Errc::dimension_mismatch, "CMatrix entry count != n^2");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::outer(std::span<const Amplitude> ket, std::span<const Amplitude> bra) {
  require(ket.size() == bra.size(), Errc::dimension_mismatch, "outer: length mismatch");
  CMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r)
    for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  require(n_ == o.n_, Errc::dimension_mismatch, "CMatrix product: size mismatch");
  CMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto x = (*this)(r, k);
      if (x == Amplitude{}) continue;
      for (std::size_t c = 0; c < n_; ++c) out(r, c) += x * o(k, c);
    }
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  require(n_ == o.n_, Errc::dimension_mismatch, "CMatrix sum: size mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const { return *this + o.scaled(-1.0); }

CMatrix CMatrix::scaled(Amplitude k) const {
  CMatrix out = *this;
  for (auto& x : out.a_) x *= k;
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

std::vector<Amplitude> CMatrix::apply(std::span<const Amplitude> v) const {
  require(v.size() == n_, Errc::dimension_mismatch, "CMatrix apply: length mismatch");
  std::vector<Amplitude> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Amplitude acc{};
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Amplitude CMatrix::trace() const {
  Amplitude t{};
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r; c < n_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

namespace {

double off_diagonal_mass(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(CMatrix a) {
  const std::size_t n = a.size();
  constexpr double kThreshold = 1e-12;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > kThreshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Amplitude apq = a(p, q);
        const double g = std::abs(apq);
        if (g < 1e-300) continue;
        // U = D R: D rotates the phase of a_pq away, R is the real rotation.
        const Amplitude phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Amplitude upp = c;
        const Amplitude upq = s;
        const Amplitude uqp = -s * std::conj(phase);
        const Amplitude uqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Amplitude akp = a(k, p);
          const Amplitude akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Amplitude apk = a(p, k);
          const Amplitude aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double vector_norm_sq(std::span<const Amplitude> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

Amplitude inner(std::span<const Amplitude> bra, std::span<const Amplitude> ket) {
  require(bra.size() == ket.size(), Errc::dimension_mismatch, "inner: length mismatch");
  Amplitude acc{};
  for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

}  // namespace deletia::qsim
