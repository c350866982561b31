#pragma once

#include <complex>
#include <span>
#include <vector>

namespace deletia::qsim {

using Amplitude = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}
  CMatrix(std::size_t n, std::vector<Amplitude> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix outer(std::span<const Amplitude> ket, std::span<const Amplitude> bra);
  static CMatrix projector(std::span<const Amplitude> ket) { return outer(ket, ket); }

  std::size_t size() const noexcept { return n_; }
  Amplitude& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  std::span<const Amplitude> data() const noexcept { return a_; }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix scaled(Amplitude k) const;
  CMatrix adjoint() const;
  std::vector<Amplitude> apply(std::span<const Amplitude> v) const;

  Amplitude trace() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;

 private:
  std::size_t n_ = 0;
  std::vector<Amplitude> a_;
};

double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Eigenvalues of a Hermitian matrix (ascending) by cyclic complex Jacobi
/// rotations; stops once the off-diagonal Frobenius mass drops below 1e-12.
std::vector<double> hermitian_eigenvalues(CMatrix a);

double vector_norm_sq(std::span<const Amplitude> v);
Amplitude inner(std::span<const Amplitude> bra, std::span<const Amplitude> ket);

}  // namespace deletia::qsim
