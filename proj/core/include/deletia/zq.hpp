#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "deletia/rng.hpp"

namespace deletia::zq {

using Modulus = std::int64_t;

/// Largest supported modulus; products of two residues fit in int64.
inline constexpr Modulus kMaxModulus = Modulus{1} << 31;

/// Representative of x (0 <= x < q) in (-q/2, q/2].
std::int64_t centered(std::int64_t x, Modulus q);
/// Canonical residue in [0, q) of any integer.
std::int64_t reduce(std::int64_t x, Modulus q);
/// Smallest l with 2^l >= q (the gadget length).
int gadget_bits(Modulus q);
bool is_prime(Modulus q);

class ZqVector {
 public:
  ZqVector(std::vector<std::int64_t> entries, Modulus q);
  static ZqVector zeros(std::size_t len, Modulus q);
  static ZqVector uniform(std::size_t len, Modulus q, Rng& rng);
  /// Reduces arbitrary integers (possibly negative) into [0, q).
  static ZqVector from_signed(std::span<const std::int64_t> values, Modulus q);

  std::size_t size() const noexcept { return entries_.size(); }
  Modulus modulus() const noexcept { return q_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  void set(std::size_t i, std::int64_t value);

  std::vector<std::int64_t> centered_entries() const;
  /// Exact squared Euclidean norm of the centered representative.
  std::uint64_t norm_sq() const;
  double norm() const;

  std::int64_t dot(const ZqVector& other) const;
  ZqVector operator+(const ZqVector& other) const;
  ZqVector operator-(const ZqVector& other) const;
  ZqVector operator-() const;
  ZqVector scaled(std::int64_t k) const;
  ZqVector concat(const ZqVector& tail) const;

  bool operator==(const ZqVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
  Modulus q_;
};

class ZqMatrix {
 public:
  ZqMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries, Modulus q);
  static ZqMatrix zeros(std::size_t rows, std::size_t cols, Modulus q);
  static ZqMatrix uniform(std::size_t rows, std::size_t cols, Modulus q, Rng& rng);
  static ZqMatrix from_columns(std::span<const ZqVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Modulus modulus() const noexcept { return q_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  ZqVector column(std::size_t c) const;
  ZqVector row(std::size_t r) const;
  ZqMatrix transpose() const;
  /// [this | right]
  ZqMatrix hconcat(const ZqMatrix& right) const;
  ZqMatrix hconcat(const ZqVector& column) const;

  ZqMatrix operator*(const ZqMatrix& other) const;
  ZqVector operator*(const ZqVector& v) const;
  ZqMatrix operator+(const ZqMatrix& other) const;
  ZqMatrix operator-(const ZqMatrix& other) const;
  ZqMatrix scaled(std::int64_t k) const;

  bool operator==(const ZqMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> entries_;
  Modulus q_;
};

/// G = [I | 2I | ... | 2^{l-1} I], shape d x d*l with l = gadget_bits(q).
ZqMatrix gadget_matrix(Modulus q, std::size_t d);
/// Bit decomposition with G * gadget_inverse(v) == v.
ZqVector gadget_inverse(const ZqVector& v);
/// Column-wise bit decomposition; result is binary with d*l rows.
ZqMatrix gadget_inverse(const ZqMatrix& m);

/// A*pi == y (mod q) and ||centered(pi)|| <= norm_bound, compared on squared
/// norms in exact integer arithmetic.
bool isis_verify(const ZqMatrix& a, const ZqVector& y, const ZqVector& pi, double norm_bound);
/// True iff norm_sq <= bound^2, without floating-point ties.
bool norm_sq_within(std::uint64_t norm_sq, double bound);

/// Mixed-radix index of a vector over Z_q^len, entry 0 most significant.
std::uint64_t encode_index(std::span<const std::int64_t> digits, Modulus q);
std::vector<std::int64_t> decode_index(std::uint64_t index, Modulus q, std::size_t len);

/// Text form: header `zq <q> <rows> <cols>` then one row per line.
/// Vectors are written as a single row.
std::string serialize(const ZqMatrix& m);
std::string serialize(const ZqVector& v);
ZqMatrix parse_matrix(const std::string& text);
ZqVector parse_vector(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ZqVector& v);

}  // namespace deletia::zq
