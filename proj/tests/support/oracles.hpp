#pragma once

// Brute-force reference computations used to cross-check the library.
// Everything here works on plain std::vector / std::complex data so that
// it shares no code with the simulator it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using cvec = std::vector<cd>;
using imat = std::vector<std::vector<std::int64_t>>;  // row-major

inline std::int64_t mod(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }
inline std::int64_t centered(std::int64_t a, std::int64_t q) {
  a = mod(a, q);
  return a > q / 2 ? a - q : a;
}

/// Digits of `index` in base q, most significant first.
inline std::vector<std::int64_t> digits(std::uint64_t index, std::int64_t q, std::size_t len) {
  std::vector<std::int64_t> d(len);
  for (std::size_t i = len; i-- > 0;) {
    d[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return d;
}

inline std::uint64_t index_of(const std::vector<std::int64_t>& d, std::int64_t q) {
  std::uint64_t out = 0;
  for (auto x : d) out = out * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(mod(x, q));
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// exp(-pi ||centered(x)||^2 / s^2)
inline double rho(const std::vector<std::int64_t>& x, std::int64_t q, double s) {
  double n2 = 0;
  for (auto v : x) {
    const double c = static_cast<double>(centered(v, q));
    n2 += c * c;
  }
  return std::exp(-std::numbers::pi * n2 / (s * s));
}

inline cvec normalized(cvec v) {
  double n = 0;
  for (auto& a : v) n += std::norm(a);
  n = std::sqrt(n);
  for (auto& a : v) a /= n;
  return v;
}

inline cd dot(const cvec& a, const cvec& b) {
  cd acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

/// Trace distance between two pure states (normalized here).
inline double pure_trace_distance(const cvec& a, const cvec& b) {
  const auto f = std::norm(dot(normalized(a), normalized(b)));
  return std::sqrt(std::max(0.0, 1.0 - f));
}

/// Dense q-ary DFT on `slots` digits; sign = +1 uses omega^{+xy}.
inline cvec dft(const cvec& v, std::int64_t q, std::size_t slots, int sign) {
  const auto n = v.size();
  cvec out(n);
  const double scale = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(slots));
  for (std::uint64_t y = 0; y < n; ++y) {
    const auto dy = digits(y, q, slots);
    cd acc{};
    for (std::uint64_t x = 0; x < n; ++x) {
      if (v[x] == cd{}) continue;
      const auto dx = digits(x, q, slots);
      std::int64_t k = 0;
      for (std::size_t i = 0; i < slots; ++i) k += dx[i] * dy[i];
      acc += v[x] * std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(mod(k, q)) / q);
    }
    out[y] = acc * scale;
  }
  return out;
}

/// sum_{A x = y} rho_s(x) |x> over Z_q^cols (unnormalized).
inline cvec coset_state(const imat& a, std::int64_t q, double s, const std::vector<std::int64_t>& y) {
  const auto cols = a.front().size();
  cvec out(ipow(static_cast<std::uint64_t>(q), cols));
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    const auto x = digits(i, q, cols);
    bool hit = true;
    for (std::size_t r = 0; r < a.size() && hit; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc += a[r][c] * x[c];
      hit = mod(acc, q) == mod(y[r], q);
    }
    if (hit) out[i] = rho(x, q, s);
  }
  return out;
}

/// sum_s sum_e rho_{q/s}(e) omega^{-<s,y>} |s^T A + e + offset> (unnormalized).
inline cvec dual_sum(const imat& a, std::int64_t q, double s, const std::vector<std::int64_t>& y,
                     const std::vector<std::int64_t>& offset) {
  const auto rows = a.size(), cols = a.front().size();
  cvec out(ipow(static_cast<std::uint64_t>(q), cols));
  const double width = static_cast<double>(q) / s;
  for (std::uint64_t si = 0; si < ipow(static_cast<std::uint64_t>(q), rows); ++si) {
    const auto sv = digits(si, q, rows);
    std::int64_t sy = 0;
    for (std::size_t r = 0; r < rows; ++r) sy += sv[r] * y[r];
    const auto phase = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(mod(sy, q)) / q);
    for (std::uint64_t ei = 0; ei < out.size(); ++ei) {
      const auto e = digits(ei, q, cols);
      std::vector<std::int64_t> c(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t acc = e[j] + offset[j];
        for (std::size_t r = 0; r < rows; ++r) acc += sv[r] * a[r][j];
        c[j] = acc;
      }
      out[index_of(c, q)] += rho(e, q, width) * phase;
    }
  }
  return out;
}

}  // namespace oracle
