#include "deletia/zq.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "deletia/error.hpp"

namespace deletia::zq {

namespace {

void check_modulus(Modulus q) {
  require(q >= 2 && q <= kMaxModulus, Errc::invalid_argument, "modulus must lie in [2, 2^31]");
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, Modulus q) { return (a * b) % q; }

}  // namespace

std::int64_t centered(std::int64_t x, Modulus q) {
  require(x >= 0 && x < q, Errc::invalid_argument, "centered expects 0 <= x < q");
  return 2 * x > q ? x - q : x;
}

std::int64_t reduce(std::int64_t x, Modulus q) {
  std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

int gadget_bits(Modulus q) {
  check_modulus(q);
  int bits = 0;
  while ((std::int64_t{1} << bits) < q) ++bits;
  return std::max(bits, 1);
}

bool is_prime(Modulus q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::int64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- ZqVector

ZqVector::ZqVector(std::vector<std::int64_t> entries, Modulus q) : entries_(std::move(entries)), q_(q) {
  check_modulus(q);
  require(!entries_.empty(), Errc::invalid_argument, "ZqVector must be non-empty");
  for (auto e : entries_) require(e >= 0 && e < q, Errc::invalid_argument, "ZqVector entry out of range");
}

ZqVector ZqVector::zeros(std::size_t len, Modulus q) { return ZqVector(std::vector<std::int64_t>(len, 0), q); }

ZqVector ZqVector::uniform(std::size_t len, Modulus q, Rng& rng) {
  std::vector<std::int64_t> e(len);
  for (auto& x : e) x = static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(q)));
  return ZqVector(std::move(e), q);
}

ZqVector ZqVector::from_signed(std::span<const std::int64_t> values, Modulus q) {
  std::vector<std::int64_t> e(values.begin(), values.end());
  for (auto& x : e) x = reduce(x, q);
  return ZqVector(std::move(e), q);
}

void ZqVector::set(std::size_t i, std::int64_t value) {
  require(i < entries_.size(), Errc::dimension_mismatch, "ZqVector index out of range");
  entries_[i] = reduce(value, q_);
}

std::vector<std::int64_t> ZqVector::centered_entries() const {
  std::vector<std::int64_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = centered(entries_[i], q_);
  return out;
}

std::uint64_t ZqVector::norm_sq() const {
  std::uint64_t total = 0;
  for (auto e : entries_) {
    const auto c = static_cast<std::uint64_t>(std::llabs(centered(e, q_)));
    total += c * c;
  }
  return total;
}

double ZqVector::norm() const { return std::sqrt(static_cast<double>(norm_sq())); }

std::int64_t ZqVector::dot(const ZqVector& other) const {
  require(other.size() == size() && other.q_ == q_, Errc::dimension_mismatch, "dot: shape or modulus mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc = (acc + mulmod(entries_[i], other.entries_[i], q_)) % q_;
  return acc;
}

ZqVector ZqVector::operator+(const ZqVector& other) const {
  require(other.size() == size() && other.q_ == q_, Errc::dimension_mismatch, "add: shape or modulus mismatch");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (e[i] + other.entries_[i]) % q_;
  return ZqVector(std::move(e), q_);
}

ZqVector ZqVector::operator-(const ZqVector& other) const { return *this + (-other); }

ZqVector ZqVector::operator-() const {
  auto e = entries_;
  for (auto& x : e) x = x == 0 ? 0 : q_ - x;
  return ZqVector(std::move(e), q_);
}

ZqVector ZqVector::scaled(std::int64_t k) const {
  const auto kk = reduce(k, q_);
  auto e = entries_;
  for (auto& x : e) x = mulmod(x, kk, q_);
  return ZqVector(std::move(e), q_);
}

ZqVector ZqVector::concat(const ZqVector& tail) const {
  require(tail.q_ == q_, Errc::dimension_mismatch, "concat: modulus mismatch");
  auto e = entries_;
  e.insert(e.end(), tail.entries_.begin(), tail.entries_.end());
  return ZqVector(std::move(e), q_);
}

// ---------------------------------------------------------------- ZqMatrix

ZqMatrix::ZqMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries, Modulus q)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), q_(q) {
  check_modulus(q);
  require(rows > 0 && cols > 0, Errc::invalid_argument, "ZqMatrix must have positive shape");
  require(entries_.size() == rows * cols, Errc::dimension_mismatch, "ZqMatrix entry count != rows*cols");
  for (auto e : entries_) require(e >= 0 && e < q, Errc::invalid_argument, "ZqMatrix entry out of range");
}

ZqMatrix ZqMatrix::zeros(std::size_t rows, std::size_t cols, Modulus q) {
  return ZqMatrix(rows, cols, std::vector<std::int64_t>(rows * cols, 0), q);
}

ZqMatrix ZqMatrix::uniform(std::size_t rows, std::size_t cols, Modulus q, Rng& rng) {
  std::vector<std::int64_t> e(rows * cols);
  for (auto& x : e) x = static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(q)));
  return ZqMatrix(rows, cols, std::move(e), q);
}

ZqMatrix ZqMatrix::from_columns(std::span<const ZqVector> columns) {
  require(!columns.empty(), Errc::invalid_argument, "from_columns needs at least one column");
  const auto rows = columns[0].size();
  const auto q = columns[0].modulus();
  std::vector<std::int64_t> e(rows * columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows && columns[c].modulus() == q, Errc::dimension_mismatch,
            "from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) e[r * columns.size() + c] = columns[c][r];
  }
  return ZqMatrix(rows, columns.size(), std::move(e), q);
}

void ZqMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  require(r < rows_ && c < cols_, Errc::dimension_mismatch, "ZqMatrix index out of range");
  entries_[r * cols_ + c] = reduce(value, q_);
}

ZqVector ZqMatrix::column(std::size_t c) const {
  require(c < cols_, Errc::dimension_mismatch, "column index out of range");
  std::vector<std::int64_t> e(rows_);
  for (std::size_t r = 0; r < rows_; ++r) e[r] = at(r, c);
  return ZqVector(std::move(e), q_);
}

ZqVector ZqMatrix::row(std::size_t r) const {
  require(r < rows_, Errc::dimension_mismatch, "row index out of range");
  return ZqVector(std::vector<std::int64_t>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_), q_);
}

ZqMatrix ZqMatrix::transpose() const {
  std::vector<std::int64_t> e(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = at(r, c);
  return ZqMatrix(cols_, rows_, std::move(e), q_);
}

ZqMatrix ZqMatrix::hconcat(const ZqMatrix& right) const {
  require(right.rows_ == rows_ && right.q_ == q_, Errc::dimension_mismatch, "hconcat: shape mismatch");
  const auto cols = cols_ + right.cols_;
  std::vector<std::int64_t> e(rows_ * cols);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) e[r * cols + c] = at(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) e[r * cols + cols_ + c] = right.at(r, c);
  }
  return ZqMatrix(rows_, cols, std::move(e), q_);
}

ZqMatrix ZqMatrix::hconcat(const ZqVector& column) const {
  return hconcat(ZqMatrix(column.size(), 1, {column.entries().begin(), column.entries().end()}, column.modulus()));
}

ZqMatrix ZqMatrix::operator*(const ZqMatrix& other) const {
  require(cols_ == other.rows_ && q_ == other.q_, Errc::dimension_mismatch, "matrix product: shape mismatch");
  std::vector<std::int64_t> e(rows_ * other.cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        auto& cell = e[r * other.cols_ + c];
        cell = (cell + mulmod(a, other.at(k, c), q_)) % q_;
      }
    }
  return ZqMatrix(rows_, other.cols_, std::move(e), q_);
}

ZqVector ZqMatrix::operator*(const ZqVector& v) const {
  require(cols_ == v.size() && q_ == v.modulus(), Errc::dimension_mismatch, "matrix-vector: shape mismatch");
  std::vector<std::int64_t> e(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + mulmod(at(r, c), v[c], q_)) % q_;
    e[r] = acc;
  }
  return ZqVector(std::move(e), q_);
}

ZqMatrix ZqMatrix::operator+(const ZqMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_ && q_ == other.q_, Errc::dimension_mismatch,
          "matrix sum: shape mismatch");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (e[i] + other.entries_[i]) % q_;
  return ZqMatrix(rows_, cols_, std::move(e), q_);
}

ZqMatrix ZqMatrix::operator-(const ZqMatrix& other) const { return *this + other.scaled(-1); }

ZqMatrix ZqMatrix::scaled(std::int64_t k) const {
  const auto kk = reduce(k, q_);
  auto e = entries_;
  for (auto& x : e) x = mulmod(x, kk, q_);
  return ZqMatrix(rows_, cols_, std::move(e), q_);
}

// ---------------------------------------------------------------- gadget

ZqMatrix gadget_matrix(Modulus q, std::size_t d) {
  require(d >= 1, Errc::invalid_argument, "gadget dimension must be positive");
  const auto bits = static_cast<std::size_t>(gadget_bits(q));
  auto g = ZqMatrix::zeros(d, d * bits, q);
  for (std::size_t j = 0; j < bits; ++j)
    for (std::size_t i = 0; i < d; ++i) g.set(i, j * d + i, reduce(std::int64_t{1} << j, q));
  return g;
}

ZqVector gadget_inverse(const ZqVector& v) {
  const auto q = v.modulus();
  const auto bits = static_cast<std::size_t>(gadget_bits(q));
  const auto d = v.size();
  std::vector<std::int64_t> e(d * bits, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < bits; ++j) e[j * d + i] = (v[i] >> j) & 1;
  return ZqVector(std::move(e), q);
}

ZqMatrix gadget_inverse(const ZqMatrix& m) {
  std::vector<ZqVector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(gadget_inverse(m.column(c)));
  return ZqMatrix::from_columns(cols);
}

// ---------------------------------------------------------------- ISIS

bool norm_sq_within(std::uint64_t norm_sq, double bound) {
  require(bound >= 0.0 && std::isfinite(bound), Errc::invalid_argument, "norm bound must be finite and >= 0");
  const long double b2 = static_cast<long double>(bound) * bound;
  if (b2 >= 0x1p63L) return true;
  // Snap bounds whose square is an integer up to rounding (e.g. sqrt(8)).
  const long double nearest = std::nearbyint(b2);
  const long double limit = std::fabs(b2 - nearest) <= 1e-9L * std::max(1.0L, b2) ? nearest : std::floor(b2);
  return norm_sq <= static_cast<std::uint64_t>(limit);
}

bool isis_verify(const ZqMatrix& a, const ZqVector& y, const ZqVector& pi, double norm_bound) {
  require(a.cols() == pi.size() && a.rows() == y.size(), Errc::dimension_mismatch, "isis_verify: shape mismatch");
  require(a.modulus() == y.modulus() && a.modulus() == pi.modulus(), Errc::dimension_mismatch,
          "isis_verify: modulus mismatch");
  if (!(a * pi == y)) return false;
  return norm_sq_within(pi.norm_sq(), norm_bound);
}

// ---------------------------------------------------------------- indices

std::uint64_t encode_index(std::span<const std::int64_t> digits, Modulus q) {
  std::uint64_t idx = 0;
  for (auto d : digits) idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(d);
  return idx;
}

std::vector<std::int64_t> decode_index(std::uint64_t index, Modulus q, std::size_t len) {
  std::vector<std::int64_t> digits(len);
  for (std::size_t i = len; i-- > 0;) {
    digits[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return digits;
}

// ---------------------------------------------------------------- text I/O

std::string serialize(const ZqMatrix& m) {
  std::ostringstream os;
  os << "zq " << m.modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << '\n';
  }
  return os.str();
}

std::string serialize(const ZqVector& v) {
  return serialize(ZqMatrix(1, v.size(), {v.entries().begin(), v.entries().end()}, v.modulus()));
}

ZqMatrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  Modulus q = 0;
  long long rows = 0, cols = 0;
  if (!(is >> tag >> q >> rows >> cols) || tag != "zq" || rows <= 0 || cols <= 0)
    throw Error(Errc::invalid_argument, "malformed zq header");
  std::vector<std::int64_t> e(static_cast<std::size_t>(rows * cols));
  for (auto& x : e)
    if (!(is >> x)) throw Error(Errc::dimension_mismatch, "zq body shorter than header");
  std::string extra;
  if (is >> extra) throw Error(Errc::dimension_mismatch, "zq body longer than header");
  return ZqMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(e), q);
}

ZqVector parse_vector(const std::string& text) {
  auto m = parse_matrix(text);
  if (m.rows() == 1) return m.row(0);
  if (m.cols() == 1) return m.column(0);
  throw Error(Errc::dimension_mismatch, "zq text is not a vector");
}

std::ostream& operator<<(std::ostream& os, const ZqVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

}  // namespace deletia::zq
