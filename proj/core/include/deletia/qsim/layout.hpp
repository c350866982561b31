#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace deletia::qsim {

inline constexpr std::uint64_t kMaxDimension = std::uint64_t{1} << 22;

struct Segment {
  std::string name;
  std::vector<std::size_t> dims;  ///< per-slot local dimensions

  std::uint64_t dimension() const;
};

/// Segment with `count` slots of equal dimension `dim`.
Segment qudits(std::string name, std::size_t count, std::size_t dim);

/// Where a segment (or a single slot) sits inside the global mixed-radix
/// index: local = (index / stride) % dim.
struct Placement {
  std::uint64_t stride;
  std::uint64_t dim;

  std::uint64_t extract(std::uint64_t index) const { return (index / stride) % dim; }
  std::uint64_t replace(std::uint64_t index, std::uint64_t local) const {
    return index - extract(index) * stride + local * stride;
  }
};

/// Ordered named segments. The first segment is the most significant part of
/// a basis index and, inside a segment, slot 0 is the most significant digit.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  RegisterLayout(std::initializer_list<Segment> segments);
  explicit RegisterLayout(std::vector<Segment> segments);

  RegisterLayout& add(Segment segment);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::uint64_t dimension() const noexcept { return dimension_; }
  bool contains(std::string_view name) const noexcept;
  std::size_t position(std::string_view name) const;
  const Segment& segment(std::string_view name) const;

  Placement placement(std::string_view name) const;
  /// Placement of slot `slot` within the named segment.
  Placement slot_placement(std::string_view name, std::size_t slot) const;

  RegisterLayout without(std::string_view name) const;
  RegisterLayout only(const std::vector<std::string>& names) const;

  bool operator==(const RegisterLayout& other) const;

 private:
  std::vector<Segment> segments_;
  std::uint64_t dimension_ = 1;
};

/// Digits of a segment-local value (slot 0 first).
std::vector<std::int64_t> local_digits(const Segment& segment, std::uint64_t value);
std::uint64_t local_value(const Segment& segment, const std::vector<std::int64_t>& digits);

}  // namespace deletia::qsim
