#include "deletia/qsim/layout.hpp"

#include <algorithm>

#include "deletia/error.hpp"

namespace deletia::qsim {

std::uint64_t Segment::dimension() const {
  std::uint64_t d = 1;
  for (auto x : dims) d *= x;
  return d;
}

Segment qudits(std::string name, std::size_t count, std::size_t dim) {
  return Segment{std::move(name), std::vector<std::size_t>(count, dim)};
}

RegisterLayout::RegisterLayout(std::initializer_list<Segment> segments) {
  for (const auto& s : segments) add(s);
}

RegisterLayout::RegisterLayout(std::vector<Segment> segments) {
  for (auto& s : segments) add(std::move(s));
}

RegisterLayout& RegisterLayout::add(Segment segment) {
  require(!segment.name.empty(), Errc::invalid_argument, "segment name must be non-empty");
  require(!contains(segment.name), Errc::invalid_argument, "duplicate segment name '" + segment.name + "'");
  require(!segment.dims.empty(), Errc::invalid_argument, "segment '" + segment.name + "' has no slots");
  for (auto d : segment.dims) {
    require(d >= 1, Errc::invalid_argument, "slot dimension must be positive");
    dimension_ *= d;
    require(dimension_ <= kMaxDimension, Errc::state_too_large, "register layout exceeds 2^22 dimensions");
  }
  segments_.push_back(std::move(segment));
  return *this;
}

bool RegisterLayout::contains(std::string_view name) const noexcept {
  return std::any_of(segments_.begin(), segments_.end(), [&](const Segment& s) { return s.name == name; });
}

std::size_t RegisterLayout::position(std::string_view name) const {
  for (std::size_t i = 0; i < segments_.size(); ++i)
    if (segments_[i].name == name) return i;
  throw Error(Errc::invalid_argument, "no segment named '" + std::string(name) + "'");
}

const Segment& RegisterLayout::segment(std::string_view name) const { return segments_[position(name)]; }

Placement RegisterLayout::placement(std::string_view name) const {
  const auto pos = position(name);
  std::uint64_t stride = 1;
  for (std::size_t i = pos + 1; i < segments_.size(); ++i) stride *= segments_[i].dimension();
  return {stride, segments_[pos].dimension()};
}

Placement RegisterLayout::slot_placement(std::string_view name, std::size_t slot) const {
  const auto& seg = segment(name);
  require(slot < seg.dims.size(), Errc::dimension_mismatch, "slot index out of range");
  auto p = placement(name);
  for (std::size_t i = slot + 1; i < seg.dims.size(); ++i) p.stride *= seg.dims[i];
  return {p.stride, seg.dims[slot]};
}

RegisterLayout RegisterLayout::without(std::string_view name) const {
  position(name);
  RegisterLayout out;
  for (const auto& s : segments_)
    if (s.name != name) out.add(s);
  return out;
}

RegisterLayout RegisterLayout::only(const std::vector<std::string>& names) const {
  RegisterLayout out;
  for (const auto& s : segments_)
    if (std::find(names.begin(), names.end(), s.name) != names.end()) out.add(s);
  require(out.segments().size() == names.size(), Errc::invalid_argument, "unknown segment in selection");
  return out;
}

bool RegisterLayout::operator==(const RegisterLayout& other) const {
  if (segments_.size() != other.segments_.size()) return false;
  for (std::size_t i = 0; i < segments_.size(); ++i)
    if (segments_[i].name != other.segments_[i].name || segments_[i].dims != other.segments_[i].dims) return false;
  return true;
}

std::vector<std::int64_t> local_digits(const Segment& segment, std::uint64_t value) {
  std::vector<std::int64_t> digits(segment.dims.size());
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<std::int64_t>(value % segment.dims[i]);
    value /= segment.dims[i];
  }
  return digits;
}

std::uint64_t local_value(const Segment& segment, const std::vector<std::int64_t>& digits) {
  require(digits.size() == segment.dims.size(), Errc::dimension_mismatch, "digit count != slot count");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    require(digits[i] >= 0 && static_cast<std::size_t>(digits[i]) < segment.dims[i], Errc::dimension_mismatch,
            "digit out of slot range");
    v = v * segment.dims[i] + static_cast<std::uint64_t>(digits[i]);
  }
  return v;
}

}  // namespace deletia::qsim
