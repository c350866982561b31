#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deletia {

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  enumeration_too_large,
  state_too_large,
  zero_probability,
  all_zero_weights,
  missing_predicate,
  missing_trapdoor,
  empty_preimage,
  non_orthogonal,
  outside_span,
  channel_not_expressible,
  aux_failure,
  config,
};

std::string_view to_string(Errc code) noexcept;

/// Library-wide exception. The code lets callers (mainly the CLI) map
/// failures onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace deletia
