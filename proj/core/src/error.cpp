#include "deletia/error.hpp"

namespace deletia {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::enumeration_too_large: return "enumeration-too-large";
    case Errc::state_too_large: return "state-too-large";
    case Errc::zero_probability: return "zero-probability";
    case Errc::all_zero_weights: return "all-zero-weights";
    case Errc::missing_predicate: return "missing-predicate";
    case Errc::missing_trapdoor: return "missing-trapdoor";
    case Errc::empty_preimage: return "empty-preimage";
    case Errc::non_orthogonal: return "non-orthogonal";
    case Errc::outside_span: return "outside-span";
    case Errc::channel_not_expressible: return "channel-not-expressible";
    case Errc::aux_failure: return "aux-failure";
    case Errc::config: return "config";
  }
  return "unknown";
}

}  // namespace deletia
