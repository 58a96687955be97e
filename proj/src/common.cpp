#include "hydrocx/common.hpp"

#include <stdexcept>

namespace hydrocx {

std::string_view to_string(Space s) {
  return s == Space::Position ? "position" : "momentum";
}

Space parse_space(std::string_view text) {
  if (text == "position") {
    return Space::Position;
  }
  if (text == "momentum") {
    return Space::Momentum;
  }
  throw std::invalid_argument("unknown space '" + std::string(text) + "'");
}

std::string_view to_string(Provenance p) {
  return p == Provenance::ClosedForm ? "closed-form" : "oracle";
}

} // namespace hydrocx
