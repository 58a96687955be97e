#pragma once

#include <cmath>
#include <string>
#include <string_view>

namespace hydrocx {

enum class Space { Position, Momentum };

std::string_view to_string(Space s);
/// "position" | "momentum"; throws std::invalid_argument otherwise.
Space parse_space(std::string_view text);

/// A value together with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;

  double rel_error() const { return value != 0.0 ? std::abs(error / value) : std::abs(error); }
};

inline Estimate operator+(Estimate a, Estimate b) { return {a.value + b.value, a.error + b.error}; }
inline Estimate operator-(Estimate a, Estimate b) { return {a.value - b.value, a.error + b.error}; }
inline Estimate operator*(Estimate a, Estimate b) {
  return {a.value * b.value, std::abs(a.value) * b.error + std::abs(b.value) * a.error};
}
inline Estimate operator*(double k, Estimate a) { return {k * a.value, std::abs(k) * a.error}; }

enum class Provenance { ClosedForm, Oracle };

std::string_view to_string(Provenance p);

/// The single-component measures of one density.
struct MeasureSet {
  Space space = Space::Position;
  Provenance provenance = Provenance::ClosedForm;
  Estimate normalization;
  Estimate disequilibrium;
  Estimate shannon; // nats
  Estimate fisher;
  Estimate variance;
};

} // namespace hydrocx
