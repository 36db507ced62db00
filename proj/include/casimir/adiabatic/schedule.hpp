#pragma once

namespace casimir::adiabatic {

/// Plate gap L(t) moving from L0 to L1 over [-T, T]:
///   L(t) = (1 - s)/2 L0 + (1 + s)/2 L1,   s(t) = tanh(tan(pi t / 2T)),
/// constant outside the window. Every derivative of s vanishes at t = +-T.
struct Schedule {
  double L0 = 1.0;
  double L1 = 1.0;
  double T = 1.0;

  /// Throws InputError unless L0, L1, T are positive and finite.
  void validate() const;
  double s(double t) const;
  double eval(double t) const;
  /// The same path traversed from L1 to L0.
  Schedule reversed() const { return {L1, L0, T}; }
};

}  // namespace casimir::adiabatic
