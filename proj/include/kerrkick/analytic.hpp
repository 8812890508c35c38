#pragma once

// Closed-form amplitudes of the four qubit states after k pulses, starting
// from |0>_a|0>_b. Valid for real coupling and kick strength; complex inputs
// enter through their magnitudes.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "kerrkick/errors.hpp"
#include "kerrkick/hamiltonians.hpp"

namespace kerrkick {

// Amplitudes on |00>, |01>, |10>, |11> (first digit: mode a).
struct TruncatedState {
  cplx c00{}, c01{}, c10{}, c11{};

  std::array<cplx, 4> amplitudes() const { return {c00, c01, c10, c11}; }
  static TruncatedState from_array(const std::array<cplx, 4>& c) { return {c[0], c[1], c[2], c[3]}; }

  std::array<double, 4> probabilities() const {
    return {std::norm(c00), std::norm(c01), std::norm(c10), std::norm(c11)};
  }

  double norm_squared() const { return std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11); }

  bool operator==(const TruncatedState&) const = default;
};

struct KickFrequencies {
  double Omega = 0.0;
  double Omega1 = 0.0;
  double Omega2 = 0.0;
};

// Below this |eps T| the 1/(eps T) prefactors are meaningless; use uncoupled_amplitudes.
inline constexpr double kSingularCouplingThreshold = 1e-12;

inline KickFrequencies kick_frequencies(const SystemParams& p) {
  const double et = std::abs(p.epsilon) * p.T;
  const double a2 = std::norm(p.alpha);
  const double omega = std::sqrt(et * et + 4.0 * a2);
  const double base = et * et + 2.0 * a2;
  // base^2 - (et*omega)^2 = 4 a^4 >= 0, so only round-off can push this negative.
  const double r2 = std::max(0.0, base - et * omega);
  return {omega, std::sqrt(base + et * omega), std::sqrt(r2)};
}

namespace detail {

// sin(k w / sqrt2) / w, continuous at w -> 0.
inline double sin_over(double k, double w) {
  const double x = k * w / std::numbers::sqrt2;
  if (w == 0.0) return k / std::numbers::sqrt2;
  return std::sin(x) / w;
}

}  // namespace detail

inline TruncatedState uncoupled_amplitudes(long long k, double alpha, double /*T*/) {
  const double ka = static_cast<double>(k) * alpha;
  return {std::cos(ka), 0.0, cplx{0.0, -std::sin(ka)}, 0.0};
}

inline TruncatedState truncated_amplitudes(long long k, const SystemParams& p) {
  const double et = std::abs(p.epsilon) * p.T;
  if (et <= kSingularCouplingThreshold) {
    throw SingularCoupling("truncated_amplitudes: |eps T| = " + std::to_string(et) +
                           " is below the singular-coupling threshold; use uncoupled_amplitudes");
  }
  const double a = std::abs(p.alpha);
  if (a == 0.0) return {1.0, 0.0, 0.0, 0.0};

  const auto [om, om1, om2] = kick_frequencies(p);
  const double kd = static_cast<double>(k);
  const double x1 = kd * om1 / std::numbers::sqrt2;
  const double x2 = kd * om2 / std::numbers::sqrt2;
  const double a2 = a * a;
  const cplx i{0.0, 1.0};

  TruncatedState s;
  s.c00 = ((2.0 * a2 - om2 * om2) * std::cos(x1) - (2.0 * a2 - om1 * om1) * std::cos(x2)) / (2.0 * et * om);
  s.c01 = a / om * (std::cos(x1) - std::cos(x2));
  // The 1/(Omega1 Omega2) prefactor is folded into sin_over so Omega2 -> 0 stays finite.
  s.c10 = i * a / (std::numbers::sqrt2 * et * om) *
          ((om2 * om2 - 2.0 * (et * et + a2)) * detail::sin_over(kd, om1) +
           et * (et - om) * detail::sin_over(kd, om2));
  s.c11 = i * std::numbers::sqrt2 * a2 / om * (detail::sin_over(kd, om2) - detail::sin_over(kd, om1));
  return s;
}

// Dispatches to the uncoupled formulas when |eps T| is at or below the threshold.
inline TruncatedState analytic_amplitudes(long long k, const SystemParams& p) {
  if (std::abs(p.epsilon) * p.T <= kSingularCouplingThreshold) {
    return uncoupled_amplitudes(k, std::abs(p.alpha), p.T);
  }
  return truncated_amplitudes(k, p);
}

}  // namespace kerrkick
