#pragma once

// Stroboscopic kicked map: one step = one pulse exp(-i G) and one period of
// free evolution exp(-i H_NL T), in either order.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "kerrkick/analytic.hpp"
#include "kerrkick/entanglement.hpp"
#include "kerrkick/errors.hpp"
#include "kerrkick/fock_space.hpp"
#include "kerrkick/hamiltonians.hpp"
#include "kerrkick/numerics.hpp"
#include "kerrkick/trajectory.hpp"

namespace kerrkick {

enum class Ordering { KickThenFree, FreeThenKick };

// Chosen by calibrate_ordering() at the default parameters.
inline constexpr Ordering kDefaultOrdering = Ordering::FreeThenKick;

inline std::string_view to_string(Ordering o) {
  return o == Ordering::KickThenFree ? "kick-then-free" : "free-then-kick";
}

inline Ordering parse_ordering(std::string_view s) {
  if (s == "kick-then-free") return Ordering::KickThenFree;
  if (s == "free-then-kick") return Ordering::FreeThenKick;
  throw Error("unknown ordering '" + std::string(s) + "' (expected kick-then-free or free-then-kick)");
}

struct StepOperators {
  OperatorMatrix free;  // exp(-i H_NL T)
  OperatorMatrix kick;  // exp(-i (alpha a^dag + alpha* a))
  ModeDims dims;
};

inline constexpr double kUnitarityTol = 1e-10;

inline StepOperators build_step_operators(const SystemParams& p) {
  p.validate();
  StepOperators ops{unitary_from_generator(build_coupler_hamiltonian(p), p.T),
                    unitary_from_generator(build_kick_generator(p), 1.0), p.dims};
  const double df = unitarity_defect(ops.free);
  const double dk = unitarity_defect(ops.kick);
  if (df > kUnitarityTol || dk > kUnitarityTol) {
    throw ContractViolation("build_step_operators: unitarity defect " + std::to_string(std::max(df, dk)));
  }
  return ops;
}

inline StateVector map_step(const StateVector& psi, const StepOperators& ops, Ordering ordering) {
  if (psi.dims != ops.dims) throw DimensionMismatch("map_step: state and operators use different cutoffs");
  if (ordering == Ordering::KickThenFree) return apply_operator(ops.free, apply_operator(ops.kick, psi));
  return apply_operator(ops.kick, apply_operator(ops.free, psi));
}

inline constexpr double kInitialNormTol = 1e-9;

inline Trajectory evolve(const StepOperators& ops, const StateVector& initial, std::size_t n_kicks,
                         Ordering ordering) {
  if (std::abs(initial.norm() - 1.0) > kInitialNormTol) {
    throw ContractViolation("evolve: initial state is not normalized");
  }
  Trajectory traj;
  traj.states.reserve(n_kicks + 1);
  traj.states.push_back(initial);
  for (std::size_t k = 0; k < n_kicks; ++k) traj.states.push_back(map_step(traj.states.back(), ops, ordering));
  annotate_trajectory(traj);
  return traj;
}

inline Trajectory evolve(const SystemParams& p, const StateVector& initial, std::size_t n_kicks,
                         Ordering ordering = kDefaultOrdering) {
  if (initial.dims != p.dims) throw DimensionMismatch("evolve: initial state cutoffs differ from params");
  return evolve(build_step_operators(p), initial, n_kicks, ordering);
}

inline StateVector vacuum(const ModeDims& d) { return StateVector::basis(d, 0, 0); }

// Largest |P_numeric - P_analytic| over the four qubit states and k in [0, n_kicks].
inline double max_probability_deviation(const Trajectory& traj, const SystemParams& p, std::size_t n_kicks) {
  double worst = 0.0;
  const std::size_t last = std::min(n_kicks, traj.records.size() - 1);
  for (std::size_t k = 0; k <= last; ++k) {
    const auto pa = analytic_amplitudes(static_cast<long long>(k), p).probabilities();
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(traj.records[k].probs[i] - pa[i]));
  }
  return worst;
}

struct OrderingCalibration {
  Ordering best = kDefaultOrdering;
  double kick_then_free_error = 0.0;
  double free_then_kick_error = 0.0;
};

// Picks the ordering whose trajectory from |00> tracks the closed-form
// probabilities best over the first n_kicks pulses.
inline OrderingCalibration calibrate_ordering(const SystemParams& p, std::size_t n_kicks = 50) {
  const StepOperators ops = build_step_operators(p);
  const StateVector psi0 = vacuum(p.dims);
  OrderingCalibration cal;
  cal.kick_then_free_error = max_probability_deviation(evolve(ops, psi0, n_kicks, Ordering::KickThenFree), p, n_kicks);
  cal.free_then_kick_error = max_probability_deviation(evolve(ops, psi0, n_kicks, Ordering::FreeThenKick), p, n_kicks);
  cal.best = cal.free_then_kick_error < cal.kick_then_free_error ? Ordering::FreeThenKick : Ordering::KickThenFree;
  return cal;
}

}  // namespace kerrkick
