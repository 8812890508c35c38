#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kerrkick/fock_space.hpp"

namespace kerrkick {

// Observables after k pulses.
struct TrajectoryRecord {
  std::size_t k = 0;
  std::array<double, 4> probs{};  // |c00|^2, |c01|^2, |c10|^2, |c11|^2 (not renormalized)
  double leakage = 0.0;           // mass outside the qubit subspace
  double concurrence = 0.0;
  std::array<double, 4> bell_fidelities{};  // B1..B4
};

// states[k] is the state after k map steps; states[0] is the initial state.
struct Trajectory {
  std::vector<StateVector> states;
  std::vector<TrajectoryRecord> records;

  std::size_t size() const noexcept { return states.size(); }
};

}  // namespace kerrkick
