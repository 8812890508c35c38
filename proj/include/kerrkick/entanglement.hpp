#pragma once

// Two-qubit view of the coupler: projection onto {|0>,|1>} x {|0>,|1>},
// concurrence and Bell-state fidelities.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "kerrkick/analytic.hpp"
#include "kerrkick/errors.hpp"
#include "kerrkick/fock_space.hpp"
#include "kerrkick/numerics.hpp"
#include "kerrkick/trajectory.hpp"

namespace kerrkick {

// 4x4 density matrix, basis order |00>, |01>, |10>, |11>.
class TwoQubitDensity {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  explicit TwoQubitDensity(OperatorMatrix entries) : rho_(std::move(entries)) {
    if (rho_.dim() != 4) throw DimensionMismatch("TwoQubitDensity: expected 4x4, got dim " + std::to_string(rho_.dim()));
  }

  static TwoQubitDensity pure(const TruncatedState& psi) {
    const auto c = psi.amplitudes();
    OperatorMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = c[i] * std::conj(c[j]);
    return TwoQubitDensity(std::move(m));
  }

  const OperatorMatrix& matrix() const noexcept { return rho_; }

  // Throws ContractViolation when the density-matrix invariants do not hold.
  EigenDecomposition validate() const {
    double herm = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) herm = std::max(herm, std::abs(rho_(i, j) - std::conj(rho_(j, i))));
    if (herm > kHermitianTol) throw ContractViolation("TwoQubitDensity: not Hermitian");
    if (std::abs(trace(rho_) - 1.0) > kTraceTol) throw ContractViolation("TwoQubitDensity: trace != 1");
    auto eig = hermitian_eigendecomposition(rho_);
    if (eig.eigenvalues.front() < -kPositivityTol) {
      throw ContractViolation("TwoQubitDensity: negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
    }
    return eig;
  }

 private:
  OperatorMatrix rho_;
};

// sigma_y (x) sigma_y in the computational basis.
inline OperatorMatrix spin_flip() {
  OperatorMatrix s(4);
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

// Wootters concurrence C = max(0, l1 - l2 - l3 - l4), l_i the decreasing
// square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
//
// With tau = sqrt(rho) (sy x sy) sqrt(rho)*, tau tau^dag = sqrt(rho) rho~ sqrt(rho)
// is similar to rho rho~, so the l_i are the singular values of tau. They are
// read off the Hermitian dilation [[0, tau], [tau^dag, 0]] (eigenvalues +-l_i),
// which avoids square-rooting eigenvalues that are zero up to round-off.
inline double concurrence(const TwoQubitDensity& rho) {
  const auto eig = rho.validate();
  const OperatorMatrix sqrt_rho =
      spectral_function(eig, [](double p) { return cplx{std::sqrt(std::max(p, 0.0)), 0.0}; });
  const OperatorMatrix tau = sqrt_rho * spin_flip() * conjugate(sqrt_rho);

  OperatorMatrix dilation(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = tau(i, j);
      dilation(4 + j, i) = std::conj(tau(i, j));
    }
  const auto ev = hermitian_eigendecomposition(dilation).eigenvalues;  // ascending; top four are l4..l1
  const double l1 = ev[7], l2 = ev[6], l3 = ev[5], l4 = ev[4];
  return std::clamp(l1 - std::abs(l2) - std::abs(l3) - std::abs(l4), 0.0, 1.0);
}

// 2 |c00 c11 - c01 c10|
inline double concurrence_pure(const TruncatedState& psi) {
  return 2.0 * std::abs(psi.c00 * psi.c11 - psi.c01 * psi.c10);
}

enum class BellLabel { B1, B2, B3, B4 };

struct BellState {
  BellLabel label;
  TruncatedState amplitudes;
};

// B1,2 = (|00> +- i|11>)/sqrt2,  B3,4 = (|01> +- i|10>)/sqrt2
inline std::array<BellState, 4> bell_states() {
  const double r = std::numbers::sqrt2 / 2.0;
  const cplx ir{0.0, r};
  return {{
      {BellLabel::B1, {r, 0.0, 0.0, ir}},
      {BellLabel::B2, {r, 0.0, 0.0, -ir}},
      {BellLabel::B3, {0.0, r, ir, 0.0}},
      {BellLabel::B4, {0.0, r, -ir, 0.0}},
  }};
}

inline cplx overlap(const TruncatedState& bra, const TruncatedState& ket) {
  const auto b = bra.amplitudes();
  const auto k = ket.amplitudes();
  cplx s{};
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(b[i]) * k[i];
  return s;
}

inline std::array<double, 4> bell_fidelities(const TruncatedState& psi) {
  const auto bells = bell_states();
  std::array<double, 4> f{};
  for (std::size_t i = 0; i < 4; ++i) f[i] = std::norm(overlap(bells[i].amplitudes, psi));
  return f;
}

struct QubitProjection {
  TruncatedState state;  // renormalized
  double leakage = 0.0;
  std::array<double, 4> raw_probs{};
};

inline constexpr double kDegenerateAmplitude = 1e-15;

inline QubitProjection project_to_qubits(const StateVector& psi) {
  const ModeDims& d = psi.dims;
  d.validate();
  const std::array<cplx, 4> raw{psi.at(0, 0), psi.at(0, 1), psi.at(1, 0), psi.at(1, 1)};
  if (std::all_of(raw.begin(), raw.end(), [](cplx c) { return std::abs(c) < kDegenerateAmplitude; })) {
    throw DegenerateProjection("project_to_qubits: state has no weight on the qubit subspace");
  }
  QubitProjection out;
  double inside = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    out.raw_probs[i] = std::norm(raw[i]);
    inside += out.raw_probs[i];
  }
  double outside = 0.0;
  for (std::size_t m = 0; m < d.dim_a; ++m)
    for (std::size_t n = 0; n < d.dim_b; ++n)
      if (m > 1 || n > 1) outside += std::norm(psi.at(m, n));
  out.leakage = outside;
  const double scale = 1.0 / std::sqrt(inside);
  out.state = {raw[0] * scale, raw[1] * scale, raw[2] * scale, raw[3] * scale};
  return out;
}

inline TrajectoryRecord make_record(std::size_t k, const StateVector& psi) {
  const auto proj = project_to_qubits(psi);
  TrajectoryRecord rec;
  rec.k = k;
  rec.probs = proj.raw_probs;
  rec.leakage = proj.leakage;
  rec.concurrence = concurrence(TwoQubitDensity::pure(proj.state));
  rec.bell_fidelities = bell_fidelities(proj.state);
  return rec;
}

inline void annotate_trajectory(Trajectory& traj) {
  traj.records.clear();
  traj.records.reserve(traj.states.size());
  for (std::size_t k = 0; k < traj.states.size(); ++k) traj.records.push_back(make_record(k, traj.states[k]));
}

}  // namespace kerrkick
