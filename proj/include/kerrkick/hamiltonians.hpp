#pragma once

#include <complex>
#include <string>

#include "kerrkick/errors.hpp"
#include "kerrkick/fock_space.hpp"

namespace kerrkick {

// Physical parameters of the kicked Kerr coupler (hbar = 1, energies in units of chi).
struct SystemParams {
  double chi_a = 1.0;
  double chi_b = 1.0;
  cplx epsilon{0.01, 0.0};  // internal linear coupling
  cplx alpha{0.04, 0.0};    // kick strength
  double T = 1.0;           // time between pulses
  ModeDims dims{15, 15};

  void validate() const {
    if (!(T > 0.0)) throw Error("SystemParams: T must be positive, got " + std::to_string(T));
    dims.validate();
  }

  bool operator==(const SystemParams&) const = default;
};

// H_NL = chi_a/2 a^dag^2 a^2 + chi_b/2 b^dag^2 b^2 + eps a^dag b + eps* a b^dag
inline OperatorMatrix build_coupler_hamiltonian(const SystemParams& p) {
  p.validate();
  const ModeDims& d = p.dims;
  OperatorMatrix h(d.joint());
  // Kerr terms are diagonal: chi n(n-1)/2.
  for (std::size_t m = 0; m < d.dim_a; ++m)
    for (std::size_t n = 0; n < d.dim_b; ++n) {
      const double mm = static_cast<double>(m);
      const double nn = static_cast<double>(n);
      h(d.index(m, n), d.index(m, n)) = 0.5 * p.chi_a * mm * (mm - 1.0) + 0.5 * p.chi_b * nn * (nn - 1.0);
    }
  const OperatorMatrix a = embed_mode_a(annihilation_op(d.dim_a), d);
  const OperatorMatrix b = embed_mode_b(annihilation_op(d.dim_b), d);
  const OperatorMatrix hop = adjoint(a) * b;  // a^dag b
  return h + p.epsilon * hop + std::conj(p.epsilon) * adjoint(hop);
}

// G = alpha a^dag + alpha* a on mode a; one pulse is exp(-i G).
inline OperatorMatrix build_kick_generator(const SystemParams& p) {
  p.validate();
  const OperatorMatrix a = annihilation_op(p.dims.dim_a);
  const OperatorMatrix g = p.alpha * adjoint(a) + std::conj(p.alpha) * a;
  return embed_mode_a(g, p.dims);
}

inline OperatorMatrix total_number_operator(const ModeDims& d) {
  return embed_mode_a(number_op(d.dim_a), d) + embed_mode_b(number_op(d.dim_b), d);
}

}  // namespace kerrkick
