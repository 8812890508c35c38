#pragma once

// Hermitian eigendecomposition (cyclic complex Jacobi) and the unitary
// exponentials built from it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "kerrkick/errors.hpp"
#include "kerrkick/fock_space.hpp"

namespace kerrkick {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  OperatorMatrix eigenvectors;      // column j pairs with eigenvalues[j]
};

struct JacobiOptions {
  double hermitian_tol = 1e-10;  // relative to max|H|
  double offdiag_tol = 1e-12;    // off-diagonal Frobenius mass relative to ||H||_F
  int max_sweeps = 100;
};

namespace detail {

inline double offdiag_frobenius(const OperatorMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One unitary rotation J in the (p, q) plane that zeroes a(p, q):
//   J_pp = J_qq = c,  J_pq = s e^{i phi},  J_qp = -s e^{-i phi},  phi = arg a(p, q).
// Applies a <- J^dag a J and v <- v J.
inline void jacobi_rotate(OperatorMatrix& a, OperatorMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const cplx phase = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx s_ph = s * phase;             // s e^{i phi}
  const cplx s_phc = s * std::conj(phase);  // s e^{-i phi}

  const std::size_t n = a.dim();
  // columns
  for (std::size_t k = 0; k < n; ++k) {
    cplx* rk = a.row(k);
    const cplx akp = rk[p];
    const cplx akq = rk[q];
    rk[p] = c * akp - s_phc * akq;
    rk[q] = s_ph * akp + c * akq;
  }
  // rows
  cplx* rp = a.row(p);
  cplx* rq = a.row(q);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = rp[k];
    const cplx aqk = rq[k];
    rp[k] = c * apk - s_ph * aqk;
    rq[k] = s_phc * apk + c * aqk;
  }
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    cplx* vk = v.row(k);
    const cplx vkp = vk[p];
    const cplx vkq = vk[q];
    vk[p] = c * vkp - s_phc * vkq;
    vk[q] = s_ph * vkp + c * vkq;
  }
}

}  // namespace detail

inline EigenDecomposition hermitian_eigendecomposition(const OperatorMatrix& h,
                                                       const JacobiOptions& opts = {}) {
  const std::size_t n = h.dim();
  if (n == 0) throw InvalidDimension("hermitian_eigendecomposition: empty matrix");
  const double defect = hermiticity_defect(h);
  if (defect > opts.hermitian_tol) {
    throw ContractViolation("hermitian_eigendecomposition: input not Hermitian (relative defect " +
                            std::to_string(defect) + ")");
  }

  // Symmetrize so round-off in the input cannot bias the rotations.
  OperatorMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx x = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = x;
      a(j, i) = std::conj(x);
    }
  }
  OperatorMatrix v = OperatorMatrix::identity(n);

  const double target = opts.offdiag_tol * frobenius_norm(a);
  int sweep = 0;
  while (detail::offdiag_frobenius(a) > target) {
    if (sweep++ >= opts.max_sweeps) {
      throw ConvergenceError("hermitian_eigendecomposition: no convergence after " +
                             std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), OperatorMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, src);
  }
  return out;
}

// V f(lambda) V^dag for an arbitrary scalar function of the eigenvalues.
template <typename F>
OperatorMatrix spectral_function(const EigenDecomposition& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  std::vector<cplx> fl(n);
  for (std::size_t j = 0; j < n; ++j) fl[j] = f(eig.eigenvalues[j]);
  const OperatorMatrix& v = eig.eigenvectors;
  OperatorMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx* orow = out.row(r);
    const cplx* vr = v.row(r);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx w = vr[j] * fl[j];
      if (w == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) orow[c] += w * std::conj(v(c, j));
    }
  }
  return out;
}

// exp(-i H t)
inline OperatorMatrix unitary_from_generator(const OperatorMatrix& h, double t) {
  const auto eig = hermitian_eigendecomposition(h);
  return spectral_function(eig, [t](double lambda) { return std::polar(1.0, -lambda * t); });
}

inline StateVector apply_operator(const OperatorMatrix& u, const StateVector& psi) {
  if (u.dim() != psi.size()) {
    throw DimensionMismatch("apply_operator: operator dim " + std::to_string(u.dim()) +
                            " vs state size " + std::to_string(psi.size()));
  }
  StateVector out(psi.dims);
  const std::size_t n = u.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* ui = u.row(i);
    cplx acc{};
    for (std::size_t j = 0; j < n; ++j) acc += ui[j] * psi.amplitudes[j];
    out.amplitudes[i] = acc;
  }
  return out;
}

}  // namespace kerrkick
