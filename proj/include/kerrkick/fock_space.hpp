#pragma once

// Dense operators and states on a truncated two-mode Fock space.
//
// Joint basis convention (used everywhere in the library):
//   |m>_a |n>_b  <->  I = m * dim_b + n        (mode a major)

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kerrkick/errors.hpp"

namespace kerrkick {

using cplx = std::complex<double>;

// Dense complex square matrix, row-major.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  OperatorMatrix(std::size_t dim, std::vector<cplx> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
      throw DimensionMismatch("OperatorMatrix: entry count " + std::to_string(entries_.size()) +
                              " does not match dim^2 = " + std::to_string(dim_ * dim_));
    }
  }

  static OperatorMatrix identity(std::size_t dim) {
    OperatorMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static OperatorMatrix diagonal(std::span<const double> values) {
    OperatorMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  cplx& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  std::span<cplx> entries() noexcept { return entries_; }
  std::span<const cplx> entries() const noexcept { return entries_; }

  cplx* row(std::size_t r) noexcept { return entries_.data() + r * dim_; }
  const cplx* row(std::size_t r) const noexcept { return entries_.data() + r * dim_; }

  bool operator==(const OperatorMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

inline void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "matrix product");
  const std::size_t n = a.dim();
  OperatorMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx* out = c.row(i);
    const cplx* ai = a.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = ai[k];
      if (aik == cplx{}) continue;
      const cplx* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) out[j] += aik * bk[j];
    }
  }
  return c;
}

inline OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) {
  require_same_dim(a, b, "matrix sum");
  auto dst = a.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return a;
}

inline OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) {
  require_same_dim(a, b, "matrix difference");
  auto dst = a.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return a;
}

inline OperatorMatrix operator*(cplx s, OperatorMatrix a) {
  for (auto& x : a.entries()) x *= s;
  return a;
}

inline OperatorMatrix adjoint(const OperatorMatrix& a) {
  const std::size_t n = a.dim();
  OperatorMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

// Entrywise complex conjugate in the computational basis.
inline OperatorMatrix conjugate(OperatorMatrix a) {
  for (auto& x : a.entries()) x = std::conj(x);
  return a;
}

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

inline double max_abs(const OperatorMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.entries()) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

inline double frobenius_norm(const OperatorMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

inline cplx trace(const OperatorMatrix& a) {
  cplx t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

// max|M - M^dag| / max|M|; zero for the zero matrix.
inline double hermiticity_defect(const OperatorMatrix& m) {
  const double scale = max_abs(m);
  if (scale == 0.0) return 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d / scale;
}

inline bool is_hermitian(const OperatorMatrix& m, double rel_tol = 1e-12) {
  return hermiticity_defect(m) <= rel_tol;
}

// max|U^dag U - I|
inline double unitarity_defect(const OperatorMatrix& u) {
  return max_abs_diff(adjoint(u) * u, OperatorMatrix::identity(u.dim()));
}

// Fock levels per mode, vacuum included.
struct ModeDims {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;

  std::size_t joint() const noexcept { return dim_a * dim_b; }

  std::size_t index(std::size_t m, std::size_t n) const noexcept { return m * dim_b + n; }

  std::pair<std::size_t, std::size_t> decode(std::size_t joint_index) const noexcept {
    return {joint_index / dim_b, joint_index % dim_b};
  }

  void validate() const {
    if (dim_a < 2 || dim_b < 2) {
      throw InvalidDimension("ModeDims: each mode needs at least 2 Fock levels, got (" +
                             std::to_string(dim_a) + ", " + std::to_string(dim_b) + ")");
    }
  }

  bool operator==(const ModeDims&) const = default;
};

// Annihilation operator on a single mode truncated to `dim` levels: A|n> = sqrt(n)|n-1>.
inline OperatorMatrix annihilation_op(std::size_t dim) {
  if (dim < 2) throw InvalidDimension("annihilation_op: dim must be >= 2, got " + std::to_string(dim));
  OperatorMatrix a(dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline OperatorMatrix creation_op(std::size_t dim) { return adjoint(annihilation_op(dim)); }

inline OperatorMatrix number_op(std::size_t dim) {
  if (dim < 2) throw InvalidDimension("number_op: dim must be >= 2, got " + std::to_string(dim));
  OperatorMatrix n(dim);
  for (std::size_t i = 0; i < dim; ++i) n(i, i) = static_cast<double>(i);
  return n;
}

// Kronecker product; row index I = i * dim(b) + k.
inline OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  OperatorMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

inline OperatorMatrix embed_mode_a(const OperatorMatrix& op, const ModeDims& dims) {
  dims.validate();
  if (op.dim() != dims.dim_a) {
    throw DimensionMismatch("embed_mode_a: operator dim " + std::to_string(op.dim()) +
                            " != dim_a " + std::to_string(dims.dim_a));
  }
  return tensor_product(op, OperatorMatrix::identity(dims.dim_b));
}

inline OperatorMatrix embed_mode_b(const OperatorMatrix& op, const ModeDims& dims) {
  dims.validate();
  if (op.dim() != dims.dim_b) {
    throw DimensionMismatch("embed_mode_b: operator dim " + std::to_string(op.dim()) +
                            " != dim_b " + std::to_string(dims.dim_b));
  }
  return tensor_product(OperatorMatrix::identity(dims.dim_a), op);
}

// Amplitudes c_{m,n} over the joint Fock basis.
struct StateVector {
  ModeDims dims;
  std::vector<cplx> amplitudes;

  StateVector() = default;
  explicit StateVector(ModeDims d) : dims(d), amplitudes(d.joint()) {}
  StateVector(ModeDims d, std::vector<cplx> amps) : dims(d), amplitudes(std::move(amps)) {
    if (amplitudes.size() != dims.joint()) {
      throw DimensionMismatch("StateVector: " + std::to_string(amplitudes.size()) +
                              " amplitudes for joint dimension " + std::to_string(dims.joint()));
    }
  }

  // |m>_a |n>_b
  static StateVector basis(ModeDims d, std::size_t m, std::size_t n) {
    d.validate();
    if (m >= d.dim_a || n >= d.dim_b) {
      throw InvalidDimension("StateVector::basis: (" + std::to_string(m) + ", " + std::to_string(n) +
                             ") outside cutoffs");
    }
    StateVector s(d);
    s.amplitudes[d.index(m, n)] = 1.0;
    return s;
  }

  std::size_t size() const noexcept { return amplitudes.size(); }
  cplx& at(std::size_t m, std::size_t n) { return amplitudes[dims.index(m, n)]; }
  const cplx& at(std::size_t m, std::size_t n) const { return amplitudes[dims.index(m, n)]; }

  double norm() const {
    double s = 0.0;
    for (const auto& c : amplitudes) s += std::norm(c);
    return std::sqrt(s);
  }

  bool operator==(const StateVector&) const = default;
};

inline cplx inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.size() != ket.size()) throw DimensionMismatch("inner_product: state sizes differ");
  cplx s{};
  for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
  return s;
}

// <psi|H|psi>
inline cplx expectation(const OperatorMatrix& h, const StateVector& psi) {
  if (h.dim() != psi.size()) throw DimensionMismatch("expectation: operator/state dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    cplx row{};
    const cplx* hi = h.row(i);
    for (std::size_t j = 0; j < h.dim(); ++j) row += hi[j] * psi.amplitudes[j];
    s += std::conj(psi.amplitudes[i]) * row;
  }
  return s;
}

}  // namespace kerrkick
