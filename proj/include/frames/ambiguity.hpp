// Discrete periodic ambiguity functions: the scalar A_p, the C-valued A^1_p
// over a tight frame with a frame multiplication, and the C^d-valued A^d_p for
// DFT frames together with its STFT factorisation.
#pragma once

#include "frames/core.hpp"
#include "frames/dft.hpp"
#include "frames/frame.hpp"
#include "frames/multiplication.hpp"

namespace frames {

/// N x N surface indexed (delay m, Doppler n).
struct AmbiguitySurface {
  ComplexMatrix values;

  Index size() const { return values.rows(); }
  Complex operator()(Index m, Index n) const { return values(m, n); }
};

/// N x N surface of C^d vectors; row m * N + n holds A(m, n).
struct VVAmbiguitySurface {
  Index length = 0;
  Index dim = 0;
  ComplexMatrix values;

  ComplexVector operator()(Index m, Index n) const { return values.row(m * length + n).transpose(); }
  Complex operator()(Index m, Index n, Index q) const { return values(m * length + n, q); }
};

/// A_p(u)(m, n) = (1/N) sum_k u(m+k) conj(u(k)) e^{-2 pi i k n / N}.
inline AmbiguitySurface ambiguity_scalar(const ComplexVector& u) {
  const Index n_len = u.size();
  if (n_len < 1) throw DimensionError("ambiguity_scalar: empty sequence");
  AmbiguitySurface out{ComplexMatrix::Zero(n_len, n_len)};
  for (Index m = 0; m < n_len; ++m) {
    for (Index n = 0; n < n_len; ++n) {
      Complex acc{0.0, 0.0};
      for (Index k = 0; k < n_len; ++k) {
        acc += u(positive_mod(m + k, n_len)) * std::conj(u(k)) * root_of_unity(-k * n, n_len);
      }
      out.values(m, n) = acc / static_cast<double>(n_len);
    }
  }
  return out;
}

/// A^1_p(u)(m, n) = (1/N) sum_k <u(m+k), u(k) * x_{kn}>, kn taken mod N and
/// * the bilinear product induced by the table on the tight frame X.
inline AmbiguitySurface ambiguity_a1(const VVSignal& u, const Frame& x, const OpTable& t, Tolerance tol = {}) {
  if (u.length() != x.size() || u.dim() != x.dim()) {
    throw DimensionError("ambiguity_a1: signal must be N x d for a frame of N vectors in C^d");
  }
  const FrameProduct product(x, t, tol);
  const Index n_len = u.length();

  // w(k, n) = u(k) * x_{kn}
  std::vector<ComplexVector> w(static_cast<std::size_t>(n_len * n_len));
  for (Index k = 0; k < n_len; ++k) {
    const ComplexVector uk = u.at(k);
    for (Index n = 0; n < n_len; ++n) {
      w[static_cast<std::size_t>(k * n_len + n)] = product(uk, x.vector(positive_mod(k * n, n_len)));
    }
  }
  AmbiguitySurface out{ComplexMatrix::Zero(n_len, n_len)};
  for (Index m = 0; m < n_len; ++m) {
    for (Index n = 0; n < n_len; ++n) {
      Complex acc{0.0, 0.0};
      for (Index k = 0; k < n_len; ++k) acc += inner(u.at(m + k), w[static_cast<std::size_t>(k * n_len + n)]);
      out.values(m, n) = acc / static_cast<double>(n_len);
    }
  }
  return out;
}

/// A^d_p(u)(m, n) = (1/N) sum_k (tau_{-m} u)(k) conj(u(k) e^n(k)), with plain
/// pointwise products on the unit-modulus DFT frame.
inline VVAmbiguitySurface ambiguity_apd(const VVSignal& u, const SelectionMap& sel) {
  detail::require_matching(u, sel);
  const Index n_len = u.length();
  const Index d = u.dim();
  VVAmbiguitySurface out{n_len, d, ComplexMatrix::Zero(n_len * n_len, d)};
  for (Index m = 0; m < n_len; ++m) {
    const VVSignal shifted = translate(u, -m);
    for (Index n = 0; n < n_len; ++n) {
      const VVSignal modulated = modulate(u, n, sel);
      out.values.row(m * n_len + n) =
          shifted.values().cwiseProduct(modulated.values().conjugate()).colwise().sum() / static_cast<double>(n_len);
    }
  }
  return out;
}

/// Direct evaluation (1/N) sum_k u(m+k) conj(u(k)) conj(x_{kn}) with the DFT
/// frame vectors.
inline VVAmbiguitySurface ambiguity_apd_direct(const VVSignal& u, const SelectionMap& sel) {
  detail::require_matching(u, sel);
  const Frame x = make_dft_frame(sel);
  const Index n_len = u.length();
  const Index d = u.dim();
  VVAmbiguitySurface out{n_len, d, ComplexMatrix::Zero(n_len * n_len, d)};
  for (Index m = 0; m < n_len; ++m) {
    for (Index n = 0; n < n_len; ++n) {
      ComplexVector acc = ComplexVector::Zero(d);
      for (Index k = 0; k < n_len; ++k) {
        acc += u.at(m + k).cwiseProduct(u.at(k).conjugate()).cwiseProduct(x.vector(positive_mod(k * n, n_len)).conjugate());
      }
      out.values.row(m * n_len + n) = acc.transpose() / static_cast<double>(n_len);
    }
  }
  return out;
}

struct StftIdentityReport {
  double max_deviation = 0.0;
};

/// Compares A^d_p(u)(m, n) with (1/N) sum_k (tau_{-m} u)(k) conj(F^{-1}(tau_n u^)(k)).
inline StftIdentityReport ambiguity_stft_identity(const VVSignal& u, const SelectionMap& sel) {
  detail::require_matching(u, sel);
  sel.require_invertible();
  const VVAmbiguitySurface surface = ambiguity_apd(u, sel);
  const VVSignal uhat = vv_dft(u, sel);
  const Index n_len = u.length();
  StftIdentityReport report;
  for (Index n = 0; n < n_len; ++n) {
    const VVSignal window = vv_idft(translate(uhat, n), sel);
    for (Index m = 0; m < n_len; ++m) {
      const VVSignal shifted = translate(u, -m);
      const Eigen::RowVectorXcd rhs =
          shifted.values().cwiseProduct(window.values().conjugate()).colwise().sum() / static_cast<double>(n_len);
      report.max_deviation = std::max(report.max_deviation, max_abs(rhs - surface.values.row(m * n_len + n)));
    }
  }
  return report;
}

}  // namespace frames
