// Finite-dimensional uncertainty principles: the self-adjoint operator
// inequalities on C^n and the position/momentum inequality for the
// vector-valued DFT.
#pragma once

#include "frames/core.hpp"
#include "frames/dft.hpp"

#include <optional>

namespace frames {

/// P(u)(m) = i (u(m+1) - u(m-1)), indices mod N.
inline VVSignal apply_P(const VVSignal& u) {
  const Index n = u.length();
  ComplexMatrix out(n, u.dim());
  for (Index m = 0; m < n; ++m) {
    out.row(m) = kI * (u.values().row(positive_mod(m + 1, n)) - u.values().row(positive_mod(m - 1, n)));
  }
  return VVSignal(std::move(out));
}

inline void require_real(const VVSignal& q, Tolerance tol = {}) {
  if (q.values().imag().cwiseAbs().maxCoeff() > tol.abs) {
    throw PreconditionError("multiplier q must be real-valued");
  }
}

/// Q(u)(m) = q(m) u(m) pointwise; q must be real.
inline VVSignal apply_Q(const VVSignal& q, const VVSignal& u) {
  if (q.length() != u.length() || q.dim() != u.dim()) throw DimensionError("apply_Q: size mismatch");
  require_real(q);
  return VVSignal(q.values().real().cast<Complex>().cwiseProduct(u.values()).eval());
}

/// q = i(e^1 - e^{-1}), i.e. q(m)(n) = -2 sin(2 pi m s(n) / N); exactly real.
inline VVSignal classical_q(const SelectionMap& sel) {
  const long n_mod = sel.modulus();
  VVSignal q(n_mod, sel.dim());
  for (long m = 0; m < n_mod; ++m) {
    for (Index p = 0; p < sel.dim(); ++p) {
      const long r = positive_mod(m * sel(p), n_mod);
      q(m, p) = Complex(-2.0 * std::sin(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n_mod)), 0.0);
    }
  }
  return q;
}

/// (N d) x (N d) matrix of P on the flattening m * d + p.
inline ComplexMatrix p_operator_matrix(Index length, Index dim) {
  ComplexMatrix p = ComplexMatrix::Zero(length * dim, length * dim);
  for (Index m = 0; m < length; ++m) {
    for (Index c = 0; c < dim; ++c) {
      p(m * dim + c, positive_mod(m + 1, length) * dim + c) += kI;
      p(m * dim + c, positive_mod(m - 1, length) * dim + c) -= kI;
    }
  }
  return p;
}

/// Diagonal matrix of Q on the flattening m * d + p.
inline ComplexMatrix q_operator_matrix(const VVSignal& q) {
  require_real(q);
  const Index n = q.length() * q.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index m = 0; m < q.length(); ++m) {
    for (Index c = 0; c < q.dim(); ++c) out(m * q.dim() + c, m * q.dim() + c) = q(m, c).real();
  }
  return out;
}

inline ComplexVector flatten(const VVSignal& u) {
  ComplexVector v(u.length() * u.dim());
  for (Index m = 0; m < u.length(); ++m) {
    for (Index c = 0; c < u.dim(); ++c) v(m * u.dim() + c) = u(m, c);
  }
  return v;
}

struct UPReport {
  double t_term = 0.0;  // <u, T u>, T = QP + PQ
  double s_term = 0.0;  // <u, S u>, S = -i [Q, P]
  double lhs = 0.0;     // (t_term / 2)^2 + (s_term / 2)^2
  double rhs = 0.0;     // ||q u||^2 ||P u||^2
  bool holds = false;
  double slack = 0.0;   // rhs - lhs
};

/// Evaluates both sides of
///   (sum_m Im<u(m), (q(m)+q(m+1)) u(m+1)>)^2 + (sum_m Re<u(m), (q(m)-q(m+1)) u(m+1)>)^2
///     <= ||q u||^2 ||P u||^2.
inline UPReport verify_up(const VVSignal& u, const VVSignal& q, Tolerance tol = {}) {
  if (q.length() != u.length() || q.dim() != u.dim()) throw DimensionError("verify_up: size mismatch");
  require_real(q, tol);
  const Index n = u.length();
  const Eigen::MatrixXd qr = q.values().real();
  double im_sum = 0.0;
  double re_sum = 0.0;
  for (Index m = 0; m < n; ++m) {
    const Index next = positive_mod(m + 1, n);
    const ComplexVector um = u.at(m);
    const ComplexVector un = u.at(next);
    const ComplexVector plus = (qr.row(m) + qr.row(next)).transpose().cast<Complex>().cwiseProduct(un);
    const ComplexVector minus = (qr.row(m) - qr.row(next)).transpose().cast<Complex>().cwiseProduct(un);
    im_sum += inner(um, plus).imag();
    re_sum += inner(um, minus).real();
  }
  UPReport r;
  r.t_term = 2.0 * im_sum;
  r.s_term = 2.0 * re_sum;
  r.lhs = im_sum * im_sum + re_sum * re_sum;
  r.rhs = apply_Q(q, u).values().squaredNorm() * apply_P(u).values().squaredNorm();
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + tol.rel * r.rhs + tol.abs;
  return r;
}

/// ||(e^1 - e^{-1}) F u|| with the unitary transform; equals ||P u||.
inline double fourier_momentum_norm(const VVSignal& u, const SelectionMap& sel) {
  const VVSignal uhat = unitary_vv_dft(u, sel);
  const VVSignal weight = modulation_function(1, sel) - modulation_function(-1, sel);
  return (weight * uhat).norm();
}

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;
};

struct HilbertUPReport {
  /// {E_x(i[A,B])}^2 <= 4 Var_x(A) Var_x(B); only evaluated for ||x|| <= 1.
  std::optional<InequalitySides> variance;
  /// <x,Tx>^2 + <x,Sx>^2 <= 4 <A^2><B^2> with T = AB + BA, S = -i[A,B].
  InequalitySides commutator;
  double t_term = 0.0;
  double s_term = 0.0;
  /// Ax and Bx linearly dependent (equality case of the commutator form).
  bool equality = false;
};

inline bool is_hermitian(const ComplexMatrix& a, Tolerance tol = {}) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= std::max(tol.rel * max_abs(a), tol.abs);
}

inline HilbertUPReport hilbert_up(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& x,
                                  Tolerance tol = {}) {
  if (!is_hermitian(a, tol) || !is_hermitian(b, tol)) throw PreconditionError("hilbert_up: operators must be Hermitian");
  if (a.rows() != b.rows() || a.rows() != x.size()) throw DimensionError("hilbert_up: size mismatch");

  const ComplexVector ax = a * x;
  const ComplexVector bx = b * x;
  const Complex ab = inner(ax, bx);  // <Ax, Bx> = <x, ABx>
  HilbertUPReport r;
  // <x, Tx> = 2 Re<Ax, Bx>, <x, Sx> = -2 Im<Ax, Bx>
  r.t_term = 2.0 * ab.real();
  r.s_term = -2.0 * ab.imag();
  const double a2 = ax.squaredNorm();
  const double b2 = bx.squaredNorm();
  auto finish = [&](double lhs, double rhs) {
    return InequalitySides{lhs, rhs, lhs <= rhs + tol.rel * rhs + tol.abs, rhs - lhs};
  };
  r.commutator = finish(r.t_term * r.t_term + r.s_term * r.s_term, 4.0 * a2 * b2);

  if (x.norm() <= 1.0 + tol.rel) {
    const double ea = inner(ax, x).real();
    const double eb = inner(bx, x).real();
    const double e_comm = 2.0 * ab.imag();  // E_x(i[A,B])
    const double var_a = a2 - ea * ea;
    const double var_b = b2 - eb * eb;
    r.variance = finish(e_comm * e_comm, 4.0 * var_a * var_b);
  }

  const double scale = std::max(std::sqrt(a2), std::sqrt(b2));
  if (scale == 0.0) {
    r.equality = true;
  } else {
    ComplexMatrix pair(x.size(), 2);
    pair.col(0) = ax;
    pair.col(1) = bx;
    const Eigen::VectorXd sv = singular_values(pair);
    r.equality = sv(sv.size() - 1) <= 1e-8 * scale;
  }
  return r;
}

}  // namespace frames
