// Finite frames for C^d and their operator calculus: analysis/synthesis,
// frame operator, Gramian, bounds, canonical dual and tight frames,
// Naimark projection check and Gramian-based unitary equivalence.
#pragma once

#include "frames/core.hpp"

#include <optional>
#include <vector>

namespace frames {

/// Ordered sequence of N vectors in C^d, stored as the d x N synthesis matrix.
///
/// Repeated and zero vectors are allowed; whether the vectors span C^d is
/// reported by classify().
class Frame {
 public:
  Frame() = default;

  /// Columns of `synthesis` are the frame vectors.
  explicit Frame(ComplexMatrix synthesis) : vectors_(std::move(synthesis)) {
    if (vectors_.cols() < 1) throw DimensionError("frame needs at least one vector");
    if (vectors_.rows() < 1) throw DimensionError("frame dimension must be positive");
    if (!all_finite(vectors_)) throw DimensionError("frame entries must be finite");
  }

  static Frame from_vectors(const std::vector<ComplexVector>& vs) {
    if (vs.empty()) throw DimensionError("frame needs at least one vector");
    ComplexMatrix m(vs.front().size(), static_cast<Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vs[j].size() != m.rows()) throw DimensionError("frame vectors must share one length");
      m.col(static_cast<Index>(j)) = vs[j];
    }
    return Frame(std::move(m));
  }

  Index dim() const { return vectors_.rows(); }
  Index size() const { return vectors_.cols(); }

  ComplexVector vector(Index j) const { return vectors_.col(j); }
  const ComplexMatrix& synthesis_matrix() const { return vectors_; }

  /// Frame {A x_j}.
  Frame transformed(const ComplexMatrix& a) const {
    if (a.cols() != dim()) throw DimensionError("operator size does not match frame dimension");
    return Frame(a * vectors_);
  }

  Frame scaled(double c) const { return Frame(c * vectors_); }

  bool operator==(const Frame& other) const {
    return vectors_.rows() == other.vectors_.rows() && vectors_.cols() == other.vectors_.cols() &&
           vectors_ == other.vectors_;
  }

 private:
  ComplexMatrix vectors_;
};

struct FrameClass {
  bool spans = false;
  double lower_bound = 0.0;  // A
  double upper_bound = 0.0;  // B
  bool tight = false;
  bool parseval = false;
  bool equal_norm = false;
  bool funtf = false;
};

/// Certificate for x_j = c U y_j.
struct EquivalenceCertificate {
  double c = 1.0;
  ComplexMatrix unitary;
};

struct NaimarkReport {
  double idempotence_deviation = 0.0;  // max |G^2 - G|
  double hermitian_deviation = 0.0;    // max |G - G*|
  double column_deviation = 0.0;       // max |G e_j - L x_j|
};

inline ComplexVector analysis(const Frame& x, const ComplexVector& v) {
  if (v.size() != x.dim()) throw DimensionError("analysis: vector length != frame dimension");
  return x.synthesis_matrix().adjoint() * v;
}

inline ComplexVector synthesis(const Frame& x, const ComplexVector& a) {
  if (a.size() != x.size()) throw DimensionError("synthesis: coefficient count != frame size");
  return x.synthesis_matrix() * a;
}

inline ComplexMatrix frame_operator(const Frame& x) {
  const ComplexMatrix& l = x.synthesis_matrix();
  ComplexMatrix s = l * l.adjoint();
  // Exact Hermitian symmetry.
  for (Index i = 0; i < s.rows(); ++i) {
    s(i, i) = Complex(s(i, i).real(), 0.0);
    for (Index j = i + 1; j < s.cols(); ++j) s(j, i) = std::conj(s(i, j));
  }
  return s;
}

/// G[j][k] = <x_k, x_j>; Hermitian exactly.
inline ComplexMatrix gramian(const Frame& x) {
  const ComplexMatrix& l = x.synthesis_matrix();
  const Index n = x.size();
  ComplexMatrix g(n, n);
  for (Index j = 0; j < n; ++j) {
    g(j, j) = Complex(l.col(j).squaredNorm(), 0.0);
    for (Index k = j + 1; k < n; ++k) {
      g(j, k) = l.col(j).dot(l.col(k));  // sum conj(x_j) x_k = <x_k, x_j>
      g(k, j) = std::conj(g(j, k));
    }
  }
  return g;
}

namespace detail {

struct FrameSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;
  double threshold = 0.0;        // eigenvalue threshold (square of singular threshold)
};

inline FrameSpectrum frame_spectrum(const Frame& x) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(frame_operator(x));
  FrameSpectrum out{es.eigenvalues(), es.eigenvectors(), 0.0};
  const double smax = std::sqrt(std::max(out.eigenvalues.maxCoeff(), 0.0));
  const double thr = rank_threshold(smax, x.size());
  out.threshold = thr * thr;
  return out;
}

}  // namespace detail

inline FrameClass classify(const Frame& x, Tolerance tol = {}) {
  const detail::FrameSpectrum sp = detail::frame_spectrum(x);
  FrameClass fc;
  fc.lower_bound = std::max(sp.eigenvalues.minCoeff(), 0.0);
  fc.upper_bound = std::max(sp.eigenvalues.maxCoeff(), 0.0);
  fc.spans = fc.lower_bound > sp.threshold && fc.upper_bound > 0.0;
  if (!fc.spans) fc.lower_bound = 0.0;
  fc.tight = fc.spans && std::abs(fc.upper_bound - fc.lower_bound) <= tol.rel * fc.upper_bound;
  fc.parseval = fc.tight && std::abs(fc.upper_bound - 1.0) <= tol.rel;

  const Eigen::VectorXd norms = x.synthesis_matrix().colwise().norm().transpose();
  const double nmax = norms.maxCoeff();
  fc.equal_norm = (nmax - norms.minCoeff()) <= std::max(tol.rel * nmax, tol.abs);
  fc.funtf = fc.tight && fc.equal_norm && std::abs(nmax - 1.0) <= tol.rel;
  return fc;
}

struct CanonicalFrames {
  Frame dual;   // S^{-1} x_j
  Frame tight;  // S^{-1/2} x_j
};

/// Canonical dual and canonical tight (Parseval) frames.
inline CanonicalFrames canonical(const Frame& x) {
  const detail::FrameSpectrum sp = detail::frame_spectrum(x);
  if (sp.eigenvalues.minCoeff() <= sp.threshold) {
    throw NotSpanningError("canonical: frame operator is singular (frame does not span)");
  }
  const ComplexMatrix& v = sp.eigenvectors;
  const Eigen::VectorXd inv = sp.eigenvalues.cwiseInverse();
  const Eigen::VectorXd inv_sqrt = inv.cwiseSqrt();
  const ComplexMatrix s_inv = v * inv.cast<Complex>().asDiagonal() * v.adjoint();
  const ComplexMatrix s_inv_sqrt = v * inv_sqrt.cast<Complex>().asDiagonal() * v.adjoint();
  return {x.transformed(s_inv), x.transformed(s_inv_sqrt)};
}

/// Tight frames X, Y with the same indexing: returns (c, U) with x_j = c U y_j,
/// or nothing when the Gramians are not proportional.
///
/// Throws PreconditionError when either input is not tight or the sizes differ.
inline std::optional<EquivalenceCertificate> unitary_equivalence(const Frame& x, const Frame& y,
                                                                 Tolerance tol = {}) {
  if (x.size() != y.size() || x.dim() != y.dim()) {
    throw PreconditionError("unitary_equivalence: frames must have the same N and d");
  }
  if (!classify(x, tol).tight || !classify(y, tol).tight) {
    throw PreconditionError("unitary_equivalence: only tight frames are supported");
  }
  const ComplexMatrix gx = gramian(x);
  const ComplexMatrix gy = gramian(y);
  const double c2 = gx.trace().real() / gy.trace().real();
  if (!(c2 > 0.0)) return std::nullopt;
  const double scale = std::max(max_abs(gx), tol.abs);
  if (max_abs(gx - c2 * gy) > tol.rel * scale) return std::nullopt;

  const double c = std::sqrt(c2);
  const ComplexMatrix& lx = x.synthesis_matrix();
  const ComplexMatrix& ly = y.synthesis_matrix();
  // Least-squares alignment U Y = X / c, then polar projection onto U(d).
  const ComplexMatrix ly_pinv = ly.completeOrthogonalDecomposition().pseudoInverse();
  ComplexMatrix u = nearest_unitary((lx / c) * ly_pinv);

  const double residual = max_abs(lx - c * u * ly);
  if (residual > 1e-8 * std::max(1.0, max_abs(lx))) return std::nullopt;
  return EquivalenceCertificate{c, std::move(u)};
}

/// Checks that the Gramian of a Parseval frame is the orthogonal projection
/// onto the range of the analysis operator.
inline NaimarkReport naimark_check(const Frame& x, Tolerance tol = {}) {
  if (!classify(x, tol).parseval) throw PreconditionError("naimark_check: frame is not Parseval");
  const ComplexMatrix g = gramian(x);
  NaimarkReport r;
  r.idempotence_deviation = max_abs(g * g - g);
  r.hermitian_deviation = max_abs(g - g.adjoint());
  for (Index j = 0; j < x.size(); ++j) {
    const ComplexVector col = g * ComplexVector::Unit(x.size(), j);
    r.column_deviation = std::max(r.column_deviation, max_abs(col - analysis(x, x.vector(j))));
  }
  return r;
}

// Frequently used small frames.

inline Frame orthonormal_basis(Index d) {
  return Frame(ComplexMatrix::Identity(d, d));
}

/// {(1,0), (0,1), (alpha, beta)}: a frame for C^2 without frame multiplications
/// whenever alpha != beta, alpha, beta > 0 and alpha + beta < 1.
inline Frame alpha_beta_frame(double alpha, double beta) {
  ComplexMatrix m(2, 3);
  m << 1.0, 0.0, alpha,
       0.0, 1.0, beta;
  return Frame(std::move(m));
}

}  // namespace frames
