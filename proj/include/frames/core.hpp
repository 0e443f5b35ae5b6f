// Shared scalar/matrix types, tolerances, errors and small numerical helpers.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace frames {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Numerical tolerances used for flag decisions.
///
/// `rel` drives tight/parseval/unitary style decisions (scaled by the size of
/// the quantity being compared), `abs` is the floor for exact-zero structural
/// checks.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

// ---------------------------------------------------------------------------
// Errors

class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public FrameError {
 public:
  using FrameError::FrameError;
};

/// Frame operator is singular (frame does not span).
class NotSpanningError : public FrameError {
 public:
  using FrameError::FrameError;
};

/// A caller-side precondition of an operation is violated.
class PreconditionError : public FrameError {
 public:
  using FrameError::FrameError;
};

/// Vector-valued DFT is not invertible for the given selection map.
class InvertibilityError : public FrameError {
 public:
  InvertibilityError(std::size_t column, long selected, long modulus)
      : FrameError("vector-valued DFT not invertible: gcd(s(" + std::to_string(column) +
                   ") = " + std::to_string(selected) + ", N = " + std::to_string(modulus) +
                   ") != 1"),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Simultaneous diagonalisation did not split into one-dimensional blocks.
class DiagonalizationError : public FrameError {
 public:
  using FrameError::FrameError;
};

// ---------------------------------------------------------------------------
// Helpers

inline long positive_mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

/// e^{2 pi i k / n}, reducing k mod n first; quarter turns are exact.
inline Complex root_of_unity(long k, long n) {
  const long r = positive_mod(k, n);
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// <x, y> = sum_k x_k conj(y_k): linear in the first slot.
inline Complex inner(const ComplexVector& x, const ComplexVector& y) {
  return y.dot(x);  // Eigen's dot conjugates its receiver
}

/// Rank threshold: sigma_max * n * eps * 64.
inline double rank_threshold(double sigma_max, Index n) {
  return sigma_max * static_cast<double>(std::max<Index>(n, 1)) *
         std::numeric_limits<double>::epsilon() * 64.0;
}

inline Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return {};
  return Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
}

/// Numerical rank with the library-wide threshold rule.
inline Index numerical_rank(const ComplexMatrix& m) {
  const Eigen::VectorXd sv = singular_values(m);
  if (sv.size() == 0) return 0;
  const double thr = rank_threshold(sv(0), std::max(m.rows(), m.cols()));
  return static_cast<Index>((sv.array() > thr).count());
}

/// Orthonormal basis (columns) of the null space of m.
inline ComplexMatrix null_space(const ComplexMatrix& m) {
  const Index n = m.cols();
  if (m.rows() == 0) return ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = rank_threshold(smax, std::max(m.rows(), n));
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

/// Orthonormal basis (columns) of the column space of m.
inline ComplexMatrix range_basis(const ComplexMatrix& m, double threshold) {
  if (m.cols() == 0 || m.rows() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

/// Nearest unitary matrix in Frobenius norm (polar factor).
inline ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DimensionError(message);
}

}  // namespace frames
