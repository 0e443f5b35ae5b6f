// Shared helpers for the unit tests: seeded random objects and brute-force
// oracles that avoid the library's own matrix formulations.
#pragma once

#include "frames/frames.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using frames::Complex;
using frames::ComplexMatrix;
using frames::ComplexVector;
using frames::Index;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double real() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex complex() {
    const double re = real();
    return {re, real()};
  }

  ComplexMatrix matrix(Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index c = 0; c < cols; ++c) {
      for (Index r = 0; r < rows; ++r) m(r, c) = complex();
    }
    return m;
  }

  ComplexVector vector(Index n) { return matrix(n, 1).col(0); }

  frames::VVSignal signal(Index length, Index dim) { return frames::VVSignal(matrix(length, dim)); }

  /// Haar-ish unitary from the QR factorization of a Gaussian matrix.
  ComplexMatrix unitary(Index d) {
    Eigen::HouseholderQR<ComplexMatrix> qr(matrix(d, d));
    return qr.householderQ() * ComplexMatrix::Identity(d, d);
  }

  ComplexMatrix hermitian(Index d) {
    const ComplexMatrix a = matrix(d, d);
    return (a + a.adjoint()) / 2.0;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// sum_k x_k conj(y_k) by explicit loop.
inline Complex brute_inner(const ComplexVector& x, const ComplexVector& y) {
  Complex acc{0.0, 0.0};
  for (Index k = 0; k < x.size(); ++k) acc += x(k) * std::conj(y(k));
  return acc;
}

/// e^{2 pi i k / n} through std::polar, independent of the library helper.
inline Complex polar_root(long k, long n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

inline ComplexVector cross(const ComplexVector& u, const ComplexVector& v) {
  ComplexVector w(3);
  w(0) = u(1) * v(2) - u(2) * v(1);
  w(1) = u(2) * v(0) - u(0) * v(2);
  w(2) = u(0) * v(1) - u(1) * v(0);
  return w;
}

/// The tight Z/4 group frame {(1+i,1-i), (0,2), (1-i,1+i), (2,0)}.
inline frames::Frame z4_frame() {
  ComplexMatrix m(2, 4);
  m << Complex(1, 1), Complex(0, 0), Complex(1, -1), Complex(2, 0),
       Complex(1, -1), Complex(2, 0), Complex(1, 1), Complex(0, 0);
  return frames::Frame(m);
}

}  // namespace testing_support
