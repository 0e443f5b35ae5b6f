// Walks through the Z/4 group frame in C^2: Gramian, G-matrix test and the
// harmonic-frame certificate.

#include "frames/frames.hpp"

#include <iostream>

int main() {
  using frames::Complex;
  frames::ComplexMatrix m(2, 4);
  m << Complex(1, 1), Complex(0, 0), Complex(1, -1), Complex(2, 0),
       Complex(1, -1), Complex(2, 0), Complex(1, 1), Complex(0, 0);
  const frames::Frame x(m);
  const auto z4 = frames::FiniteAbelianGroup::cyclic(4);

  const frames::FrameClass fc = frames::classify(x);
  std::cout << "tight: " << fc.tight << "  bound: " << fc.upper_bound << "\n\n";
  std::cout << "Gramian:\n" << frames::gramian(x) << "\n\n";

  if (const auto w = frames::gmatrix_test(frames::gramian(x), z4)) {
    std::cout << "G-matrix with nu = " << w->nu.transpose() << "\n\n";
  }

  const frames::HarmonicCertificate cert = frames::harmonic_equivalence(x, z4);
  std::cout << "c = " << cert.c << "\nU =\n" << cert.unitary << "\n";
  std::cout << "c U x_g (columns):\n" << cert.c * cert.unitary * x.synthesis_matrix() << "\n";
  std::cout << "law deviation: " << cert.law_deviation << '\n';
  return 0;
}
