#include "support.hpp"

#include <gtest/gtest.h>

using namespace frames;
using testing_support::brute_inner;
using testing_support::cross;
using testing_support::polar_root;
using testing_support::Rng;

namespace {

/// Expanded triple sum for A^1_p on a tight frame with bound A:
/// (1/(N A)) sum_k sum_i conj(<u(k), x_i>) <u(m+k), x_{i . kn}>.
AmbiguitySurface a1_triple_sum(const VVSignal& u, const Frame& x, const OpTable& t, double bound) {
  const Index n = u.length();
  AmbiguitySurface s{ComplexMatrix::Zero(n, n)};
  for (Index m = 0; m < n; ++m) {
    for (Index dop = 0; dop < n; ++dop) {
      Complex acc{0.0, 0.0};
      for (Index k = 0; k < n; ++k) {
        const Index kn = (k * dop) % n;
        for (Index i = 0; i < x.size(); ++i) {
          acc += std::conj(brute_inner(u.at(k), x.vector(i))) * brute_inner(u.at(m + k), x.vector(t(static_cast<int>(i), static_cast<int>(kn))));
        }
      }
      s.values(m, dop) = acc / (static_cast<double>(n) * bound);
    }
  }
  return s;
}

Frame roots_frame(long n) { return make_dft_frame(SelectionMap(n, {1 % n})); }

}  // namespace

TEST(ScalarAmbiguity, ConstantSequence) {
  const AmbiguitySurface s = ambiguity_scalar(ComplexVector::Ones(6));
  for (Index m = 0; m < 6; ++m) {
    for (Index n = 0; n < 6; ++n) EXPECT_LT(std::abs(s(m, n) - (n == 0 ? 1.0 : 0.0)), 1e-14);
  }
}

TEST(ScalarAmbiguity, OriginIsMeanEnergyAndDelta) {
  Rng rng(50);
  const ComplexVector u = rng.vector(9);
  EXPECT_NEAR(std::abs(ambiguity_scalar(u)(0, 0) - u.squaredNorm() / 9.0), 0.0, 1e-12);

  const AmbiguitySurface d = ambiguity_scalar(ComplexVector::Unit(5, 0));
  for (Index m = 0; m < 5; ++m) {
    for (Index n = 0; n < 5; ++n) EXPECT_LT(std::abs(d(m, n) - (m == 0 ? 0.2 : 0.0)), 1e-15);
  }
  EXPECT_THROW(ambiguity_scalar(ComplexVector(0)), DimensionError);
}

TEST(ScalarAmbiguity, MatchesPolarFormula) {
  Rng rng(51);
  const ComplexVector u = rng.vector(7);
  const AmbiguitySurface s = ambiguity_scalar(u);
  for (Index m = 0; m < 7; ++m) {
    for (Index n = 0; n < 7; ++n) {
      Complex acc{0.0, 0.0};
      for (Index k = 0; k < 7; ++k) acc += u((m + k) % 7) * std::conj(u(k)) * polar_root(-k * n, 7);
      EXPECT_LT(std::abs(s(m, n) - acc / 7.0), 1e-12);
    }
  }
}

TEST(ScalarAmbiguity, EnergyIdentityAtZeroDelay) {
  Rng rng(52);
  const ComplexVector u = rng.vector(8);
  const AmbiguitySurface s = ambiguity_scalar(u);
  for (Index k = 0; k < 8; ++k) {
    Complex acc{0.0, 0.0};
    for (Index n = 0; n < 8; ++n) acc += s(0, n) * polar_root(k * n, 8);
    EXPECT_LT(std::abs(acc - std::norm(u(k))), 1e-12);
  }
}

TEST(A1Ambiguity, ScalarCaseEqualsClassicalSurface) {
  Rng rng(53);
  for (long n = 1; n <= 32; ++n) {
    const VVSignal u = rng.signal(n, 1);
    const AmbiguitySurface a1 = ambiguity_a1(u, roots_frame(n), FiniteAbelianGroup::cyclic(static_cast<int>(n)).table());
    const AmbiguitySurface a = ambiguity_scalar(u.values().col(0));
    EXPECT_LE(max_abs(a1.values - a.values), 1e-12 * std::max(1.0, max_abs(a.values))) << "N=" << n;
  }
}

TEST(A1Ambiguity, DftFrameAgainstTripleSum) {
  const SelectionMap sel(5, {1, 2});
  const Frame x = make_dft_frame(sel);
  const OpTable t = FiniteAbelianGroup::cyclic(5).table();
  // u(m) = x_m
  VVSignal u(5, 2);
  for (Index m = 0; m < 5; ++m) u.values().row(m) = x.vector(m).transpose();
  const AmbiguitySurface a1 = ambiguity_a1(u, x, t);
  EXPECT_LE(max_abs(a1.values - a1_triple_sum(u, x, t, 5.0).values), 1e-11);
  // x_k * x_0 = x_k, so A(0,0) = (1/N) sum_k ||x_k||^2
  EXPECT_NEAR(std::abs(a1(0, 0)), 2.0, 1e-12);

  Rng rng(54);
  const VVSignal v = rng.signal(5, 2);
  EXPECT_LE(max_abs(ambiguity_a1(v, x, t).values - a1_triple_sum(v, x, t, 5.0).values), 1e-11);
}

TEST(A1Ambiguity, CrossProductFrameAgainstTextbookCrossProduct) {
  Rng rng(55);
  const CrossProductFrame c = cross_product_frame();
  const VVSignal u = rng.signal(7, 3);
  const AmbiguitySurface a1 = ambiguity_a1(u, c.frame, c.table);
  for (Index m = 0; m < 7; ++m) {
    for (Index n = 0; n < 7; ++n) {
      Complex acc{0.0, 0.0};
      for (Index k = 0; k < 7; ++k) acc += brute_inner(u.at(m + k), cross(u.at(k), c.frame.vector((k * n) % 7)));
      EXPECT_LE(std::abs(a1(m, n) - acc / 7.0), 1e-12 * std::max(1.0, std::abs(acc)));
    }
  }
  EXPECT_LE(max_abs(a1.values - a1_triple_sum(u, c.frame, c.table, 2.0).values), 1e-11);
}

TEST(A1Ambiguity, Preconditions) {
  EXPECT_THROW(ambiguity_a1(VVSignal(4, 1), roots_frame(5), FiniteAbelianGroup::cyclic(5).table()), DimensionError);
  EXPECT_THROW(ambiguity_a1(VVSignal(3, 2), alpha_beta_frame(0.5, 0.25), FiniteAbelianGroup::cyclic(3).table()),
               PreconditionError);
}

TEST(ApdAmbiguity, OriginIsColumnEnergy) {
  Rng rng(56);
  const SelectionMap sel(6, {1, 2, 5});
  const VVSignal u = rng.signal(6, 3);
  const VVAmbiguitySurface s = ambiguity_apd(u, sel);
  for (Index q = 0; q < 3; ++q) {
    EXPECT_NEAR(s(0, 0, q).real(), u.values().col(q).squaredNorm() / 6.0, 1e-12);
    EXPECT_NEAR(s(0, 0, q).imag(), 0.0, 1e-15);
  }
}

TEST(ApdAmbiguity, StftFormMatchesDirectDefinition) {
  Rng rng(57);
  const SelectionMap sel(8, {1, 2, 5});
  for (int trial = 0; trial < 5; ++trial) {
    const VVSignal u = rng.signal(8, 3);
    EXPECT_LE(max_abs(ambiguity_apd(u, sel).values - ambiguity_apd_direct(u, sel).values), 1e-12);
  }
}

TEST(ApdAmbiguity, ColumnsReduceToScalarSurfaces) {
  Rng rng(58);
  const SelectionMap sel(7, {1, 3});
  const VVSignal u = rng.signal(7, 2);
  const VVAmbiguitySurface s = ambiguity_apd(u, sel);
  for (Index q = 0; q < 2; ++q) {
    // column q with frequency s(q): the scalar surface sampled at Doppler n s(q)
    const AmbiguitySurface a = ambiguity_scalar(u.values().col(q));
    for (Index m = 0; m < 7; ++m) {
      for (Index n = 0; n < 7; ++n) EXPECT_LT(std::abs(s(m, n, q) - a(m, (n * sel(q)) % 7)), 1e-12);
    }
  }
  // s = (1): identical to the scalar surface
  const VVSignal w = rng.signal(7, 1);
  const VVAmbiguitySurface sw = ambiguity_apd(w, SelectionMap(7, {1}));
  const AmbiguitySurface aw = ambiguity_scalar(w.values().col(0));
  for (Index m = 0; m < 7; ++m) {
    for (Index n = 0; n < 7; ++n) EXPECT_LT(std::abs(sw(m, n, 0) - aw(m, n)), 1e-12);
  }
}

TEST(ApdAmbiguity, ColumnSeparability) {
  Rng rng(59);
  const SelectionMap sel(6, {1, 5});
  const VVSignal u = rng.signal(6, 2);
  VVSignal v = u;
  v.values().col(0) = rng.matrix(6, 1);
  const VVAmbiguitySurface a = ambiguity_apd(u, sel);
  const VVAmbiguitySurface b = ambiguity_apd(v, sel);
  EXPECT_EQ(a.values.col(1), b.values.col(1));
  EXPECT_GT(max_abs(a.values.col(0) - b.values.col(0)), 1e-6);
}

TEST(StftIdentity, RandomUnitAndZeroSignals) {
  Rng rng(60);
  const SelectionMap sel(8, {1, 3, 5});
  EXPECT_LE(ambiguity_stft_identity(rng.signal(8, 3), sel).max_deviation, 1e-10);
  EXPECT_EQ(ambiguity_stft_identity(VVSignal(8, 3), sel).max_deviation, 0.0);
  EXPECT_LE(ambiguity_stft_identity(algebra_unit(8, 3), sel).max_deviation, 1e-12);
}

TEST(StftIdentity, HoldsForEveryInvertibleSelection) {
  Rng rng(61);
  for (long n : {3L, 5L, 7L, 9L, 10L}) {
    std::vector<long> units;
    for (long v = 1; v < n; ++v) {
      if (std::gcd(v, n) == 1) units.push_back(v);
    }
    const SelectionMap sel(n, units);
    EXPECT_LE(ambiguity_stft_identity(rng.signal(n, sel.dim()), sel).max_deviation, 1e-10) << n;
  }
  EXPECT_THROW(ambiguity_stft_identity(VVSignal(4, 2), SelectionMap(4, {1, 2})), InvertibilityError);
}
