#include "support.hpp"

#include <gtest/gtest.h>

using namespace frames;
using testing_support::brute_inner;
using testing_support::Rng;

namespace {

Complex signal_inner(const VVSignal& a, const VVSignal& b) { return brute_inner(flatten(a), flatten(b)); }

VVSignal random_real_q(Rng& rng, Index n, Index d) {
  VVSignal q(n, d);
  for (Index m = 0; m < n; ++m) {
    for (Index c = 0; c < d; ++c) q(m, c) = rng.real();
  }
  return q;
}

}  // namespace

TEST(PositionMomentum, POfConstantIsZero) {
  VVSignal u(5, 2);
  u.values().rowwise() = Eigen::RowVector2cd(Complex(1, 2), Complex(-3, 0.5));
  EXPECT_EQ(apply_P(u).norm(), 0.0);
}

TEST(PositionMomentum, PVanishesForNTwo) {
  Rng rng(70);
  EXPECT_EQ(apply_P(rng.signal(2, 3)).norm(), 0.0);
}

TEST(PositionMomentum, SelfAdjointOnRandomPairs) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const VVSignal u = rng.signal(7, 3);
    const VVSignal v = rng.signal(7, 3);
    const VVSignal q = random_real_q(rng, 7, 3);
    EXPECT_LE(std::abs(signal_inner(apply_P(u), v) - signal_inner(u, apply_P(v))), 1e-12 * u.norm() * v.norm());
    EXPECT_LE(std::abs(signal_inner(apply_Q(q, u), v) - signal_inner(u, apply_Q(q, v))), 1e-12 * u.norm() * v.norm());
  }
}

TEST(PositionMomentum, OperatorMatricesAreHermitianAndAgree) {
  Rng rng(72);
  const ComplexMatrix p = p_operator_matrix(6, 2);
  EXPECT_EQ(p, ComplexMatrix(p.adjoint()));
  const VVSignal q = random_real_q(rng, 6, 2);
  const ComplexMatrix qm = q_operator_matrix(q);
  EXPECT_EQ(qm, ComplexMatrix(qm.adjoint()));
  const VVSignal u = rng.signal(6, 2);
  EXPECT_LE(max_abs(p * flatten(u) - flatten(apply_P(u))), 1e-14);
  EXPECT_LE(max_abs(qm * flatten(u) - flatten(apply_Q(q, u))), 1e-14);
}

TEST(PositionMomentum, ComplexMultiplierRejected) {
  VVSignal q(4, 1);
  q(2, 0) = Complex(0.0, 1.0);
  EXPECT_THROW(apply_Q(q, VVSignal(4, 1)), PreconditionError);
  EXPECT_THROW(verify_up(VVSignal(4, 1), q), PreconditionError);
  EXPECT_THROW(apply_Q(VVSignal(4, 1), VVSignal(4, 2)), DimensionError);
}

TEST(ClassicalQ, EntriesAndExactReality) {
  const SelectionMap sel(8, {1, 3});
  const VVSignal q = classical_q(sel);
  for (Index m = 0; m < 8; ++m) {
    for (Index n = 0; n < 2; ++n) {
      EXPECT_EQ(q(m, n).imag(), 0.0);
      EXPECT_NEAR(q(m, n).real(), -2.0 * std::sin(2.0 * std::numbers::pi * m * sel(n) / 8.0), 1e-14);
    }
  }
  for (Index n = 0; n < 2; ++n) EXPECT_EQ(q(0, n), Complex(0, 0));
  // q = i(e^1 - e^-1)
  const VVSignal expect(kI * (modulation_function(1, sel) - modulation_function(-1, sel)).values());
  EXPECT_LE(max_abs(q.values() - expect.values()), 1e-14);
}

TEST(ClassicalQ, FourierIntertwinesPAndQ) {
  Rng rng(73);
  for (const SelectionMap& sel : {SelectionMap(8, {1, 3}), SelectionMap(9, {2, 4, 7}), SelectionMap(6, {0, 3})}) {
    const VVSignal q = classical_q(sel);
    for (int trial = 0; trial < 10; ++trial) {
      const VVSignal u = rng.signal(sel.modulus(), sel.dim());
      const VVSignal lhs = vv_dft(apply_P(u), sel);
      const VVSignal rhs = apply_Q(q, vv_dft(u, sel));
      EXPECT_LE((lhs - rhs).norm(), 1e-10 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST(ClassicalQ, MomentumNormViaFourierSide) {
  Rng rng(74);
  const SelectionMap sel(8, {1, 3});
  for (int trial = 0; trial < 20; ++trial) {
    const VVSignal u = rng.signal(8, 2);
    EXPECT_NEAR(fourier_momentum_norm(u, sel), apply_P(u).norm(), 1e-10 * apply_P(u).norm());
  }
}

TEST(VerifyUp, ZeroSignal) {
  const UPReport r = verify_up(VVSignal(6, 2), classical_q(SelectionMap(6, {1, 5})));
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(VerifyUp, SingleSupportHasNoCrossTerms) {
  Rng rng(75);
  VVSignal u(8, 2);
  u.values().row(3) = rng.matrix(1, 2);
  const UPReport r = verify_up(u, classical_q(SelectionMap(8, {1, 3})));
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.holds);
}

TEST(VerifyUp, MonteCarloClassicalQ) {
  Rng rng(76);
  const SelectionMap sel(8, {1, 3});
  const VVSignal q = classical_q(sel);
  for (int trial = 0; trial < 1000; ++trial) {
    const UPReport r = verify_up(rng.signal(8, 2), q);
    EXPECT_TRUE(r.holds);
    EXPECT_GE(r.slack, -1e-9 * r.rhs);
  }
}

TEST(VerifyUp, MonteCarloArbitraryRealQ) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 2 + trial % 9;
    const UPReport r = verify_up(rng.signal(n, 3), random_real_q(rng, n, 3));
    EXPECT_TRUE(r.holds);
    EXPECT_GE(r.slack, -1e-9 * r.rhs - 1e-20);
  }
}

TEST(VerifyUp, TermsMatchOperatorExpectations) {
  // t = <u, (QP + PQ) u>, s = <u, -i(QP - PQ) u> from explicit matrices
  Rng rng(78);
  const SelectionMap sel(8, {1, 3});
  const VVSignal q = classical_q(sel);
  const ComplexMatrix qm = q_operator_matrix(q);
  const ComplexMatrix pm = p_operator_matrix(8, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const VVSignal u = rng.signal(8, 2);
    const ComplexVector f = flatten(u);
    const Complex t = brute_inner(f, (qm * pm + pm * qm) * f);
    const Complex s = brute_inner(f, (-kI) * (qm * pm - pm * qm) * f);
    const UPReport r = verify_up(u, q);
    EXPECT_LE(std::abs(t.imag()), 1e-10 * std::max(1.0, std::abs(t)));
    EXPECT_LE(std::abs(s.imag()), 1e-10 * std::max(1.0, std::abs(s)));
    EXPECT_NEAR(r.t_term, t.real(), 1e-10 * std::max(1.0, std::abs(t)));
    EXPECT_NEAR(r.s_term, s.real(), 1e-10 * std::max(1.0, std::abs(s)));
  }
}

TEST(VerifyUp, CrossValidatesAgainstHilbertForm) {
  Rng rng(79);
  const SelectionMap sel(8, {1, 3});
  const VVSignal q = classical_q(sel);
  const ComplexMatrix qm = q_operator_matrix(q);
  const ComplexMatrix pm = p_operator_matrix(8, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const VVSignal u = rng.signal(8, 2);
    const UPReport r = verify_up(u, q);
    const HilbertUPReport h = hilbert_up(qm, pm, flatten(u));
    const double scale = std::max(1.0, r.rhs);
    EXPECT_NEAR(r.t_term, h.t_term, 1e-10 * std::max(1.0, std::abs(h.t_term)));
    EXPECT_NEAR(r.s_term, h.s_term, 1e-10 * std::max(1.0, std::abs(h.s_term)));
    EXPECT_NEAR(4.0 * r.lhs, h.commutator.lhs, 1e-10 * 4.0 * scale);
    EXPECT_NEAR(4.0 * r.rhs, h.commutator.rhs, 1e-10 * 4.0 * scale);
  }
}

TEST(VerifyUp, SizeMismatch) {
  EXPECT_THROW(verify_up(VVSignal(5, 2), VVSignal(4, 2)), DimensionError);
}

TEST(HilbertUp, IdentityAndEigenvectorGiveEquality) {
  Eigen::Matrix3cd a;
  a << Complex(2, 0), Complex(1, -1), Complex(0, 0.5),
       Complex(1, 1), Complex(3, 0), Complex(-1, 0),
       Complex(0, -0.5), Complex(-1, 0), Complex(1, 0);
  const ComplexMatrix am = a;
  const ComplexMatrix b = ComplexMatrix::Identity(3, 3);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(am);
  for (Index k = 0; k < 3; ++k) {
    const ComplexVector x = es.eigenvectors().col(k);
    const HilbertUPReport r = hilbert_up(am, b, x);
    // T = 2A, S = 0
    EXPECT_NEAR(r.t_term, 2.0 * es.eigenvalues()(k), 1e-12);
    EXPECT_NEAR(r.s_term, 0.0, 1e-12);
    EXPECT_LE(std::abs(r.commutator.rhs - r.commutator.lhs), 1e-9 * r.commutator.rhs);
    EXPECT_TRUE(r.equality);
    EXPECT_TRUE(r.commutator.holds);
  }
  // a non-eigenvector is a strict inequality
  ComplexVector x(3);
  x << 1.0, 0.0, 0.0;
  const HilbertUPReport r = hilbert_up(am, b, x);
  EXPECT_FALSE(r.equality);
  EXPECT_GT(r.commutator.slack, 1e-3);
}

TEST(HilbertUp, ZeroVector) {
  Rng rng(80);
  const HilbertUPReport r = hilbert_up(rng.hermitian(4), rng.hermitian(4), ComplexVector::Zero(4));
  EXPECT_EQ(r.commutator.lhs, 0.0);
  EXPECT_EQ(r.commutator.rhs, 0.0);
  EXPECT_TRUE(r.commutator.holds);
  ASSERT_TRUE(r.variance.has_value());
  EXPECT_EQ(r.variance->lhs, 0.0);
  EXPECT_EQ(r.variance->rhs, 0.0);
  EXPECT_TRUE(r.variance->holds);
  EXPECT_TRUE(r.equality);
}

TEST(HilbertUp, MonteCarloBothForms) {
  Rng rng(81);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = 2 + trial % 5;
    const ComplexMatrix a = rng.hermitian(n);
    const ComplexMatrix b = rng.hermitian(n);
    ComplexVector x = rng.vector(n);
    x /= x.norm();
    const HilbertUPReport r = hilbert_up(a, b, x);
    EXPECT_TRUE(r.commutator.holds);
    EXPECT_GE(r.commutator.slack, -1e-9 * r.commutator.rhs);
    ASSERT_TRUE(r.variance.has_value());
    EXPECT_TRUE(r.variance->holds);
    EXPECT_GE(r.variance->slack, -1e-9 * std::max(1.0, r.variance->rhs));
  }
}

TEST(HilbertUp, VarianceFormMatchesExplicitCommutator) {
  Rng rng(82);
  const ComplexMatrix a = rng.hermitian(4);
  const ComplexMatrix b = rng.hermitian(4);
  ComplexVector x = rng.vector(4);
  x /= x.norm();
  const HilbertUPReport r = hilbert_up(a, b, x);
  const Complex e_comm = brute_inner(kI * (a * b - b * a) * x, x);
  const double ea = brute_inner(a * x, x).real();
  const double eb = brute_inner(b * x, x).real();
  const double var_a = brute_inner(a * x, a * x).real() - ea * ea;
  const double var_b = brute_inner(b * x, b * x).real() - eb * eb;
  ASSERT_TRUE(r.variance.has_value());
  EXPECT_NEAR(r.variance->lhs, std::norm(e_comm), 1e-10);
  EXPECT_NEAR(r.variance->rhs, 4.0 * var_a * var_b, 1e-10);
}

TEST(HilbertUp, VarianceSkippedAboveUnitNormAndHermitianCheck) {
  Rng rng(83);
  const ComplexMatrix a = rng.hermitian(3);
  const HilbertUPReport r = hilbert_up(a, a, 3.0 * ComplexVector::Ones(3));
  EXPECT_FALSE(r.variance.has_value());
  EXPECT_TRUE(r.equality);
  EXPECT_THROW(hilbert_up(rng.matrix(3, 3), a, ComplexVector::Ones(3)), PreconditionError);
  EXPECT_THROW(hilbert_up(a, a, ComplexVector::Ones(4)), DimensionError);
}
