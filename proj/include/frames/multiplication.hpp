// Frame multiplications: binary operations on frame indices that extend to a
// bilinear product on the whole space, and their classification for finite
// Abelian groups (group frames, G-matrices, harmonic frames).
#pragma once

#include "frames/core.hpp"
#include "frames/frame.hpp"
#include "frames/group.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace frames {

enum class Side {
  right,  // sum_i a_i x_{i . j}
  left,   // sum_i a_i x_{j . i}
};

struct MultiplicationViolation {
  int j = 0;
  Side side = Side::right;
  double residual = 0.0;
};

struct MultiplicationCheck {
  bool accepted = false;
  Index kernel_dim = 0;
  std::optional<MultiplicationViolation> violation;  // first failing (j, side)

  explicit operator bool() const { return accepted; }
};

/// Kernel test for frame multiplications.
///
/// `.` is a frame multiplication for X iff every linear relation
/// sum_i a_i x_i = 0 survives as sum_i a_i x_{i.j} = 0 and sum_i a_i x_{j.i} = 0.
/// The kernel basis of the synthesis matrix is computed once so many tables
/// can be tested against the same frame.
class MultiplicationTester {
 public:
  explicit MultiplicationTester(const Frame& x, Tolerance tol = {})
      : frame_(x), kernel_(null_space(x.synthesis_matrix())), tol_(tol) {
    const double scale = tol_.rel * x.synthesis_matrix().norm();
    limit_sq_ = scale * scale;
  }

  const Frame& frame() const { return frame_; }
  const ComplexMatrix& kernel() const { return kernel_; }

  MultiplicationCheck test(const OpTable& t) const {
    const int n = static_cast<int>(frame_.size());
    if (t.size() != n) throw DimensionError("operation table size does not match frame size");
    MultiplicationCheck out;
    out.kernel_dim = kernel_.cols();
    if (kernel_.cols() == 0) {
      out.accepted = true;
      return out;
    }
    ComplexMatrix gathered(n, kernel_.cols());
    for (int j = 0; j < n; ++j) {
      for (Side side : {Side::right, Side::left}) {
        gathered.setZero();
        for (int i = 0; i < n; ++i) {
          const int target = side == Side::right ? t(i, j) : t(j, i);
          gathered.row(target) += kernel_.row(i);
        }
        const double r2 = (frame_.synthesis_matrix() * gathered).squaredNorm();
        if (r2 > limit_sq_) {
          out.violation = MultiplicationViolation{j, side, std::sqrt(r2)};
          return out;
        }
      }
    }
    out.accepted = true;
    return out;
  }

 private:
  Frame frame_;
  ComplexMatrix kernel_;
  Tolerance tol_;
  double limit_sq_ = 0.0;
};

inline MultiplicationCheck is_frame_multiplication(const Frame& x, const OpTable& t, Tolerance tol = {}) {
  if (t.size() != x.size()) throw DimensionError("operation table size does not match frame size");
  return MultiplicationTester(x, tol).test(t);
}

/// The bilinear product x * y = sum_ij a_i b_j x_{i.j} induced by a frame
/// multiplication on a tight frame, with a = <x, x_i>/A the tight-frame
/// reconstruction coefficients.
class FrameProduct {
 public:
  FrameProduct(const Frame& x, const OpTable& t, Tolerance tol = {}) : frame_(x), table_(t) {
    if (t.size() != x.size()) throw DimensionError("operation table size does not match frame size");
    const FrameClass fc = classify(x, tol);
    if (!fc.tight) throw PreconditionError("frame product: frame is not tight");
    const MultiplicationCheck chk = is_frame_multiplication(x, t, tol);
    if (!chk.accepted) throw PreconditionError("frame product: table is not a frame multiplication");
    bound_ = fc.upper_bound;
  }

  double frame_bound() const { return bound_; }
  const Frame& frame() const { return frame_; }
  const OpTable& table() const { return table_; }

  ComplexVector operator()(const ComplexVector& x, const ComplexVector& y) const {
    const ComplexVector a = analysis(frame_, x) / bound_;
    const ComplexVector b = analysis(frame_, y) / bound_;
    const int n = table_.size();
    ComplexVector coeff = ComplexVector::Zero(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) coeff(table_(i, j)) += a(i) * b(j);
    }
    return frame_.synthesis_matrix() * coeff;
  }

  /// Matrix of x -> x_g * x.
  ComplexMatrix left_multiplication(int g) const { return multiplication_matrix(g, Side::left); }

  /// Matrix of x -> x * x_g.
  ComplexMatrix right_multiplication(int g) const { return multiplication_matrix(g, Side::right); }

 private:
  ComplexMatrix multiplication_matrix(int g, Side side) const {
    const Index d = frame_.dim();
    const ComplexVector xg = frame_.vector(g);
    ComplexMatrix m(d, d);
    for (Index i = 0; i < d; ++i) {
      const ComplexVector e = ComplexVector::Unit(d, i);
      m.col(i) = side == Side::left ? (*this)(xg, e) : (*this)(e, xg);
    }
    return m;
  }

  Frame frame_;
  OpTable table_;
  double bound_ = 1.0;
};

inline ComplexVector extend_product(const Frame& x, const OpTable& t, const ComplexVector& u,
                                    const ComplexVector& v, Tolerance tol = {}) {
  return FrameProduct(x, t, tol)(u, v);
}

namespace detail {

/// Visits all n^(n*n) tables in lexicographic order (row-major digits).
template <typename Visit>
void for_each_table(int n, Visit&& visit) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  const int cells = n * n;
  while (true) {
    visit(t);
    int c = cells - 1;
    for (; c >= 0; --c) {
      int& v = t[static_cast<std::size_t>(c / n)][static_cast<std::size_t>(c % n)];
      if (++v < n) break;
      v = 0;
    }
    if (c < 0) return;
  }
}

/// Visits tables with a two-sided identity element e (e . i = i . e = i).
template <typename Visit>
void for_each_table_with_identity(int n, Visit&& visit) {
  for (int e = 0; e < n; ++e) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == e) {
          t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = j;
        } else if (j == e) {
          t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i;
        } else {
          free.emplace_back(i, j);
        }
      }
    }
    while (true) {
      visit(t);
      int c = static_cast<int>(free.size()) - 1;
      for (; c >= 0; --c) {
        auto [i, j] = free[static_cast<std::size_t>(c)];
        int& v = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (++v < n) break;
        v = 0;
      }
      if (c < 0) break;
    }
  }
}

}  // namespace detail

struct EnumerationOptions {
  /// Largest N searched without a candidate list. N <= 3 is fully exhaustive;
  /// N = 4 is restricted to tables with a two-sided identity.
  int cap = 4;
  Tolerance tol{};
};

/// Accepted frame multiplications, in lexicographic order.
///
/// With `candidates` only those tables are tested; without, the search is
/// exhaustive up to the cap (see EnumerationOptions) and PreconditionError is
/// thrown above it.
inline std::vector<OpTable> enumerate_multiplications(const Frame& x,
                                                      const std::optional<std::vector<OpTable>>& candidates = std::nullopt,
                                                      EnumerationOptions opts = {}) {
  const MultiplicationTester tester(x, opts.tol);
  const int n = static_cast<int>(x.size());
  std::vector<OpTable> out;
  if (candidates) {
    for (const OpTable& t : *candidates) {
      if (tester.test(t).accepted) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (n > opts.cap || n > 4) {
    throw PreconditionError("enumerate_multiplications: N = " + std::to_string(n) +
                            " exceeds the exhaustive-search cap; pass candidate tables");
  }
  auto visit = [&](const std::vector<std::vector<int>>& rows) {
    OpTable t(rows);
    if (tester.test(t).accepted) out.push_back(std::move(t));
  };
  if (n <= 3) {
    detail::for_each_table(n, visit);
  } else {
    detail::for_each_table_with_identity(n, visit);
    std::sort(out.begin(), out.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group frames

/// a_{g,h} = nu(h^{-1} . g)
struct GMatrixWitness {
  ComplexVector nu;
};

inline std::optional<GMatrixWitness> gmatrix_test(const ComplexMatrix& m, const FiniteAbelianGroup& group,
                                                  Tolerance tol = {}) {
  const int n = group.order();
  if (m.rows() != n || m.cols() != n) throw DimensionError("gmatrix_test: matrix size != group order");
  GMatrixWitness w{m.col(group.identity())};
  const double limit = std::max(tol.rel * max_abs(m), tol.abs);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (std::abs(m(g, h) - w.nu(group.op(group.inverse(h), g))) > limit) return std::nullopt;
    }
  }
  return w;
}

namespace detail {

/// U_g x = sum_h <x, S^{-1} x_h> x_{g.h}.
inline std::vector<ComplexMatrix> regular_operators(const Frame& x, const FiniteAbelianGroup& group) {
  const int n = group.order();
  if (x.size() != n) throw DimensionError("frame size does not match group order");
  const ComplexMatrix dual = canonical(x).dual.synthesis_matrix();
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(n));
  ComplexMatrix shifted(x.dim(), n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) shifted.col(h) = x.synthesis_matrix().col(group.op(g, h));
    ops.push_back(shifted * dual.adjoint());
  }
  return ops;
}

}  // namespace detail

/// Unitary representation {U_g} with U_g x_h = x_{g.h}; requires the Gramian
/// to be a G-matrix.
inline std::vector<ComplexMatrix> group_frame_rep(const Frame& x, const FiniteAbelianGroup& group,
                                                  Tolerance tol = {}) {
  if (x.size() != group.order()) throw DimensionError("frame size does not match group order");
  if (!gmatrix_test(gramian(x), group, tol)) {
    throw PreconditionError("group_frame_rep: Gramian is not a G-matrix");
  }
  return detail::regular_operators(x, group);
}

struct HarmonicCertificate {
  double c = 1.0;
  ComplexMatrix unitary;                    // U, d x d
  std::vector<int> character_indices;       // dual-group index of row j
  ComplexMatrix characters;                 // d x N, row j = gamma_j(g)
  double fit_deviation = 0.0;               // max |cU x_g - (gamma_j(g))_j|
  double law_deviation = 0.0;               // max |cU x_{g.h} - cU x_g . cU x_h|
};

/// Constructs (c, U) with c U x_g = (gamma_0(g), ..., gamma_{d-1}(g)) for a
/// tight frame on which G defines a frame multiplication.
///
/// The commuting unitaries U_g are split by sequential eigenspace refinement
/// over the generators of the cyclic factors, using the exact spectral
/// projectors (1/n) sum_r w^{-kr} U^r. Rows are ordered by ascending
/// eigenvalue-exponent tuple.
inline HarmonicCertificate harmonic_equivalence(const Frame& x, const FiniteAbelianGroup& group,
                                                Tolerance tol = {}) {
  const int n = group.order();
  const Index d = x.dim();
  if (x.size() != n) throw DimensionError("frame size does not match group order");
  if (!classify(x, tol).tight) throw PreconditionError("harmonic_equivalence: frame is not tight");
  if (!is_frame_multiplication(x, group.table(), tol)) {
    throw PreconditionError("harmonic_equivalence: group does not define a frame multiplication");
  }
  const std::vector<ComplexMatrix> ops = detail::regular_operators(x, group);

  struct Block {
    ComplexMatrix basis;
    std::vector<int> exponents;
  };
  std::vector<Block> blocks{{ComplexMatrix::Identity(d, d), {}}};
  const double split_threshold = std::sqrt(tol.rel);
  for (std::size_t f = 0; f < group.cyclic_orders().size(); ++f) {
    const int order = group.cyclic_orders()[f];
    const ComplexMatrix& u = ops[static_cast<std::size_t>(group.generator(f))];
    std::vector<ComplexMatrix> powers{ComplexMatrix::Identity(d, d)};
    for (int r = 1; r < order; ++r) powers.push_back(u * powers.back());

    std::vector<Block> refined;
    for (const Block& b : blocks) {
      Index covered = 0;
      for (int k = 0; k < order; ++k) {
        ComplexMatrix proj = ComplexMatrix::Zero(d, d);
        for (int r = 0; r < order; ++r) proj += root_of_unity(-static_cast<long>(k) * r, order) * powers[static_cast<std::size_t>(r)];
        proj /= static_cast<double>(order);
        ComplexMatrix sub = range_basis(proj * b.basis, split_threshold);
        if (sub.cols() == 0) continue;
        covered += sub.cols();
        std::vector<int> ex = b.exponents;
        ex.push_back(k);
        refined.push_back({std::move(sub), std::move(ex)});
      }
      if (covered != b.basis.cols()) {
        throw DiagonalizationError("harmonic_equivalence: eigenspaces of U_g do not cover the block");
      }
    }
    blocks = std::move(refined);
  }
  for (const Block& b : blocks) {
    if (b.basis.cols() != 1) {
      throw DiagonalizationError("harmonic_equivalence: simultaneous eigenspace of dimension " +
                                 std::to_string(b.basis.cols()) + " did not split");
    }
  }
  if (static_cast<Index>(blocks.size()) != d) {
    throw DiagonalizationError("harmonic_equivalence: wrong number of one-dimensional blocks");
  }

  ComplexMatrix v(d, d);
  HarmonicCertificate cert;
  for (Index j = 0; j < d; ++j) {
    v.row(j) = blocks[static_cast<std::size_t>(j)].basis.col(0).adjoint();
    cert.character_indices.push_back(group.encode(blocks[static_cast<std::size_t>(j)].exponents));
  }
  const ComplexVector y = v * x.vector(group.identity());
  const double r = y.cwiseAbs().mean();
  if (!(r > 0.0) || (y.cwiseAbs().array() - r).abs().maxCoeff() > 1e-8 * r) {
    throw DiagonalizationError("harmonic_equivalence: identity vector does not have equal-modulus coordinates");
  }
  ComplexVector phases(d);
  for (Index j = 0; j < d; ++j) phases(j) = std::conj(y(j)) / std::abs(y(j));
  cert.c = 1.0 / r;
  cert.unitary = phases.asDiagonal() * v;

  cert.characters.resize(d, n);
  for (Index j = 0; j < d; ++j) {
    for (int g = 0; g < n; ++g) cert.characters(j, g) = group.character(cert.character_indices[static_cast<std::size_t>(j)], g);
  }
  const ComplexMatrix mapped = cert.c * cert.unitary * x.synthesis_matrix();
  cert.fit_deviation = max_abs(mapped - cert.characters);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const ComplexVector lhs = mapped.col(group.op(g, h));
      const ComplexVector rhs = mapped.col(g).cwiseProduct(mapped.col(h));
      cert.law_deviation = std::max(cert.law_deviation, max_abs(lhs - rhs));
    }
  }
  return cert;
}

/// X = {U (gamma_{k_1}(g), ..., gamma_{k_d}(g))}_g.
inline Frame make_harmonic_frame(const FiniteAbelianGroup& group, const std::vector<int>& characters,
                                 const std::optional<ComplexMatrix>& unitary = std::nullopt) {
  const Index d = static_cast<Index>(characters.size());
  if (d == 0) throw DimensionError("harmonic frame needs at least one character");
  std::vector<int> sorted = characters;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DimensionError("harmonic frame: duplicate character indices");
  }
  for (int k : characters) {
    if (k < 0 || k >= group.order()) throw DimensionError("harmonic frame: character index out of range");
  }
  ComplexMatrix m(d, group.order());
  for (int g = 0; g < group.order(); ++g) {
    for (Index j = 0; j < d; ++j) m(j, g) = group.character(characters[static_cast<std::size_t>(j)], g);
  }
  if (unitary) {
    if (unitary->rows() != d || unitary->cols() != d) throw DimensionError("harmonic frame: unitary has wrong size");
    m = *unitary * m;
  }
  return Frame(std::move(m));
}

struct CrossProductFrame {
  Frame frame;
  OpTable table;
};

/// x_0 = 0, x_1..x_3 = i, j, k, x_4..x_6 = -i, -j, -k with the index operation
/// induced by the cross product on C^3.
inline CrossProductFrame cross_product_frame() {
  ComplexMatrix m = ComplexMatrix::Zero(3, 7);
  for (Index a = 0; a < 3; ++a) {
    m(a, 1 + a) = 1.0;
    m(a, 4 + a) = -1.0;
  }
  // Rows 1..3 as tabulated; n.n = 0 and n.0 = 0.n = 0.
  std::vector<std::vector<int>> t(7, std::vector<int>(7, 0));
  t[1] = {0, 0, 3, 5, 0, 6, 2};
  t[2] = {0, 6, 0, 1, 3, 0, 4};
  t[3] = {0, 2, 4, 0, 5, 1, 0};
  auto negate = [](int v) { return v == 0 ? 0 : (v <= 3 ? v + 3 : v - 3); };
  for (int a = 4; a <= 6; ++a) {
    for (int b = 0; b < 7; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = negate(t[static_cast<std::size_t>(a - 3)][static_cast<std::size_t>(b)]);
  }
  return {Frame(std::move(m)), OpTable(std::move(t))};
}

}  // namespace frames
