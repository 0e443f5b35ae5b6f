// DFT frames and the vector-valued DFT on Z/N x Z/d.
//
// A selection map s: Z/d -> Z/N (injective) picks d rows of the conjugate DFT
// matrix; frame vector m is x_m(n) = e^{2 pi i m s(n) / N}. The vector-valued
// DFT acts column by column: column q of the transform is D_{s(q)} applied to
// column q of the signal, with D_l = (e^{-2 pi i m n l / N})_{m,n}.
#pragma once

#include "frames/core.hpp"
#include "frames/frame.hpp"

#include <optional>
#include <set>
#include <vector>

namespace frames {

/// Injective map s: Z/d -> Z/N.
class SelectionMap {
 public:
  SelectionMap(long modulus, std::vector<long> selected) : modulus_(modulus), s_(std::move(selected)) {
    if (modulus_ < 1) throw DimensionError("selection map: N must be positive");
    if (s_.empty()) throw DimensionError("selection map: d must be positive");
    if (static_cast<long>(s_.size()) > modulus_) throw DimensionError("selection map: d > N");
    std::set<long> seen;
    for (long v : s_) {
      if (v < 0 || v >= modulus_) throw DimensionError("selection map: value outside 0..N-1");
      if (!seen.insert(v).second) throw DimensionError("selection map is not injective");
    }
  }

  long modulus() const { return modulus_; }
  Index dim() const { return static_cast<Index>(s_.size()); }
  long operator()(Index q) const { return s_[static_cast<std::size_t>(q)]; }
  const std::vector<long>& values() const { return s_; }

  /// First column q with gcd(s(q), N) != 1, if any.
  std::optional<Index> first_non_invertible() const {
    for (std::size_t q = 0; q < s_.size(); ++q) {
      if (std::gcd(s_[q], modulus_) != 1) return static_cast<Index>(q);
    }
    return std::nullopt;
  }

  bool invertible() const { return !first_non_invertible().has_value(); }

  void require_invertible() const {
    if (auto q = first_non_invertible()) {
      throw InvertibilityError(static_cast<std::size_t>(*q), s_[static_cast<std::size_t>(*q)], modulus_);
    }
  }

  bool operator==(const SelectionMap&) const = default;

 private:
  long modulus_;
  std::vector<long> s_;
};

/// Function u: Z/N -> C^d as an N x d array; row m is u(m).
class VVSignal {
 public:
  VVSignal() = default;

  VVSignal(Index length, Index dim) : values_(ComplexMatrix::Zero(length, dim)) { validate(); }

  explicit VVSignal(ComplexMatrix values) : values_(std::move(values)) { validate(); }

  Index length() const { return values_.rows(); }
  Index dim() const { return values_.cols(); }

  Complex& operator()(Index m, Index p) { return values_(m, p); }
  Complex operator()(Index m, Index p) const { return values_(m, p); }

  /// u(m) with m taken mod N.
  ComplexVector at(long m) const { return values_.row(positive_mod(m, length())).transpose(); }

  const ComplexMatrix& values() const { return values_; }
  ComplexMatrix& values() { return values_; }

  /// l^2 norm over the whole N x d array.
  double norm() const { return values_.norm(); }

  /// Mixed norm sum_m ||u(m)||_1.
  double l1_norm() const { return values_.cwiseAbs().sum(); }

  bool operator==(const VVSignal& other) const {
    return values_.rows() == other.values_.rows() && values_.cols() == other.values_.cols() &&
           values_ == other.values_;
  }

 private:
  void validate() const {
    if (values_.rows() < 1 || values_.cols() < 1) throw DimensionError("signal must be non-empty");
    if (!all_finite(values_)) throw DimensionError("signal entries must be finite");
  }

  ComplexMatrix values_;
};

inline VVSignal operator*(const VVSignal& a, const VVSignal& b) {
  if (a.length() != b.length() || a.dim() != b.dim()) throw DimensionError("pointwise product: size mismatch");
  return VVSignal(a.values().cwiseProduct(b.values()).eval());
}

inline VVSignal operator-(const VVSignal& a, const VVSignal& b) {
  if (a.length() != b.length() || a.dim() != b.dim()) throw DimensionError("difference: size mismatch");
  return VVSignal((a.values() - b.values()).eval());
}

namespace detail {

inline void require_matching(const VVSignal& u, const SelectionMap& sel) {
  if (u.length() != sel.modulus() || u.dim() != sel.dim()) {
    throw DimensionError("signal shape (" + std::to_string(u.length()) + "x" + std::to_string(u.dim()) +
                         ") does not match selection map (N=" + std::to_string(sel.modulus()) +
                         ", d=" + std::to_string(sel.dim()) + ")");
  }
}

}  // namespace detail

/// DFT frame x_m(n) = e^{2 pi i m s(n) / N}; equal-norm tight with bound N.
inline Frame make_dft_frame(const SelectionMap& sel) {
  const long n = sel.modulus();
  ComplexMatrix m(sel.dim(), n);
  for (long k = 0; k < n; ++k) {
    for (Index q = 0; q < sel.dim(); ++q) m(q, k) = root_of_unity(k * sel(q), n);
  }
  return Frame(std::move(m));
}

/// D_l = (e^{-2 pi i m n l / N})_{m,n}.
inline ComplexMatrix d_matrix(long modulus, long l) {
  if (modulus < 1) throw DimensionError("d_matrix: N must be positive");
  ComplexMatrix d(modulus, modulus);
  for (long m = 0; m < modulus; ++m) {
    for (long n = 0; n < modulus; ++n) d(m, n) = root_of_unity(-m * n * l, modulus);
  }
  return d;
}

/// Forward transform: u^(n)(q) = sum_m u(m)(q) e^{-2 pi i m n s(q) / N}.
inline VVSignal vv_dft(const VVSignal& u, const SelectionMap& sel) {
  detail::require_matching(u, sel);
  const long n_mod = sel.modulus();
  ComplexMatrix out = ComplexMatrix::Zero(n_mod, sel.dim());
  for (Index q = 0; q < sel.dim(); ++q) {
    for (long n = 0; n < n_mod; ++n) {
      Complex acc{0.0, 0.0};
      for (long m = 0; m < n_mod; ++m) acc += u(m, q) * root_of_unity(-m * n * sel(q), n_mod);
      out(n, q) = acc;
    }
  }
  return VVSignal(std::move(out));
}

/// Inverse transform u(m) = (1/N) sum_p u^(p) x_{mp}; requires gcd(s(q), N) = 1.
inline VVSignal vv_idft(const VVSignal& uhat, const SelectionMap& sel) {
  detail::require_matching(uhat, sel);
  sel.require_invertible();
  const long n_mod = sel.modulus();
  ComplexMatrix out = ComplexMatrix::Zero(n_mod, sel.dim());
  for (Index q = 0; q < sel.dim(); ++q) {
    for (long m = 0; m < n_mod; ++m) {
      Complex acc{0.0, 0.0};
      for (long p = 0; p < n_mod; ++p) acc += uhat(p, q) * root_of_unity(m * p * sel(q), n_mod);
      out(m, q) = acc / static_cast<double>(n_mod);
    }
  }
  return VVSignal(std::move(out));
}

/// Unitary normalisation F / sqrt(N).
inline VVSignal unitary_vv_dft(const VVSignal& u, const SelectionMap& sel) {
  VVSignal out = vv_dft(u, sel);
  out.values() /= std::sqrt(static_cast<double>(sel.modulus()));
  return out;
}

/// The full transform as an (N d) x (N d) matrix acting on the row-major
/// flattening index m * d + q.
inline ComplexMatrix vv_dft_matrix(const SelectionMap& sel) {
  const long n_mod = sel.modulus();
  const Index d = sel.dim();
  ComplexMatrix f = ComplexMatrix::Zero(n_mod * d, n_mod * d);
  for (Index q = 0; q < d; ++q) {
    for (long n = 0; n < n_mod; ++n) {
      for (long m = 0; m < n_mod; ++m) f(n * d + q, m * d + q) = root_of_unity(-m * n * sel(q), n_mod);
    }
  }
  return f;
}

/// (tau_j u)(m) = u(m - j).
inline VVSignal translate(const VVSignal& u, long j) {
  const Index n = u.length();
  ComplexMatrix out(n, u.dim());
  for (Index m = 0; m < n; ++m) out.row(m) = u.values().row(positive_mod(m - j, n));
  return VVSignal(std::move(out));
}

/// Modulation function e^j(k) = x_{jk}.
inline VVSignal modulation_function(long j, const SelectionMap& sel) {
  const long n = sel.modulus();
  VVSignal e(n, sel.dim());
  for (long k = 0; k < n; ++k) {
    for (Index q = 0; q < sel.dim(); ++q) e(k, q) = root_of_unity(j * k * sel(q), n);
  }
  return e;
}

/// Pointwise product e^j u.
inline VVSignal modulate(const VVSignal& u, long j, const SelectionMap& sel) {
  detail::require_matching(u, sel);
  return modulation_function(j, sel) * u;
}

/// Unit of the convolution algebra: e(0) = (1,...,1), e(m) = 0 otherwise.
inline VVSignal algebra_unit(Index length, Index dim) {
  VVSignal e(length, dim);
  e.values().row(0).setOnes();
  return e;
}

/// (u *_v v)(m) = sum_k u(k) v(m - k), products pointwise in C^d.
inline VVSignal vv_convolve(const VVSignal& u, const VVSignal& v) {
  if (u.length() != v.length() || u.dim() != v.dim()) throw DimensionError("vv_convolve: size mismatch");
  const Index n = u.length();
  ComplexMatrix out = ComplexMatrix::Zero(n, u.dim());
  for (Index m = 0; m < n; ++m) {
    for (Index k = 0; k < n; ++k) {
      out.row(m) += u.values().row(k).cwiseProduct(v.values().row(positive_mod(m - k, n)));
    }
  }
  return VVSignal(std::move(out));
}

/// Involution u*(m) = conj(u(-m)).
inline VVSignal involution(const VVSignal& u) {
  const Index n = u.length();
  ComplexMatrix out(n, u.dim());
  for (Index m = 0; m < n; ++m) out.row(m) = u.values().row(positive_mod(-m, n)).conjugate();
  return VVSignal(std::move(out));
}

/// Multiplicative functional gamma'_{p,q} on the convolution algebra.
///
/// Nonzero only in column q, where entry m is w^{-p m s(q)} with w = e^{-2 pi i/N};
/// stored as that single column.
struct GelfandFunctional {
  long p = 0;
  Index q = 0;
  Index dim = 0;
  ComplexVector column;

  /// gamma(x) = sum_m x(m)(q) conj(gamma(m)(q)).
  Complex apply(const VVSignal& x) const {
    if (x.length() != column.size() || x.dim() != dim) throw DimensionError("gelfand functional: size mismatch");
    return column.dot(x.values().col(q));
  }

  /// Dense N x d form.
  ComplexMatrix matrix() const {
    ComplexMatrix m = ComplexMatrix::Zero(column.size(), dim);
    m.col(q) = column;
    return m;
  }
};

/// All N d multiplicative functionals, ordered by (p, q) with q fastest.
inline std::vector<GelfandFunctional> gelfand_spectrum(const SelectionMap& sel) {
  sel.require_invertible();
  const long n = sel.modulus();
  std::vector<GelfandFunctional> out;
  out.reserve(static_cast<std::size_t>(n * sel.dim()));
  for (long p = 0; p < n; ++p) {
    for (Index q = 0; q < sel.dim(); ++q) {
      GelfandFunctional g{p, q, sel.dim(), ComplexVector(n)};
      for (long m = 0; m < n; ++m) g.column(m) = root_of_unity(p * m * sel(q), n);
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace frames
