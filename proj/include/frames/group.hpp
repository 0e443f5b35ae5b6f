// Binary operations on index sets and finite Abelian groups as products of
// cyclic factors.
#pragma once

#include "frames/core.hpp"

#include <string>
#include <vector>

namespace frames {

/// Binary operation on {0..n-1}: table[i][j] = i . j. Only closure is assumed.
class OpTable {
 public:
  OpTable() = default;

  explicit OpTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw DimensionError("operation table must be non-empty");
    for (const auto& row : table_) {
      if (row.size() != n) throw DimensionError("operation table must be square");
      for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw DimensionError("operation table entry out of range");
      }
    }
  }

  int size() const { return static_cast<int>(table_.size()); }
  int operator()(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& rows() const { return table_; }

  bool operator==(const OpTable&) const = default;
  auto operator<=>(const OpTable&) const = default;

 private:
  std::vector<std::vector<int>> table_;
};

/// Z/n_1 x ... x Z/n_k with mixed-radix element encoding (last factor fastest).
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) throw DimensionError("group needs at least one cyclic factor");
    order_ = 1;
    for (int n : orders_) {
      if (n < 1) throw DimensionError("cyclic orders must be >= 1");
      order_ *= n;
    }
  }

  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }

  int order() const { return order_; }
  int identity() const { return 0; }
  const std::vector<int>& cyclic_orders() const { return orders_; }

  std::vector<int> decode(int g) const {
    std::vector<int> c(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      c[i] = g % orders_[i];
      g /= orders_[i];
    }
    return c;
  }

  int encode(const std::vector<int>& c) const {
    int g = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      g = g * orders_[i] + static_cast<int>(positive_mod(c[i], orders_[i]));
    }
    return g;
  }

  int op(int a, int b) const {
    std::vector<int> ca = decode(a);
    const std::vector<int> cb = decode(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return encode(ca);
  }

  int inverse(int a) const {
    std::vector<int> c = decode(a);
    for (int& v : c) v = -v;
    return encode(c);
  }

  /// Generator of the i-th cyclic factor.
  int generator(std::size_t i) const {
    std::vector<int> c(orders_.size(), 0);
    c[i] = 1;
    return encode(c);
  }

  OpTable table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = op(a, b);
    }
    return OpTable(std::move(t));
  }

  /// gamma_k(g) = prod_i e^{2 pi i k_i g_i / n_i}; the dual group is indexed like G.
  Complex character(int k, int g) const {
    const std::vector<int> ck = decode(k);
    const std::vector<int> cg = decode(g);
    Complex v{1.0, 0.0};
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      v *= root_of_unity(static_cast<long>(ck[i]) * cg[i], orders_[i]);
    }
    return v;
  }

  /// Character table with (j, k) entry gamma_k(g_j).
  ComplexMatrix character_table() const {
    ComplexMatrix t(order_, order_);
    for (int j = 0; j < order_; ++j) {
      for (int k = 0; k < order_; ++k) t(j, k) = character(k, j);
    }
    return t;
  }

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<int> orders_;
  int order_ = 1;
};

}  // namespace frames
