#pragma once

#include <cstddef>
#include <vector>

#include "hfsplice/gf2.hpp"

namespace hfsplice {

using Dims = std::vector<std::size_t>;

/// A grid of GF(2) blocks; block (i, j) always has shape row_dims[i] x col_dims[j].
class BlockMatrix {
 public:
  BlockMatrix() = default;
  /// All-zero grid with the given dimensions.
  BlockMatrix(Dims row_dims, Dims col_dims);
  /// Takes ownership of a filled grid; throws DimensionMismatch on any inconsistent block.
  BlockMatrix(Dims row_dims, Dims col_dims, std::vector<std::vector<Gf2Matrix>> blocks);

  static BlockMatrix identity(const Dims& dims);
  static BlockMatrix diagonal(const std::vector<Gf2Matrix>& blocks);

  const Dims& row_dims() const { return row_dims_; }
  const Dims& col_dims() const { return col_dims_; }
  std::size_t block_rows() const { return row_dims_.size(); }
  std::size_t block_cols() const { return col_dims_.size(); }
  std::size_t total_rows() const;
  std::size_t total_cols() const;

  const Gf2Matrix& at(std::size_t i, std::size_t j) const;
  /// Replace block (i, j); the new block must have the recorded shape.
  void set(std::size_t i, std::size_t j, Gf2Matrix m);
  /// XOR into block (i, j).
  void add(std::size_t i, std::size_t j, const Gf2Matrix& m);

  Gf2Matrix flatten() const;
  BlockMatrix transpose() const;
  /// Sub-grid on the listed block indices, in the listed order.
  BlockMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b);

 private:
  Dims row_dims_;
  Dims col_dims_;
  std::vector<std::vector<Gf2Matrix>> blocks_;
};

Gf2Matrix assemble(const BlockMatrix& b);
BlockMatrix slice(const Gf2Matrix& m, const Dims& row_dims, const Dims& col_dims);

/// Tensor product of two block matrices in the block-ordered basis: the block
/// indexed by ((i,k),(j,l)) is kron(a(i,j), b(k,l)), with (i,k) ordered
/// lexicographically. This differs from kron(flatten a, flatten b) by a
/// permutation of rows and columns.
BlockMatrix block_tensor(const BlockMatrix& a, const BlockMatrix& b);
Dims tensor_dims(const Dims& a, const Dims& b);

std::size_t sum(const Dims& d);

}  // namespace hfsplice
