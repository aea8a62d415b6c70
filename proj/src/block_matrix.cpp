#include "hfsplice/block_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hfsplice {

std::size_t sum(const Dims& d) { return std::accumulate(d.begin(), d.end(), std::size_t{0}); }

BlockMatrix::BlockMatrix(Dims row_dims, Dims col_dims)
    : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)) {
  blocks_.resize(row_dims_.size());
  for (std::size_t i = 0; i < row_dims_.size(); ++i)
    for (std::size_t j = 0; j < col_dims_.size(); ++j) blocks_[i].emplace_back(row_dims_[i], col_dims_[j]);
}

BlockMatrix::BlockMatrix(Dims row_dims, Dims col_dims, std::vector<std::vector<Gf2Matrix>> blocks)
    : row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)), blocks_(std::move(blocks)) {
  if (blocks_.size() != row_dims_.size()) throw DimensionMismatch("block grid has wrong number of rows");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].size() != col_dims_.size()) throw DimensionMismatch("block grid has wrong number of columns");
    for (std::size_t j = 0; j < blocks_[i].size(); ++j)
      if (blocks_[i][j].rows() != row_dims_[i] || blocks_[i][j].cols() != col_dims_[j])
        throw DimensionMismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                std::to_string(blocks_[i][j].rows()) + "x" + std::to_string(blocks_[i][j].cols()) +
                                ", expected " + std::to_string(row_dims_[i]) + "x" + std::to_string(col_dims_[j]));
  }
}

BlockMatrix BlockMatrix::identity(const Dims& dims) {
  BlockMatrix b(dims, dims);
  for (std::size_t i = 0; i < dims.size(); ++i) b.blocks_[i][i] = Gf2Matrix::identity(dims[i]);
  return b;
}

BlockMatrix BlockMatrix::diagonal(const std::vector<Gf2Matrix>& blocks) {
  Dims r, c;
  for (const auto& m : blocks) {
    r.push_back(m.rows());
    c.push_back(m.cols());
  }
  BlockMatrix b(r, c);
  for (std::size_t i = 0; i < blocks.size(); ++i) b.blocks_[i][i] = blocks[i];
  return b;
}

std::size_t BlockMatrix::total_rows() const { return sum(row_dims_); }
std::size_t BlockMatrix::total_cols() const { return sum(col_dims_); }

const Gf2Matrix& BlockMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= row_dims_.size() || j >= col_dims_.size()) throw std::out_of_range("block index out of range");
  return blocks_[i][j];
}

void BlockMatrix::set(std::size_t i, std::size_t j, Gf2Matrix m) {
  if (i >= row_dims_.size() || j >= col_dims_.size()) throw std::out_of_range("block index out of range");
  if (m.rows() != row_dims_[i] || m.cols() != col_dims_[j])
    throw DimensionMismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") expects " +
                            std::to_string(row_dims_[i]) + "x" + std::to_string(col_dims_[j]) + ", got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  blocks_[i][j] = std::move(m);
}

void BlockMatrix::add(std::size_t i, std::size_t j, const Gf2Matrix& m) {
  if (i >= row_dims_.size() || j >= col_dims_.size()) throw std::out_of_range("block index out of range");
  blocks_[i][j] += m;
}

Gf2Matrix BlockMatrix::flatten() const {
  Gf2Matrix out(total_rows(), total_cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < row_dims_.size(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < col_dims_.size(); ++j) {
      out.set_block(r, c, blocks_[i][j]);
      c += col_dims_[j];
    }
    r += row_dims_[i];
  }
  return out;
}

BlockMatrix BlockMatrix::transpose() const {
  BlockMatrix t(col_dims_, row_dims_);
  for (std::size_t i = 0; i < row_dims_.size(); ++i)
    for (std::size_t j = 0; j < col_dims_.size(); ++j) t.blocks_[j][i] = blocks_[i][j].transpose();
  return t;
}

BlockMatrix BlockMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Dims rd, cd;
  for (auto i : rows) rd.push_back(row_dims_.at(i));
  for (auto j : cols) cd.push_back(col_dims_.at(j));
  BlockMatrix out(rd, cd);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out.blocks_[a][b] = blocks_[rows[a]][cols[b]];
  return out;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.col_dims_ != b.row_dims_) throw DimensionMismatch("block multiply: inner dimension grids differ");
  BlockMatrix out(a.row_dims_, b.col_dims_);
  for (std::size_t i = 0; i < a.block_rows(); ++i)
    for (std::size_t j = 0; j < b.block_cols(); ++j)
      for (std::size_t k = 0; k < a.block_cols(); ++k) {
        const auto& x = a.blocks_[i][k];
        const auto& y = b.blocks_[k][j];
        if (x.empty() || y.empty() || x.is_zero() || y.is_zero()) continue;
        out.blocks_[i][j] += x * y;
      }
  return out;
}

BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.row_dims_ != b.row_dims_ || a.col_dims_ != b.col_dims_)
    throw DimensionMismatch("block add: dimension grids differ");
  BlockMatrix out = a;
  for (std::size_t i = 0; i < a.block_rows(); ++i)
    for (std::size_t j = 0; j < a.block_cols(); ++j) out.blocks_[i][j] += b.blocks_[i][j];
  return out;
}

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  return a.row_dims_ == b.row_dims_ && a.col_dims_ == b.col_dims_ && a.blocks_ == b.blocks_;
}

Gf2Matrix assemble(const BlockMatrix& b) { return b.flatten(); }

BlockMatrix slice(const Gf2Matrix& m, const Dims& row_dims, const Dims& col_dims) {
  if (sum(row_dims) != m.rows() || sum(col_dims) != m.cols())
    throw DimensionMismatch("slice: dimension grid " + std::to_string(sum(row_dims)) + "x" +
                            std::to_string(sum(col_dims)) + " does not match matrix " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  BlockMatrix out(row_dims, col_dims);
  std::size_t r = 0;
  for (std::size_t i = 0; i < row_dims.size(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < col_dims.size(); ++j) {
      out.set(i, j, m.block(r, c, row_dims[i], col_dims[j]));
      c += col_dims[j];
    }
    r += row_dims[i];
  }
  return out;
}

Dims tensor_dims(const Dims& a, const Dims& b) {
  Dims out;
  for (auto x : a)
    for (auto y : b) out.push_back(x * y);
  return out;
}

BlockMatrix block_tensor(const BlockMatrix& a, const BlockMatrix& b) {
  BlockMatrix out(tensor_dims(a.row_dims(), b.row_dims()), tensor_dims(a.col_dims(), b.col_dims()));
  const std::size_t br = b.block_rows(), bc = b.block_cols();
  for (std::size_t i = 0; i < a.block_rows(); ++i)
    for (std::size_t k = 0; k < br; ++k)
      for (std::size_t j = 0; j < a.block_cols(); ++j)
        for (std::size_t l = 0; l < bc; ++l) out.set(i * br + k, j * bc + l, kron(a.at(i, j), b.at(k, l)));
  return out;
}

}  // namespace hfsplice
