#include "hfsplice/cancel.hpp"

#include <algorithm>

namespace hfsplice {

std::vector<CancellationStep> one_based_steps(const std::vector<std::pair<std::size_t, std::size_t>>& coords) {
  std::vector<CancellationStep> out;
  for (auto [r, c] : coords) {
    if (r == 0 || c == 0) throw IndexOutOfRange("one-based coordinates must be positive");
    out.push_back({r - 1, c - 1});
  }
  return out;
}

BlockMatrix cancel_identity(const BlockMatrix& m, CancellationStep step, PivotMode mode) {
  const std::size_t r = step.row, c = step.col;
  if (r >= m.block_rows() || c >= m.block_cols())
    throw IndexOutOfRange("pivot (" + std::to_string(r) + "," + std::to_string(c) + ") outside a " +
                          std::to_string(m.block_rows()) + "x" + std::to_string(m.block_cols()) + " block grid");
  const Gf2Matrix& pivot = m.at(r, c);
  Gf2Matrix pinv;
  if (mode == PivotMode::Identity) {
    if (!pivot.is_identity())
      throw NotIdentityBlock("block (" + std::to_string(r) + "," + std::to_string(c) + ") of shape " +
                             std::to_string(pivot.rows()) + "x" + std::to_string(pivot.cols()) +
                             " is not an identity");
  } else {
    if (!is_invertible(pivot))
      throw NotIdentityBlock("block (" + std::to_string(r) + "," + std::to_string(c) + ") is not invertible");
    pinv = invert(pivot);
  }

  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.block_rows(); ++i)
    if (i != r) rows.push_back(i);
  for (std::size_t j = 0; j < m.block_cols(); ++j)
    if (j != c) cols.push_back(j);

  BlockMatrix out = m.select(rows, cols);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const Gf2Matrix& left = m.at(rows[a], c);
    if (left.empty() || left.is_zero()) continue;
    Gf2Matrix lp = mode == PivotMode::Identity ? left : left * pinv;
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const Gf2Matrix& right = m.at(r, cols[b]);
      if (right.empty() || right.is_zero()) continue;
      out.add(a, b, lp * right);
    }
  }
  return out;
}

const Gf2Matrix& CancelResult::at_original(std::size_t i, std::size_t j) const {
  return matrix.at(row_position(i), col_position(j));
}

std::size_t CancelResult::row_position(std::size_t original) const {
  auto it = std::find(row_labels.begin(), row_labels.end(), original);
  if (it == row_labels.end()) throw IndexOutOfRange("block row " + std::to_string(original) + " was cancelled");
  return static_cast<std::size_t>(it - row_labels.begin());
}

std::size_t CancelResult::col_position(std::size_t original) const {
  auto it = std::find(col_labels.begin(), col_labels.end(), original);
  if (it == col_labels.end()) throw IndexOutOfRange("block column " + std::to_string(original) + " was cancelled");
  return static_cast<std::size_t>(it - col_labels.begin());
}

CancelResult cancel_sequence(const BlockMatrix& m, const std::vector<CancellationStep>& steps, PivotMode mode) {
  CancelResult res;
  res.matrix = m;
  for (std::size_t i = 0; i < m.block_rows(); ++i) res.row_labels.push_back(i);
  for (std::size_t j = 0; j < m.block_cols(); ++j) res.col_labels.push_back(j);

  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    std::string where = "step " + std::to_string(s) + " at original (" + std::to_string(st.row) + "," +
                        std::to_string(st.col) + "): ";
    std::size_t pr, pc;
    try {
      pr = res.row_position(st.row);
      pc = res.col_position(st.col);
    } catch (const IndexOutOfRange& e) {
      throw IndexOutOfRange(where + e.what());
    }
    try {
      res.matrix = cancel_identity(res.matrix, {pr, pc}, mode);
    } catch (const NotIdentityBlock& e) {
      throw NotIdentityBlock(where + e.what());
    }
    res.row_labels.erase(res.row_labels.begin() + static_cast<std::ptrdiff_t>(pr));
    res.col_labels.erase(res.col_labels.begin() + static_cast<std::ptrdiff_t>(pc));
  }
  return res;
}

}  // namespace hfsplice
