#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hfsplice/block_matrix.hpp"

namespace hfsplice {

class NotIdentityBlock : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Zero-based block coordinates of the pivot.
struct CancellationStep {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const CancellationStep&, const CancellationStep&) = default;
};

/// Converts a list of one-based (row, col) coordinates.
std::vector<CancellationStep> one_based_steps(const std::vector<std::pair<std::size_t, std::size_t>>& coords);

enum class PivotMode {
  Identity,    // the pivot block must be a literal identity
  Invertible,  // any invertible square pivot; the update uses its inverse
};

/// Schur complement on the pivot (r, c): new(i, j) = old(i, j) + old(i, c) old(r, c)^{-1} old(r, j),
/// with block row r and block column c removed.
BlockMatrix cancel_identity(const BlockMatrix& m, CancellationStep step, PivotMode mode = PivotMode::Identity);

struct CancelResult {
  BlockMatrix matrix;
  std::vector<std::size_t> row_labels;  // original block-row index of each surviving row
  std::vector<std::size_t> col_labels;

  /// Block (i, j) addressed by original indices.
  const Gf2Matrix& at_original(std::size_t i, std::size_t j) const;
  std::size_t row_position(std::size_t original) const;
  std::size_t col_position(std::size_t original) const;
};

/// Applies the steps in order. Coordinates refer to the original (undeleted)
/// numbering. Errors carry the zero-based step index and the original coordinates.
CancelResult cancel_sequence(const BlockMatrix& m, const std::vector<CancellationStep>& steps,
                             PivotMode mode = PivotMode::Identity);

}  // namespace hfsplice
