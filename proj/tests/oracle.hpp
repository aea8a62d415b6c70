#pragma once

// Reference implementations on plain nested vectors, kept separate from the
// bit-packed kernels so tests have something independent to compare against.

#include <cstddef>
#include <utility>
#include <vector>

#include "hfsplice/gf2.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense dense(const hfsplice::Gf2Matrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  return d;
}

inline hfsplice::Gf2Matrix packed(const Dense& d, std::size_t cols) {
  hfsplice::Gf2Matrix m(d.size(), cols);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d[i][j] & 1);
  return m;
}

// Column-major elimination: pivots are searched column by column from the
// right-most column, the opposite order of the library kernel.
inline std::size_t rank(const hfsplice::Gf2Matrix& m) {
  Dense a = dense(m);
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<bool> used(R, false);
  std::size_t r = 0;
  for (std::size_t cc = C; cc-- > 0;) {
    std::size_t p = R;
    for (std::size_t i = 0; i < R; ++i)
      if (!used[i] && a[i][cc]) {
        p = i;
        break;
      }
    if (p == R) continue;
    used[p] = true;
    ++r;
    for (std::size_t i = 0; i < R; ++i)
      if (i != p && a[i][cc])
        for (std::size_t j = 0; j < C; ++j) a[i][j] ^= a[p][j];
  }
  return r;
}

inline std::pair<std::size_t, std::size_t> iota(const hfsplice::Gf2Matrix& m) {
  std::size_t r = oracle::rank(m);
  return {m.cols() - r, m.rows() - r};
}

inline std::size_t homology(const hfsplice::Gf2Matrix& d) { return d.rows() - 2 * oracle::rank(d); }

inline hfsplice::Gf2Matrix multiply(const hfsplice::Gf2Matrix& a, const hfsplice::Gf2Matrix& b) {
  Dense x = dense(a), y = dense(b), z(a.rows(), std::vector<int>(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      int s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += x[i][k] * y[k][j];
      z[i][j] = s & 1;
    }
  return packed(z, b.cols());
}

inline hfsplice::Gf2Matrix kron(const hfsplice::Gf2Matrix& a, const hfsplice::Gf2Matrix& b) {
  const std::size_t R = a.rows() * b.rows(), C = a.cols() * b.cols();
  Dense z(R, std::vector<int>(C));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      z[i][j] = a.get(i / b.rows(), j / b.cols()) && b.get(i % b.rows(), j % b.cols());
  return packed(z, C);
}

}  // namespace oracle
