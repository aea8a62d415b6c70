#include "hfsplice/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

namespace hfsplice {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + Gf2Matrix::kWordBits - 1) / Gf2Matrix::kWordBits; }

std::string shape(const Gf2Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return {};
  std::size_t cols = rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      int v = rows[r][c];
      if (v != 0 && v != 1) throw std::invalid_argument("entry is not 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Gf2Matrix Gf2Matrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Gf2Matrix m(rows, cols);
  for (auto& w : m.data_) w = rng();
  m.clear_tail();
  return m;
}

Gf2Matrix Gf2Matrix::random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Gf2Matrix m = random(n, n, rng);
    if (rank(m) == n) return m;
  }
}

void Gf2Matrix::clear_tail() {
  std::size_t rem = cols_ % kWordBits;
  if (rem == 0 || words_ == 0) return;
  Word mask = (Word{1} << rem) - 1;
  for (std::size_t r = 0; r < rows_; ++r) row_ptr(r)[words_ - 1] &= mask;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool Gf2Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Word* p = row_ptr(r);
    for (std::size_t w = 0; w < words_; ++w) {
      Word expect = (r / kWordBits == w) ? (Word{1} << (r % kWordBits)) : 0;
      if (p[w] != expect) return false;
    }
  }
  return true;
}

std::size_t Gf2Matrix::popcount() const {
  std::size_t n = 0;
  for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Matrix Gf2Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionMismatch("block " + std::to_string(nr) + "x" + std::to_string(nc) + " at (" +
                            std::to_string(r0) + "," + std::to_string(c0) + ") exceeds " + shape(*this));
  Gf2Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      if (get(r0 + r, c0 + c)) b.set(r, c, true);
  return b;
}

void Gf2Matrix::set_block(std::size_t r0, std::size_t c0, const Gf2Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
    throw DimensionMismatch("set_block " + shape(m) + " does not fit in " + shape(*this));
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) set(r0 + r, c0 + c, m.get(r, c));
}

void Gf2Matrix::add_block(std::size_t r0, std::size_t c0, const Gf2Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
    throw DimensionMismatch("add_block " + shape(m) + " does not fit in " + shape(*this));
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (m.get(r, c)) flip(r0 + r, c0 + c);
}

Gf2Matrix Gf2Matrix::select(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
  Gf2Matrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    if (row_idx[i] >= rows_) throw std::out_of_range("row index out of range");
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (col_idx[j] >= cols_) throw std::out_of_range("column index out of range");
      if (get(row_idx[i], col_idx[j])) out.set(i, j, true);
    }
  }
  return out;
}

Gf2Matrix& Gf2Matrix::operator+=(const Gf2Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add " + shape(*this) + " + " + shape(o));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= o.data_[i];
  return *this;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("multiply " + shape(a) + " * " + shape(b));
  Gf2Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Gf2Matrix::Word* dst = out.row_ptr(i);
    const Gf2Matrix::Word* src = a.row_ptr(i);
    for (std::size_t w = 0; w < a.words_; ++w) {
      Gf2Matrix::Word bits = src[w];
      while (bits) {
        std::size_t k = w * Gf2Matrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const Gf2Matrix::Word* brow = b.row_ptr(k);
        for (std::size_t v = 0; v < out.words_; ++v) dst[v] ^= brow[v];
      }
    }
  }
  return out;
}

bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Gf2Matrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "\n";
    for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
  }
  return os.str();
}

std::size_t rank(const Gf2Matrix& m) {
  if (m.empty()) return 0;
  std::vector<Gf2Matrix::Word> d = m.data_;
  const std::size_t W = m.words_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
    const std::size_t w = c / Gf2Matrix::kWordBits;
    const Gf2Matrix::Word bit = Gf2Matrix::Word{1} << (c % Gf2Matrix::kWordBits);
    std::size_t p = r;
    while (p < m.rows_ && !(d[p * W + w] & bit)) ++p;
    if (p == m.rows_) continue;
    if (p != r) std::swap_ranges(d.begin() + p * W, d.begin() + (p + 1) * W, d.begin() + r * W);
    for (std::size_t i = r + 1; i < m.rows_; ++i)
      if (d[i * W + w] & bit)
        for (std::size_t v = w; v < W; ++v) d[i * W + v] ^= d[r * W + v];
    ++r;
  }
  return r;
}

IotaDims iota(const Gf2Matrix& m) {
  std::size_t r = rank(m);
  return {m.cols() - r, m.rows() - r};
}

Gf2Matrix invert(const Gf2Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("invert of non-square " + shape(m));
  const std::size_t n = m.rows_;
  Gf2Matrix a = m;
  Gf2Matrix inv = Gf2Matrix::identity(n);
  const std::size_t W = a.words_;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t w = c / Gf2Matrix::kWordBits;
    const Gf2Matrix::Word bit = Gf2Matrix::Word{1} << (c % Gf2Matrix::kWordBits);
    std::size_t p = c;
    while (p < n && !(a.row_ptr(p)[w] & bit)) ++p;
    if (p == n) throw SingularMatrix("matrix " + shape(m) + " is singular");
    if (p != c) {
      std::swap_ranges(a.row_ptr(p), a.row_ptr(p) + W, a.row_ptr(c));
      std::swap_ranges(inv.row_ptr(p), inv.row_ptr(p) + W, inv.row_ptr(c));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || !(a.row_ptr(i)[w] & bit)) continue;
      for (std::size_t v = 0; v < W; ++v) {
        a.row_ptr(i)[v] ^= a.row_ptr(c)[v];
        inv.row_ptr(i)[v] ^= inv.row_ptr(c)[v];
      }
    }
  }
  return inv;
}

bool is_invertible(const Gf2Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) out.set_block(i * b.rows(), j * b.cols(), b);
  return out;
}

Gf2Matrix power(const Gf2Matrix& m, unsigned exponent) {
  if (!m.is_square()) throw DimensionMismatch("power of non-square " + shape(m));
  Gf2Matrix out = Gf2Matrix::identity(m.rows());
  for (unsigned i = 0; i < exponent; ++i) out = out * m;
  return out;
}

std::size_t homology_rank(const Gf2Matrix& d) {
  if (!d.is_square()) throw DimensionMismatch("differential must be square, got " + shape(d));
  return d.rows() - 2 * rank(d);
}

Gf2Matrix hstack(const std::vector<Gf2Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = parts.front().rows(), cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw DimensionMismatch("hstack row counts differ");
    cols += p.cols();
  }
  Gf2Matrix out(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Gf2Matrix vstack(const std::vector<Gf2Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = parts.front().cols(), rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionMismatch("vstack column counts differ");
    rows += p.rows();
  }
  Gf2Matrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

}  // namespace hfsplice
