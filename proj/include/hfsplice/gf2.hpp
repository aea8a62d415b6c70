#pragma once

// Dense matrices over the two-element field.
//
// Rows are bit-packed into 64-bit words so that elimination and products reduce
// to word-level XOR. Zero-dimensional shapes (0 x n, m x 0, 0 x 0) are ordinary
// values: every operation accepts them and their rank is 0.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfsplice {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Kernel and cokernel dimensions of a linear map; their sum is i(M).
struct IotaDims {
  std::size_t kernel = 0;
  std::size_t cokernel = 0;

  std::size_t total() const { return kernel + cokernel; }
  friend bool operator==(const IotaDims&, const IotaDims&) = default;
};

class Gf2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Gf2Matrix identity(std::size_t n);
  /// Rows given as 0/1 lists; every row must have the same length.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Gf2Matrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
  /// Uniformly sampled invertible n x n matrix (rejection sampling).
  static Gf2Matrix random_invertible(std::size_t n, std::mt19937_64& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    Word mask = Word{1} << (c % kWordBits);
    Word& w = row_ptr(r)[c / kWordBits];
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { row_ptr(r)[c / kWordBits] ^= Word{1} << (c % kWordBits); }

  bool is_zero() const;
  bool is_identity() const;
  std::size_t popcount() const;

  Gf2Matrix transpose() const;
  Gf2Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Gf2Matrix& m);
  /// XOR `m` into the block starting at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Gf2Matrix& m);
  Gf2Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  Gf2Matrix& operator+=(const Gf2Matrix& o);
  friend Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b);

  std::string to_string() const;

 private:
  Word* row_ptr(std::size_t r) { return data_.data() + r * words_; }
  const Word* row_ptr(std::size_t r) const { return data_.data() + r * words_; }
  void clear_tail();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;

  friend std::size_t rank(const Gf2Matrix& m);
  friend Gf2Matrix invert(const Gf2Matrix& m);
};

std::size_t rank(const Gf2Matrix& m);
IotaDims iota(const Gf2Matrix& m);
/// Throws SingularMatrix when m is not invertible and DimensionMismatch when it is not square.
Gf2Matrix invert(const Gf2Matrix& m);
bool is_invertible(const Gf2Matrix& m);
Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix power(const Gf2Matrix& m, unsigned exponent);

/// Dimension of the homology of a square differential d (d*d = 0): n - 2 rank(d).
std::size_t homology_rank(const Gf2Matrix& d);

Gf2Matrix hstack(const std::vector<Gf2Matrix>& parts);
Gf2Matrix vstack(const std::vector<Gf2Matrix>& parts);

}  // namespace hfsplice
