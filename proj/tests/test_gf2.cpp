#include <doctest.h>

#include <random>

#include "hfsplice/block_matrix.hpp"
#include "hfsplice/gf2.hpp"
#include "oracle.hpp"

using namespace hfsplice;

TEST_CASE("rank of identity and zero") {
  CHECK(rank(Gf2Matrix::identity(3)) == 3);
  CHECK(rank(Gf2Matrix(2, 5)) == 0);
  CHECK(rank(Gf2Matrix(0, 4)) == 0);
  CHECK(rank(Gf2Matrix(4, 0)) == 0);
  CHECK(rank(Gf2Matrix(0, 0)) == 0);
}

TEST_CASE("rank matches the reference elimination") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = rng() % 12, c = rng() % 12;
    Gf2Matrix m = Gf2Matrix::random(r, c, rng);
    REQUIRE(rank(m) == oracle::rank(m));
  }
  Gf2Matrix m = Gf2Matrix::random(8, 8, rng);
  CHECK(rank(m) == oracle::rank(m));
  // wide matrices spanning several words
  Gf2Matrix w = Gf2Matrix::random(70, 150, rng);
  CHECK(rank(w) == oracle::rank(w));
}

TEST_CASE("iota") {
  CHECK(iota(Gf2Matrix(3, 4)) == IotaDims{4, 3});
  std::mt19937_64 rng(11);
  Gf2Matrix inv = Gf2Matrix::random_invertible(5, rng);
  CHECK(iota(inv) == IotaDims{0, 0});
  for (int t = 0; t < 50; ++t) {
    Gf2Matrix m = Gf2Matrix::random(6, 9, rng);
    std::size_t r = oracle::rank(m);
    CHECK(iota(m) == IotaDims{9 - r, 6 - r});
  }
}

TEST_CASE("invert") {
  CHECK(invert(Gf2Matrix::identity(4)) == Gf2Matrix::identity(4));
  Gf2Matrix u = Gf2Matrix::from_rows({{1, 1}, {0, 1}});
  CHECK(invert(u) == u);
  std::mt19937_64 rng(3);
  Gf2Matrix m = Gf2Matrix::random_invertible(7, rng);
  Gf2Matrix mi = invert(m);
  CHECK(oracle::multiply(m, mi).is_identity());
  CHECK(oracle::multiply(mi, m).is_identity());
  CHECK_THROWS_AS(invert(Gf2Matrix::from_rows({{1, 1}, {1, 1}})), SingularMatrix);
  CHECK_THROWS_AS(invert(Gf2Matrix(2, 3)), DimensionMismatch);
  CHECK(invert(Gf2Matrix(0, 0)) == Gf2Matrix(0, 0));
}

TEST_CASE("multiply matches the reference") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t a = rng() % 9, b = rng() % 70, c = rng() % 9;
    Gf2Matrix x = Gf2Matrix::random(a, b, rng), y = Gf2Matrix::random(b, c, rng);
    REQUIRE(x * y == oracle::multiply(x, y));
  }
  CHECK_THROWS_AS(Gf2Matrix(2, 3) * Gf2Matrix(2, 3), DimensionMismatch);
}

TEST_CASE("kron") {
  std::mt19937_64 rng(9);
  Gf2Matrix a = Gf2Matrix::random(3, 2, rng);
  Gf2Matrix i2a = kron(Gf2Matrix::identity(2), a);
  CHECK(i2a == BlockMatrix::diagonal({a, a}).flatten());
  CHECK(kron(Gf2Matrix::identity(1), a) == a);
  for (int t = 0; t < 30; ++t) {
    Gf2Matrix x = Gf2Matrix::random(4, 5, rng), y = Gf2Matrix::random(3, 3, rng);
    CHECK(kron(x, y) == oracle::kron(x, y));
    CHECK(oracle::rank(kron(x, y)) == oracle::rank(x) * oracle::rank(y));
  }
  CHECK(kron(Gf2Matrix(0, 3), a).rows() == 0);
  CHECK(kron(Gf2Matrix(0, 3), a).cols() == 6);
}

TEST_CASE("properties: transpose rank, equivalence, mixed product, associativity") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    Gf2Matrix m = Gf2Matrix::random(rng() % 8, rng() % 8, rng);
    CHECK(rank(m) == rank(m.transpose()));
    Gf2Matrix p = Gf2Matrix::random_invertible(m.rows(), rng), q = Gf2Matrix::random_invertible(m.cols(), rng);
    CHECK(iota(p * m * q) == iota(m));

    Gf2Matrix a = Gf2Matrix::random(2, 3, rng), c = Gf2Matrix::random(3, 2, rng);
    Gf2Matrix b = Gf2Matrix::random(3, 1, rng), d = Gf2Matrix::random(1, 4, rng);
    CHECK(kron(a * c, b * d) == kron(a, b) * kron(c, d));
    Gf2Matrix e = Gf2Matrix::random(2, 2, rng);
    CHECK(kron(kron(a, b), e) == kron(a, kron(b, e)));
  }
}

TEST_CASE("assemble and slice") {
  Gf2Matrix one = Gf2Matrix::from_rows({{1}}), zero = Gf2Matrix::from_rows({{0}});
  BlockMatrix single({1}, {1}, {{one}});
  CHECK(assemble(single) == one);
  BlockMatrix grid({1, 1}, {1, 1}, {{one, zero}, {zero, one}});
  CHECK(assemble(grid) == Gf2Matrix::identity(2));

  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    Dims rd(rng() % 5), cd(rng() % 5);
    for (auto& x : rd) x = rng() % 4;
    for (auto& x : cd) x = rng() % 4;
    BlockMatrix b(rd, cd);
    for (std::size_t i = 0; i < rd.size(); ++i)
      for (std::size_t j = 0; j < cd.size(); ++j) b.set(i, j, Gf2Matrix::random(rd[i], cd[j], rng));
    REQUIRE(slice(assemble(b), rd, cd) == b);
  }
  CHECK_THROWS_AS(slice(Gf2Matrix(3, 3), {1, 1}, {3}), DimensionMismatch);
  CHECK_THROWS_AS(BlockMatrix({1}, {1}, {{Gf2Matrix(2, 1)}}), DimensionMismatch);
}

TEST_CASE("block tensor is a permuted kron") {
  std::mt19937_64 rng(17);
  BlockMatrix a = slice(Gf2Matrix::random(3, 3, rng), {1, 2}, {2, 1});
  BlockMatrix b = slice(Gf2Matrix::random(3, 2, rng), {2, 1}, {1, 1});
  BlockMatrix t = block_tensor(a, b);
  CHECK(t.row_dims() == Dims{2, 1, 4, 2});
  CHECK(t.at(2, 1) == kron(a.at(1, 0), b.at(0, 1)));
  Gf2Matrix plain = kron(a.flatten(), b.flatten());
  CHECK(iota(t.flatten()) == iota(plain));
  CHECK(t.flatten().popcount() == plain.popcount());
}
