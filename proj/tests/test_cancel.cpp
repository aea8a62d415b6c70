#include <doctest.h>

#include <random>

#include "hfsplice/cancel.hpp"
#include "oracle.hpp"

using namespace hfsplice;

TEST_CASE("single identity cancels to empty") {
  BlockMatrix m({2}, {2}, {{Gf2Matrix::identity(2)}});
  BlockMatrix out = cancel_identity(m, {0, 0});
  CHECK(out.block_rows() == 0);
  CHECK(out.block_cols() == 0);
  CHECK(iota(out.flatten()) == IotaDims{0, 0});
}

TEST_CASE("Schur complement of [[I, b], [c, e]]") {
  std::mt19937_64 rng(1);
  Gf2Matrix b = Gf2Matrix::random(2, 3, rng), c = Gf2Matrix::random(4, 2, rng), e = Gf2Matrix::random(4, 3, rng);
  BlockMatrix m({2, 4}, {2, 3}, {{Gf2Matrix::identity(2), b}, {c, e}});
  BlockMatrix out = cancel_identity(m, {0, 0});
  REQUIRE(out.block_rows() == 1);
  CHECK(out.at(0, 0) == e + oracle::multiply(c, b));
}

TEST_CASE("cancellation preserves iota on planted identities") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    Dims rd{rng() % 4, rng() % 4, 0, rng() % 4}, cd{rng() % 4, 0, rng() % 4, rng() % 4};
    std::size_t n = 1 + rng() % 3;
    rd[2] = n;
    cd[1] = n;
    BlockMatrix m(rd, cd);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.set(i, j, Gf2Matrix::random(rd[i], cd[j], rng));
    m.set(2, 1, Gf2Matrix::identity(n));
    auto before = oracle::iota(m.flatten());
    auto after = oracle::iota(cancel_identity(m, {2, 1}).flatten());
    REQUIRE(before == after);
  }
}

TEST_CASE("invertible pivots behind the flag") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Gf2Matrix p = Gf2Matrix::random_invertible(3, rng);
    BlockMatrix m({3, 2}, {3, 4},
                  {{p, Gf2Matrix::random(3, 4, rng)}, {Gf2Matrix::random(2, 3, rng), Gf2Matrix::random(2, 4, rng)}});
    if (!p.is_identity()) CHECK_THROWS_AS(cancel_identity(m, {0, 0}), NotIdentityBlock);
    BlockMatrix out = cancel_identity(m, {0, 0}, PivotMode::Invertible);
    CHECK(oracle::iota(out.flatten()) == oracle::iota(m.flatten()));
  }
}

TEST_CASE("errors") {
  BlockMatrix m({1, 1}, {1, 1});
  CHECK_THROWS_AS(cancel_identity(m, {0, 0}), NotIdentityBlock);
  CHECK_THROWS_AS(cancel_identity(m, {2, 0}), IndexOutOfRange);
  m.set(0, 0, Gf2Matrix::identity(1));
  CHECK_THROWS_AS(cancel_sequence(m, {{0, 0}, {0, 1}}), IndexOutOfRange);
  try {
    cancel_sequence(m, {{0, 0}, {1, 1}});
    FAIL("expected NotIdentityBlock");
  } catch (const NotIdentityBlock& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("sequences use original coordinates") {
  CHECK(cancel_sequence(BlockMatrix({1}, {1}), {}).matrix == BlockMatrix({1}, {1}));

  // Identity blocks on the anti-diagonal of a 3x3 grid; cancelling (0,2) then (2,0)
  // in original numbering leaves the centre block.
  std::mt19937_64 rng(4);
  BlockMatrix m({1, 2, 1}, {1, 2, 1});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, Gf2Matrix::random(m.row_dims()[i], m.col_dims()[j], rng));
  m.set(0, 2, Gf2Matrix::identity(1));
  m.set(2, 0, Gf2Matrix::identity(1));
  m.set(0, 0, Gf2Matrix(1, 1));
  CancelResult r = cancel_sequence(m, one_based_steps({{1, 3}, {3, 1}}));
  CHECK(r.row_labels == std::vector<std::size_t>{1});
  CHECK(r.col_labels == std::vector<std::size_t>{1});
  CHECK(r.row_position(1) == 0);
  CHECK(oracle::iota(r.matrix.flatten()) == oracle::iota(m.flatten()));
  // the centre block picks up corrections from both pivots
  Gf2Matrix centre = m.at(1, 1) + m.at(1, 2) * m.at(0, 1);
  Gf2Matrix row2 = m.at(2, 1) + m.at(2, 2) * m.at(0, 1);
  Gf2Matrix col0 = m.at(1, 0) + m.at(1, 2) * m.at(0, 0);
  CHECK(r.at_original(1, 1) == centre + col0 * row2);
}
