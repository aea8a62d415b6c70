#include <doctest.h>

#include <cstdlib>
#include <random>

#include "hfsplice/io.hpp"
#include "hfsplice/splice.hpp"
#include "oracle.hpp"
#include "splice_oracle.hpp"

using namespace hfsplice;

namespace {

KnotSystem identity_system(Ranks a) {
  KnotSystem k;
  k.a = a;
  k.tau0 = Gf2Matrix::identity(a.h0());
  k.tau1 = Gf2Matrix::identity(a.h1());
  k.tauinf = Gf2Matrix::identity(a.hinf());
  return k;
}

SpliceProblem random_problem(std::mt19937_64& rng, std::size_t max_rank = 4, bool with_theta = true) {
  std::uniform_int_distribution<std::size_t> u(0, max_rank);
  Ranks a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
  SpliceProblem p{random_knot_system(a, rng()), random_knot_system(b, rng())};
  if (with_theta) {
    p.k1.theta = random_theta(a, rng());
    p.k2.theta = random_theta(b, rng());
  }
  return p;
}

KnotSystem bundled(const char* name) {
  return load_knot_system(std::string(HFSPLICE_DATA_DIR) + "/" + name + ".json");
}

}  // namespace

TEST_CASE("empty systems") {
  SpliceProblem p{identity_system({0, 0, 0}), identity_system({0, 0, 0})};
  SpliceReport r = splice_rank(p);
  CHECK(r.hf_rank == 0);
  CHECK(r.chi == 0);
  CHECK(r.pipeline_agreement);

  SpliceProblem q{random_knot_system({1, 2, 1}, 3), identity_system({0, 0, 0})};
  for (std::size_t d : refine_dims(q)) CHECK(d == 0);
  CHECK(splice_rank(q).hf_rank == 0);
}

TEST_CASE("identity tau") {
  SpliceProblem p{identity_system({2, 1, 3}), identity_system({1, 2, 2})};
  CHECK(build_dB_prime(p) == build_dB(p));
  // the Phi entry f_inf (x) f_0 + f_inf (x) f_0 cancels
  CHECK(build_dB(p).at(1, 3).is_zero());

  BlockMatrix r = refine_24(p);
  for (auto [i, j] : kSixSteps) CHECK(r.at(i - 1, j - 1).is_identity());
  FrakDPipeline pipe = frakD_pipeline(p);
  CHECK(pipe.frakD == pipe.before_columns);
}

TEST_CASE("d_B squares to zero and d_B' agrees blockwise") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    SpliceProblem p = random_problem(rng, 3);
    BlockMatrix d = build_dB(p);
    REQUIRE((d * d).flatten().is_zero());

    // Gamma after the change of basis on the (0,0) column
    DerivedMaps a = derive_dual_maps(p.k1), b = derive_dual_maps(p.k2);
    BlockMatrix dp = build_dB_prime(p);
    Gf2Matrix gamma = kron(a.fbar0 * a.finf * p.k1.tau0, b.fbar0 * b.finf * p.k2.tau0) +
                      kron(a.theta * p.k1.tau0, b.thetabar * p.k2.tau0) +
                      kron(a.thetabar * p.k1.tau0, b.theta * p.k2.tau0);
    Dims r = tensor_dims(decomposition(p.k1.a, Slot::Inf), decomposition(p.k2.a, Slot::Inf));
    Dims c = tensor_dims(decomposition(p.k1.a, Slot::Zero), decomposition(p.k2.a, Slot::Zero));
    // gamma is in plain kron order; move it into the block-ordered basis
    BlockMatrix lhs = slice(dp.at(0, 5), r, c);
    BlockMatrix ta = slice(a.fbar0 * a.finf * p.k1.tau0, decomposition(p.k1.a, Slot::Inf), decomposition(p.k1.a, Slot::Zero));
    BlockMatrix tb = slice(b.fbar0 * b.finf * p.k2.tau0, decomposition(p.k2.a, Slot::Inf), decomposition(p.k2.a, Slot::Zero));
    BlockMatrix ua = slice(a.theta * p.k1.tau0, decomposition(p.k1.a, Slot::Inf), decomposition(p.k1.a, Slot::Zero));
    BlockMatrix ub = slice(b.thetabar * p.k2.tau0, decomposition(p.k2.a, Slot::Inf), decomposition(p.k2.a, Slot::Zero));
    BlockMatrix va = slice(a.thetabar * p.k1.tau0, decomposition(p.k1.a, Slot::Inf), decomposition(p.k1.a, Slot::Zero));
    BlockMatrix vb = slice(b.theta * p.k2.tau0, decomposition(p.k2.a, Slot::Inf), decomposition(p.k2.a, Slot::Zero));
    CHECK(lhs == block_tensor(ta, tb) + block_tensor(ua, ub) + block_tensor(va, vb));
    CHECK(oracle::rank(gamma) == oracle::rank(dp.at(0, 5)));
  }
}

TEST_CASE("iota chain against the plain oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 120; ++t) {
    SpliceProblem p = random_problem(rng);
    const std::size_t want = oracle::homology(oracle::plain_dB(p));
    REQUIRE(oracle::homology(build_dB(p).flatten()) == want);
    REQUIRE(oracle::homology(build_dB_prime(p).flatten()) == want);
    BlockMatrix r24 = refine_24(p);
    CHECK(r24.flatten() == build_dB_prime(p).flatten());
    FrakDPipeline pipe = frakD_pipeline(p);
    CHECK(pipe.residual_zero);
    CHECK(pipe.frakD == build_frakD(p));
    auto [ker, coker] = oracle::iota(pipe.frakD.flatten());
    REQUIRE(ker + coker == want);
    CHECK(oracle::iota(build_frakD_prime(p).flatten()) == std::make_pair(ker, coker));
    CHECK(build_frakD_prime(p) == frakD_prime_formula(p));
    CHECK(is_invertible(build_PL(p).flatten()));
    CHECK(is_invertible(build_PR(p).flatten()));

    SpliceReport rep = splice_rank(p);
    CHECK(rep.hf_rank == want);
    CHECK(rep.pipeline_agreement);
    CHECK(rep.display_matches);
  }
}

TEST_CASE("frakD does not depend on M or P") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 40; ++t) {
    SpliceProblem p = random_problem(rng, 4, false);
    BlockMatrix base = build_frakD(p);
    SpliceProblem q = p;
    q.k1.theta = random_theta(p.k1.a, rng());
    q.k2.theta = random_theta(p.k2.a, rng());
    CHECK(build_frakD(q) == base);
    CHECK(frakD_pipeline(q).frakD == base);
    CHECK(splice_rank(q).hf_rank == splice_rank(p).hf_rank);
  }
}

TEST_CASE("chi") {
  CHECK(chi(Ranks{1, 1, 1}, Ranks{1, 1, 1}) == 0);
  Ranks r{0, 1, 3};
  // h = (4, 3, 1): (3 - 1)(3 - 1) - (3 - 4)(3 - 4)
  CHECK(chi(r, r) == 3);

  std::mt19937_64 rng(61);
  for (int t = 0; t < 80; ++t) {
    SpliceProblem p = random_problem(rng);
    const auto c = chi(p);
    const auto b1 = static_cast<std::int64_t>(sum(frakD_row_dims(p)));
    const auto b2 = static_cast<std::int64_t>(sum(frakD_col_dims(p)));
    CHECK(c == b2 - b1);
    SpliceReport rep = splice_rank(p);
    CHECK(c == static_cast<std::int64_t>(rep.iota.kernel) - static_cast<std::int64_t>(rep.iota.cokernel));
    CHECK(rep.hf_rank >= static_cast<std::size_t>(std::llabs(c)));
    CHECK(rep.hf_rank % 2 == static_cast<std::size_t>(std::llabs(c)) % 2);
  }
}

TEST_CASE("trefoil data") {
  KnotSystem R = bundled("trefoil_R"), L = bundled("trefoil_L");
  CHECK(validate(R, true).ok());
  CHECK(validate(L, true).ok());
  SpliceReport rr = splice_rank({R, R});
  SpliceReport rl = splice_rank({R, L});
  CHECK(rr.hf_rank == 7);
  CHECK(rl.hf_rank == 9);
  CHECK(rr.pipeline_agreement);
  CHECK(rl.pipeline_agreement);
  CHECK(iota(build_Rr(R).flatten()).total() == 7);
  CHECK(iota(build_Rr(L).flatten()).total() == 9);
}

TEST_CASE("R_r") {
  std::mt19937_64 rng(71);
  KnotSystem R = bundled("trefoil_R");
  for (int t = 0; t < 80; ++t) {
    std::uniform_int_distribution<std::size_t> u(0, 4);
    KnotSystem k = random_knot_system({u(rng), u(rng), u(rng)}, rng());
    RrPipeline pipe = build_Rr_pipeline(k);
    Gf2Matrix m = pipe.rr.flatten();
    CHECK(m.rows() == k.a.h0());
    CHECK(m.cols() == k.a.h1());
    // the formula is reached by further basis changes, so only iota matches
    CHECK(oracle::iota(pipe.rr_cancelled.flatten()) == oracle::iota(m));
    CHECK(oracle::iota(m) == oracle::iota(pipe.ten_by_ten.flatten()));
    CHECK(oracle::iota(m).first + oracle::iota(m).second == oracle::homology(oracle::plain_dB({R, k})));

    RrRankSplit sp = rr_rank_split(k);
    const std::size_t mid = k.a.h0() + k.a.h1() - 2 * (sp.rank_M + sp.rank_Mbar);
    CHECK(trefoil_bound(k.a) <= mid);
    CHECK(mid <= oracle::iota(m).first + oracle::iota(m).second);
  }

  KnotSystem z = random_knot_system({0, 1, 3}, 5);
  Gf2Matrix m = build_Rr(z).flatten();
  CHECK(m.is_zero());
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 3);
  CHECK(iota(m).total() == 7);
  CHECK(iota(build_Rr(random_knot_system({1, 0, 4}, 6)).flatten()).total() == 9);
}

TEST_CASE("trefoil bound") {
  CHECK(trefoil_bound({0, 1, 3}) == 7);
  CHECK(trefoil_bound({1, 0, 4}) == 9);
  CHECK(trefoil_bound({1, 1, 1}) == 0);
  for (std::size_t a0 = 0; a0 < 6; ++a0)
    for (std::size_t a1 = 0; a1 < 6; ++a1)
      for (std::size_t ai = 0; ai < 6; ++ai) {
        Ranks a{a0, a1, ai};
        const std::size_t hmax = std::max({a.h0(), a.h1(), a.hinf()});
        const auto h = static_cast<std::int64_t>(4 * hmax) - static_cast<std::int64_t>(a.h0() + a.h1() + 2 * a.hinf());
        CHECK(static_cast<std::int64_t>(trefoil_bound(a)) == std::max<std::int64_t>(0, h));
      }
}
