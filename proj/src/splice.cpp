#include "hfsplice/splice.hpp"

#include <algorithm>
#include <cstdlib>

namespace hfsplice {

const std::pair<Slot, Slot> kDBGroups[6] = {
    {Slot::Inf, Slot::Inf}, {Slot::One, Slot::Inf}, {Slot::Inf, Slot::One},
    {Slot::Zero, Slot::One}, {Slot::One, Slot::Zero}, {Slot::Zero, Slot::Zero},
};

const std::vector<std::pair<std::size_t, std::size_t>> kSixSteps = {{2, 9},   {3, 5},   {4, 6},
                                                                    {14, 21}, {16, 23}, {20, 22}};
const std::vector<std::size_t> kFrakDRows = {11, 7, 8, 10, 12, 1};
const std::vector<std::size_t> kFrakDCols = {19, 13, 15, 17, 18, 24};

const std::vector<std::pair<std::size_t, std::size_t>> kEightSteps = {{1, 6}, {3, 8}, {4, 3}, {5, 4},
                                                                      {6, 1}, {8, 7}, {9, 9}, {10, 10}};

namespace {

Gf2Matrix I(std::size_t n) { return Gf2Matrix::identity(n); }
Gf2Matrix K(const Gf2Matrix& a, const Gf2Matrix& b) { return kron(a, b); }

// A knot's maps split along the summand decompositions, ready for block tensors.
struct Split {
  Ranks a;
  BlockMatrix f0, finf, fbar0, fbarinf, theta, thetabar, tau0, tau1;

  BlockMatrix id(Slot s) const { return BlockMatrix::identity(decomposition(a, s)); }
};

BlockMatrix as_blocks(const Gf2Matrix& m, const Ranks& a, Slot to, Slot from) {
  return slice(m, decomposition(a, to), decomposition(a, from));
}

Split split(const KnotSystem& k) {
  DerivedMaps d = derive_dual_maps(k);
  const Ranks& a = k.a;
  Split s;
  s.a = a;
  s.f0 = as_blocks(d.f0, a, Slot::Inf, Slot::One);
  s.finf = as_blocks(d.finf, a, Slot::One, Slot::Zero);
  s.fbar0 = as_blocks(d.fbar0, a, Slot::Inf, Slot::One);
  s.fbarinf = as_blocks(d.fbarinf, a, Slot::One, Slot::Zero);
  s.theta = as_blocks(d.theta, a, Slot::Inf, Slot::Zero);
  s.thetabar = as_blocks(d.thetabar, a, Slot::Inf, Slot::Zero);
  s.tau0 = as_blocks(k.tau0, a, Slot::Zero, Slot::Zero);
  s.tau1 = as_blocks(k.tau1, a, Slot::One, Slot::One);
  return s;
}

Gf2Matrix T(const BlockMatrix& x, const BlockMatrix& y) { return block_tensor(x, y).flatten(); }

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto i : v) out.push_back(i - 1);
  return out;
}

}  // namespace

Dims dB_dims(const SpliceProblem& p) {
  Dims d;
  for (auto [x, y] : kDBGroups) d.push_back(p.k1.a.h(x) * p.k2.a.h(y));
  return d;
}

BlockMatrix build_dB(const SpliceProblem& p) {
  Split a = split(p.k1), b = split(p.k2);
  BlockMatrix d(dB_dims(p), dB_dims(p));
  // Block indices are zero-based here: 0 = inf,inf ... 5 = 0,0.
  d.set(0, 1, T(a.f0, b.id(Slot::Inf)));
  d.set(0, 2, T(a.id(Slot::Inf), b.f0));
  d.set(0, 3, T(a.theta, b.fbar0));
  d.set(0, 4, T(a.fbar0, b.theta));
  // Gamma; the last term pairs thetabar^1 with theta^2.
  d.set(0, 5, T(a.fbar0 * a.finf, b.fbar0 * b.finf) + T(a.theta, b.thetabar) + T(a.thetabar, b.theta));
  d.set(1, 3, T(a.fbarinf, b.f0) + T(a.finf, b.fbar0));
  d.set(1, 4, T(a.id(Slot::One), b.f0 * b.fbarinf));
  d.set(1, 5, T(a.finf, b.thetabar));
  d.set(2, 3, T(a.f0 * a.fbarinf, b.id(Slot::One)));
  d.set(2, 4, T(a.f0, b.fbarinf) + T(a.fbar0, b.finf));
  d.set(2, 5, T(a.thetabar, b.finf));
  d.set(3, 5, T(a.id(Slot::Zero), b.fbarinf));
  d.set(4, 5, T(a.fbarinf, b.id(Slot::Zero)));
  return d;
}

BlockMatrix dB_basis_change(const SpliceProblem& p) {
  Split a = split(p.k1), b = split(p.k2);
  const Dims dims = dB_dims(p);
  return BlockMatrix::diagonal({I(dims[0]), I(dims[1]), I(dims[2]), T(a.tau0, b.tau1), T(a.tau1, b.tau0),
                                T(a.tau0, b.tau0)});
}

BlockMatrix build_dB_prime(const SpliceProblem& p) {
  BlockMatrix q = dB_basis_change(p);
  BlockMatrix qinv = q;
  for (std::size_t i = 3; i < 6; ++i) qinv.set(i, i, invert(q.at(i, i)));
  return qinv * build_dB(p) * q;
}

Dims refine_dims(const SpliceProblem& p) {
  Dims d;
  for (auto [x, y] : kDBGroups) {
    Dims t = tensor_dims(decomposition(p.k1.a, x), decomposition(p.k2.a, y));
    d.insert(d.end(), t.begin(), t.end());
  }
  return d;
}

BlockMatrix refine_24(const SpliceProblem& p) {
  Dims d = refine_dims(p);
  return slice(build_dB_prime(p).flatten(), d, d);
}

Dims frakD_row_dims(const SpliceProblem& p) {
  const Ranks &a = p.k1.a, &b = p.k2.a;
  return {a.a0 * b.a0, a.ainf * b.a1, a.ainf * b.a0, a.a1 * b.ainf, a.a0 * b.ainf, a.a1 * b.a1};
}

Dims frakD_col_dims(const SpliceProblem& p) {
  const Ranks &a = p.k1.a, &b = p.k2.a;
  return {a.ainf * b.ainf, a.ainf * b.a0, a.a1 * b.a0, a.a0 * b.ainf, a.a0 * b.a1, a.a1 * b.a1};
}

FrakDPipeline frakD_pipeline(const SpliceProblem& p) {
  FrakDPipeline out;
  out.cancelled = cancel_sequence(refine_24(p), one_based_steps(kSixSteps));
  const auto rows = zero_based(kFrakDRows), cols = zero_based(kFrakDCols);
  // Each pivot (i, j) removes both summands i and j from the complex; the
  // twelve survivors must carry nothing but B_2 -> B_1.
  auto removed = [](std::size_t x) {
    for (auto [i, j] : kSixSteps)
      if (x == i - 1 || x == j - 1) return true;
    return false;
  };
  auto contains = [](const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  for (std::size_t r : out.cancelled.row_labels)
    for (std::size_t c : out.cancelled.col_labels) {
      if (removed(r) || removed(c)) continue;
      bool inside = contains(rows, r) && contains(cols, c);
      if (!inside && !out.cancelled.at_original(r, c).is_zero()) out.residual_zero = false;
    }
  std::vector<std::size_t> rp, cp;
  for (auto r : rows) rp.push_back(out.cancelled.row_position(r));
  for (auto c : cols) cp.push_back(out.cancelled.col_position(c));
  out.before_columns = out.cancelled.matrix.select(rp, cp);
  out.frakD = frakD_column_operation(out.before_columns, p);
  return out;
}

BlockMatrix frakD_column_operation(const BlockMatrix& d, const SpliceProblem& p) {
  ThetaExtension t1 = p.k1.theta_or_zero(), t2 = p.k2.theta_or_zero();
  Gf2Matrix c3 = K(I(p.k1.a.a1), t2.P);
  Gf2Matrix c5 = K(t1.P, I(p.k2.a.a1));
  BlockMatrix out = d;
  for (std::size_t i = 0; i < 6; ++i) {
    out.add(i, 5, d.at(i, 2) * c3);
    out.add(i, 5, d.at(i, 4) * c5);
  }
  return out;
}

BlockMatrix build_frakD(const SpliceProblem& p) {
  KnotBlocks a = knot_blocks(p.k1), b = knot_blocks(p.k2);
  BlockMatrix g(frakD_row_dims(p), frakD_col_dims(p));
  auto S = [&](std::size_t i, std::size_t j, Gf2Matrix m) { g.set(i - 1, j - 1, std::move(m)); };
  S(1, 1, K(a.t1.B, b.t1.B));
  S(1, 2, K(a.t1.B, b.t1.A));
  S(1, 4, K(a.t1.A, b.t1.B));
  S(2, 2, K(a.t0.A, b.tinf.B));
  S(2, 3, K(a.t0.B, b.tinf.B));
  S(2, 6, K(a.t0.B, b.tinf.A));
  S(3, 1, K(a.t1.D, b.t1.B));
  S(3, 2, K(a.t1.D, b.t1.A) + K(a.t0.A, b.tinf.D));
  S(3, 3, K(a.t0.B, b.tinf.D));
  S(3, 4, K(a.t1.C, b.t1.B));
  S(3, 6, K(a.t0.B, b.tinf.C));
  S(4, 4, K(a.tinf.B, b.t0.A));
  S(4, 5, K(a.tinf.B, b.t0.B));
  S(4, 6, K(a.tinf.A, b.t0.B));
  S(5, 1, K(a.t1.B, b.t1.D));
  S(5, 2, K(a.t1.B, b.t1.C));
  S(5, 4, K(a.tinf.D, b.t0.A) + K(a.t1.A, b.t1.D));
  S(5, 5, K(a.tinf.D, b.t0.B));
  S(5, 6, K(a.tinf.C, b.t0.B));
  S(6, 2, K(a.t0.C, b.tinf.B));
  S(6, 3, K(a.t0.D, b.tinf.B));
  S(6, 4, K(a.tinf.B, b.t0.C));
  S(6, 5, K(a.tinf.B, b.t0.D));
  S(6, 6, K(a.tinf.A, b.t0.D) + K(a.t0.D, b.tinf.A) + K(a.X, b.X));
  return g;
}

BlockMatrix build_PL(const SpliceProblem& p) {
  const Ranks& a = p.k1.a;
  KnotBlocks b = knot_blocks(p.k2);
  Dims d = frakD_row_dims(p);
  BlockMatrix g(d, d);
  auto S = [&](std::size_t i, std::size_t j, Gf2Matrix m) { g.set(i - 1, j - 1, std::move(m)); };
  S(1, 1, K(I(a.a0), b.b1.A));
  S(1, 5, K(I(a.a0), b.b1.B));
  S(2, 2, K(I(a.ainf), b.binf.A));
  S(2, 3, K(I(a.ainf), b.binf.B));
  S(3, 2, K(I(a.ainf), b.binf.C));
  S(3, 3, K(I(a.ainf), b.binf.D));
  S(4, 4, K(I(a.a1), b.b0.A));
  S(4, 6, K(I(a.a1), b.b0.B));
  S(5, 1, K(I(a.a0), b.b1.C));
  S(5, 5, K(I(a.a0), b.b1.D));
  S(6, 4, K(I(a.a1), b.b0.C));
  S(6, 6, K(I(a.a1), b.b0.D));
  return g;
}

BlockMatrix build_PR(const SpliceProblem& p) {
  KnotBlocks a = knot_blocks(p.k1);
  const Ranks& b = p.k2.a;
  Dims d = frakD_col_dims(p);
  BlockMatrix g(d, d);
  auto S = [&](std::size_t i, std::size_t j, Gf2Matrix m) { g.set(i - 1, j - 1, std::move(m)); };
  S(1, 1, K(a.b1.D, I(b.ainf)));
  S(1, 4, K(a.b1.C, I(b.ainf)));
  S(2, 2, K(a.b0.A, I(b.a0)));
  S(2, 3, K(a.b0.B, I(b.a0)));
  S(3, 2, K(a.b0.C, I(b.a0)));
  S(3, 3, K(a.b0.D, I(b.a0)));
  S(4, 1, K(a.b1.B, I(b.ainf)));
  S(4, 4, K(a.b1.A, I(b.ainf)));
  S(5, 5, K(a.binf.D, I(b.a1)));
  S(5, 6, K(a.binf.C, I(b.a1)));
  S(6, 5, K(a.binf.B, I(b.a1)));
  S(6, 6, K(a.binf.A, I(b.a1)));
  return g;
}

BlockMatrix build_frakD_prime(const SpliceProblem& p) { return build_PL(p) * build_frakD(p) * build_PR(p); }

BlockMatrix frakD_prime_formula(const SpliceProblem& p) {
  KnotBlocks a = knot_blocks(p.k1), b = knot_blocks(p.k2);
  const Ranks &ra = p.k1.a, &rb = p.k2.a;
  BlockMatrix g(frakD_row_dims(p), frakD_col_dims(p));
  auto S = [&](std::size_t i, std::size_t j, Gf2Matrix m) { g.set(i - 1, j - 1, std::move(m)); };
  S(1, 1, K(a.tinf.D * a.b1.B, b.b1.B * b.t0.A));
  S(1, 2, K(a.t1.B * a.b0.A, I(rb.a0)));
  S(1, 3, K(a.t1.B * a.b0.B, I(rb.a0)));
  S(1, 4, K(a.tinf.D * a.b1.A, b.b1.B * b.t0.A));
  S(1, 5, K(I(ra.a0), b.b1.B * b.t0.B));
  S(2, 1, K(I(ra.ainf), b.binf.B * b.t1.B));
  S(2, 2, K(a.t1.D * a.b0.A, b.binf.B * b.t1.A));
  S(2, 3, K(a.t1.D * a.b0.B, b.binf.B * b.t1.A));
  S(2, 5, K(a.t0.B * a.binf.B, I(rb.a1)));
  S(2, 6, K(a.t0.B * a.binf.A, I(rb.a1)));
  S(3, 1, K(I(ra.ainf), b.binf.D * b.t1.B));
  S(3, 2, K(I(ra.ainf), I(rb.a0)) + K(a.t1.D * a.b0.A, b.binf.D * b.t1.A));  // Psi_1
  S(3, 3, K(a.t1.D * a.b0.B, b.binf.D * b.t1.A));
  S(4, 1, K(a.tinf.B * a.b1.B, I(rb.ainf)));
  S(4, 3, K(I(ra.a1), b.b0.B * b.tinf.B));
  S(4, 4, K(a.tinf.B * a.b1.A, I(rb.ainf)));
  S(4, 5, K(a.t0.D * a.binf.B, b.b0.B * b.tinf.A) + K(a.X * a.binf.B, b.b0.B * b.X));  // Gamma_1
  S(4, 6, K(a.t0.D * a.binf.A, b.b0.B * b.tinf.A) + K(a.X * a.binf.A, b.b0.B * b.X));  // Gamma_2
  S(5, 1, K(a.tinf.D * a.b1.B, b.b1.D * b.t0.A));
  S(5, 4, K(I(ra.a0), I(rb.ainf)) + K(a.tinf.D * a.b1.A, b.b1.D * b.t0.A));  // Psi_2
  S(5, 5, K(I(ra.a0), b.b1.D * b.t0.B));
  S(6, 3, K(I(ra.a1), b.b0.D * b.tinf.B));
  S(6, 5, K(a.t0.D * a.binf.B, b.b0.D * b.tinf.A) + K(a.X * a.binf.B, b.b0.D * b.X));  // Gamma_3
  S(6, 6, K(I(ra.a1), I(rb.a1)) + K(a.t0.D * a.binf.A, b.b0.D * b.tinf.A) +
              K(a.X * a.binf.A, b.b0.D * b.X));  // Gamma_4
  return g;
}

std::int64_t chi(const Ranks& a, const Ranks& b) {
  auto s = [](std::size_t x) { return static_cast<std::int64_t>(x); };
  return (s(a.h1()) - s(a.hinf())) * (s(b.h1()) - s(b.hinf())) - (s(a.h1()) - s(a.h0())) * (s(b.h1()) - s(b.h0()));
}

std::int64_t chi(const SpliceProblem& p) { return chi(p.k1.a, p.k2.a); }

std::size_t splice_rank_direct(const SpliceProblem& p) { return homology_rank(build_dB(p).flatten()); }

SpliceReport splice_rank(const SpliceProblem& p) {
  require_valid(p.k1);
  require_valid(p.k2);
  SpliceReport rep;
  FrakDPipeline pipe = frakD_pipeline(p);
  Gf2Matrix D = pipe.frakD.flatten();
  rep.iota = iota(D);
  rep.hf_rank = rep.iota.total();
  rep.chi = chi(p);
  rep.lower_bound = static_cast<std::size_t>(std::llabs(rep.chi));
  rep.b1_dims = frakD_row_dims(p);
  rep.b2_dims = frakD_col_dims(p);
  rep.direct_rank = splice_rank_direct(p);
  BlockMatrix display = build_frakD(p);
  rep.display_matches = display == pipe.frakD;
  rep.pipeline_agreement = pipe.residual_zero && rep.direct_rank == rep.hf_rank &&
                           iota(display.flatten()) == rep.iota && iota(build_frakD_prime(p).flatten()) == rep.iota;
  return rep;
}

BlockMatrix build_ten_by_ten(const KnotSystem& k) {
  KnotBlocks kb = knot_blocks(k);
  const std::size_t a0 = k.a.a0, a1 = k.a.a1, ai = k.a.ainf;
  BlockMatrix g({a0, a1, a1, a0, a0, ai, ai, ai, a1, a1}, {ai, ai, a0, a0, a0, a0, ai, a1, a1, a1});
  auto S = [&](std::size_t i, std::size_t j, Gf2Matrix m) { g.set(i - 1, j - 1, std::move(m)); };
  const auto &b0 = kb.b0, &b1 = kb.b1, &bi = kb.binf;
  S(1, 6, I(a0));
  S(1, 8, b1.B * kb.t0.B);
  S(2, 1, bi.B * kb.t1.B);
  S(2, 10, I(a1));
  S(3, 2, bi.B * kb.t1.B);
  S(3, 5, bi.B * kb.t1.A);
  S(3, 8, I(a1));
  S(4, 1, bi.D * kb.t1.B);
  S(4, 3, I(a0));
  S(5, 2, bi.D * kb.t1.B);
  S(5, 4, I(a0));
  S(5, 5, bi.D * kb.t1.A);
  S(6, 1, I(ai));
  S(6, 5, b0.B * kb.tinf.B);
  S(6, 10, b0.B * kb.X);
  S(7, 6, b0.B * kb.tinf.B);
  S(8, 7, I(ai));
  S(8, 8, b1.D * kb.t0.B);
  S(9, 5, b0.D * kb.tinf.B);
  S(9, 9, I(a1));
  S(9, 10, b0.D * kb.X);
  S(10, 6, b0.D * kb.tinf.B);
  S(10, 10, I(a1));
  return g;
}

BlockMatrix build_Rr(const KnotSystem& k) {
  KnotBlocks kb = knot_blocks(k);
  const Ranks& a = k.a;
  BlockMatrix r({a.ainf, a.a1}, {a.ainf, a.a0});
  r.set(0, 1, kb.b0.B * kb.X * kb.binf.B);
  r.set(1, 0, kb.Xbar * kb.tinf.B * kb.b1.B);
  r.set(1, 1, kb.Xbar * kb.tinf.B * kb.b1.A + kb.b0.D * kb.X * kb.binf.B);
  return r;
}

RrPipeline build_Rr_pipeline(const KnotSystem& k) {
  RrPipeline out;
  out.ten_by_ten = build_ten_by_ten(k);
  out.rr = build_Rr(k);
  CancelResult c = cancel_sequence(out.ten_by_ten, one_based_steps(kEightSteps));
  out.rr_cancelled = c.matrix.select({c.row_position(6), c.row_position(1)}, {c.col_position(1), c.col_position(4)});
  return out;
}

std::size_t trefoil_bound(const Ranks& a) {
  const std::size_t lo = std::min({a.a0, a.a1, a.ainf});
  const std::size_t s = a.a0 + a.a1 + 2 * a.ainf;
  return s > 4 * lo ? s - 4 * lo : 0;
}

RrRankSplit rr_rank_split(const KnotSystem& k) {
  KnotBlocks kb = knot_blocks(k);
  return {rank(kb.X * kb.binf.B), rank(kb.Xbar * kb.tinf.B)};
}

}  // namespace hfsplice
