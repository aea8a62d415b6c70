#pragma once

// Splicing two knot systems.
//
// The chain is
//   d_B (6x6 over H_{xy} = H_x(K1) (x) H_y(K2))
//   -> d_B' = Q^{-1} d_B Q
//   -> the 24x24 refinement along A_x (x) A_y
//   -> six identity cancellations
//   -> frakD : B_2 -> B_1 (6x6)
//   -> frakD' = P_L frakD P_R.
//
// Tensor products of decomposed spaces use the block-ordered basis
// (X1+X2)(x)(Y1+Y2) = X1Y1 + X1Y2 + X2Y1 + X2Y2, see block_tensor().

#include <cstdint>
#include <utility>
#include <vector>

#include "hfsplice/block_matrix.hpp"
#include "hfsplice/cancel.hpp"
#include "hfsplice/knot_system.hpp"

namespace hfsplice {

struct SpliceProblem {
  KnotSystem k1;
  KnotSystem k2;
};

/// Group order of d_B: H_inf,inf  H_1,inf  H_inf,1  H_0,1  H_1,0  H_0,0.
extern const std::pair<Slot, Slot> kDBGroups[6];

Dims dB_dims(const SpliceProblem& p);
BlockMatrix build_dB(const SpliceProblem& p);
/// Q = diag(I, I, I, tau_0 (x) tau_1, tau_1 (x) tau_0, tau_0 (x) tau_0).
BlockMatrix dB_basis_change(const SpliceProblem& p);
BlockMatrix build_dB_prime(const SpliceProblem& p);

/// The 24 summand dimensions A_x(K1) (x) A_y(K2), four per group.
Dims refine_dims(const SpliceProblem& p);
BlockMatrix refine_24(const SpliceProblem& p);

/// One-based pivots of the first cancellation and the surviving summands.
extern const std::vector<std::pair<std::size_t, std::size_t>> kSixSteps;
extern const std::vector<std::size_t> kFrakDRows;  // one-based summands forming B_1
extern const std::vector<std::size_t> kFrakDCols;  // one-based summands forming B_2

Dims frakD_row_dims(const SpliceProblem& p);
Dims frakD_col_dims(const SpliceProblem& p);

struct FrakDPipeline {
  CancelResult cancelled;      // 18x18 after six cancellations
  BlockMatrix before_columns;  // B_2 -> B_1 part of the cancelled matrix
  BlockMatrix frakD;           // after the column operations with P^1, P^2
  bool residual_zero = true;   // every surviving block outside B_2 -> B_1 vanishes
};

FrakDPipeline frakD_pipeline(const SpliceProblem& p);
/// Adds col3 (I (x) P^2) + col5 (P^1 (x) I) to column 6.
BlockMatrix frakD_column_operation(const BlockMatrix& d, const SpliceProblem& p);
/// frakD written directly from the tau blocks; it involves neither M nor P.
BlockMatrix build_frakD(const SpliceProblem& p);

BlockMatrix build_PL(const SpliceProblem& p);
BlockMatrix build_PR(const SpliceProblem& p);
/// P_L frakD P_R.
BlockMatrix build_frakD_prime(const SpliceProblem& p);
/// frakD' written entrywise from the tau blocks.
BlockMatrix frakD_prime_formula(const SpliceProblem& p);

/// (h1-hinf)(h1'-hinf') - (h1-h0)(h1'-h0').
std::int64_t chi(const Ranks& a, const Ranks& b);
std::int64_t chi(const SpliceProblem& p);

struct SpliceReport {
  std::int64_t chi = 0;
  IotaDims iota;
  std::size_t hf_rank = 0;
  std::size_t lower_bound = 0;
  Dims b1_dims;
  Dims b2_dims;
  std::size_t direct_rank = 0;       // homology of d_B by elimination
  bool pipeline_agreement = false;   // direct, pipeline and both display forms agree
  bool display_matches = false;      // pipeline frakD equals build_frakD entrywise
};

SpliceReport splice_rank(const SpliceProblem& p);
/// Homology rank of d_B only.
std::size_t splice_rank_direct(const SpliceProblem& p);

// Splicing with the right-handed trefoil R.

/// frakD'(R, K) split along the basis of the R factors; built from K's blocks only.
BlockMatrix build_ten_by_ten(const KnotSystem& k);
extern const std::vector<std::pair<std::size_t, std::size_t>> kEightSteps;
/// [[0, Bbar_0 X Bbar_inf], [Xbar B_inf Bbar_1, Xbar B_inf Abar_1 + Dbar_0 X Bbar_inf]], of size h_0 x h_1.
BlockMatrix build_Rr(const KnotSystem& k);

struct RrPipeline {
  BlockMatrix ten_by_ten;
  BlockMatrix rr;            // formula
  BlockMatrix rr_cancelled;  // the surviving 2x2 after the eight cancellations
};

RrPipeline build_Rr_pipeline(const KnotSystem& k);

/// max(0, a0 + a1 + 2 ainf - 4 min(a0, a1, ainf)) = 4 max(h) - (h0 + h1 + 2 hinf).
std::size_t trefoil_bound(const Ranks& a);

struct RrRankSplit {
  std::size_t rank_M = 0;     // M = X Bbar_inf
  std::size_t rank_Mbar = 0;  // Mbar = Xbar B_inf
};

RrRankSplit rr_rank_split(const KnotSystem& k);

}  // namespace hfsplice
