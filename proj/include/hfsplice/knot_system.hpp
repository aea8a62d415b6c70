#pragma once

// Per-knot data: the ranks a_0, a_1, a_inf, the isomorphisms tau_0, tau_1,
// tau_inf and an optional extension (M, P) of theta.
//
// Every matrix uses rows = target summand. The decompositions are
//   H_0   = A_inf + A_1
//   H_1   = A_0   + A_inf
//   H_inf = A_1   + A_0
// so that f_inf: H_0 -> H_1, f_0: H_1 -> H_inf and f_1: H_inf -> H_0 are all
// [[0,0],[I,0]] with I of size a_inf, a_0 and a_1 respectively.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfsplice/block_matrix.hpp"
#include "hfsplice/gf2.hpp"

namespace hfsplice {

enum class Slot { Zero, One, Inf };

const char* slot_name(Slot s);

struct Ranks {
  std::size_t a0 = 0;
  std::size_t a1 = 0;
  std::size_t ainf = 0;

  std::size_t h0() const { return ainf + a1; }
  std::size_t h1() const { return a0 + ainf; }
  std::size_t hinf() const { return a1 + a0; }
  std::size_t h(Slot s) const;
  std::size_t a(Slot s) const;
  friend bool operator==(const Ranks&, const Ranks&) = default;
};

/// Two-summand decomposition of H_slot, first summand first.
Dims decomposition(const Ranks& a, Slot s);

struct ThetaExtension {
  Gf2Matrix M;  // a1 x ainf
  Gf2Matrix P;  // a0 x a1
};

struct KnotSystem {
  std::string name;
  Ranks a;
  Gf2Matrix tau0;
  Gf2Matrix tau1;
  Gf2Matrix tauinf;
  std::optional<ThetaExtension> theta;

  const Gf2Matrix& tau(Slot s) const;
  Gf2Matrix& tau(Slot s);
  ThetaExtension theta_or_zero() const;
};

/// A square matrix split along a two-summand decomposition: [[A, B], [C, D]].
struct TauBlocks {
  Gf2Matrix A, B, C, D;
};

TauBlocks split_blocks(const Gf2Matrix& m, std::size_t first);

struct ValidationReport {
  bool structural = true;
  bool strict_checked = false;
  bool strict = true;
  std::vector<std::string> failures;

  bool ok() const { return structural && (!strict_checked || strict); }
};

ValidationReport validate(const KnotSystem& k, bool strict);
/// Throws std::invalid_argument carrying the first failure when k is not structurally valid.
void require_valid(const KnotSystem& k);

/// The block data of tau_slot and of its inverse (the "bar" blocks), plus
/// X = B_inf Bbar_1 B_0 and Xbar = Bbar_inf B_1 Bbar_0.
struct KnotBlocks {
  Ranks a;
  TauBlocks t0, t1, tinf;
  TauBlocks b0, b1, binf;
  Gf2Matrix X;
  Gf2Matrix Xbar;
  ThetaExtension theta;

  const TauBlocks& tau(Slot s) const;
  const TauBlocks& bar(Slot s) const;
};

KnotBlocks knot_blocks(const KnotSystem& k);

struct DerivedMaps {
  Gf2Matrix f0, f1, finf;
  Gf2Matrix fbar0, fbar1, fbarinf;
  Gf2Matrix theta;     // [[0, I_a1], [0, 0]] : H_0 -> H_inf
  Gf2Matrix thetabar;  // tau_inf [[M, I], [PM, P]] tau_0^{-1}
  Gf2Matrix X;
};

/// The standard map f_slot: f_0 : H_1 -> H_inf, f_1 : H_inf -> H_0, f_inf : H_0 -> H_1.
Gf2Matrix standard_f(const Ranks& a, Slot s);
Gf2Matrix standard_theta(const Ranks& a);
/// [[M, I], [PM, P]] : H_0 -> H_inf before conjugation by tau.
Gf2Matrix theta_presentation(const Ranks& a, const ThetaExtension& t);

DerivedMaps derive_dual_maps(const KnotSystem& k);

/// P_X = [[I, 0], [X, I]] on the decomposition of H_slot. It is its own inverse over GF(2).
Gf2Matrix px_matrix(const Ranks& a, Slot s, const Gf2Matrix& X);
/// Conjugates tau_slot by P_X. X is a1 x ainf for slot 0, ainf x a0 for slot 1, a0 x a1 for slot inf.
KnotSystem change_basis_px(const KnotSystem& k, Slot s, const Gf2Matrix& X);

/// For theta presented as [[X, I], [Y X, Y]] with X : a x b and Y : c x a, returns
/// (P_Y, P_X) with P_Y = [[I_a, 0], [Y, I_c]] and P_X = [[I_b, 0], [X, I_a]], so that
/// P_Y * theta * P_X = [[0, I], [0, 0]].
std::pair<Gf2Matrix, Gf2Matrix> normalize_theta(const Gf2Matrix& X, const Gf2Matrix& Y);

KnotSystem random_knot_system(const Ranks& a, std::uint64_t seed);
ThetaExtension random_theta(const Ranks& a, std::uint64_t seed);

}  // namespace hfsplice
