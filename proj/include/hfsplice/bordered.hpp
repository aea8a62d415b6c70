#pragma once

// Type-D modules over the torus algebra A(T^2, 0), built from admissible data.
//
// Algebra basis: i0, i1, r1, r2, r3, r12, r23, r123. A chord r_{a..b} runs
// from idempotent i0 (a odd) or i1 (a even) to i1 (b odd) or i0 (b even), and
// r_{a..b} * r_{c..d} = r_{a..d} when c = b + 1, zero otherwise.
//
// Module matrices use rows = source generator, columns = target generator, so
// the coefficient of z in d(d(x)) is sum_y a(x,y) a(y,z).

#include <array>
#include <bitset>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfsplice/block_matrix.hpp"
#include "hfsplice/gf2.hpp"
#include "hfsplice/knot_system.hpp"

namespace hfsplice {

enum class Basis { I0, I1, R1, R2, R3, R12, R23, R123 };
inline constexpr std::size_t kBasisSize = 8;
const char* basis_name(Basis b);

enum class Idempotent { I0, I1 };
const char* idempotent_name(Idempotent i);

/// Product of two basis elements, or nullopt when it vanishes.
std::optional<Basis> basis_mul(Basis x, Basis y);
Idempotent left_idempotent(Basis b);
Idempotent right_idempotent(Basis b);

class TorusAlgebraElem {
 public:
  TorusAlgebraElem() = default;
  explicit TorusAlgebraElem(Basis b) { bits_.set(static_cast<std::size_t>(b)); }
  static TorusAlgebraElem unit();

  bool has(Basis b) const { return bits_.test(static_cast<std::size_t>(b)); }
  bool is_zero() const { return bits_.none(); }
  TorusAlgebraElem& operator+=(const TorusAlgebraElem& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend TorusAlgebraElem operator+(TorusAlgebraElem a, const TorusAlgebraElem& b) { return a += b; }
  friend TorusAlgebraElem operator*(const TorusAlgebraElem& a, const TorusAlgebraElem& b);
  friend bool operator==(const TorusAlgebraElem&, const TorusAlgebraElem&) = default;
  std::string to_string() const;

 private:
  std::bitset<kBasisSize> bits_;
};

TorusAlgebraElem algebra_mul(const TorusAlgebraElem& a, const TorusAlgebraElem& b);

/// Arrow coefficients: the unit (the idempotent of the source) or a chord.
enum class Coeff { Unit, R1, R2, R3, R12, R23, R123 };
inline constexpr std::size_t kCoeffCount = 7;
const char* coeff_name(Coeff c);
std::optional<Coeff> coeff_from_name(const std::string& s);
std::optional<Coeff> coeff_mul(Coeff x, Coeff y);

struct Generator {
  std::string id;
  Idempotent idempotent;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Arrow {
  std::size_t from;
  std::size_t to;
  Coeff coeff;
};

class TypeDModule {
 public:
  TypeDModule() = default;
  explicit TypeDModule(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Toggles an arrow (coefficients are over GF(2), so adding twice removes it).
  void add_arrow(std::size_t from, std::size_t to, Coeff c);
  /// XOR a rows-as-source block into the matrix of coefficient c.
  void add_block(std::size_t row0, std::size_t col0, const Gf2Matrix& m, Coeff c);
  const Gf2Matrix& matrix(Coeff c) const { return mats_[static_cast<std::size_t>(c)]; }
  std::vector<Arrow> arrows() const;
  bool idempotents_compatible() const;
  friend bool operator==(const TypeDModule&, const TypeDModule&) = default;

 private:
  friend struct ModuleReducer;
  std::vector<Generator> gens_;
  std::array<Gf2Matrix, kCoeffCount> mats_;
};

struct ChainComplex {
  Dims summands;
  Gf2Matrix d;     // rows = target
  Gf2Matrix incl;  // homology -> chains, onto chosen cycle representatives
  Gf2Matrix proj;  // chains -> homology, a left inverse on cycles killing boundaries
};

struct AdmissibleData {
  ChainComplex c0, c1, cinf;
  Gf2Matrix f0, finf, fbar0, fbarinf;  // rows = target
};

/// C_0 = A_inf + A_1, C_inf = A_1 + A_0 with zero differential, C_1 = A_1 + A_0 + A_inf + A_1 with
/// the identity from the first summand to the last. The tau_1 extension to C_1 is the identity on
/// the two outer summands.
AdmissibleData build_admissible(const KnotSystem& k);

struct AdmissibleReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};

AdmissibleReport validate_admissible(const AdmissibleData& d, const KnotSystem& k);

/// Summand layout of L(K) = C_1 + C_inf and M(K) = C_0 + C_1.
Dims cfd_L_dims(const Ranks& a);
Dims cfd_M_dims(const Ranks& a);

struct CfdBlocks {
  BlockMatrix dL, dM, Phi, Psi1, Psi2, Psi3;  // rows = source
};

CfdBlocks cfd_blocks(const KnotSystem& k);
TypeDModule build_cfd(const KnotSystem& k);

enum class Convention {
  Natural,   // coefficient of x -> y -> z is a(x,y) * a(y,z)
  Reversed,  // a(y,z) * a(x,y)
};
const char* convention_name(Convention c);

struct Relation {
  std::string name;
  std::size_t residual_rank = 0;
  bool holds() const { return residual_rank == 0; }
};

struct ConventionReport {
  Convention convention = Convention::Natural;
  std::array<std::size_t, kCoeffCount> residual_rank{};
  std::vector<Relation> relations;
  bool all_zero() const;
  const Relation* find(const std::string& name) const;
};

struct StructureReport {
  ConventionReport natural;
  ConventionReport reversed;
};

/// Matrix of the coefficient-c part of d^2 under the given convention.
Gf2Matrix square_residual(const TypeDModule& m, Coeff c, Convention conv);
StructureReport check_structure(const TypeDModule& m);

struct ReductionStep {
  std::string from;
  std::string to;
  std::size_t generators_before = 0;
  std::size_t generators_after = 0;
};

struct Reduction {
  TypeDModule module;
  std::vector<ReductionStep> audit;
};

/// Cancels unit-coefficient arrows between distinct generators until none remain.
Reduction reduce(const TypeDModule& m);

}  // namespace hfsplice
