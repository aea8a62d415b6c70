#include "hfsplice/bordered.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfsplice {

namespace {

struct Interval {
  int lo, hi;
};

std::optional<Interval> chord_interval(Basis b) {
  switch (b) {
    case Basis::R1: return Interval{1, 1};
    case Basis::R2: return Interval{2, 2};
    case Basis::R3: return Interval{3, 3};
    case Basis::R12: return Interval{1, 2};
    case Basis::R23: return Interval{2, 3};
    case Basis::R123: return Interval{1, 3};
    default: return std::nullopt;
  }
}

std::optional<Basis> chord_from_interval(int lo, int hi) {
  if (lo == 1 && hi == 1) return Basis::R1;
  if (lo == 2 && hi == 2) return Basis::R2;
  if (lo == 3 && hi == 3) return Basis::R3;
  if (lo == 1 && hi == 2) return Basis::R12;
  if (lo == 2 && hi == 3) return Basis::R23;
  if (lo == 1 && hi == 3) return Basis::R123;
  return std::nullopt;
}

constexpr Basis kAllBasis[] = {Basis::I0, Basis::I1, Basis::R1,  Basis::R2,
                               Basis::R3, Basis::R12, Basis::R23, Basis::R123};
constexpr Coeff kAllCoeffs[] = {Coeff::Unit, Coeff::R1, Coeff::R2, Coeff::R3, Coeff::R12, Coeff::R23, Coeff::R123};

Basis coeff_basis(Coeff c) {
  switch (c) {
    case Coeff::R1: return Basis::R1;
    case Coeff::R2: return Basis::R2;
    case Coeff::R3: return Basis::R3;
    case Coeff::R12: return Basis::R12;
    case Coeff::R23: return Basis::R23;
    case Coeff::R123: return Basis::R123;
    case Coeff::Unit: break;
  }
  throw std::logic_error("unit has no single basis element");
}

Coeff basis_coeff(Basis b) {
  switch (b) {
    case Basis::R1: return Coeff::R1;
    case Basis::R2: return Coeff::R2;
    case Basis::R3: return Coeff::R3;
    case Basis::R12: return Coeff::R12;
    case Basis::R23: return Coeff::R23;
    case Basis::R123: return Coeff::R123;
    default: return Coeff::Unit;
  }
}

std::size_t idx(Coeff c) { return static_cast<std::size_t>(c); }

}  // namespace

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::I0: return "i0";
    case Basis::I1: return "i1";
    case Basis::R1: return "r1";
    case Basis::R2: return "r2";
    case Basis::R3: return "r3";
    case Basis::R12: return "r12";
    case Basis::R23: return "r23";
    case Basis::R123: return "r123";
  }
  return "?";
}

const char* idempotent_name(Idempotent i) { return i == Idempotent::I0 ? "i0" : "i1"; }

Idempotent left_idempotent(Basis b) {
  if (b == Basis::I0) return Idempotent::I0;
  if (b == Basis::I1) return Idempotent::I1;
  return chord_interval(b)->lo % 2 == 1 ? Idempotent::I0 : Idempotent::I1;
}

Idempotent right_idempotent(Basis b) {
  if (b == Basis::I0) return Idempotent::I0;
  if (b == Basis::I1) return Idempotent::I1;
  return chord_interval(b)->hi % 2 == 1 ? Idempotent::I1 : Idempotent::I0;
}

std::optional<Basis> basis_mul(Basis x, Basis y) {
  if (right_idempotent(x) != left_idempotent(y)) return std::nullopt;
  if (x == Basis::I0 || x == Basis::I1) return y;
  if (y == Basis::I0 || y == Basis::I1) return x;
  auto a = *chord_interval(x), b = *chord_interval(y);
  if (b.lo != a.hi + 1) return std::nullopt;
  return chord_from_interval(a.lo, b.hi);
}

TorusAlgebraElem TorusAlgebraElem::unit() { return TorusAlgebraElem(Basis::I0) + TorusAlgebraElem(Basis::I1); }

TorusAlgebraElem operator*(const TorusAlgebraElem& a, const TorusAlgebraElem& b) {
  TorusAlgebraElem out;
  for (Basis x : kAllBasis) {
    if (!a.has(x)) continue;
    for (Basis y : kAllBasis) {
      if (!b.has(y)) continue;
      if (auto z = basis_mul(x, y)) out += TorusAlgebraElem(*z);
    }
  }
  return out;
}

TorusAlgebraElem algebra_mul(const TorusAlgebraElem& a, const TorusAlgebraElem& b) { return a * b; }

std::string TorusAlgebraElem::to_string() const {
  std::string s;
  for (Basis x : kAllBasis)
    if (has(x)) s += (s.empty() ? "" : " + ") + std::string(basis_name(x));
  return s.empty() ? "0" : s;
}

const char* coeff_name(Coeff c) {
  switch (c) {
    case Coeff::Unit: return "1";
    case Coeff::R1: return "r1";
    case Coeff::R2: return "r2";
    case Coeff::R3: return "r3";
    case Coeff::R12: return "r12";
    case Coeff::R23: return "r23";
    case Coeff::R123: return "r123";
  }
  return "?";
}

std::optional<Coeff> coeff_from_name(const std::string& s) {
  for (Coeff c : kAllCoeffs)
    if (s == coeff_name(c)) return c;
  return std::nullopt;
}

std::optional<Coeff> coeff_mul(Coeff x, Coeff y) {
  if (x == Coeff::Unit) return y;
  if (y == Coeff::Unit) return x;
  auto z = basis_mul(coeff_basis(x), coeff_basis(y));
  if (!z) return std::nullopt;
  return basis_coeff(*z);
}

TypeDModule::TypeDModule(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (auto& m : mats_) m = Gf2Matrix(gens_.size(), gens_.size());
}

void TypeDModule::add_arrow(std::size_t from, std::size_t to, Coeff c) {
  if (from >= gens_.size() || to >= gens_.size()) throw std::out_of_range("arrow endpoint out of range");
  mats_[idx(c)].flip(from, to);
}

void TypeDModule::add_block(std::size_t row0, std::size_t col0, const Gf2Matrix& m, Coeff c) {
  mats_[idx(c)].add_block(row0, col0, m);
}

std::vector<Arrow> TypeDModule::arrows() const {
  std::vector<Arrow> out;
  for (Coeff c : kAllCoeffs) {
    const Gf2Matrix& m = mats_[idx(c)];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.get(i, j)) out.push_back({i, j, c});
  }
  std::stable_sort(out.begin(), out.end(), [](const Arrow& a, const Arrow& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  return out;
}

bool TypeDModule::idempotents_compatible() const {
  for (const Arrow& a : arrows()) {
    Idempotent s = gens_[a.from].idempotent, t = gens_[a.to].idempotent;
    if (a.coeff == Coeff::Unit) {
      if (s != t) return false;
    } else {
      Basis b = coeff_basis(a.coeff);
      if (left_idempotent(b) != s || right_idempotent(b) != t) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Admissible data

namespace {

Gf2Matrix I(std::size_t n) { return Gf2Matrix::identity(n); }

Gf2Matrix block_diag(const std::vector<Gf2Matrix>& parts) { return BlockMatrix::diagonal(parts).flatten(); }

}  // namespace

AdmissibleData build_admissible(const KnotSystem& k) {
  require_valid(k);
  const Ranks& a = k.a;
  AdmissibleData d;

  d.c0.summands = {a.ainf, a.a1};
  d.c0.d = Gf2Matrix(a.h0(), a.h0());
  d.c0.incl = d.c0.proj = I(a.h0());

  d.cinf.summands = {a.a1, a.a0};
  d.cinf.d = Gf2Matrix(a.hinf(), a.hinf());
  d.cinf.incl = d.cinf.proj = I(a.hinf());

  d.c1.summands = {a.a1, a.a0, a.ainf, a.a1};
  BlockMatrix d1(d.c1.summands, d.c1.summands);
  d1.set(3, 0, I(a.a1));
  d.c1.d = d1.flatten();
  // Homology of C_1 is carried by the middle summands A_0 + A_inf = H_1.
  BlockMatrix incl(d.c1.summands, {a.a0, a.ainf});
  incl.set(1, 0, I(a.a0));
  incl.set(2, 1, I(a.ainf));
  d.c1.incl = incl.flatten();
  d.c1.proj = d.c1.incl.transpose();

  BlockMatrix finf(d.c1.summands, d.c0.summands);
  finf.set(2, 0, I(a.ainf));
  finf.set(3, 1, I(a.a1));
  d.finf = finf.flatten();

  BlockMatrix f0(d.cinf.summands, d.c1.summands);
  f0.set(0, 0, I(a.a1));
  f0.set(1, 1, I(a.a0));
  d.f0 = f0.flatten();

  // The extension of tau_1 to C_1 needs invertible outer blocks; identities pair with d_1.
  Gf2Matrix tau1_ext = block_diag({I(a.a1), k.tau1, I(a.a1)});
  Gf2Matrix tau1bar_ext = block_diag({I(a.a1), invert(k.tau1), I(a.a1)});
  d.fbarinf = tau1_ext * d.finf * invert(k.tau0);
  d.fbar0 = k.tauinf * d.f0 * tau1bar_ext;
  return d;
}

bool AdmissibleReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

AdmissibleReport validate_admissible(const AdmissibleData& d, const KnotSystem& k) {
  AdmissibleReport rep;
  auto check = [&](std::string name, bool ok) { rep.checks.emplace_back(std::move(name), ok); };
  DerivedMaps m = derive_dual_maps(k);

  const ChainComplex* cs[] = {&d.c0, &d.c1, &d.cinf};
  const char* names[] = {"C0", "C1", "Cinf"};
  const std::size_t hs[] = {k.a.h0(), k.a.h1(), k.a.hinf()};
  for (int i = 0; i < 3; ++i) {
    const ChainComplex& c = *cs[i];
    check(std::string(names[i]) + ": d^2 = 0", (c.d * c.d).is_zero());
    check(std::string(names[i]) + ": homology rank", homology_rank(c.d) == hs[i]);
    check(std::string(names[i]) + ": representatives are cycles", (c.d * c.incl).is_zero());
    check(std::string(names[i]) + ": projection kills boundaries", (c.proj * c.d).is_zero());
    check(std::string(names[i]) + ": projection splits inclusion", (c.proj * c.incl).is_identity());
  }

  check("f_inf chain map", d.c1.d * d.finf == d.finf * d.c0.d);
  check("fbar_inf chain map", d.c1.d * d.fbarinf == d.fbarinf * d.c0.d);
  check("f_0 chain map", d.cinf.d * d.f0 == d.f0 * d.c1.d);
  check("fbar_0 chain map", d.cinf.d * d.fbar0 == d.fbar0 * d.c1.d);

  check("f_inf induces frak f_inf", d.c1.proj * d.finf * d.c0.incl == m.finf);
  check("fbar_inf induces phibar_inf", d.c1.proj * d.fbarinf * d.c0.incl == m.fbarinf);
  check("f_0 induces frak f_0", d.cinf.proj * d.f0 * d.c1.incl == m.f0);
  check("fbar_0 induces phibar_0", d.cinf.proj * d.fbar0 * d.c1.incl == m.fbar0);

  check("f_0 f_inf = 0", (d.f0 * d.finf).is_zero());
  check("fbar_0 fbar_inf = 0", (d.fbar0 * d.fbarinf).is_zero());

  auto exact_iso = [&](const Gf2Matrix& f1, const Gf2Matrix& f0, const Gf2Matrix& finf) {
    // f1 : Coker f0 -> Ker finf is an isomorphism.
    std::size_t coker = f0.rows() - rank(f0), ker = finf.cols() - rank(finf);
    return (f1 * f0).is_zero() && (finf * f1).is_zero() && rank(f1) == coker && coker == ker;
  };
  check("theta inverse to f_1", exact_iso(m.f1, m.f0, m.finf));
  check("thetabar inverse to phibar_1", exact_iso(m.fbar1, m.fbar0, m.fbarinf));
  return rep;
}

// ---------------------------------------------------------------------------
// The type-D module

Dims cfd_L_dims(const Ranks& a) { return {a.a1, a.a0, a.ainf, a.a1, a.a1, a.a0}; }
Dims cfd_M_dims(const Ranks& a) { return {a.ainf, a.a1, a.a1, a.a0, a.ainf, a.a1}; }

CfdBlocks cfd_blocks(const KnotSystem& k) {
  KnotBlocks kb = knot_blocks(k);
  const Ranks& a = k.a;
  const Dims L = cfd_L_dims(a), M = cfd_M_dims(a);
  CfdBlocks c{BlockMatrix(L, L), BlockMatrix(M, M), BlockMatrix(M, L),
              BlockMatrix(L, M), BlockMatrix(L, M), BlockMatrix(L, M)};

  c.dL.set(3, 0, I(a.a1));
  c.dL.set(4, 0, I(a.a1));
  c.dL.set(5, 1, I(a.a0));

  c.dM.set(3, 0, kb.t1.B * kb.b0.A);
  c.dM.set(3, 1, kb.t1.B * kb.b0.B);
  c.dM.set(4, 0, kb.t1.D * kb.b0.A);
  c.dM.set(4, 1, kb.t1.D * kb.b0.B);
  c.dM.set(5, 2, I(a.a1));

  c.Phi.set(2, 0, I(a.a1));
  c.Phi.set(3, 1, I(a.a0));
  c.Phi.set(4, 2, I(a.ainf));
  c.Phi.set(5, 3, I(a.a1));

  c.Psi1.set(2, 0, I(a.ainf));
  c.Psi1.set(3, 1, I(a.a1));

  c.Psi2.set(4, 3, kb.tinf.B * kb.b1.A);
  c.Psi2.set(4, 4, kb.tinf.B * kb.b1.B);
  c.Psi2.set(5, 3, kb.tinf.D * kb.b1.A);
  c.Psi2.set(5, 4, kb.tinf.D * kb.b1.B);

  c.Psi3 = c.Psi2 * c.Phi * c.Psi1;
  return c;
}

TypeDModule build_cfd(const KnotSystem& k) {
  CfdBlocks c = cfd_blocks(k);
  const Dims L = cfd_L_dims(k.a), M = cfd_M_dims(k.a);
  std::vector<Generator> gens;
  for (std::size_t s = 0; s < L.size(); ++s)
    for (std::size_t i = 0; i < L[s]; ++i)
      gens.push_back({"L" + std::to_string(s + 1) + "." + std::to_string(i + 1), Idempotent::I0});
  for (std::size_t s = 0; s < M.size(); ++s)
    for (std::size_t i = 0; i < M[s]; ++i)
      gens.push_back({"M" + std::to_string(s + 1) + "." + std::to_string(i + 1), Idempotent::I1});
  const std::size_t nL = sum(L);
  TypeDModule m(std::move(gens));
  m.add_block(0, 0, c.dL.flatten(), Coeff::Unit);
  m.add_block(nL, nL, c.dM.flatten(), Coeff::Unit);
  m.add_block(0, nL, c.Psi1.flatten(), Coeff::R1);
  m.add_block(0, nL, c.Psi2.flatten(), Coeff::R3);
  m.add_block(0, nL, c.Psi3.flatten(), Coeff::R123);
  m.add_block(nL, 0, c.Phi.flatten(), Coeff::R2);
  return m;
}

// ---------------------------------------------------------------------------
// Structure diagnostics

const char* convention_name(Convention c) { return c == Convention::Natural ? "natural" : "reversed"; }

Gf2Matrix square_residual(const TypeDModule& m, Coeff c, Convention conv) {
  Gf2Matrix out(m.size(), m.size());
  for (Coeff p : kAllCoeffs)
    for (Coeff q : kAllCoeffs) {
      auto prod = conv == Convention::Natural ? coeff_mul(p, q) : coeff_mul(q, p);
      if (!prod || *prod != c) continue;
      const Gf2Matrix &x = m.matrix(p), &y = m.matrix(q);
      if (x.is_zero() || y.is_zero()) continue;
      out += x * y;
    }
  return out;
}

bool ConventionReport::all_zero() const {
  return std::all_of(residual_rank.begin(), residual_rank.end(), [](std::size_t r) { return r == 0; });
}

const Relation* ConventionReport::find(const std::string& name) const {
  for (const auto& r : relations)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

ConventionReport convention_report(const TypeDModule& m, Convention conv) {
  ConventionReport rep;
  rep.convention = conv;
  std::vector<std::size_t> L, M;
  for (std::size_t i = 0; i < m.size(); ++i)
    (m.generators()[i].idempotent == Idempotent::I0 ? L : M).push_back(i);
  std::array<Gf2Matrix, kCoeffCount> res;
  for (Coeff c : kAllCoeffs) {
    res[idx(c)] = square_residual(m, c, conv);
    rep.residual_rank[idx(c)] = rank(res[idx(c)]);
  }
  auto rel = [&](std::string name, Coeff c, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    rep.relations.push_back({std::move(name), rank(res[idx(c)].select(rows, cols))});
  };
  rel("dL^2 = 0", Coeff::Unit, L, L);
  rel("dM^2 = 0", Coeff::Unit, M, M);
  rel("Psi1 chain map", Coeff::R1, L, M);
  rel("Psi2 chain map", Coeff::R3, L, M);
  rel("Psi3 chain map", Coeff::R123, L, M);
  rel("Phi chain map", Coeff::R2, M, L);
  if (conv == Convention::Natural) {
    rel("Psi1 Phi = 0", Coeff::R12, L, L);
    rel("Phi Psi2 = 0", Coeff::R23, M, M);
  } else {
    rel("Phi Psi1 = 0", Coeff::R12, M, M);
    rel("Psi2 Phi = 0", Coeff::R23, L, L);
  }
  return rep;
}

}  // namespace

StructureReport check_structure(const TypeDModule& m) {
  return {convention_report(m, Convention::Natural), convention_report(m, Convention::Reversed)};
}

// ---------------------------------------------------------------------------
// Reduction

struct ModuleReducer {
  static Reduction run(const TypeDModule& input) {
    Reduction out;
    TypeDModule m = input;
    for (;;) {
      const Gf2Matrix& u = m.mats_[idx(Coeff::Unit)];
      std::optional<std::pair<std::size_t, std::size_t>> pick;
      for (std::size_t i = 0; i < m.size() && !pick; ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          if (i != j && u.get(i, j)) {
            pick = {i, j};
            break;
          }
      if (!pick) break;
      auto [x, y] = *pick;
      ReductionStep step{m.gens_[x].id, m.gens_[y].id, m.size(), 0};

      // a'(w,z) = a(w,z) + a(w,y) a(x,z) for w != x, z != y.
      std::array<Gf2Matrix, kCoeffCount> next = m.mats_;
      for (Coeff p : kAllCoeffs)
        for (Coeff q : kAllCoeffs) {
          auto prod = coeff_mul(p, q);
          if (!prod) continue;
          Gf2Matrix col(m.size(), 1), row(1, m.size());
          bool any_col = false, any_row = false;
          for (std::size_t w = 0; w < m.size(); ++w)
            if (m.mats_[idx(p)].get(w, y)) {
              col.set(w, 0, true);
              any_col = true;
            }
          for (std::size_t z = 0; z < m.size(); ++z)
            if (m.mats_[idx(q)].get(x, z)) {
              row.set(0, z, true);
              any_row = true;
            }
          if (any_col && any_row) next[idx(*prod)] += col * row;
        }
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != x && i != y) keep.push_back(i);
      TypeDModule reduced;
      for (auto i : keep) reduced.gens_.push_back(m.gens_[i]);
      for (std::size_t c = 0; c < kCoeffCount; ++c) reduced.mats_[c] = next[c].select(keep, keep);
      m = std::move(reduced);
      step.generators_after = m.size();
      out.audit.push_back(step);
    }
    out.module = std::move(m);
    return out;
  }
};

Reduction reduce(const TypeDModule& m) { return ModuleReducer::run(m); }

}  // namespace hfsplice
