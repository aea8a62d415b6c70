#include "hfsplice/knot_system.hpp"

#include <random>
#include <stdexcept>

namespace hfsplice {

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::Zero: return "0";
    case Slot::One: return "1";
    case Slot::Inf: return "inf";
  }
  return "?";
}

std::size_t Ranks::h(Slot s) const {
  switch (s) {
    case Slot::Zero: return h0();
    case Slot::One: return h1();
    case Slot::Inf: return hinf();
  }
  return 0;
}

std::size_t Ranks::a(Slot s) const {
  switch (s) {
    case Slot::Zero: return a0;
    case Slot::One: return a1;
    case Slot::Inf: return ainf;
  }
  return 0;
}

Dims decomposition(const Ranks& a, Slot s) {
  switch (s) {
    case Slot::Zero: return {a.ainf, a.a1};
    case Slot::One: return {a.a0, a.ainf};
    case Slot::Inf: return {a.a1, a.a0};
  }
  return {};
}

const Gf2Matrix& KnotSystem::tau(Slot s) const {
  switch (s) {
    case Slot::Zero: return tau0;
    case Slot::One: return tau1;
    case Slot::Inf: return tauinf;
  }
  throw std::logic_error("bad slot");
}

Gf2Matrix& KnotSystem::tau(Slot s) {
  return const_cast<Gf2Matrix&>(static_cast<const KnotSystem&>(*this).tau(s));
}

ThetaExtension KnotSystem::theta_or_zero() const {
  if (theta) return *theta;
  return {Gf2Matrix(a.a1, a.ainf), Gf2Matrix(a.a0, a.a1)};
}

TauBlocks split_blocks(const Gf2Matrix& m, std::size_t first) {
  const std::size_t n = m.rows(), rest = n - first;
  return {m.block(0, 0, first, first), m.block(0, first, first, rest), m.block(first, 0, rest, first),
          m.block(first, first, rest, rest)};
}

namespace {

constexpr Slot kSlots[] = {Slot::Zero, Slot::One, Slot::Inf};

std::string shape_of(const Gf2Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

ValidationReport validate(const KnotSystem& k, bool strict) {
  ValidationReport rep;
  rep.strict_checked = strict;
  auto fail = [&](std::string msg) {
    rep.structural = false;
    rep.failures.push_back(std::move(msg));
  };
  for (Slot s : kSlots) {
    const Gf2Matrix& t = k.tau(s);
    const std::size_t h = k.a.h(s);
    std::string nm = std::string("tau") + slot_name(s);
    if (t.rows() != h || t.cols() != h) {
      fail(nm + " has shape " + shape_of(t) + ", expected " + std::to_string(h) + "x" + std::to_string(h));
      continue;
    }
    if (!is_invertible(t)) {
      fail(nm + " not invertible");
      continue;
    }
    if (strict) {
      Gf2Matrix sq = t * t;
      if (!(sq * sq).is_identity()) {
        rep.strict = false;
        rep.failures.push_back(nm + " fourth power is not the identity");
      }
    }
  }
  if (k.theta) {
    if (k.theta->M.rows() != k.a.a1 || k.theta->M.cols() != k.a.ainf)
      fail("theta.M has shape " + shape_of(k.theta->M) + ", expected " + std::to_string(k.a.a1) + "x" +
           std::to_string(k.a.ainf));
    if (k.theta->P.rows() != k.a.a0 || k.theta->P.cols() != k.a.a1)
      fail("theta.P has shape " + shape_of(k.theta->P) + ", expected " + std::to_string(k.a.a0) + "x" +
           std::to_string(k.a.a1));
  }
  if (!rep.structural) rep.strict = false;
  return rep;
}

void require_valid(const KnotSystem& k) {
  ValidationReport r = validate(k, false);
  if (!r.structural) throw std::invalid_argument((k.name.empty() ? "knot system" : k.name) + ": " + r.failures.front());
}

const TauBlocks& KnotBlocks::tau(Slot s) const {
  switch (s) {
    case Slot::Zero: return t0;
    case Slot::One: return t1;
    case Slot::Inf: return tinf;
  }
  throw std::logic_error("bad slot");
}

const TauBlocks& KnotBlocks::bar(Slot s) const {
  switch (s) {
    case Slot::Zero: return b0;
    case Slot::One: return b1;
    case Slot::Inf: return binf;
  }
  throw std::logic_error("bad slot");
}

KnotBlocks knot_blocks(const KnotSystem& k) {
  require_valid(k);
  KnotBlocks kb;
  kb.a = k.a;
  kb.t0 = split_blocks(k.tau0, k.a.ainf);
  kb.t1 = split_blocks(k.tau1, k.a.a0);
  kb.tinf = split_blocks(k.tauinf, k.a.a1);
  kb.b0 = split_blocks(invert(k.tau0), k.a.ainf);
  kb.b1 = split_blocks(invert(k.tau1), k.a.a0);
  kb.binf = split_blocks(invert(k.tauinf), k.a.a1);
  kb.X = kb.tinf.B * kb.b1.B * kb.t0.B;
  kb.Xbar = kb.binf.B * kb.t1.B * kb.b0.B;
  kb.theta = k.theta_or_zero();
  return kb;
}

Gf2Matrix standard_f(const Ranks& a, Slot s) {
  Dims src, dst;
  std::size_t n = a.a(s);
  switch (s) {
    case Slot::Inf:
      src = decomposition(a, Slot::Zero);
      dst = decomposition(a, Slot::One);
      break;
    case Slot::Zero:
      src = decomposition(a, Slot::One);
      dst = decomposition(a, Slot::Inf);
      break;
    case Slot::One:
      src = decomposition(a, Slot::Inf);
      dst = decomposition(a, Slot::Zero);
      break;
  }
  Gf2Matrix f(sum(dst), sum(src));
  f.set_block(dst[0], 0, Gf2Matrix::identity(n));
  return f;
}

Gf2Matrix standard_theta(const Ranks& a) {
  Gf2Matrix t(a.hinf(), a.h0());
  t.set_block(0, a.ainf, Gf2Matrix::identity(a.a1));
  return t;
}

Gf2Matrix theta_presentation(const Ranks& a, const ThetaExtension& t) {
  if (t.M.rows() != a.a1 || t.M.cols() != a.ainf || t.P.rows() != a.a0 || t.P.cols() != a.a1)
    throw DimensionMismatch("theta extension shapes do not match the ranks");
  Gf2Matrix out(a.hinf(), a.h0());
  out.set_block(0, 0, t.M);
  out.set_block(0, a.ainf, Gf2Matrix::identity(a.a1));
  out.set_block(a.a1, 0, t.P * t.M);
  out.set_block(a.a1, a.ainf, t.P);
  return out;
}

DerivedMaps derive_dual_maps(const KnotSystem& k) {
  DerivedMaps d;
  d.f0 = standard_f(k.a, Slot::Zero);
  d.f1 = standard_f(k.a, Slot::One);
  d.finf = standard_f(k.a, Slot::Inf);
  Gf2Matrix i0 = invert(k.tau0), i1 = invert(k.tau1), iinf = invert(k.tauinf);
  d.fbar0 = k.tauinf * d.f0 * i1;
  d.fbar1 = k.tau0 * d.f1 * iinf;
  d.fbarinf = k.tau1 * d.finf * i0;
  d.theta = standard_theta(k.a);
  d.thetabar = k.tauinf * theta_presentation(k.a, k.theta_or_zero()) * i0;
  auto t0 = split_blocks(k.tau0, k.a.ainf);
  auto b1 = split_blocks(i1, k.a.a0);
  auto ti = split_blocks(k.tauinf, k.a.a1);
  d.X = ti.B * b1.B * t0.B;
  return d;
}

Gf2Matrix px_matrix(const Ranks& a, Slot s, const Gf2Matrix& X) {
  Dims d = decomposition(a, s);
  if (X.rows() != d[1] || X.cols() != d[0])
    throw DimensionMismatch(std::string("P_X on slot ") + slot_name(s) + " needs X of shape " +
                            std::to_string(d[1]) + "x" + std::to_string(d[0]) + ", got " + shape_of(X));
  Gf2Matrix p = Gf2Matrix::identity(d[0] + d[1]);
  p.set_block(d[0], 0, X);
  return p;
}

KnotSystem change_basis_px(const KnotSystem& k, Slot s, const Gf2Matrix& X) {
  Gf2Matrix p = px_matrix(k.a, s, X);
  KnotSystem out = k;
  out.tau(s) = p * k.tau(s) * p;
  return out;
}

std::pair<Gf2Matrix, Gf2Matrix> normalize_theta(const Gf2Matrix& X, const Gf2Matrix& Y) {
  const std::size_t a = X.rows(), b = X.cols();
  if (Y.cols() != a) throw DimensionMismatch("normalize_theta: Y must have " + std::to_string(a) + " columns");
  const std::size_t c = Y.rows();
  Gf2Matrix py = Gf2Matrix::identity(a + c);
  py.set_block(a, 0, Y);
  Gf2Matrix px = Gf2Matrix::identity(b + a);
  px.set_block(b, 0, X);
  return {py, px};
}

KnotSystem random_knot_system(const Ranks& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  KnotSystem k;
  k.name = "random-" + std::to_string(seed);
  k.a = a;
  k.tau0 = Gf2Matrix::random_invertible(a.h0(), rng);
  k.tau1 = Gf2Matrix::random_invertible(a.h1(), rng);
  k.tauinf = Gf2Matrix::random_invertible(a.hinf(), rng);
  return k;
}

ThetaExtension random_theta(const Ranks& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ThetaExtension t;
  t.M = Gf2Matrix::random(a.a1, a.ainf, rng);
  t.P = Gf2Matrix::random(a.a0, a.a1, rng);
  return t;
}

}  // namespace hfsplice
