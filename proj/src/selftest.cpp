#include "hfsplice/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>

#include "hfsplice/bordered.hpp"
#include "hfsplice/cancel.hpp"
#include "hfsplice/splice.hpp"

namespace hfsplice {

std::size_t reference_rank(const Gf2Matrix& m) {
  std::vector<std::vector<unsigned char>> a(m.rows(), std::vector<unsigned char>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.get(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !a[p][c]) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && a[i][c])
        for (std::size_t j = c; j < m.cols(); ++j) a[i][j] ^= a[r][j];
    ++r;
  }
  return r;
}

namespace {

IotaDims ref_iota(const Gf2Matrix& m) {
  std::size_t r = reference_rank(m);
  return {m.cols() - r, m.rows() - r};
}

std::size_t ref_homology(const Gf2Matrix& d) { return d.rows() - 2 * reference_rank(d); }

Ranks random_ranks(std::mt19937_64& rng, std::size_t max_rank) {
  std::uniform_int_distribution<std::size_t> u(0, max_rank);
  Ranks a;
  a.a0 = u(rng);
  a.a1 = u(rng);
  a.ainf = u(rng);
  return a;
}

KnotSystem random_with_theta(std::mt19937_64& rng, std::size_t max_rank) {
  Ranks a = random_ranks(rng, max_rank);
  KnotSystem k = random_knot_system(a, rng());
  k.theta = random_theta(a, rng());
  return k;
}

struct BlockSample {
  BlockMatrix m;
  CancellationStep pivot;
};

BlockSample planted_identity(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> grid(1, 5), dim(0, 4);
  const std::size_t nr = grid(rng), nc = grid(rng);
  Dims rd(nr), cd(nc);
  for (auto& x : rd) x = dim(rng);
  for (auto& x : cd) x = dim(rng);
  CancellationStep s{std::uniform_int_distribution<std::size_t>(0, nr - 1)(rng),
                     std::uniform_int_distribution<std::size_t>(0, nc - 1)(rng)};
  cd[s.col] = rd[s.row] = std::max<std::size_t>(rd[s.row], 1);
  BlockMatrix m(rd, cd);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, Gf2Matrix::random(rd[i], cd[j], rng));
  m.set(s.row, s.col, Gf2Matrix::identity(rd[s.row]));
  return {m, s};
}

class Runner {
 public:
  explicit Runner(SelftestResult& r) : res_(r) {}

  void check(const std::string& name, bool ok, std::size_t trial, const std::function<Json()>& input,
             const std::string& detail = {}) {
    auto it = std::find_if(res_.tally.begin(), res_.tally.end(), [&](const auto& t) { return t.name == name; });
    if (it == res_.tally.end()) {
      res_.tally.push_back({name, 0, 0});
      it = res_.tally.end() - 1;
    }
    if (ok) {
      ++it->passed;
      return;
    }
    ++it->failed;
    if (!res_.first_failure) res_.first_failure = Counterexample{trial, name, detail, input()};
  }

 private:
  SelftestResult& res_;
};

Json pair_json(const KnotSystem& a, const KnotSystem& b) { return Json{{"k1", to_json(a)}, {"k2", to_json(b)}}; }

}  // namespace

SelftestResult run_selftest(const SelftestConfig& cfg) {
  SelftestResult res;
  Runner run(res);
  std::mt19937_64 rng(cfg.seed);
  std::size_t asymmetric = 0;

  for (std::size_t t = 0; t < cfg.trials; ++t) {
    KnotSystem k1 = random_with_theta(rng, cfg.max_rank);
    KnotSystem k2 = random_with_theta(rng, cfg.max_rank);
    const SpliceProblem p{k1, k2};
    auto input = [&] { return pair_json(k1, k2); };

    // iota chain
    const Gf2Matrix dB = build_dB(p).flatten();
    const Gf2Matrix dBp = build_dB_prime(p).flatten();
    const Gf2Matrix flat24 = refine_24(p).flatten();
    const FrakDPipeline pipe = frakD_pipeline(p);
    const Gf2Matrix D = pipe.frakD.flatten();
    const Gf2Matrix Dp = build_frakD_prime(p).flatten();
    const std::size_t hf = ref_homology(dB);
    const IotaDims iD = ref_iota(D);
    run.check("d_B squares to zero", (dB * dB).is_zero(), t, input);
    run.check("rank agrees with reference", rank(dB) == reference_rank(dB) && rank(D) == reference_rank(D), t,
              input);
    run.check("iota chain: d_B ~ d_B' ~ 24x24", ref_iota(dB) == ref_iota(dBp) && ref_iota(dBp) == ref_iota(flat24),
              t, input);
    run.check("iota chain: homology of d_B = i(frakD) = i(frakD')",
              hf == iD.total() && ref_iota(Dp) == iD && ref_homology(dBp) == hf, t, input,
              "hf=" + std::to_string(hf) + " i(frakD)=" + std::to_string(iD.total()));
    run.check("six cancellations leave only B_2 -> B_1", pipe.residual_zero, t, input);
    run.check("pipeline frakD equals the closed form", pipe.frakD == build_frakD(p), t, input);
    run.check("frakD' closed form", build_frakD_prime(p) == frakD_prime_formula(p), t, input);

    // theta independence
    {
      std::mt19937_64 trng(rng());
      bool same = true;
      for (int rep = 0; rep < 2 && same; ++rep) {
        SpliceProblem q = p;
        q.k1.theta = random_theta(k1.a, trng());
        q.k2.theta = random_theta(k2.a, trng());
        same = ref_iota(frakD_pipeline(q).frakD.flatten()) == iD && ref_homology(build_dB(q).flatten()) == hf;
      }
      run.check("theta independence", same, t, input);
    }

    // chi
    {
      const std::int64_t c = chi(p);
      const auto b1 = static_cast<std::int64_t>(sum(frakD_row_dims(p)));
      const auto b2 = static_cast<std::int64_t>(sum(frakD_col_dims(p)));
      const auto ker_minus_coker = static_cast<std::int64_t>(iD.kernel) - static_cast<std::int64_t>(iD.cokernel);
      run.check("chi = dim B_2 - dim B_1 = ker - coker", c == b2 - b1 && c == ker_minus_coker, t, input);
      run.check("rank >= |chi|", static_cast<std::int64_t>(iD.total()) >= std::llabs(c), t, input);
      for (const KnotSystem* k : {&k1, &k2})
        run.check("chi parity h0 + h1 = hinf mod 2", (k->a.h0() + k->a.h1()) % 2 == k->a.hinf() % 2, t, input);
    }

    // basis change P_X and symmetry
    {
      std::mt19937_64 prng(rng());
      Slot s = static_cast<Slot>(t % 3);
      Dims dec = decomposition(k1.a, s);
      Gf2Matrix X = Gf2Matrix::random(dec[1], dec[0], prng);
      KnotSystem moved = change_basis_px(k1, s, X);
      run.check("P_X basis change keeps the rank", ref_homology(build_dB({moved, k2}).flatten()) == hf, t, input);
      run.check("P_X is an involution", change_basis_px(moved, s, X).tau(s) == k1.tau(s), t, input);
      if (ref_homology(build_dB({k2, k1}).flatten()) != hf) ++asymmetric;
    }

    // cancellation oracle
    for (int rep = 0; rep < 3; ++rep) {
      BlockSample b = planted_identity(rng);
      IotaDims before = ref_iota(b.m.flatten());
      IotaDims after = ref_iota(cancel_identity(b.m, b.pivot).flatten());
      run.check("cancellation preserves iota", before == after, t, [&] { return to_json(b.m.flatten()); });
    }

    // kron rank rule
    {
      std::uniform_int_distribution<std::size_t> u(0, 5);
      Gf2Matrix a = Gf2Matrix::random(u(rng), u(rng), rng), b = Gf2Matrix::random(u(rng), u(rng), rng);
      run.check("rank(a (x) b) = rank a * rank b", reference_rank(kron(a, b)) == reference_rank(a) * reference_rank(b),
                t, [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}}; });
    }

    // R_r and the bound
    for (const KnotSystem* k : {&k1, &k2}) {
      RrPipeline rr = build_Rr_pipeline(*k);
      const Gf2Matrix R = rr.rr.flatten();
      run.check("R_r has shape h0 x h1", R.rows() == k->a.h0() && R.cols() == k->a.h1(), t, input);
      const IotaDims iR = ref_iota(R);
      run.check("iota(R_r) = iota(10x10) = iota(cancelled)",
                iR == ref_iota(rr.ten_by_ten.flatten()) && iR == ref_iota(rr.rr_cancelled.flatten()), t, input);
      RrRankSplit sp = rr_rank_split(*k);
      const std::size_t mid = k->a.h0() + k->a.h1() - 2 * (sp.rank_M + sp.rank_Mbar);
      run.check("bound <= h0 + h1 - 2(rk M + rk Mbar) <= i(R_r)",
                trefoil_bound(k->a) <= mid && mid <= iR.total(), t, input);
      if (cfg.trefoil_right) {
        const std::size_t full = ref_homology(build_dB({*cfg.trefoil_right, *k}).flatten());
        run.check("i(R_r(K)) = rank of splice(R, K)", full == iR.total(), t, input);
      }
    }

    // bordered
    for (const KnotSystem* k : {&k1, &k2}) {
      TypeDModule m = build_cfd(*k);
      run.check("type-D idempotents compatible", m.idempotents_compatible(), t, input);
      bool coeffs = m.matrix(Coeff::R12).is_zero() && m.matrix(Coeff::R23).is_zero();
      run.check("type-D coefficients in {1, r1, r2, r3, r123}", coeffs, t, input);
      const std::size_t count = (3 * k->a.a1 + 2 * k->a.a0 + k->a.ainf) + (2 * k->a.ainf + 3 * k->a.a1 + k->a.a0);
      run.check("type-D generator count", m.size() == count, t, input);
      StructureReport s = check_structure(m);
      run.check("Psi1 Phi = 0 and Phi Psi2 = 0",
                s.natural.find("Psi1 Phi = 0")->holds() && s.natural.find("Phi Psi2 = 0")->holds(), t, input);
      run.check("d^2 = 0 (natural convention)", s.natural.all_zero(), t, input);
      run.check("admissible data", validate_admissible(build_admissible(*k), *k).ok(), t, input);
    }
  }
  if (asymmetric > 0)
    res.findings.push_back("rank(K1, K2) != rank(K2, K1) in " + std::to_string(asymmetric) + " of " +
                           std::to_string(cfg.trials) + " trials");
  else if (cfg.trials > 0)
    res.findings.push_back("rank(K1, K2) = rank(K2, K1) in all " + std::to_string(cfg.trials) + " trials");
  return res;
}

Json to_json(const SelftestResult& r) {
  Json tally = Json::array();
  for (const auto& t : r.tally) tally.push_back({{"property", t.name}, {"passed", t.passed}, {"failed", t.failed}});
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(f);
  Json j{{"ok", r.ok()}, {"tally", std::move(tally)}, {"findings", std::move(findings)}};
  if (r.first_failure)
    j["counterexample"] = {{"trial", r.first_failure->trial},
                           {"property", r.first_failure->property},
                           {"detail", r.first_failure->detail},
                           {"input", r.first_failure->input}};
  return j;
}

}  // namespace hfsplice
