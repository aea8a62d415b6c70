// hfsplice: command-line front end.
//
// Exit codes: 0 success, 1 validation or property failure, 2 I/O, parse or usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "hfsplice/bordered.hpp"
#include "hfsplice/io.hpp"
#include "hfsplice/knot_system.hpp"
#include "hfsplice/selftest.hpp"
#include "hfsplice/splice.hpp"

#ifndef HFSPLICE_DATA_DIR
#define HFSPLICE_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace hfsplice;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kIoFailure = 2;

// Thrown when an input system fails validation.
struct InvalidInput {
  Json report;
};

fs::path data_dir() {
  if (const char* env = std::getenv("HFSPLICE_DATA"); env && *env) return env;
  return HFSPLICE_DATA_DIR;
}

// Accepts a path, or the name of a bundled system such as "trefoil_R".
fs::path resolve(const std::string& arg) {
  fs::path p(arg);
  if (fs::exists(p)) return p;
  if (!p.has_parent_path()) {
    fs::path bundled = data_dir() / p;
    if (!bundled.has_extension()) bundled += ".json";
    if (fs::exists(bundled)) return bundled;
  }
  return p;
}

KnotSystem load_valid(const std::string& arg) {
  KnotSystem k = load_knot_system(resolve(arg));
  ValidationReport r = validate(k, false);
  if (!r.structural) {
    Json j = to_json(r);
    j["name"] = k.name;
    throw InvalidInput{j};
  }
  return k;
}

struct Output {
  std::string path;
  std::string format = "json";

  void emit(const Json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (path.empty())
      std::cout << text;
    else
      write_text_file(path, text);
  }
};

int cmd_validate(const std::string& path, bool strict, const Output& out) {
  KnotSystem k = load_knot_system(resolve(path));
  ValidationReport r = validate(k, strict);
  Json j = to_json(r);
  j["name"] = k.name;
  out.emit(j);
  for (const auto& f : r.failures) std::cerr << k.name << ": " << f << "\n";
  return r.ok() ? kOk : kDomainFailure;
}

int cmd_splice(const std::string& a, const std::string& b, const Output& out) {
  KnotSystem k1 = load_valid(a), k2 = load_valid(b);
  SpliceReport r = splice_rank({k1, k2});
  Json j = to_json(r);
  out.emit(j);
  if (!r.pipeline_agreement) std::cerr << "note: direct and pipeline ranks disagree\n";
  return kOk;
}

int cmd_chi(const std::string& a, const std::string& b, const Output& out) {
  KnotSystem k1 = load_valid(a), k2 = load_valid(b);
  SpliceProblem p{k1, k2};
  out.emit(Json{{"chi", chi(p)}, {"dimB1", sum(frakD_row_dims(p))}, {"dimB2", sum(frakD_col_dims(p))}});
  return kOk;
}

int cmd_bound(const std::string& path, const Output& out) {
  KnotSystem k = load_valid(path);
  RrRankSplit sp = rr_rank_split(k);
  out.emit(Json{{"name", k.name},
                {"h0", k.a.h0()},
                {"h1", k.a.h1()},
                {"hinf", k.a.hinf()},
                {"bound", trefoil_bound(k.a)},
                {"rankM", sp.rank_M},
                {"rankMbar", sp.rank_Mbar}});
  return kOk;
}

int cmd_rr(const std::string& path, const Output& out) {
  KnotSystem k = load_valid(path);
  RrPipeline rr = build_Rr_pipeline(k);
  Gf2Matrix R = rr.rr.flatten();
  IotaDims i = iota(R);
  out.emit(Json{{"name", k.name},
                {"kernel", i.kernel},
                {"cokernel", i.cokernel},
                {"iota", i.total()},
                {"agreesWithTenByTen", iota(rr.ten_by_ten.flatten()) == i},
                {"bound", trefoil_bound(k.a)},
                {"Rr", to_json(R)}});
  return kOk;
}

int cmd_cfd(const std::string& path, const Output& out) {
  KnotSystem k = load_valid(path);
  TypeDModule m = build_cfd(k);
  out.emit(Json{{"name", k.name},
                {"module", to_json(m)},
                {"structure", to_json(check_structure(m))},
                {"admissible", to_json(validate_admissible(build_admissible(k), k))}});
  return kOk;
}

int cmd_selftest(std::uint64_t seed, std::size_t trials, const Output& out) {
  SelftestConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  fs::path r = data_dir() / "trefoil_R.json";
  if (fs::exists(r)) cfg.trefoil_right = load_knot_system(r);
  SelftestResult res = run_selftest(cfg);
  out.emit(to_json(res));
  for (const auto& t : res.tally)
    std::cerr << (t.failed ? "FAIL " : "ok   ") << t.name << " " << t.passed << "/" << (t.passed + t.failed) << "\n";
  for (const auto& f : res.findings) std::cerr << "finding: " << f << "\n";
  return res.ok() ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer splicing over GF(2)"};
  app.require_subcommand(1);
  Output out;
  std::uint64_t seed = SelftestConfig{}.seed;
  std::size_t trials = SelftestConfig{}.trials;
  bool strict = false;
  std::string p1, p2;

  app.add_option("--out", out.path, "Write JSON output to this file");
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json"}));

  auto* v = app.add_subcommand("validate", "Validate a knot-system file");
  v->add_option("system", p1)->required();
  v->add_flag("--strict", strict, "Also require tau^4 = id");

  auto* s = app.add_subcommand("splice", "Rank of HF-hat of the splice of two knot systems");
  s->add_option("k1", p1)->required();
  s->add_option("k2", p2)->required();

  auto* c = app.add_subcommand("chi", "Euler characteristic of the splice complex");
  c->add_option("k1", p1)->required();
  c->add_option("k2", p2)->required();

  auto* b = app.add_subcommand("bound", "Lower bound for splicing with the right-handed trefoil");
  b->add_option("system", p1)->required();

  auto* r = app.add_subcommand("rr", "The matrix R_r(K) and its iota");
  r->add_option("system", p1)->required();

  auto* d = app.add_subcommand("cfd", "Type-D module and structure report");
  d->add_option("system", p1)->required();

  auto* t = app.add_subcommand("selftest", "Randomized property suite");
  t->add_option("--seed", seed, "Random seed");
  t->add_option("--trials", trials, "Number of random knot-system pairs");

  for (auto* sub : {v, s, c, b, r, d, t}) {
    sub->add_option("--out", out.path, "Write JSON output to this file");
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kIoFailure;
  }

  try {
    if (*v) return cmd_validate(p1, strict, out);
    if (*s) return cmd_splice(p1, p2, out);
    if (*c) return cmd_chi(p1, p2, out);
    if (*b) return cmd_bound(p1, out);
    if (*r) return cmd_rr(p1, out);
    if (*d) return cmd_cfd(p1, out);
    if (*t) return cmd_selftest(seed, trials, out);
  } catch (const InvalidInput& e) {
    std::cout << e.report.dump(2) << "\n";
    std::cerr << "invalid knot system\n";
    return kDomainFailure;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kIoFailure;
}
