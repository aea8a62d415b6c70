#include "hfsplice/io.hpp"

#include <fstream>
#include <sstream>

namespace hfsplice {

namespace {

std::size_t get_count(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json dims_json(const Dims& d) {
  Json a = Json::array();
  for (auto x : d) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const Gf2Matrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Gf2Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix must be an object");
  const std::size_t rows = get_count(j, "rows"), cols = get_count(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) throw ParseError("matrix needs a 'data' array");
  const Json& data = j.at("data");
  Gf2Matrix m(rows, cols);
  if (cols == 0 && data.empty()) return m;
  if (data.size() != rows)
    throw ParseError("matrix data has " + std::to_string(data.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = data.at(r);
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& v = row.at(c);
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
        throw ParseError("matrix entries must be 0 or 1");
      m.set(r, c, v.get<int>() == 1);
    }
  }
  return m;
}

Json to_json(const KnotSystem& k) {
  Json j{{"name", k.name},
         {"ranks", {{"a0", k.a.a0}, {"a1", k.a.a1}, {"ainf", k.a.ainf}}},
         {"tau0", to_json(k.tau0)},
         {"tau1", to_json(k.tau1)},
         {"tauinf", to_json(k.tauinf)}};
  if (k.theta) j["theta"] = {{"M", to_json(k.theta->M)}, {"P", to_json(k.theta->P)}};
  return j;
}

KnotSystem knot_system_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("knot system must be a JSON object");
  KnotSystem k;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("'name' must be a string");
    k.name = j.at("name").get<std::string>();
  }
  if (!j.contains("ranks") || !j.at("ranks").is_object()) throw ParseError("missing object 'ranks'");
  const Json& r = j.at("ranks");
  k.a = {get_count(r, "a0"), get_count(r, "a1"), get_count(r, "ainf")};
  for (const char* key : {"tau0", "tau1", "tauinf"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  k.tau0 = matrix_from_json(j.at("tau0"));
  k.tau1 = matrix_from_json(j.at("tau1"));
  k.tauinf = matrix_from_json(j.at("tauinf"));
  if (j.contains("theta") && !j.at("theta").is_null()) {
    const Json& t = j.at("theta");
    if (!t.is_object() || !t.contains("M") || !t.contains("P")) throw ParseError("'theta' needs 'M' and 'P'");
    k.theta = ThetaExtension{matrix_from_json(t.at("M")), matrix_from_json(t.at("P"))};
  }
  return k;
}

Json to_json(const ValidationReport& r) {
  Json f = Json::array();
  for (const auto& s : r.failures) f.push_back(s);
  Json j{{"valid", r.ok()}, {"structural", r.structural}};
  if (r.strict_checked) j["strict"] = r.strict;
  j["failures"] = std::move(f);
  return j;
}

Json to_json(const SpliceReport& r) {
  return Json{{"chi", r.chi},
              {"kernel", r.iota.kernel},
              {"cokernel", r.iota.cokernel},
              {"rank", r.hf_rank},
              {"bound", r.lower_bound},
              {"pipelineAgreement", r.pipeline_agreement},
              {"directRank", r.direct_rank},
              {"displayMatches", r.display_matches},
              {"b1Dims", dims_json(r.b1_dims)},
              {"b2Dims", dims_json(r.b2_dims)}};
}

Json to_json(const TypeDModule& m) {
  Json gens = Json::array(), arrows = Json::array();
  for (const auto& g : m.generators()) gens.push_back({{"id", g.id}, {"idempotent", idempotent_name(g.idempotent)}});
  for (const auto& a : m.arrows())
    arrows.push_back(
        {{"from", m.generators()[a.from].id}, {"to", m.generators()[a.to].id}, {"coeff", coeff_name(a.coeff)}});
  return Json{{"generators", std::move(gens)}, {"arrows", std::move(arrows)}};
}

namespace {

Json convention_json(const ConventionReport& c) {
  Json res = Json::object();
  for (std::size_t i = 0; i < kCoeffCount; ++i) res[coeff_name(static_cast<Coeff>(i))] = c.residual_rank[i];
  Json rels = Json::array();
  for (const auto& r : c.relations)
    rels.push_back({{"relation", r.name}, {"holds", r.holds()}, {"residualRank", r.residual_rank}});
  return Json{{"convention", convention_name(c.convention)},
              {"squareZero", c.all_zero()},
              {"residualRanks", std::move(res)},
              {"relations", std::move(rels)}};
}

}  // namespace

Json to_json(const StructureReport& r) {
  return Json{{"natural", convention_json(r.natural)}, {"reversed", convention_json(r.reversed)}};
}

Json to_json(const AdmissibleReport& r) {
  Json checks = Json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"holds", ok}});
  return Json{{"admissible", r.ok()}, {"checks", std::move(checks)}};
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

KnotSystem load_knot_system(const std::filesystem::path& p) {
  Json j = read_json_file(p);
  try {
    KnotSystem k = knot_system_from_json(j);
    if (k.name.empty()) k.name = p.stem().string();
    return k;
  } catch (const ParseError& e) {
    throw ParseError(p.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
  if (!out) throw IoError("write failed for " + p.string());
}

}  // namespace hfsplice
