#include <doctest.h>

#include <filesystem>
#include <random>

#include "hfsplice/io.hpp"

using namespace hfsplice;

namespace {

std::filesystem::path fixture(const char* name) {
  return std::filesystem::path(HFSPLICE_DATA_DIR).parent_path() / "tests" / "data" / name;
}

}  // namespace

TEST_CASE("matrix round trip") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    Gf2Matrix m = Gf2Matrix::random(rng() % 6, rng() % 6, rng);
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK(matrix_from_json(Json::parse(to_json(m).dump())) == m);
  }
  Gf2Matrix tall(3, 0);
  CHECK(matrix_from_json(to_json(tall)) == tall);
}

TEST_CASE("matrix parse errors") {
  CHECK_THROWS_AS(matrix_from_json(Json::array()), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": -1, "cols": 1, "data": []})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 2, "cols": 1, "data": [[1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 2, "data": [[1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "data": [[2]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "data": [["1"]]})")), ParseError);
}

TEST_CASE("knot system round trip") {
  KnotSystem k = random_knot_system({2, 1, 3}, 9);
  k.name = "sample";
  KnotSystem back = knot_system_from_json(to_json(k));
  CHECK(back.name == "sample");
  CHECK(back.a == k.a);
  CHECK(back.tau0 == k.tau0);
  CHECK(back.tau1 == k.tau1);
  CHECK(back.tauinf == k.tauinf);
  CHECK_FALSE(back.theta);

  k.theta = random_theta(k.a, 4);
  back = knot_system_from_json(to_json(k));
  REQUIRE(back.theta);
  CHECK(back.theta->M == k.theta->M);
  CHECK(back.theta->P == k.theta->P);

  Json j = to_json(k);
  j.erase("tau1");
  CHECK_THROWS_AS(knot_system_from_json(j), ParseError);
  j = to_json(k);
  j["ranks"].erase("ainf");
  CHECK_THROWS_AS(knot_system_from_json(j), ParseError);
}

TEST_CASE("files") {
  KnotSystem e = load_knot_system(fixture("empty.json"));
  CHECK(e.a == Ranks{0, 0, 0});
  CHECK(validate(e, true).ok());

  KnotSystem s = load_knot_system(fixture("singular_tau0.json"));
  CHECK_FALSE(validate(s, false).ok());

  KnotSystem o = load_knot_system(fixture("order8.json"));
  CHECK(validate(o, false).ok());
  CHECK_FALSE(validate(o, true).ok());

  CHECK_THROWS_AS(load_knot_system(fixture("malformed.json")), ParseError);
  CHECK_THROWS_AS(load_knot_system(fixture("does_not_exist.json")), IoError);
  try {
    load_knot_system(fixture("does_not_exist.json"));
  } catch (const ParseError&) {
    FAIL("a missing file is not a parse error");
  } catch (const IoError&) {
  }

  KnotSystem r = load_knot_system(std::filesystem::path(HFSPLICE_DATA_DIR) / "trefoil_R.json");
  CHECK(r.name == "trefoil_R");
  CHECK(r.a == Ranks{1, 2, 2});
}

TEST_CASE("report json") {
  SpliceReport r;
  r.chi = -3;
  r.iota = {2, 5};
  r.hf_rank = 7;
  r.lower_bound = 3;
  Json j = to_json(r);
  CHECK(j["chi"] == -3);
  CHECK(j["kernel"] == 2);
  CHECK(j["cokernel"] == 5);
  CHECK(j["rank"] == 7);
  CHECK(j.begin().key() == "chi");

  ValidationReport v;
  v.structural = false;
  v.failures.push_back("tau0 not invertible");
  Json vj = to_json(v);
  CHECK(vj["valid"] == false);
  CHECK(vj["failures"][0] == "tau0 not invertible");
  CHECK_FALSE(vj.contains("strict"));

  TypeDModule m({{"x", Idempotent::I0}, {"y", Idempotent::I1}});
  m.add_arrow(0, 1, Coeff::R1);
  Json mj = to_json(m);
  CHECK(mj["arrows"][0]["coeff"] == "r1");
  CHECK(mj["generators"][1]["idempotent"] == "i1");

  Json sj = to_json(check_structure(m));
  CHECK(sj["natural"]["convention"] == "natural");
  CHECK(sj["natural"]["squareZero"] == true);
}

TEST_CASE("write_text_file") {
  auto p = std::filesystem::temp_directory_path() / "hfsplice_io_test.txt";
  write_text_file(p, "hello\n");
  CHECK(std::filesystem::file_size(p) == 6);
  std::filesystem::remove(p);
  CHECK_THROWS_AS(write_text_file("/nonexistent_dir/x/y.txt", "z"), IoError);
}
