#include <algorithm>

#include "core/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace hq;

namespace {

Weight w(std::initializer_list<long> coords) {
  QVec v;
  for (long c : coords) v.emplace_back(c);
  return Weight{v};
}

}  // namespace

TEST_CASE("Format strings") {
  CHECK(parse_format("text") == Format::text);
  CHECK(parse_format("json") == Format::json);
  CHECK_THROWS_AS(parse_format("yaml"), invalid_input);
  CHECK_THROWS_AS(parse_format(""), invalid_input);
}

TEST_CASE("Weight parsing") {
  Weight v = parse_weight("1,0,2", 3);
  CHECK(v.fw == w({1, 0, 2}).fw);
  Weight r = parse_weight("-1/2,3", 2);
  CHECK(r.fw[0] == make_rat(-1, 2));
  CHECK(r.fw[1] == 3);
  CHECK(parse_weight(" 1 , 2 ", 2).fw == w({1, 2}).fw);
  CHECK_THROWS_AS(parse_weight("1,2", 3), invalid_input);
  CHECK_THROWS_AS(parse_weight("1,2,3,4", 3), invalid_input);
  CHECK_THROWS_AS(parse_weight("1,x", 2), invalid_input);
  CHECK_THROWS_AS(parse_weight("", 2), invalid_input);
  CHECK_THROWS_AS(parse_weight("1/0", 1), invalid_input);
}

TEST_CASE("Weight list parsing") {
  auto list = parse_weight_list("1,0:0,1:1,1", 2);
  REQUIRE(list.size() == 3);
  CHECK(list[0].fw == w({1, 0}).fw);
  CHECK(list[2].fw == w({1, 1}).fw);
  CHECK_THROWS_AS(parse_weight_list("", 2), invalid_input);
  CHECK_THROWS_AS(parse_weight_list("1,0:1", 2), invalid_input);
}

TEST_CASE("Node list parsing") {
  CHECK(parse_nodes("1,4", 4) == std::vector<int>{0, 3});
  CHECK(parse_nodes("", 4).empty());
  CHECK(parse_nodes(" 2 ", 3) == std::vector<int>{1});
  CHECK_THROWS_AS(parse_nodes("0", 3), invalid_input);
  CHECK_THROWS_AS(parse_nodes("4", 3), invalid_input);
  CHECK_THROWS_AS(parse_nodes("-1", 3), invalid_input);
  CHECK_THROWS_AS(parse_nodes("a", 3), invalid_input);
}

TEST_CASE("Rational parsing") {
  CHECK(parse_rat("7") == 7);
  CHECK(parse_rat("-3/6") == make_rat(-1, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), invalid_input);
  CHECK_THROWS_AS(parse_rat("x"), invalid_input);
  CHECK_THROWS_AS(parse_rat(""), invalid_input);
}

TEST_CASE("Reports render deterministically in both formats") {
  auto rs = parse_type("A3");
  auto rep = hv_report(rs, w({1, 1, 0}));

  std::string text = render_hv(rs, rep, Format::text);
  CHECK(text == "type = A3\n"
                "lambda = (1,1,0)\n"
                "k = 2\n"
                "dim_X = 6\n"
                "dim_quotient = 3\n"
                "ed = 4\n"
                "hd = 1\n");
  CHECK(text == render_hv(rs, rep, Format::text));

  std::string js = render_hv(rs, rep, Format::json);
  CHECK(js.back() == '\n');
  auto j = nlohmann::json::parse(js);
  CHECK(j["type"] == "A3");
  CHECK(j["k"] == 2);
  CHECK(j["dim_X"] == 6);
  CHECK(j["dim_quotient"] == 3);
  CHECK(j["ed"] == "4");
  CHECK(j["hd"] == "1");
  CHECK(j["lambda"].size() == 3);
}

TEST_CASE("Rationals render as fraction strings in JSON") {
  auto rs = parse_type("B2");
  auto verdict = hm_admissible(rs, Coweight{QVec{Rat(1), Rat(1)}});
  auto j = nlohmann::json::parse(render_hm(rs, Coweight{QVec{Rat(1), Rat(1)}}, verdict,
                                           Format::json));
  CHECK(j["admissible"] == true);
  bool found_half = false;
  for (const auto& entry : j["pairings_shifted"]) found_half = found_half || entry == "1/2";
  CHECK(found_half);
}

TEST_CASE("Analysis rendering carries the verdicts") {
  auto rs = parse_type("A3");
  MonoidSpec spec;
  spec.generators = {w({1, 0, 0}), w({0, 0, 1})};
  auto rep = s_variety_report(rs, spec);
  auto j = nlohmann::json::parse(render_analysis(rs, rep, Format::json));
  CHECK(j["polynomial"] == true);
  CHECK(j["equidimensional"] == false);
  CHECK(j["polynomial_and_equidim"] == false);
  CHECK(j["dim_X"] == 7);
  CHECK(j["dim_quotient_U2"] == 4);
  std::string text = render_analysis(rs, rep, Format::text);
  CHECK(text.find("polynomial = true") != std::string::npos);
  CHECK(text.find("equidimensional = false") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("Cone rendering in both coordinate systems") {
  auto rs = parse_type("A2");
  Cone c = positive_roots_minus_simple_cone(rs);
  std::string text = render_cone(c, Format::text);
  CHECK(text.find("rays") != std::string::npos);
  auto j = nlohmann::json::parse(render_cone(c, Format::json));
  CHECK(j["ambient_dim"] == 2);
  CHECK(j["rays"].size() == 1);
  auto mem = nlohmann::json::parse(
      render_cone_membership(c, QVec{Rat(2), Rat(2)}, true, false, Format::json));
  CHECK(mem["contains"] == true);
}

TEST_CASE("Weight vectors with rational entries round trip through text") {
  QVec v{make_rat(-1, 2), Rat(3), Rat(0)};
  CHECK(qvec_str(v) == "(-1/2,3,0)");
  Weight back = parse_weight("-1/2,3,0", 3);
  CHECK(back.fw == v);
}
