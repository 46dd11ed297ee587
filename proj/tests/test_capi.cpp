#include <cstring>
#include <string>

#include "doctest.h"
#include "horoquot.h"
#include "json.hpp"

namespace {

struct Out {
  char* s = nullptr;
  ~Out() { hq_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct Handle {
  hq_root_system* rs = nullptr;
  ~Handle() { hq_root_system_free(rs); }
};

Handle make(const char* type) {
  Handle h;
  Out err;
  REQUIRE(hq_root_system_create(type, &h.rs, &err.s) == HQ_OK);
  REQUIRE(h.rs != nullptr);
  return h;
}

}  // namespace

TEST_CASE("Root system lifecycle") {
  Handle h = make("A3");
  CHECK(hq_root_system_rank(h.rs) == 3);

  hq_root_system* bad = nullptr;
  Out err;
  CHECK(hq_root_system_create("Q7", &bad, &err.s) == HQ_ERR_PARSE);
  CHECK(bad == nullptr);
  REQUIRE(err.s != nullptr);
  CHECK(std::strlen(err.s) > 0);

  hq_root_system_free(nullptr);  // must be a no-op
  hq_string_free(nullptr);
}

TEST_CASE("Analysis through the C interface") {
  Handle h = make("A3");
  Out out, err;
  CHECK(hq_analyze(h.rs, "1,0,0:0,0,1", HQ_FORMAT_TEXT, &out.s, &err.s) == HQ_OK);
  CHECK(err.s == nullptr);
  std::string text = out.str();
  CHECK(text.find("dim_X = 7") != std::string::npos);
  CHECK(text.find("polynomial = true") != std::string::npos);

  Out jout, jerr;
  CHECK(hq_analyze(h.rs, "1,0,0:0,0,1", HQ_FORMAT_JSON, &jout.s, &jerr.s) == HQ_OK);
  auto j = nlohmann::json::parse(jout.str());
  CHECK(j["dim_quotient_U2"] == 4);
  CHECK(j["equidimensional"] == false);
}

TEST_CASE("Error statuses mirror the input problem") {
  Handle h = make("A2");
  Out out, err;
  CHECK(hq_analyze(h.rs, "1,0,0", HQ_FORMAT_TEXT, &out.s, &err.s) == HQ_ERR_PARSE);
  CHECK(out.s == nullptr);
  REQUIRE(err.s != nullptr);

  Out out2, err2;
  CHECK(hq_hv(h.rs, "-1,0", HQ_FORMAT_TEXT, &out2.s, &err2.s) == HQ_ERR_PARSE);

  Out out3, err3;
  CHECK(hq_weyl_list(h.rs, 3, HQ_FORMAT_TEXT, &out3.s, &err3.s) == HQ_ERR_CAP);

  Out out4, err4;
  CHECK(hq_analyze(nullptr, "1,0", HQ_FORMAT_TEXT, &out4.s, &err4.s) == HQ_ERR_PARSE);
}

TEST_CASE("Report functions cover every subcommand surface") {
  Handle h = make("B2");
  struct Case {
    const char* name;
    hq_status status;
    std::string out;
  };

  Out o1, e1;
  CHECK(hq_hv(h.rs, "1,1", HQ_FORMAT_TEXT, &o1.s, &e1.s) == HQ_OK);
  CHECK(o1.str().find("ed = 4") != std::string::npos);

  Out o2, e2;
  CHECK(hq_nullcone(h.rs, "0,1", HQ_FORMAT_TEXT, &o2.s, &e2.s) == HQ_OK);
  CHECK(o2.str().find("length = 2") != std::string::npos);
  CHECK(o2.str().find("node_i = 2") != std::string::npos);

  Out o3, e3;
  CHECK(hq_sparse_check(h.rs, "1", HQ_FORMAT_JSON, &o3.s, &e3.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o3.str())["sparse"] == true);

  Out o4, e4;
  CHECK(hq_sparse_list(h.rs, HQ_FORMAT_JSON, &o4.s, &e4.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o4.str())["sets"].size() == 3);

  Out o5, e5;
  CHECK(hq_hm(h.rs, "1,1", HQ_FORMAT_JSON, &o5.s, &e5.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o5.str())["admissible"] == true);

  Out o6, e6;
  CHECK(hq_cofree(h.rs, "0,1", HQ_FORMAT_JSON, &o6.s, &e6.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o6.str())["status"] == "cofree");

  Out o7, e7;
  CHECK(hq_contraction(h.rs, "1,0:0,1", HQ_FORMAT_JSON, &o7.s, &e7.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o7.str())["passes"] == false);

  Out o8, e8;
  CHECK(hq_roots(h.rs, HQ_FORMAT_JSON, &o8.s, &e8.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o8.str())["roots"].size() == 4);

  Out o9, e9;
  CHECK(hq_weyl_summary(h.rs, HQ_FORMAT_JSON, &o9.s, &e9.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o9.str())["order"] == "8");

  Out o10, e10;
  CHECK(hq_weyl_list(h.rs, 0, HQ_FORMAT_JSON, &o10.s, &e10.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o10.str())["elements"].size() == 8);

  Out o11, e11;
  CHECK(hq_weyl_coset_reps(h.rs, "1", 0, HQ_FORMAT_JSON, &o11.s, &e11.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o11.str())["reps"].size() == 4);

  Out o12, e12;
  CHECK(hq_weyl_min_length(h.rs, "1", 0, HQ_FORMAT_JSON, &o12.s, &e12.s) == HQ_OK);

  Out o13, e13;
  CHECK(hq_weyl_orbit(h.rs, "1,0", 0, HQ_FORMAT_JSON, &o13.s, &e13.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o13.str())["orbit_size"] == "4");
  CHECK(nlohmann::json::parse(o13.str())["elements"].size() == 4);

  Out o14, e14;
  CHECK(hq_cone_from_weights(h.rs, "1,0:0,1", 0, nullptr, nullptr, HQ_FORMAT_JSON, &o14.s,
                             &e14.s) == HQ_OK);
  CHECK(nlohmann::json::parse(o14.str())["rays"].size() == 2);

  Out o15, e15;
  CHECK(hq_cone_roots_minus_simple(h.rs, 0, "1,1", nullptr, HQ_FORMAT_JSON, &o15.s, &e15.s) ==
        HQ_OK);
  CHECK(nlohmann::json::parse(o15.str()).contains("contains"));

  Out o16, e16;
  CHECK(hq_cone_roots_minus_simple(h.rs, 0, "1,1", "1,1", HQ_FORMAT_TEXT, &o16.s, &e16.s) ==
        HQ_ERR_PARSE);
}

TEST_CASE("Verification suites run through the C interface") {
  Out out, err;
  CHECK(hq_verify("monoid-example", HQ_FORMAT_JSON, &out.s, &err.s) == HQ_OK);
  CHECK(err.s == nullptr);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["suite"] == "monoid-example");
  CHECK(j["failures"] == 0);
  CHECK(j["ok"] == true);

  Out bad_out, bad_err;
  CHECK(hq_verify("no-such-suite", HQ_FORMAT_TEXT, &bad_out.s, &bad_err.s) == HQ_ERR_PARSE);
}

TEST_CASE("Version string") {
  const char* v = hq_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
}
