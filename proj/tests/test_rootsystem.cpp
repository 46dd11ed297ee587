#include <algorithm>

#include "core/io.hpp"
#include "core/rootsystem.hpp"
#include "doctest.h"

using namespace hq;

namespace {

Weight w(std::initializer_list<long> coords) {
  QVec v;
  for (long c : coords) v.emplace_back(c);
  return Weight{v};
}

long positive_root_count(const std::string& type) {
  return static_cast<long>(parse_type(type).positive_roots.size());
}

}  // namespace

TEST_CASE("Cartan matrices of the rank-two types") {
  auto a2 = parse_type("A2");
  CHECK(a2.cartan.at(0, 1) == -1);
  CHECK(a2.cartan.at(1, 0) == -1);
  CHECK(a2.cartan_inv[0][0] == make_rat(2, 3));
  CHECK(a2.cartan_inv[0][1] == make_rat(1, 3));

  auto b2 = parse_type("B2");
  CHECK(b2.cartan.at(0, 1) == -1);
  CHECK(b2.cartan.at(1, 0) == -2);
  CHECK(b2.cartan_inv[0][0] == 1);
  CHECK(b2.cartan_inv[0][1] == make_rat(1, 2));
  CHECK(b2.cartan_inv[1][0] == 1);
  CHECK(b2.cartan_inv[1][1] == 1);
  CHECK(b2.d[0] == 1);
  CHECK(b2.d[1] == make_rat(1, 2));

  auto c2 = parse_type("C2");
  CHECK(c2.cartan.at(0, 1) == -2);
  CHECK(c2.cartan.at(1, 0) == -1);
  CHECK(c2.cartan_inv[0][0] == 1);
  CHECK(c2.cartan_inv[0][1] == 1);
  CHECK(c2.cartan_inv[1][0] == make_rat(1, 2));
  CHECK(c2.cartan_inv[1][1] == 1);
  CHECK(c2.d[0] == make_rat(1, 2));
  CHECK(c2.d[1] == 1);

  auto g2 = parse_type("G2");
  CHECK(g2.cartan.at(0, 1) == -3);
  CHECK(g2.cartan.at(1, 0) == -1);
  CHECK(g2.cartan_inv[0][0] == 2);
  CHECK(g2.cartan_inv[0][1] == 3);
  CHECK(g2.cartan_inv[1][0] == 1);
  CHECK(g2.cartan_inv[1][1] == 2);
  CHECK(g2.d[0] == make_rat(1, 3));
  CHECK(g2.d[1] == 1);
}

TEST_CASE("Asymmetric off-diagonal entries sit at the short-root column") {
  auto b4 = parse_type("B4");
  CHECK(b4.cartan.at(2, 3) == -1);
  CHECK(b4.cartan.at(3, 2) == -2);
  auto c4 = parse_type("C4");
  CHECK(c4.cartan.at(2, 3) == -2);
  CHECK(c4.cartan.at(3, 2) == -1);
  auto f4 = parse_type("F4");
  CHECK(f4.cartan.at(1, 2) == -1);
  CHECK(f4.cartan.at(2, 1) == -2);
  CHECK(f4.d[1] == 1);
  CHECK(f4.d[2] == make_rat(1, 2));
}

TEST_CASE("D-type fork and low-rank coincidences") {
  auto d4 = parse_type("D4");
  CHECK(d4.adjacent(1, 0));
  CHECK(d4.adjacent(1, 2));
  CHECK(d4.adjacent(1, 3));
  CHECK(!d4.adjacent(2, 3));

  auto d3 = parse_type("D3");
  QVec diag = cartan_inverse_diagonal(d3);
  CHECK(diag[0] == 1);
  CHECK(diag[1] == make_rat(3, 4));
  CHECK(diag[2] == make_rat(3, 4));
  CHECK(static_cast<long>(d3.positive_roots.size()) == 6);

  auto a3 = parse_type("A3");
  QVec a3diag = cartan_inverse_diagonal(a3);
  CHECK(a3diag[0] == make_rat(3, 4));
  CHECK(a3diag[1] == 1);
  CHECK(a3diag[2] == make_rat(3, 4));
}

TEST_CASE("Positive root counts") {
  CHECK(positive_root_count("A1") == 1);
  CHECK(positive_root_count("A5") == 15);
  CHECK(positive_root_count("B3") == 9);
  CHECK(positive_root_count("C4") == 16);
  CHECK(positive_root_count("D5") == 20);
  CHECK(positive_root_count("E6") == 36);
  CHECK(positive_root_count("E7") == 63);
  CHECK(positive_root_count("E8") == 120);
  CHECK(positive_root_count("F4") == 24);
  CHECK(positive_root_count("G2") == 6);
  CHECK(positive_root_count("A1xA2") == 4);
}

TEST_CASE("Roots are sorted by height and agree in both coordinate systems") {
  auto rs = parse_type("F4");
  int last_height = 0;
  for (const auto& beta : rs.positive_roots) {
    CHECK(beta.height >= last_height);
    last_height = beta.height;
    long sum = 0;
    for (long c : beta.root) sum += c;
    CHECK(sum == beta.height);
    for (int i = 0; i < rs.rank; ++i) {
      long v = 0;
      for (int j = 0; j < rs.rank; ++j) v += rs.cartan.at(i, j) * beta.root[j];
      CHECK(v == beta.fw[i]);
    }
  }
  CHECK(rs.positive_roots.front().height == 1);
  CHECK(rs.positive_roots.back().height == 11);
}

TEST_CASE("Root-basis conversion round trip") {
  auto rs = parse_type("A3");
  QVec rc = to_root_basis(rs, w({-1, 1, 0}));
  CHECK(rc[0] == make_rat(-1, 4));
  CHECK(rc[1] == make_rat(1, 2));
  CHECK(rc[2] == make_rat(1, 4));
  Weight back = from_root_basis(rs, rc);
  CHECK(back.fw == w({-1, 1, 0}).fw);
}

TEST_CASE("rho and the sum of positive roots") {
  for (const char* type : {"A4", "B3", "D4", "G2", "A1xB2"}) {
    auto rs = parse_type(type);
    Weight r = rho(rs);
    QVec twice(rs.rank, Rat(0));
    for (const auto& beta : rs.positive_roots)
      for (int i = 0; i < rs.rank; ++i) twice[i] += beta.fw[i];
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(r.fw[i] == 1);
      CHECK(twice[i] == 2);
    }
  }
}

TEST_CASE("Bilinear form normalisation") {
  auto g2 = parse_type("G2");
  Weight alpha1 = simple_root(g2, 0);
  Weight alpha2 = simple_root(g2, 1);
  CHECK(bilinear_form(g2, alpha1.fw, alpha1.fw) == make_rat(2, 3));
  CHECK(bilinear_form(g2, alpha2.fw, alpha2.fw) == 2);
  CHECK(bilinear_form(g2, alpha1.fw, alpha2.fw) == -1);

  auto b3 = parse_type("B3");
  CHECK(bilinear_form(b3, simple_root(b3, 2).fw, simple_root(b3, 2).fw) == 1);
  CHECK(bilinear_form(b3, simple_root(b3, 0).fw, simple_root(b3, 0).fw) == 2);
}

TEST_CASE("Pairings between weights and coweights") {
  auto rs = parse_type("B2");
  Coweight tau{QVec{Rat(1), Rat(0)}};
  CHECK(pairing(rs, tau, simple_root(rs, 0)) == 1);
  CHECK(pairing(rs, tau, simple_root(rs, 1)) == 0);
  CHECK(pairing(rs, tau, w({1, 0})) == 1);
  CHECK(pairing(rs, tau, w({0, 1})) == make_rat(1, 2));

  Coweight hr = half_sum_positive_coroots(rs);
  for (int i = 0; i < rs.rank; ++i) CHECK(pairing(rs, hr, simple_root(rs, i)) == 1);
}

TEST_CASE("Coweight coordinate conversions") {
  auto rs = parse_type("G2");
  Coweight tau{QVec{Rat(1), Rat(1)}};
  QVec dual = coweight_dual_coords(rs, tau);
  CHECK(qvec_dot(dual, w({1, 0}).fw) == pairing(rs, tau, w({1, 0})));
  CHECK(qvec_dot(dual, w({2, 5}).fw) == pairing(rs, tau, w({2, 5})));
}

TEST_CASE("Dominance and integrality checks") {
  auto rs = parse_type("A2");
  CHECK(is_dominant(w({1, 0})));
  CHECK(!is_dominant(w({-1, 2})));
  CHECK(is_integral(w({3, 2})));
  CHECK(!is_integral(Weight{QVec{make_rat(1, 2), Rat(0)}}));
  CHECK_THROWS_AS(require_dominant_integral(rs, w({-1, 0}), "test"), invalid_input);
  CHECK_THROWS_AS(
      require_dominant_integral(rs, Weight{QVec{make_rat(1, 2), Rat(0)}}, "test"),
      invalid_input);
  IVec lam = require_dominant_integral(rs, w({2, 1}), "test");
  CHECK(lam == IVec{2, 1});
}

TEST_CASE("Root lookup") {
  auto rs = parse_type("A2");
  IVec theta{1, 1};
  int idx = root_lookup(rs, theta);
  CHECK(idx > 0);
  CHECK(rs.positive_roots[idx - 1].fw == theta);
  IVec neg{-1, -1};
  CHECK(root_lookup(rs, neg) == -idx);
  IVec not_root{2, 0};
  CHECK(root_lookup(rs, not_root) == 0);
}

TEST_CASE("Composite systems") {
  auto rs = parse_type("A1xA2");
  CHECK(rs.rank == 3);
  CHECK(rs.type_string() == "A1xA2");
  CHECK(rs.node_factor == std::vector<int>{0, 1, 1});
  CHECK(rs.factor_span[0] == std::pair<int, int>(0, 1));
  CHECK(rs.factor_span[1] == std::pair<int, int>(1, 3));
  CHECK(rs.cartan.at(0, 1) == 0);
  CHECK(rs.cartan.at(1, 2) == -1);
  CHECK(!rs.simple());
  CHECK(parse_type("B3").simple());
}

TEST_CASE("Type validation") {
  CHECK_THROWS_AS(parse_type("B1"), invalid_input);
  CHECK_THROWS_AS(parse_type("C1"), invalid_input);
  CHECK_THROWS_AS(parse_type("D2"), invalid_input);
  CHECK_THROWS_AS(parse_type("E9"), invalid_input);
  CHECK_THROWS_AS(parse_type("F5"), invalid_input);
  CHECK_THROWS_AS(parse_type("G3"), invalid_input);
  CHECK_THROWS_AS(parse_type("H2"), invalid_input);
  CHECK_THROWS_AS(parse_type(""), invalid_input);
  CHECK_THROWS_AS(parse_type("A0"), invalid_input);
  CHECK_THROWS_AS(parse_type("A2x"), invalid_input);
  CHECK(parse_type("E8").rank == 8);
  CHECK(parse_type("A9").rank == 9);
}
