#include <algorithm>

#include "core/analysis.hpp"
#include "core/io.hpp"
#include "doctest.h"

using namespace hq;

namespace {

Weight w(std::initializer_list<long> coords) {
  QVec v;
  for (long c : coords) v.emplace_back(c);
  return Weight{v};
}

}  // namespace

TEST_CASE("Sparse node sets") {
  auto a4 = parse_type("A4");
  auto sets = enumerate_sparse_sets(a4);
  std::vector<std::vector<int>> expect = {{}, {0}, {1}, {2}, {3}, {0, 3}};
  CHECK(sets == expect);

  auto a3 = parse_type("A3");
  auto check = is_sparse(a3, {0, 2});
  CHECK(!check.sparse);
  REQUIRE(check.violation.has_value());
  CHECK(check.violation->kind == "common-neighbor");
  CHECK(check.violation->nodes == std::vector<int>{0, 2});
  CHECK(check.violation->via == 1);

  auto adjacent = is_sparse(a3, {0, 1});
  CHECK(!adjacent.sparse);
  REQUIRE(adjacent.violation.has_value());
  CHECK(adjacent.violation->kind == "adjacent-pair");

  CHECK(is_sparse(a3, {}).sparse);
  CHECK(is_sparse(a3, {1}).sparse);
  CHECK(is_sparse(parse_type("B4"), {0, 3}).sparse);
  CHECK(!is_sparse(parse_type("B4"), {0, 2}).sparse);
  CHECK(is_sparse(parse_type("E6"), {0, 1}).sparse);
  CHECK(!is_sparse(parse_type("D4"), {0, 2}).sparse);
  CHECK_THROWS_AS(is_sparse(a3, {5}), invalid_input);
}

TEST_CASE("Sparse sets are subset-closed") {
  for (const char* type : {"B4", "D5", "E6"}) {
    auto rs = parse_type(type);
    auto sets = enumerate_sparse_sets(rs);
    for (const auto& s : sets)
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> sub = s;
        sub.erase(sub.begin() + drop);
        CHECK(std::find(sets.begin(), sets.end(), sub) != sets.end());
      }
  }
}

TEST_CASE("Highest-weight-vector orbit closures") {
  auto a3 = parse_type("A3");
  auto rep = hv_report(a3, w({0, 1, 0}));
  CHECK(rep.dim_X == 5);
  CHECK(rep.dim_quotient == 2);
  CHECK(rep.k == 1);
  CHECK(rep.ed == 2);
  CHECK(rep.hd == 0);

  rep = hv_report(a3, w({1, 1, 0}));
  CHECK(rep.dim_X == 6);
  CHECK(rep.dim_quotient == 3);
  CHECK(rep.ed == 4);
  CHECK(rep.hd == 1);

  rep = hv_report(a3, w({2, 0, 0}));
  CHECK(rep.dim_X == 4);
  CHECK(rep.dim_quotient == 2);
  CHECK(rep.ed == 3);
  CHECK(rep.hd == 1);

  CHECK_THROWS_AS(hv_report(a3, w({-1, 0, 0})), invalid_input);
}

TEST_CASE("Minimal generating sets") {
  MonoidSpec spec;
  spec.generators = {w({1, 0}), w({2, 0}), w({1, 1})};
  auto minimal = minimal_generators(spec);
  REQUIRE(minimal.generators.size() == 2);
  bool has_fund = false, has_sum = false;
  for (const auto& g : minimal.generators) {
    has_fund = has_fund || g.fw == w({1, 0}).fw;
    has_sum = has_sum || g.fw == w({1, 1}).fw;
  }
  CHECK(has_fund);
  CHECK(has_sum);
}

TEST_CASE("Monoid reports") {
  auto a3 = parse_type("A3");
  MonoidSpec spec;
  spec.generators = {w({1, 0, 0}), w({0, 0, 1})};
  auto rep = s_variety_report(a3, spec);
  CHECK(rep.rk_S == 2);
  CHECK(rep.srk_L == 1);
  CHECK(rep.dim_gp == 5);
  CHECK(rep.dim_X == 7);
  CHECK(rep.dim_quotient_U == 2);
  CHECK(rep.dim_quotient_U2 == 4);
  CHECK(rep.polynomial);
  CHECK(!rep.equidimensional);
  CHECK(!rep.polynomial_and_equidim);
  REQUIRE(rep.witnesses.sparse_violation.has_value());
  CHECK(rep.witnesses.sparse_violation->kind == "common-neighbor");

  auto a2 = parse_type("A2");
  MonoidSpec single;
  single.generators = {w({1, 0})};
  auto srep = s_variety_report(a2, single);
  CHECK(srep.rk_S == 1);
  CHECK(srep.srk_L == 1);
  CHECK(srep.dim_gp == 2);
  CHECK(srep.dim_X == 3);
  CHECK(srep.dim_quotient_U2 == 2);
  CHECK(srep.polynomial);
  CHECK(srep.equidimensional);
  CHECK(srep.polynomial_and_equidim);
  CHECK(srep.witnesses.ray_nodes == std::vector<int>{0});

  MonoidSpec both;
  both.generators = {w({1, 0}), w({0, 1})};
  auto brep = s_variety_report(a2, both);
  CHECK(brep.polynomial);
  CHECK(!brep.equidimensional);
  REQUIRE(brep.witnesses.sparse_violation.has_value());
  CHECK(brep.witnesses.sparse_violation->kind == "adjacent-pair");

  MonoidSpec doubled;
  doubled.generators = {w({2, 0})};
  auto drep = s_variety_report(a2, doubled);
  CHECK(!drep.polynomial);
  REQUIRE(drep.witnesses.non_fundamental_generator.has_value());
  CHECK(drep.witnesses.non_fundamental_generator->fw == w({2, 0}).fw);
  CHECK(drep.equidimensional);
}

TEST_CASE("Null-cone witnesses") {
  auto a2 = parse_type("A2");
  auto witness = nullcone_codim2_witness(a2, w({1, 1}));
  CHECK(witness.node_i == 0);
  CHECK(witness.node_iprime == 1);
  CHECK(witness.w.length == 2);
  CHECK(witness.w.word == std::vector<int>{1, 0});
  CHECK(witness.image.fw == w({1, -2}).fw);
  CHECK(witness.box_defect == IVec{1, 2});
  CHECK(witness.length1_nodes == std::vector<int>{0, 1});
  CHECK(witness.length1_all_inside);

  auto b2 = parse_type("B2");
  auto bw = nullcone_codim2_witness(b2, w({0, 1}));
  CHECK(bw.node_i == 1);
  CHECK(bw.node_iprime == 0);
  CHECK(bw.w.word == std::vector<int>{0, 1});
  CHECK(bw.image.fw == w({-1, 1}).fw);
  CHECK(bw.box_defect == IVec{1, 1});
  CHECK(bw.length1_all_inside);

  auto mixed = parse_type("A1xA2");
  auto mw = nullcone_codim2_witness(mixed, w({1, 1, 0}));
  CHECK(mw.node_i == 1);
  CHECK(mw.node_iprime == 2);

  CHECK_THROWS_AS(nullcone_codim2_witness(parse_type("A1"), w({1})), invalid_input);
  CHECK_THROWS_AS(nullcone_codim2_witness(mixed, w({1, 0, 0})), invalid_input);
  CHECK_THROWS_AS(nullcone_codim2_witness(a2, w({0, 0})), invalid_input);
}

TEST_CASE("Admissible one-parameter subgroups") {
  auto g2 = parse_type("G2");
  auto verdict = hm_admissible(g2, Coweight{QVec{Rat(1), Rat(1)}});
  CHECK(verdict.admissible);
  CHECK(verdict.within_hypotheses);
  CHECK(verdict.pairings_fundamental == QVec{Rat(3), Rat(5)});
  CHECK(verdict.pairings_shifted == QVec{Rat(2), Rat(4)});

  CHECK(!hm_admissible(g2, Coweight{QVec{Rat(0), Rat(0)}}).admissible);
  CHECK(hm_admissible(g2, Coweight{QVec{make_rat(1, 2), make_rat(1, 2)}}).admissible);

  auto a2 = parse_type("A2");
  auto averdict = hm_admissible(a2, Coweight{QVec{Rat(1), Rat(1)}});
  CHECK(!averdict.admissible);
  CHECK(!averdict.within_hypotheses);
  CHECK(averdict.pairings_shifted == QVec{Rat(0), Rat(0)});

  auto b2 = parse_type("B2");
  auto bverdict = hm_admissible(b2, Coweight{QVec{Rat(1), Rat(1)}});
  CHECK(bverdict.admissible);
  CHECK(bverdict.pairings_fundamental == QVec{Rat(2), make_rat(3, 2)});
  CHECK(bverdict.pairings_shifted == QVec{Rat(1), make_rat(1, 2)});
  CHECK(!hm_admissible(b2, Coweight{QVec{Rat(1), Rat(0)}}).admissible);
}

TEST_CASE("Admissibility matches interior membership in the dual description") {
  for (const char* type : {"B3", "C3", "G2", "D4"}) {
    auto rs = parse_type(type);
    Cone cone = positive_roots_minus_simple_cone(rs);
    std::vector<QVec> taus = {QVec(rs.rank, Rat(1)), QVec(rs.rank, Rat(0))};
    QVec mixed(rs.rank, Rat(0));
    mixed[0] = 3;
    mixed[rs.rank - 1] = make_rat(1, 3);
    taus.push_back(mixed);
    QVec skew(rs.rank, Rat(2));
    skew[0] = make_rat(-1, 2);
    taus.push_back(skew);
    for (const QVec& t : taus) {
      Coweight tau{t};
      bool adm = hm_admissible(rs, tau).admissible;
      Weight sharp = coweight_as_weight(rs, tau);
      CHECK(adm == cone_interior_contains(cone, sharp.fw));
    }
  }
}

TEST_CASE("Contraction hypotheses") {
  auto b3 = parse_type("B3");
  auto pass = check_contraction_hypotheses(b3, {w({0, 0, 1})});
  CHECK(pass.passes);
  CHECK(pass.failures.empty());
  CHECK(pass.node_set == std::vector<int>{2});
  REQUIRE(pass.krull_dim.has_value());
  CHECK(*pass.krull_dim == 2);

  auto doubled = check_contraction_hypotheses(b3, {w({2, 0, 0})});
  CHECK(!doubled.passes);
  REQUIRE(doubled.failures.size() == 1);
  CHECK(doubled.failures[0].kind == "non-fundamental");
  CHECK(doubled.failures[0].indices == std::vector<int>{1});

  auto a4 = parse_type("A4");
  auto spread = check_contraction_hypotheses(a4, {w({1, 0, 0, 0}), w({0, 0, 0, 1})});
  CHECK(spread.passes);
  REQUIRE(spread.krull_dim.has_value());
  CHECK(*spread.krull_dim == 4);

  auto with_zero = check_contraction_hypotheses(parse_type("A2"), {w({1, 0}), w({0, 0})});
  CHECK(with_zero.passes);
  CHECK(with_zero.ignored_invariant_generators == 1);
  REQUIRE(with_zero.krull_dim.has_value());
  CHECK(*with_zero.krull_dim == 2);

  auto d6 = parse_type("D6");
  std::vector<Weight> gens = {w({0, 0, 0, 0, 0, 1}), w({0, 1, 0, 0, 0, 0}),
                              w({0, 0, 0, 0, 0, 1}), w({0, 0, 0, 1, 0, 0}),
                              w({0, 0, 0, 0, 0, 0})};
  auto family = check_contraction_hypotheses(d6, gens);
  CHECK(!family.passes);
  CHECK(family.ignored_invariant_generators == 1);
  bool repeated = false, sparse_fail = false;
  for (const auto& f : family.failures) {
    if (f.kind == "repeated-weight") {
      repeated = true;
      CHECK(f.indices == std::vector<int>{1, 3});
    }
    if (f.kind == "sparse-violation") sparse_fail = true;
  }
  CHECK(repeated);
  CHECK(sparse_fail);
}

TEST_CASE("Cofreeness classification") {
  auto status = [](const std::string& type, std::initializer_list<long> coords) {
    auto rs = parse_type(type);
    QVec v;
    for (long c : coords) v.emplace_back(c);
    return classify_cofree(rs, Weight{v}).status;
  };

  CHECK(status("A3", {1, 0, 0}) == "cofree");
  CHECK(status("A3", {0, 1, 0}) == "cofree");
  CHECK(status("A4", {0, 0, 0, 1}) == "cofree");
  CHECK(status("A4", {0, 0, 1, 0}) == "polynomial-not-cofree");
  CHECK(status("A4", {0, 1, 0, 0}) == "polynomial-not-cofree");
  CHECK(status("A5", {0, 0, 1, 0, 0}) == "not-cofree");
  CHECK(status("B2", {0, 1}) == "cofree");
  CHECK(status("C2", {0, 1}) == "cofree");
  CHECK(status("B4", {0, 0, 0, 1}) == "cofree");
  CHECK(status("B5", {0, 0, 0, 0, 1}) == "polynomial-not-cofree");
  CHECK(status("C3", {1, 0, 0}) == "cofree");
  CHECK(status("C3", {0, 0, 1}) == "not-cofree");
  CHECK(status("D5", {0, 0, 0, 0, 1}) == "cofree");
  CHECK(status("D6", {0, 0, 0, 0, 1, 0}) == "polynomial-not-cofree");
  CHECK(status("D6", {0, 0, 0, 0, 0, 1}) == "polynomial-not-cofree");
  CHECK(status("D4", {0, 0, 1, 0}) == "cofree");
  CHECK(status("E6", {1, 0, 0, 0, 0, 0}) == "cofree");
  CHECK(status("E6", {0, 0, 0, 0, 0, 1}) == "cofree");
  CHECK(status("E7", {0, 0, 0, 0, 0, 0, 1}) == "polynomial-not-cofree");
  CHECK(status("E7", {1, 0, 0, 0, 0, 0, 0}) == "not-cofree");
  CHECK(status("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == "not-cofree");
  CHECK(status("F4", {0, 0, 0, 1}) == "polynomial-not-cofree");
  CHECK(status("F4", {1, 0, 0, 0}) == "not-cofree");
  CHECK(status("G2", {1, 0}) == "cofree");
  CHECK(status("G2", {0, 1}) == "not-cofree");
  CHECK(status("A2", {2, 0}) == "not-cofree");
  CHECK(status("A2", {1, 1}) == "not-cofree");

  auto a4 = parse_type("A4");
  auto verdict = classify_cofree(a4, w({0, 0, 0, 1}));
  CHECK(verdict.cofree);
  CHECK(verdict.normalized.fw == w({1, 0, 0, 0}).fw);

  CHECK_THROWS_AS(classify_cofree(parse_type("A1xA2"), w({1, 0, 0})), invalid_input);
  CHECK_THROWS_AS(classify_cofree(parse_type("A1"), w({1})), invalid_input);
  CHECK_THROWS_AS(classify_cofree(a4, w({0, 0, 0, 0})), invalid_input);
}

TEST_CASE("Diagram automorphism groups") {
  CHECK(diagram_automorphisms(parse_type("A1")).size() == 1);
  CHECK(diagram_automorphisms(parse_type("A4")).size() == 2);
  CHECK(diagram_automorphisms(parse_type("B3")).size() == 1);
  CHECK(diagram_automorphisms(parse_type("D4")).size() == 6);
  CHECK(diagram_automorphisms(parse_type("D5")).size() == 2);
  CHECK(diagram_automorphisms(parse_type("E6")).size() == 2);
  CHECK(diagram_automorphisms(parse_type("E7")).size() == 1);
  CHECK(diagram_automorphisms(parse_type("G2")).size() == 1);
  for (const auto& p : diagram_automorphisms(parse_type("D4"))) {
    auto rs = parse_type("D4");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(rs.cartan.at(i, j) == rs.cartan.at(p[i], p[j]));
  }
}
