#include <algorithm>

#include "core/analysis.hpp"
#include "core/cones.hpp"
#include "core/io.hpp"
#include "doctest.h"

using namespace hq;

namespace {

QVec q(std::initializer_list<long> coords) {
  QVec v;
  for (long c : coords) v.emplace_back(c);
  return v;
}

Cone make(std::initializer_list<std::initializer_list<long>> gens, int dim) {
  std::vector<QVec> vs;
  for (const auto& g : gens) vs.push_back(QVec(g.begin(), g.end()));
  return cone_from(vs, dim);
}

}  // namespace

TEST_CASE("The positive quadrant") {
  Cone c = make({{1, 0}, {0, 1}}, 2);
  CHECK(c.pointed());
  REQUIRE(c.rays.size() == 2);
  CHECK(c.rays[0] == ZVec{0, 1});
  CHECK(c.rays[1] == ZVec{1, 0});
  CHECK(c.facets.size() == 2);
  CHECK(c.span_eq.empty());
  CHECK(cone_contains(c, q({2, 3})));
  CHECK(cone_contains(c, q({0, 0})));
  CHECK(!cone_contains(c, q({-1, 0})));
  CHECK(cone_interior_contains(c, q({1, 1})));
  CHECK(!cone_interior_contains(c, q({1, 0})));
  CHECK(!cone_interior_contains(c, q({0, 0})));
}

TEST_CASE("Redundant generators do not change the cone") {
  Cone a = make({{1, 0}, {0, 1}}, 2);
  Cone b = make({{1, 0}, {0, 1}, {1, 1}, {2, 3}}, 2);
  CHECK(a.same_cone(b));
  CHECK(extreme_rays(b).size() == 2);
}

TEST_CASE("Generators are scaled to primitive integer rays") {
  std::vector<QVec> vs = {QVec{make_rat(1, 2), make_rat(1, 2)}, QVec{Rat(4), Rat(0)}};
  Cone c = cone_from(vs, 2);
  REQUIRE(c.rays.size() == 2);
  CHECK(c.rays[0] == ZVec{1, 0});
  CHECK(c.rays[1] == ZVec{1, 1});
}

TEST_CASE("A non-simplicial three-dimensional cone") {
  Cone c = make({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, 3);
  CHECK(c.pointed());
  CHECK(c.rays.size() == 4);
  CHECK(c.facets.size() == 4);
  CHECK(cone_interior_contains(c, q({0, 0, 1})));
  CHECK(cone_contains(c, q({1, 0, 1})));
  CHECK(!cone_interior_contains(c, q({1, 0, 1})));
  CHECK(!cone_contains(c, q({0, 0, -1})));
  CHECK(!cone_contains(c, q({1, 1, 1})));

  Cone d = dual_cone(c);
  CHECK(d.rays.size() == 4);
  std::vector<ZVec> expect = {{-1, -1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, 1}};
  std::sort(expect.begin(), expect.end());
  CHECK(d.rays == expect);
  CHECK(dual_cone(d).same_cone(c));
}

TEST_CASE("Duality is an involution with lineality handled") {
  Cone half = make({{1, 0}, {-1, 0}, {0, 1}}, 2);
  CHECK(!half.pointed());
  CHECK(half.lineality.size() == 1);
  CHECK(half.rays.size() == 1);
  CHECK(cone_contains(half, q({-5, 0})));
  CHECK(!cone_contains(half, q({0, -1})));
  CHECK_THROWS_AS(extreme_rays(half), invalid_input);

  Cone d = dual_cone(half);
  CHECK(d.pointed());
  REQUIRE(d.rays.size() == 1);
  CHECK(d.rays[0] == ZVec{0, 1});
  CHECK(dual_cone(d).same_cone(half));
}

TEST_CASE("Lower-dimensional cones record span equations") {
  Cone ray = make({{1, 1, 0}}, 3);
  CHECK(ray.rays.size() == 1);
  CHECK(ray.span_eq.size() == 2);
  CHECK(cone_contains(ray, q({3, 3, 0})));
  CHECK(!cone_contains(ray, q({3, 2, 0})));
  CHECK(!cone_contains(ray, q({1, 1, 1})));
  CHECK(cone_interior_contains(ray, q({2, 2, 0})));
  CHECK(!cone_interior_contains(ray, q({0, 0, 0})));

  Cone zero = cone_from({}, 3);
  CHECK(zero.rays.empty());
  CHECK(zero.lineality.empty());
  CHECK(cone_contains(zero, q({0, 0, 0})));
  CHECK(!cone_contains(zero, q({1, 0, 0})));
  CHECK(cone_interior_contains(zero, q({0, 0, 0})));
}

TEST_CASE("The whole plane as a cone") {
  Cone plane = make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
  CHECK(plane.lineality.size() == 2);
  CHECK(plane.rays.empty());
  CHECK(plane.facets.empty());
  CHECK(cone_contains(plane, q({-7, 11})));
  CHECK(cone_interior_contains(plane, q({-7, 11})));
  Cone d = dual_cone(plane);
  CHECK(d.rays.empty());
  CHECK(d.lineality.empty());
  CHECK(cone_contains(d, q({0, 0})));
}

TEST_CASE("Space tags travel through duality") {
  auto rs = parse_type("A2");
  Cone c = positive_roots_minus_simple_cone(rs);
  CHECK(c.space == ConeSpace::weight);
  REQUIRE(c.rays.size() == 1);
  CHECK(c.rays[0] == ZVec{1, 1});
  Cone d = dual_cone(c);
  CHECK(d.space == ConeSpace::coweight);
  CHECK(dual_cone(d).space == ConeSpace::weight);
}

TEST_CASE("Cone of non-simple positive roots in A3") {
  auto rs = parse_type("A3");
  Cone c = positive_roots_minus_simple_cone(rs);
  CHECK(c.pointed());
  CHECK(c.rays.size() == 3);
  // The highest root is an extreme ray here.
  bool found = false;
  for (const auto& ray : c.rays) found = found || ray == ZVec{1, 0, 1};
  CHECK(found);
}

TEST_CASE("Input validation") {
  CHECK_THROWS_AS(cone_from({q({1, 0})}, 3), invalid_input);
  CHECK_THROWS_AS(cone_from({q({1})}, 17), cap_exceeded);
  Cone c = make({{1, 0}, {0, 1}}, 2);
  CHECK_THROWS_AS(cone_contains(c, q({1, 2, 3})), invalid_input);
  CHECK_THROWS_AS(cone_interior_contains(c, q({1})), invalid_input);
}
