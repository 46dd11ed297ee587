// Exact rational polyhedral cone kernel.
//
// Cones are stored with both descriptions: extreme rays plus a lineality
// basis on the generator side, facet normals plus span equations on the
// inequality side.  Both are computed by the double description method over
// exact integers and reduced to canonical form (primitive vectors, rays
// reduced modulo the lineality space, deterministic ordering), so equal cones
// have equal representations.
//
// The space tag records which coordinate system the vectors live in: weight
// vectors carry fundamental-weight coordinates, coweight vectors the dual
// coordinates in which the pairing against a weight is a plain dot product.
// Tagging prevents accidental mixed-space membership queries.
#pragma once

#include "core/linalg.hpp"

namespace hq {

enum class ConeSpace { generic, weight, coweight };

struct Cone {
  int ambient_dim = 0;
  ConeSpace space = ConeSpace::generic;
  std::vector<QVec> generators;   // input vectors, zeroes dropped
  std::vector<ZVec> rays;         // extreme rays modulo lineality, canonical
  std::vector<ZVec> lineality;    // canonical basis of the lineality space
  std::vector<ZVec> facets;       // facet normals within the span, canonical
  std::vector<ZVec> span_eq;      // equations cutting out the linear span

  bool pointed() const { return lineality.empty(); }
  bool same_cone(const Cone& o) const {
    return ambient_dim == o.ambient_dim && rays == o.rays && lineality == o.lineality;
  }
};

Cone cone_from(const std::vector<QVec>& vectors, int ambient_dim,
               ConeSpace space = ConeSpace::generic);

// {y : <y, x> >= 0 for all x in c}.  Weight and coweight spaces are swapped.
Cone dual_cone(const Cone& c);

bool cone_contains(const Cone& c, const QVec& x);

// Relative interior: membership in the span plus strict facet inequalities.
bool cone_interior_contains(const Cone& c, const QVec& x);

// Extreme rays of a pointed cone; errors on lineality.
std::vector<ZVec> extreme_rays(const Cone& c);

}  // namespace hq
