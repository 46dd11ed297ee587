#include "core/cones.hpp"

#include <algorithm>

namespace hq {

namespace {

// One evolving ray during double description: the vector plus its tightness
// flags against the halfspaces processed so far.
struct DDRay {
  ZVec v;
  std::vector<char> tight;
};

struct VRep {
  std::vector<ZVec> rays;
  std::vector<ZVec> lineality;
};

// V-representation of {x : <h, x> >= 0 for all h}, by incremental insertion.
// Standard double description with explicit lineality: while a halfspace cuts
// the lineality space, one lineality vector is promoted to a ray and the rest
// are projected; afterwards rays are combined across the hyperplane using the
// combinatorial adjacency test.
VRep dual_from_halfspaces(int n, std::vector<ZVec> halfspaces) {
  // Canonical input order makes the whole computation deterministic.
  for (ZVec& h : halfspaces) h = primitive_ray_z(h);
  std::sort(halfspaces.begin(), halfspaces.end());
  halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()), halfspaces.end());
  std::erase_if(halfspaces, [](const ZVec& h) {
    return std::all_of(h.begin(), h.end(), [](const Int& x) { return x == 0; });
  });

  std::vector<ZVec> lineality;
  for (int i = 0; i < n; ++i) {
    ZVec e(n, Int(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DDRay> rays;
  size_t processed = 0;

  for (const ZVec& h : halfspaces) {
    int cut = -1;
    for (size_t k = 0; k < lineality.size(); ++k)
      if (zvec_dot(h, lineality[k]) != 0) {
        cut = static_cast<int>(k);
        break;
      }
    if (cut >= 0) {
      ZVec l0 = lineality[cut];
      Int p0 = zvec_dot(h, l0);
      if (p0 < 0) {
        for (Int& x : l0) x = -x;
        p0 = -p0;
      }
      std::vector<ZVec> new_lin;
      for (size_t k = 0; k < lineality.size(); ++k) {
        if (static_cast<int>(k) == cut) continue;
        Int pk = zvec_dot(h, lineality[k]);
        ZVec l(n);
        for (int j = 0; j < n; ++j) l[j] = p0 * lineality[k][j] - pk * l0[j];
        new_lin.push_back(primitive_ray_z(l));
      }
      lineality = std::move(new_lin);
      for (DDRay& r : rays) {
        Int pr = zvec_dot(h, r.v);
        ZVec v(n);
        for (int j = 0; j < n; ++j) v[j] = p0 * r.v[j] - pr * l0[j];
        r.v = primitive_ray_z(v);
        r.tight.push_back(1);  // the projection lands on the hyperplane
      }
      DDRay promoted;
      promoted.v = primitive_ray_z(l0);
      promoted.tight.assign(processed, 1);  // was lineality: tight everywhere
      promoted.tight.push_back(0);
      rays.push_back(std::move(promoted));
      ++processed;
      continue;
    }
    // h vanishes on the whole lineality space; split the rays.
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (size_t k = 0; k < rays.size(); ++k) {
      val[k] = zvec_dot(h, rays[k].v);
      if (val[k] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t k = 0; k < rays.size(); ++k) rays[k].tight.push_back(val[k] == 0 ? 1 : 0);
      ++processed;
      continue;
    }
    std::vector<DDRay> next;
    for (size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      DDRay keep = rays[k];
      keep.tight.push_back(val[k] == 0 ? 1 : 0);
      next.push_back(std::move(keep));
    }
    // Combine adjacent (positive, negative) pairs onto the hyperplane.
    auto adjacent = [&](size_t a, size_t b) {
      std::vector<char> common(processed);
      for (size_t j = 0; j < processed; ++j) common[j] = rays[a].tight[j] & rays[b].tight[j];
      for (size_t c = 0; c < rays.size(); ++c) {
        if (c == a || c == b) continue;
        bool covers = true;
        for (size_t j = 0; j < processed; ++j)
          if (common[j] && !rays[c].tight[j]) {
            covers = false;
            break;
          }
        if (covers) return false;
      }
      return true;
    };
    std::vector<ZVec> made;
    for (size_t a = 0; a < rays.size(); ++a) {
      if (val[a] <= 0) continue;
      for (size_t b = 0; b < rays.size(); ++b) {
        if (val[b] >= 0) continue;
        if (!adjacent(a, b)) continue;
        ZVec w(n);
        for (int j = 0; j < n; ++j) w[j] = val[a] * rays[b].v[j] - val[b] * rays[a].v[j];
        w = primitive_ray_z(w);
        if (std::find(made.begin(), made.end(), w) != made.end()) continue;
        made.push_back(w);
        DDRay combo;
        combo.v = std::move(w);
        combo.tight.resize(processed + 1);
        for (size_t j = 0; j < processed; ++j)
          combo.tight[j] = rays[a].tight[j] & rays[b].tight[j];
        combo.tight[processed] = 1;
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
    ++processed;
  }

  VRep out;
  for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lineality);
  return out;
}

// Reduces v modulo the span of the (RREF, primitive) basis rows, then makes
// it primitive: the canonical representative of v + span(basis).
ZVec reduce_mod_rows(const ZVec& v, const std::vector<ZVec>& basis) {
  if (basis.empty()) return primitive_ray_z(v);
  QVec x = zvec_to_qvec(v);
  for (const ZVec& row : basis) {
    size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    Rat f = x[pivot] / Rat(row[pivot]);
    if (sgn(f) == 0) continue;
    for (size_t j = pivot; j < row.size(); ++j)
      if (row[j] != 0) x[j] -= f * Rat(row[j]);
  }
  return primitive_ray(x);
}

std::vector<ZVec> canonicalize_vrep(VRep& rep) {
  std::vector<QVec> lin_q;
  for (const ZVec& l : rep.lineality) lin_q.push_back(zvec_to_qvec(l));
  std::vector<ZVec> lin = row_space_canonical_basis(lin_q);
  std::vector<ZVec> rays;
  for (const ZVec& r : rep.rays) {
    ZVec red = reduce_mod_rows(r, lin);
    bool zero = std::all_of(red.begin(), red.end(), [](const Int& x) { return x == 0; });
    if (!zero) rays.push_back(std::move(red));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  rep.rays = std::move(rays);
  rep.lineality = std::move(lin);
  return rep.lineality;
}

}  // namespace

Cone cone_from(const std::vector<QVec>& vectors, int ambient_dim, ConeSpace space) {
  if (ambient_dim <= 0) throw invalid_input("cone ambient dimension must be positive");
  if (ambient_dim > 16)
    throw cap_exceeded("cone dimension " + std::to_string(ambient_dim) + " exceeds the cap of 16");
  Cone c;
  c.ambient_dim = ambient_dim;
  c.space = space;
  std::vector<ZVec> gens;
  for (const QVec& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw invalid_input("cone generator has wrong dimension");
    ZVec z = primitive_ray(v);
    if (std::all_of(z.begin(), z.end(), [](const Int& x) { return x == 0; })) continue;
    c.generators.push_back(v);
    gens.push_back(std::move(z));
  }

  // First double description run: the dual cone {y : <g, y> >= 0} yields the
  // facet normals (its rays) and the span equations (its lineality).
  VRep dual = dual_from_halfspaces(ambient_dim, gens);
  canonicalize_vrep(dual);
  c.facets = dual.rays;
  c.span_eq = dual.lineality;

  // Second run: back from the inequality side to rays and lineality.
  std::vector<ZVec> halfspaces = c.facets;
  for (const ZVec& e : c.span_eq) {
    halfspaces.push_back(e);
    ZVec neg(e.size());
    for (size_t j = 0; j < e.size(); ++j) neg[j] = -e[j];
    halfspaces.push_back(std::move(neg));
  }
  VRep primal = dual_from_halfspaces(ambient_dim, std::move(halfspaces));
  canonicalize_vrep(primal);
  c.rays = primal.rays;
  c.lineality = primal.lineality;

  // Internal consistency: every generator must satisfy its own description.
  for (const ZVec& g : gens) {
    for (const ZVec& f : c.facets)
      if (zvec_dot(f, g) < 0) throw std::logic_error("cone generator violates a facet");
    for (const ZVec& e : c.span_eq)
      if (zvec_dot(e, g) != 0) throw std::logic_error("cone generator misses the span");
  }
  return c;
}

Cone dual_cone(const Cone& c) {
  std::vector<QVec> gens;
  for (const ZVec& f : c.facets) gens.push_back(zvec_to_qvec(f));
  for (const ZVec& e : c.span_eq) {
    gens.push_back(zvec_to_qvec(e));
    QVec neg(e.size());
    for (size_t j = 0; j < e.size(); ++j) neg[j] = -Rat(e[j]);
    gens.push_back(std::move(neg));
  }
  ConeSpace dual_space = c.space == ConeSpace::weight     ? ConeSpace::coweight
                         : c.space == ConeSpace::coweight ? ConeSpace::weight
                                                          : ConeSpace::generic;
  return cone_from(gens, c.ambient_dim, dual_space);
}

bool cone_contains(const Cone& c, const QVec& x) {
  if (static_cast<int>(x.size()) != c.ambient_dim)
    throw invalid_input("membership query has wrong dimension");
  for (const ZVec& e : c.span_eq)
    if (sgn(qvec_dot(zvec_to_qvec(e), x)) != 0) return false;
  for (const ZVec& f : c.facets)
    if (sgn(qvec_dot(zvec_to_qvec(f), x)) < 0) return false;
  return true;
}

bool cone_interior_contains(const Cone& c, const QVec& x) {
  if (static_cast<int>(x.size()) != c.ambient_dim)
    throw invalid_input("membership query has wrong dimension");
  for (const ZVec& e : c.span_eq)
    if (sgn(qvec_dot(zvec_to_qvec(e), x)) != 0) return false;
  for (const ZVec& f : c.facets)
    if (sgn(qvec_dot(zvec_to_qvec(f), x)) <= 0) return false;
  return true;
}

std::vector<ZVec> extreme_rays(const Cone& c) {
  if (!c.pointed())
    throw invalid_input("extreme rays are defined for pointed cones only (lineality dimension " +
                        std::to_string(c.lineality.size()) + ")");
  return c.rays;
}

}  // namespace hq
