#include "core/analysis.hpp"

#include <algorithm>
#include <set>

namespace hq {

namespace {

std::vector<int> sorted_unique(const RootSystem& rs, const std::vector<int>& nodes) {
  for (int i : nodes)
    if (i < 0 || i >= rs.rank) throw invalid_input("node index out of range");
  std::set<int> s(nodes.begin(), nodes.end());
  return std::vector<int>(s.begin(), s.end());
}

bool is_fundamental_ivec(const IVec& v, int* node = nullptr) {
  int nz = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (nz >= 0 || v[i] != 1) return false;
    nz = static_cast<int>(i);
  }
  if (nz < 0) return false;
  if (node) *node = nz;
  return true;
}

IVec weight_ivec(const RootSystem& rs, const Weight& w, const char* what) {
  return require_dominant_integral(rs, w, what);
}

}  // namespace

SparseCheck is_sparse(const RootSystem& rs, const std::vector<int>& nodes) {
  SparseCheck out;
  out.nodes = sorted_unique(rs, nodes);
  for (size_t a = 0; a < out.nodes.size(); ++a)
    for (size_t b = a + 1; b < out.nodes.size(); ++b)
      if (rs.adjacent(out.nodes[a], out.nodes[b])) {
        out.violation = SparseViolation{"adjacent-pair", {out.nodes[a], out.nodes[b]}, -1};
        return out;
      }
  std::set<int> in_set(out.nodes.begin(), out.nodes.end());
  for (int k = 0; k < rs.rank; ++k) {
    if (in_set.count(k)) continue;
    std::vector<int> touching;
    for (int i : out.nodes)
      if (rs.adjacent(k, i)) touching.push_back(i);
    if (touching.size() >= 2) {
      out.violation = SparseViolation{"common-neighbor", {touching[0], touching[1]}, k};
      return out;
    }
  }
  out.sparse = true;
  return out;
}

std::vector<std::vector<int>> enumerate_sparse_sets(const RootSystem& rs) {
  if (rs.rank > 16) throw invalid_input("sparse-set enumeration supports rank <= 16");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < rs.rank; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    if (is_sparse(rs, nodes).sparse) out.push_back(std::move(nodes));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

HvReport hv_report(const RootSystem& rs, const Weight& lambda) {
  IVec lam = weight_ivec(rs, lambda, "hv_report");
  if (std::all_of(lam.begin(), lam.end(), [](long x) { return x == 0; }))
    throw invalid_input("hv_report: weight must be nonzero");
  HvReport rep;
  rep.lambda = Weight{ivec_to_qvec(lam)};
  rep.ed = 1;
  for (int i = 0; i < rs.rank; ++i) {
    rep.ed *= lam[i] + 1;
    if (lam[i] != 0) ++rep.k;
  }
  rep.dim_quotient = 1 + rep.k;
  rep.hd = rep.ed - rep.dim_quotient;
  // dim of the orbit closure: positive roots not orthogonal to lambda, plus
  // one for the torus direction.  For dominant lambda, (beta, lambda) != 0
  // exactly when supports intersect.
  long count = 0;
  for (const PosRoot& beta : rs.positive_roots)
    for (int j = 0; j < rs.rank; ++j)
      if (beta.root[j] != 0 && lam[j] != 0) {
        ++count;
        break;
      }
  rep.dim_X = count + 1;
  return rep;
}

MonoidSpec minimal_generators(const MonoidSpec& spec) {
  if (spec.generators.empty()) throw invalid_input("empty generator list");
  if (spec.generators.size() > 32) throw invalid_input("more than 32 generators");
  size_t rank = spec.generators.front().fw.size();
  std::vector<IVec> gens;
  for (const Weight& w : spec.generators) {
    if (w.fw.size() != rank) throw invalid_input("generators of mixed rank");
    if (!is_integral(w) || !is_dominant(w))
      throw invalid_input("generators must be dominant integral");
    if (vec_is_zero(w.fw)) throw invalid_input("zero generator");
    IVec v(rank);
    for (size_t i = 0; i < rank; ++i) {
      if (w.fw[i] > 1000000) throw invalid_input("generator coordinate exceeds 10^6");
      v[i] = rat_to_long(w.fw[i]);
    }
    gens.push_back(std::move(v));
  }
  // Duplicates are trivially redundant; keep first occurrences.
  std::vector<IVec> uniq;
  for (const IVec& g : gens)
    if (std::find(uniq.begin(), uniq.end(), g) == uniq.end()) uniq.push_back(g);

  // g is redundant iff it is a nonnegative-integer combination of the other
  // generators.  Any such combination uses only generators that fit under g
  // coordinate-wise, so a depth-first subtraction search with memoised dead
  // ends decides it.  The search is budgeted; overrunning the budget is a
  // refusal, not a wrong answer.
  long budget = 100000;
  auto representable = [&](const IVec& target, const std::vector<IVec>& pool) {
    std::set<IVec> dead;
    long nodes = 0;
    auto rec = [&](auto&& self, const IVec& t) -> bool {
      if (std::all_of(t.begin(), t.end(), [](long x) { return x == 0; })) return true;
      if (dead.count(t)) return false;
      if (++nodes > budget)
        throw cap_exceeded("minimal-generator search exceeded its node budget");
      for (const IVec& g : pool) {
        bool fits = true;
        for (size_t i = 0; i < rank; ++i)
          if (g[i] > t[i]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        IVec rest(rank);
        for (size_t i = 0; i < rank; ++i) rest[i] = t[i] - g[i];
        if (self(self, rest)) return true;
      }
      dead.insert(t);
      return false;
    };
    return rec(rec, target);
  };

  MonoidSpec out;
  for (size_t k = 0; k < uniq.size(); ++k) {
    std::vector<IVec> pool;
    for (size_t j = 0; j < uniq.size(); ++j)
      if (j != k) pool.push_back(uniq[j]);
    if (!representable(uniq[k], pool)) out.generators.push_back(Weight{ivec_to_qvec(uniq[k])});
  }
  return out;
}

AnalysisReport s_variety_report(const RootSystem& rs, const MonoidSpec& spec) {
  if (spec.generators.empty()) throw invalid_input("empty generator list");
  std::vector<IVec> gens;
  for (const Weight& w : spec.generators) {
    IVec v = weight_ivec(rs, w, "s_variety_report");
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
      throw invalid_input("s_variety_report: zero generator");
    gens.push_back(std::move(v));
  }
  AnalysisReport rep;
  rep.monoid = spec;
  rep.minimal = minimal_generators(spec);

  QMat rows;
  for (const IVec& g : gens) rows.push_back(ivec_to_qvec(g));
  rep.rk_S = qmat_rank(rows);

  for (int i = 0; i < rs.rank; ++i) {
    bool all_zero = std::all_of(gens.begin(), gens.end(), [&](const IVec& g) { return g[i] == 0; });
    if (all_zero) ++rep.srk_L;
  }

  // Union of generator supports drives the parabolic: a positive root moves
  // the base point iff it meets the support of some generator.
  std::vector<char> support(rs.rank, 0);
  for (const IVec& g : gens)
    for (int i = 0; i < rs.rank; ++i)
      if (g[i] != 0) support[i] = 1;
  for (const PosRoot& beta : rs.positive_roots)
    for (int j = 0; j < rs.rank; ++j)
      if (beta.root[j] != 0 && support[j]) {
        ++rep.dim_gp;
        break;
      }
  rep.dim_X = rep.dim_gp + rep.rk_S;
  rep.dim_quotient_U = rep.rk_S;
  rep.dim_quotient_U2 = rep.rk_S + (rs.rank - rep.srk_L);

  // Polynomiality: every minimal generator is a fundamental weight.
  rep.polynomial = true;
  std::vector<int> minimal_nodes;
  for (const Weight& w : rep.minimal.generators) {
    IVec v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = rat_to_long(w.fw[i]);
    int node = -1;
    if (is_fundamental_ivec(v, &node)) {
      minimal_nodes.push_back(node);
    } else {
      rep.polynomial = false;
      if (!rep.witnesses.non_fundamental_generator) rep.witnesses.non_fundamental_generator = w;
    }
  }

  // Equidimensionality is a property of the cone: every extreme ray must be a
  // fundamental-weight direction and the node set of those directions sparse.
  std::vector<QVec> gen_q;
  for (const IVec& g : gens) gen_q.push_back(ivec_to_qvec(g));
  Cone cone = cone_from(gen_q, rs.rank, ConeSpace::weight);
  if (!cone.pointed()) throw std::logic_error("monoid cone of dominant weights must be pointed");
  rep.equidimensional = true;
  std::vector<int> ray_nodes;
  for (const ZVec& ray : cone.rays) {
    int node = -1, nz = 0;
    for (size_t i = 0; i < ray.size(); ++i)
      if (ray[i] != 0) {
        ++nz;
        node = static_cast<int>(i);
      }
    if (nz != 1) {
      rep.equidimensional = false;
      if (!rep.witnesses.non_fundamental_ray) rep.witnesses.non_fundamental_ray = ray;
    } else {
      ray_nodes.push_back(node);
    }
  }
  if (rep.equidimensional) {
    SparseCheck sc = is_sparse(rs, ray_nodes);
    rep.witnesses.ray_nodes = sc.nodes;
    if (!sc.sparse) {
      rep.equidimensional = false;
      rep.witnesses.sparse_violation = sc.violation;
    }
  }

  // Combined verdict, decided directly on the minimal generators.
  if (rep.polynomial) {
    SparseCheck sc = is_sparse(rs, minimal_nodes);
    rep.polynomial_and_equidim = sc.sparse;
    if (!sc.sparse && !rep.witnesses.sparse_violation) rep.witnesses.sparse_violation = sc.violation;
  } else {
    rep.polynomial_and_equidim = false;
  }
  return rep;
}

NullconeWitness nullcone_codim2_witness(const RootSystem& rs, const Weight& lambda) {
  IVec lam = weight_ivec(rs, lambda, "nullcone_codim2_witness");
  if (std::all_of(lam.begin(), lam.end(), [](long x) { return x == 0; }))
    throw invalid_input("nullcone_codim2_witness: weight must be nonzero");
  int node_i = -1;
  for (int i = 0; i < rs.rank && node_i < 0; ++i) {
    if (lam[i] == 0) continue;
    const auto& span = rs.factor_span[rs.node_factor[i]];
    if (span.second - span.first >= 2) node_i = i;
  }
  if (node_i < 0)
    throw invalid_input(
        "nullcone_codim2_witness: no rank >= 2 factor supports the weight, so the derived "
        "unipotent group acts trivially on this module and the codimension-2 statement is void");
  int node_ip = -1;
  for (int j = 0; j < rs.rank; ++j)
    if (rs.adjacent(node_i, j)) {
      node_ip = j;
      break;
    }

  NullconeWitness out;
  out.node_i = node_i;
  out.node_iprime = node_ip;
  out.w = extend_right(rs, simple_reflection(rs, node_ip), node_i);  // s_{i'} s_i
  out.image = weyl_apply(out.w, Weight{ivec_to_qvec(lam)});

  // Certify the witness: length 2, minimal in its coset, image outside the
  // box {lambda - sum b_i alpha_i : 0 <= b_i <= a_i}.
  if (inversion_count(rs, out.w) != 2) throw std::logic_error("witness length is not 2");
  for (int k = 0; k < rs.rank; ++k) {
    if (lam[k] != 0) continue;
    if (root_lookup(rs, out.w.m.apply(rs.cartan.column(k))) <= 0)
      throw std::logic_error("witness is not minimal in its coset");
  }
  QVec diff = qvec_sub(ivec_to_qvec(lam), out.image.fw);
  QVec b = qmat_apply(rs.cartan_inv, diff);
  out.box_defect.resize(rs.rank);
  bool outside = false;
  for (int k = 0; k < rs.rank; ++k) {
    out.box_defect[k] = rat_to_long(b[k]);
    if (out.box_defect[k] < 0 || out.box_defect[k] > lam[k]) outside = true;
  }
  if (!outside) throw std::logic_error("witness image unexpectedly inside the box");

  // The other half of the codimension statement: every minimal length-1
  // element s_j (those with a_j != 0) keeps lambda inside the box.
  out.length1_all_inside = true;
  for (int j = 0; j < rs.rank; ++j) {
    if (lam[j] == 0) continue;
    out.length1_nodes.push_back(j);
    // s_j(lambda) = lambda - a_j alpha_j: inside iff b = a_j e_j fits, which
    // it does by construction; keep the check honest anyway.
    if (!(lam[j] >= 0)) out.length1_all_inside = false;
  }
  return out;
}

Cone positive_roots_minus_simple_cone(const RootSystem& rs) {
  std::vector<QVec> gens;
  for (const PosRoot& beta : rs.positive_roots)
    if (beta.height >= 2) gens.push_back(ivec_to_qvec(beta.fw));
  return cone_from(gens, rs.rank, ConeSpace::weight);
}

HmVerdict hm_admissible(const RootSystem& rs, const Coweight& tau) {
  if (static_cast<int>(tau.fcw.size()) != rs.rank) throw invalid_input("coweight has wrong rank");
  HmVerdict out;
  out.within_hypotheses = true;
  for (const SimpleType& t : rs.factors)
    if (t.family == Family::A && t.rank <= 2) out.within_hypotheses = false;
  out.admissible = true;
  out.pairings_fundamental.resize(rs.rank);
  out.pairings_shifted.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    // <tau, omega_i> = sum_k t_k * (C^{-1})[k][i]; subtracting t_i gives the
    // pairing with omega_i - alpha_i.
    Rat p = 0;
    for (int k = 0; k < rs.rank; ++k)
      if (sgn(tau.fcw[k]) != 0) p += tau.fcw[k] * rs.cartan_inv[k][i];
    out.pairings_fundamental[i] = p;
    out.pairings_shifted[i] = p - tau.fcw[i];
    if (sgn(out.pairings_fundamental[i]) <= 0 || sgn(out.pairings_shifted[i]) <= 0)
      out.admissible = false;
  }
  return out;
}

ContractionVerdict check_contraction_hypotheses(const RootSystem& rs,
                                                const std::vector<Weight>& weights) {
  ContractionVerdict out;
  std::vector<std::pair<int, IVec>> nonzero;  // (1-based input index, coords)
  for (size_t k = 0; k < weights.size(); ++k) {
    IVec v = weight_ivec(rs, weights[k], "check_contraction_hypotheses");
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) {
      ++out.ignored_invariant_generators;
      continue;
    }
    nonzero.emplace_back(static_cast<int>(k) + 1, std::move(v));
  }
  std::vector<int> nodes;
  bool all_fundamental = true;
  for (const auto& [idx, v] : nonzero) {
    int node = -1;
    if (is_fundamental_ivec(v, &node)) {
      nodes.push_back(node);
    } else {
      all_fundamental = false;
      out.failures.push_back(ContractionFailure{"non-fundamental", {idx}, std::nullopt});
    }
  }
  for (size_t a = 0; a < nonzero.size(); ++a)
    for (size_t b = a + 1; b < nonzero.size(); ++b)
      if (nonzero[a].second == nonzero[b].second)
        out.failures.push_back(
            ContractionFailure{"repeated-weight", {nonzero[a].first, nonzero[b].first}, std::nullopt});
  if (all_fundamental) {
    SparseCheck sc = is_sparse(rs, nodes);
    out.node_set = sc.nodes;
    if (!sc.sparse)
      out.failures.push_back(ContractionFailure{"sparse-violation", {}, sc.violation});
  }
  out.passes = out.failures.empty() && !nonzero.empty();
  if (out.passes) out.krull_dim = Int(2 * static_cast<long>(nonzero.size()));
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
  if (!rs.simple()) throw invalid_input("diagram automorphisms computed for simple types only");
  int r = rs.rank;
  std::vector<std::vector<int>> gens;
  auto ident = [&] {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = i;
    return p;
  };
  Family fam = rs.factors[0].family;
  if (fam == Family::A && r >= 2) {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = r - 1 - i;
    gens.push_back(std::move(p));
  } else if (fam == Family::D) {
    if (r == 4) {
      // Triality: any permutation of the three outer nodes 0, 2, 3.
      std::vector<int> s1 = ident();
      std::swap(s1[0], s1[2]);
      std::vector<int> s2 = ident();
      std::swap(s2[2], s2[3]);
      gens.push_back(std::move(s1));
      gens.push_back(std::move(s2));
    } else {
      std::vector<int> p = ident();
      std::swap(p[r - 2], p[r - 1]);
      gens.push_back(std::move(p));
    }
  } else if (fam == Family::E && r == 6) {
    gens.push_back({5, 1, 4, 3, 2, 0});
  }
  // Close under composition.
  std::set<std::vector<int>> group{ident()};
  std::vector<std::vector<int>> frontier{ident()};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> q(r);
        for (int i = 0; i < r; ++i) q[i] = g[p[i]];
        if (group.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return std::vector<std::vector<int>>(group.begin(), group.end());
}

CofreeVerdict classify_cofree(const RootSystem& rs, const Weight& lambda) {
  if (!rs.simple() || rs.rank < 2)
    throw invalid_input("cofreeness classification requires a simple type of rank >= 2");
  IVec lam = weight_ivec(rs, lambda, "classify_cofree");
  if (std::all_of(lam.begin(), lam.end(), [](long x) { return x == 0; }))
    throw invalid_input("classify_cofree: weight must be nonzero");

  // Normalise by the diagram automorphism group: lexicographically greatest
  // image.  This folds omega_r to omega_1 in type A, the two spin nodes of
  // D_r onto each other, the D_4 triality orbit and the E_6 involution.
  IVec best = lam;
  for (const auto& p : diagram_automorphisms(rs)) {
    IVec img(rs.rank);
    for (int i = 0; i < rs.rank; ++i) img[p[i]] = lam[i];
    if (img > best) best = img;
  }

  CofreeVerdict out;
  out.normalized = Weight{ivec_to_qvec(best)};
  int node = -1;
  bool fundamental = is_fundamental_ivec(best, &node);
  int n = node + 1;  // 1-based
  Family fam = rs.factors[0].family;
  int r = rs.rank;
  bool cofree = false, bad = false;
  if (fundamental) {
    switch (fam) {
      case Family::A:
        // omega_1 (vector representation), plus the rank-3 coincidence with
        // the D_3 vector representation at omega_2.
        cofree = (n == 1) || (r == 3 && n == 2);
        bad = (n == 2 && r >= 4);
        break;
      case Family::B:
        // Vector representation, spin for ranks 2..4; spin of B_5 is a known
        // bad pair.  B_2 spin coincides with the C_2 vector representation.
        cofree = (n == 1) || (r == 2 && n == 2) || (r == 3 && n == 3) || (r == 4 && n == 4);
        bad = (r == 5 && n == 5);
        break;
      case Family::C:
        // Vector representation; at rank 2 the second fundamental module is
        // the B_2 vector representation.
        cofree = (n == 1) || (r == 2 && n == 2);
        break;
      case Family::D:
        // Vector representation; D_3 spin is the A_3 vector representation;
        // half-spin of D_5 (node 4 after normalisation) is cofree while the
        // D_6 half-spin is a bad pair.
        cofree = (n == 1) || (r == 3 && n == 2) || (r == 5 && n == 4);
        bad = (r == 6 && n == 5);
        break;
      case Family::E:
        // The 27-dimensional minuscule module of E_6 is cofree; the
        // 56-dimensional minuscule module of E_7 has polynomial invariants
        // but fails equidimensionality.
        cofree = (r == 6 && n == 1);
        bad = (r == 7 && n == 7);
        break;
      case Family::F:
        // The 26-dimensional module: polynomial invariants, not cofree.
        bad = (n == 4);
        break;
      case Family::G:
        cofree = (n == 1);
        break;
    }
  }
  out.cofree = cofree;
  out.status = cofree ? "cofree" : bad ? "polynomial-not-cofree" : "not-cofree";
  return out;
}

}  // namespace hq
