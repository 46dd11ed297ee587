#include "core/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hq {
namespace {

struct Checker {
  SuiteResult r;
  explicit Checker(std::string name) { r.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      ++r.failures;
      if (r.notes.size() < 10) r.notes.push_back(what);
    }
  }
};

// Every simple type with min_rank <= rank <= max_rank, in a fixed order.
std::vector<RootSystem> simple_types(int min_rank, int max_rank) {
  std::vector<RootSystem> out;
  auto add = [&](Family f, int r) {
    if (r >= min_rank && r <= max_rank) out.push_back(build_root_system({SimpleType{f, r}}));
  };
  for (int r = 1; r <= max_rank; ++r) add(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) add(Family::B, r);
  for (int r = 2; r <= max_rank; ++r) add(Family::C, r);
  for (int r = 3; r <= max_rank; ++r) add(Family::D, r);
  for (int r = 6; r <= 8; ++r) add(Family::E, r);
  add(Family::F, 4);
  add(Family::G, 2);
  return out;
}

Weight unit_weight(int rank, int node) {
  QVec v(rank, Rat(0));
  v[node] = 1;
  return Weight{v};
}

std::string ivec_note(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Cardinality of the invariant weight box: |I_lambda| must equal
// prod(a_i + 1) for random dominant weights across every simple type of
// rank <= 6.
SuiteResult suite_box_count() {
  Checker c("box-count");
  std::mt19937_64 rng(101);
  const int per_type = 22;  // 23 types x 22 = 506 random weights
  for (const auto& rs : simple_types(1, 6)) {
    for (int t = 0; t < per_type; ++t) {
      QVec fw(rs.rank);
      Int expect = 1;
      for (int i = 0; i < rs.rank; ++i) {
        long a = static_cast<long>(rng() % 6);
        fw[i] = a;
        expect *= a + 1;
      }
      Weight lam{fw};
      auto ws = uprime_weight_set(rs, lam);
      bool ok = Int(static_cast<long>(ws.members.size())) == expect &&
                uprime_invariant_dim(rs, lam) == expect;
      c.check(ok, rs.type_string() + " lambda=" + qvec_str(fw) + ": weight-box cardinality");
    }
  }
  return c.r;
}

// The worked A3 example: monoid generated by the first and last fundamental
// weights, plus the dimension of its defining module.
SuiteResult suite_monoid_example() {
  Checker c("monoid-example");
  auto rs = build_root_system({SimpleType{Family::A, 3}});
  MonoidSpec spec;
  spec.generators = {unit_weight(3, 0), unit_weight(3, 2)};
  auto rep = s_variety_report(rs, spec);
  c.check(rep.dim_X == 7, "A3 {w1,w3}: dim_X != 7");
  c.check(rep.dim_quotient_U2 == 4, "A3 {w1,w3}: dim_quotient_U2 != 4");
  c.check(rep.polynomial, "A3 {w1,w3}: polynomial expected");
  c.check(!rep.equidimensional, "A3 {w1,w3}: equidimensional not expected");
  c.check(weyl_dimension(rs, unit_weight(3, 0)) == 4, "A3 w1: dimension != 4");
  return c.r;
}

// Embedding/homological dimension shape laws for one-generator monoids:
// hd = 0 exactly for fundamental weights, hd = 1 exactly for w_i + w_j and
// 2 w_i.  Exhaustive over coordinates <= 3, rank <= 5.
SuiteResult suite_hv_small() {
  Checker c("hv-small");
  for (const auto& rs : simple_types(1, 5)) {
    IVec a(rs.rank, 0);
    for (;;) {
      bool zero = std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
      if (!zero) {
        auto rep = hv_report(rs, Weight{ivec_to_qvec(a)});
        int nz = 0;
        long mx = 0, sum = 0;
        for (long v : a)
          if (v != 0) {
            ++nz;
            mx = std::max(mx, v);
            sum += v;
          }
        bool fundamental = (nz == 1 && mx == 1);
        bool pair_or_double = (nz == 2 && sum == 2) || (nz == 1 && mx == 2);
        c.check((rep.hd == 0) == fundamental,
                rs.type_string() + " lambda=" + ivec_note(a) + ": hd=0 iff fundamental");
        c.check((rep.hd == 1) == pair_or_double,
                rs.type_string() + " lambda=" + ivec_note(a) + ": hd=1 shape law");
      }
      int pos = rs.rank - 1;
      while (pos >= 0 && a[pos] == 3) a[pos--] = 0;
      if (pos < 0) break;
      ++a[pos];
    }
  }
  return c.r;
}

// Multiplicity-table / dimension-formula agreement: the orbit-weighted sum
// of multiplicities equals the Weyl dimension for every module of dimension
// <= 2000, every simple type of rank <= 6.
void dim_sweep(const RootSystem& rs, IVec& a, int pos, long cap, Checker& c) {
  for (long v = 0;; ++v) {
    a[pos] = v;
    Weight lam{ivec_to_qvec(a)};
    Int dim = weyl_dimension(rs, lam);
    if (dim > cap) break;  // dimension grows monotonically in each coordinate
    if (pos + 1 == rs.rank) {
      auto tab = multiplicity_table(rs, lam);
      Int sum = 0;
      for (const auto& [mu, m] : tab.dominant_entries) sum += m * weyl_orbit_size(rs, mu);
      c.check(sum == dim,
              rs.type_string() + " lambda=" + ivec_note(a) + ": multiplicity sum != dimension");
    } else {
      dim_sweep(rs, a, pos + 1, cap, c);
    }
  }
  a[pos] = 0;
}

SuiteResult suite_dim_oracle() {
  Checker c("dim-oracle");
  for (const auto& rs : simple_types(1, 6)) {
    IVec a(rs.rank, 0);
    dim_sweep(rs, a, 0, 2000, c);
  }
  return c.r;
}

// Chain weights w_{i1} - a_{i1} - ... - a_{il} along simple diagram paths
// always have multiplicity one.
void chain_paths(const RootSystem& rs, std::vector<int>& path, std::vector<char>& used,
                 Checker& c) {
  Weight mu = chain_weight(rs, path);
  Int m = freudenthal_multiplicity(rs, unit_weight(rs.rank, path.front()), mu);
  std::string label = rs.type_string() + " path=";
  for (size_t i = 0; i < path.size(); ++i)
    label += (i ? "-" : "") + std::to_string(path[i] + 1);
  c.check(m == 1, label + ": chain multiplicity != 1");
  int last = path.back();
  for (int j = 0; j < rs.rank; ++j) {
    if (!used[j] && rs.adjacent(last, j)) {
      used[j] = 1;
      path.push_back(j);
      chain_paths(rs, path, used, c);
      path.pop_back();
      used[j] = 0;
    }
  }
}

SuiteResult suite_chain_mult() {
  Checker c("chain-mult");
  for (const auto& rs : simple_types(1, 6)) {
    for (int start = 0; start < rs.rank; ++start) {
      std::vector<int> path{start};
      std::vector<char> used(rs.rank, 0);
      used[start] = 1;
      chain_paths(rs, path, used, c);
    }
  }
  return c.r;
}

// For every sparse node set M, the minimal length of a Weyl element moving
// every w_i, i in M, strictly below w_i - a_i is at least 2 |M|.  An absent
// minimum (no element qualifies, as in rank one) passes vacuously.
SuiteResult suite_min_length() {
  Checker c("min-length");
  for (const auto& rs : simple_types(1, 4)) {
    for (const auto& m : enumerate_sparse_sets(rs)) {
      auto len = min_length_satisfying(rs, m);
      bool ok = !len || *len >= 2 * static_cast<int>(m.size());
      std::string label = rs.type_string() + " M={";
      for (size_t i = 0; i < m.size(); ++i) label += (i ? "," : "") + std::to_string(m[i] + 1);
      c.check(ok, label + "}: minimal length below 2|M|");
    }
  }
  return c.r;
}

// The dual of con({w_i, w_i - a_i}) coincides, under the invariant-form
// identification of coweights with weights, with the cone spanned by the
// non-simple positive roots.  Compared as canonical primitive ray sets.
SuiteResult suite_cone_identity() {
  Checker c("cone-identity");
  for (const auto& rs : simple_types(2, 6)) {
    std::vector<QVec> gens;
    for (int i = 0; i < rs.rank; ++i) {
      gens.push_back(unit_weight(rs.rank, i).fw);
      QVec shifted(rs.rank, Rat(0));
      shifted[i] = 1;
      for (int k = 0; k < rs.rank; ++k) shifted[k] -= rs.cartan.at(k, i);
      gens.push_back(shifted);
    }
    Cone primal = cone_from(gens, rs.rank, ConeSpace::weight);
    Cone dual = dual_cone(primal);
    c.check(dual.pointed(), rs.type_string() + ": dual cone not pointed");
    std::set<ZVec> got;
    for (const ZVec& u : dual.rays) {
      // u lives in the coordinates dual to fw; pull back to
      // fundamental-coweight coordinates t = C^T u, then apply the metric
      // identification (t_i / d_i gives fw coordinates).
      QVec sharp(rs.rank);
      for (int j = 0; j < rs.rank; ++j) {
        Rat t = 0;
        for (int i = 0; i < rs.rank; ++i)
          if (rs.cartan.at(i, j) != 0) t += Rat(rs.cartan.at(i, j)) * Rat(u[i]);
        sharp[j] = t / rs.d[j];
      }
      got.insert(primitive_ray(sharp));
    }
    Cone target = positive_roots_minus_simple_cone(rs);
    c.check(target.pointed(), rs.type_string() + ": root cone not pointed");
    std::set<ZVec> want(target.rays.begin(), target.rays.end());
    c.check(got == want, rs.type_string() + ": identified dual rays differ from root-cone rays");
  }
  return c.r;
}

// Fundamental weights against the non-simple positive-root cone: every w_i
// is inside for the types whose inverse Cartan diagonal is >= 1, while the
// A-series (and the rank-3 D, which is the rank-3 A in disguise) has
// entries below one and w_1 outside the cone.
SuiteResult suite_weight_cone() {
  Checker c("weight-cone");
  for (const auto& rs : simple_types(2, 6)) {
    Family fam = rs.factors[0].family;
    bool a_like = (fam == Family::A) || (fam == Family::D && rs.rank == 3);
    QVec diag = cartan_inverse_diagonal(rs);
    bool all_ge1 = std::all_of(diag.begin(), diag.end(), [](const Rat& q) { return q >= 1; });
    c.check(all_ge1 == !a_like, rs.type_string() + ": inverse-diagonal threshold");
    Cone cone = positive_roots_minus_simple_cone(rs);
    if (!a_like) {
      for (int i = 0; i < rs.rank; ++i)
        c.check(cone_contains(cone, unit_weight(rs.rank, i).fw),
                rs.type_string() + " w" + std::to_string(i + 1) + ": membership expected");
    } else {
      int outside = (fam == Family::A) ? 0 : 1;  // w1; for the rank-3 D, a spin node
      c.check(!cone_contains(cone, unit_weight(rs.rank, outside).fw),
              rs.type_string() + " w" + std::to_string(outside + 1) + ": membership not expected");
    }
  }
  return c.r;
}

// Null-fibre witness of codimension two: the two-letter element exists, is a
// minimal coset representative, moves lambda outside the invariant weight
// box, and all length-one representatives stay inside.
SuiteResult suite_nullcone() {
  Checker c("nullcone");
  for (const auto& rs : simple_types(2, 5)) {
    IVec a(rs.rank, 0);
    for (;;) {
      bool zero = std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
      if (!zero) {
        Weight lam{ivec_to_qvec(a)};
        std::string label = rs.type_string() + " lambda=" + ivec_note(a);
        auto wit = nullcone_codim2_witness(rs, lam);
        c.check(wit.w.word.size() == 2 && inversion_count(rs, wit.w) == 2,
                label + ": witness length != 2");
        bool coset_ok = true;
        for (int k = 0; k < rs.rank; ++k) {
          if (a[k] != 0) continue;
          Weight img = weyl_apply(wit.w, simple_root(rs, k));
          IVec fw(rs.rank);
          for (int i = 0; i < rs.rank; ++i) fw[i] = rat_to_long(img.fw[i]);
          if (root_lookup(rs, fw) <= 0) coset_ok = false;
        }
        c.check(coset_ok, label + ": not a minimal coset representative");
        Weight img = weyl_apply(wit.w, lam);
        c.check(img.fw == wit.image.fw, label + ": image mismatch");
        QVec defect = to_root_basis(rs, Weight{qvec_sub(lam.fw, img.fw)});
        bool integral = vec_is_integral(defect);
        bool outside = false, matches = integral;
        for (int i = 0; i < rs.rank && integral; ++i) {
          long d = rat_to_long(defect[i]);
          if (d != wit.box_defect[i]) matches = false;
          if (d < 0 || d > a[i]) outside = true;
        }
        c.check(integral && matches && outside, label + ": image not certified outside the box");
        std::vector<int> support;
        for (int i = 0; i < rs.rank; ++i)
          if (a[i] != 0) support.push_back(i);
        c.check(wit.length1_all_inside && wit.length1_nodes == support,
                label + ": length-one certification");
      }
      int pos = rs.rank - 1;
      while (pos >= 0 && a[pos] == 2) a[pos--] = 0;
      if (pos < 0) break;
      ++a[pos];
    }
  }
  return c.r;
}

// Frozen cofreeness oracle: status of every fundamental weight for every
// simple type of rank <= 8, transcribed independently of the classifier
// (vector representations and the small spin/minuscule modules are cofree;
// the second fundamental of the high-rank A series, the rank-5 B spin, the
// rank-6 D half-spin, the 56-dimensional rank-7 E module and the
// 26-dimensional F module have polynomial invariants without cofreeness).
struct CofreeCase {
  const char* type;
  int node;  // 1-based
  const char* status;
};

const CofreeCase kCofreeOracle[] = {
    {"A2", 1, "cofree"}, {"A2", 2, "cofree"},
    {"A3", 1, "cofree"}, {"A3", 2, "cofree"}, {"A3", 3, "cofree"},
    {"A4", 1, "cofree"}, {"A4", 2, "polynomial-not-cofree"}, {"A4", 3, "polynomial-not-cofree"},
    {"A4", 4, "cofree"},
    {"A5", 1, "cofree"}, {"A5", 2, "polynomial-not-cofree"}, {"A5", 3, "not-cofree"},
    {"A5", 4, "polynomial-not-cofree"}, {"A5", 5, "cofree"},
    {"A6", 1, "cofree"}, {"A6", 2, "polynomial-not-cofree"}, {"A6", 3, "not-cofree"},
    {"A6", 4, "not-cofree"}, {"A6", 5, "polynomial-not-cofree"}, {"A6", 6, "cofree"},
    {"A7", 1, "cofree"}, {"A7", 2, "polynomial-not-cofree"}, {"A7", 3, "not-cofree"},
    {"A7", 4, "not-cofree"}, {"A7", 5, "not-cofree"}, {"A7", 6, "polynomial-not-cofree"},
    {"A7", 7, "cofree"},
    {"A8", 1, "cofree"}, {"A8", 2, "polynomial-not-cofree"}, {"A8", 3, "not-cofree"},
    {"A8", 4, "not-cofree"}, {"A8", 5, "not-cofree"}, {"A8", 6, "not-cofree"},
    {"A8", 7, "polynomial-not-cofree"}, {"A8", 8, "cofree"},
    {"B2", 1, "cofree"}, {"B2", 2, "cofree"},
    {"B3", 1, "cofree"}, {"B3", 2, "not-cofree"}, {"B3", 3, "cofree"},
    {"B4", 1, "cofree"}, {"B4", 2, "not-cofree"}, {"B4", 3, "not-cofree"}, {"B4", 4, "cofree"},
    {"B5", 1, "cofree"}, {"B5", 2, "not-cofree"}, {"B5", 3, "not-cofree"},
    {"B5", 4, "not-cofree"}, {"B5", 5, "polynomial-not-cofree"},
    {"B6", 1, "cofree"}, {"B6", 2, "not-cofree"}, {"B6", 3, "not-cofree"},
    {"B6", 4, "not-cofree"}, {"B6", 5, "not-cofree"}, {"B6", 6, "not-cofree"},
    {"B7", 1, "cofree"}, {"B7", 2, "not-cofree"}, {"B7", 3, "not-cofree"},
    {"B7", 4, "not-cofree"}, {"B7", 5, "not-cofree"}, {"B7", 6, "not-cofree"},
    {"B7", 7, "not-cofree"},
    {"B8", 1, "cofree"}, {"B8", 2, "not-cofree"}, {"B8", 3, "not-cofree"},
    {"B8", 4, "not-cofree"}, {"B8", 5, "not-cofree"}, {"B8", 6, "not-cofree"},
    {"B8", 7, "not-cofree"}, {"B8", 8, "not-cofree"},
    {"C2", 1, "cofree"}, {"C2", 2, "cofree"},
    {"C3", 1, "cofree"}, {"C3", 2, "not-cofree"}, {"C3", 3, "not-cofree"},
    {"C4", 1, "cofree"}, {"C4", 2, "not-cofree"}, {"C4", 3, "not-cofree"}, {"C4", 4, "not-cofree"},
    {"C5", 1, "cofree"}, {"C5", 2, "not-cofree"}, {"C5", 3, "not-cofree"},
    {"C5", 4, "not-cofree"}, {"C5", 5, "not-cofree"},
    {"C6", 1, "cofree"}, {"C6", 2, "not-cofree"}, {"C6", 3, "not-cofree"},
    {"C6", 4, "not-cofree"}, {"C6", 5, "not-cofree"}, {"C6", 6, "not-cofree"},
    {"C7", 1, "cofree"}, {"C7", 2, "not-cofree"}, {"C7", 3, "not-cofree"},
    {"C7", 4, "not-cofree"}, {"C7", 5, "not-cofree"}, {"C7", 6, "not-cofree"},
    {"C7", 7, "not-cofree"},
    {"C8", 1, "cofree"}, {"C8", 2, "not-cofree"}, {"C8", 3, "not-cofree"},
    {"C8", 4, "not-cofree"}, {"C8", 5, "not-cofree"}, {"C8", 6, "not-cofree"},
    {"C8", 7, "not-cofree"}, {"C8", 8, "not-cofree"},
    {"D3", 1, "cofree"}, {"D3", 2, "cofree"}, {"D3", 3, "cofree"},
    {"D4", 1, "cofree"}, {"D4", 2, "not-cofree"}, {"D4", 3, "cofree"}, {"D4", 4, "cofree"},
    {"D5", 1, "cofree"}, {"D5", 2, "not-cofree"}, {"D5", 3, "not-cofree"},
    {"D5", 4, "cofree"}, {"D5", 5, "cofree"},
    {"D6", 1, "cofree"}, {"D6", 2, "not-cofree"}, {"D6", 3, "not-cofree"},
    {"D6", 4, "not-cofree"}, {"D6", 5, "polynomial-not-cofree"},
    {"D6", 6, "polynomial-not-cofree"},
    {"D7", 1, "cofree"}, {"D7", 2, "not-cofree"}, {"D7", 3, "not-cofree"},
    {"D7", 4, "not-cofree"}, {"D7", 5, "not-cofree"}, {"D7", 6, "not-cofree"},
    {"D7", 7, "not-cofree"},
    {"D8", 1, "cofree"}, {"D8", 2, "not-cofree"}, {"D8", 3, "not-cofree"},
    {"D8", 4, "not-cofree"}, {"D8", 5, "not-cofree"}, {"D8", 6, "not-cofree"},
    {"D8", 7, "not-cofree"}, {"D8", 8, "not-cofree"},
    {"E6", 1, "cofree"}, {"E6", 2, "not-cofree"}, {"E6", 3, "not-cofree"},
    {"E6", 4, "not-cofree"}, {"E6", 5, "not-cofree"}, {"E6", 6, "cofree"},
    {"E7", 1, "not-cofree"}, {"E7", 2, "not-cofree"}, {"E7", 3, "not-cofree"},
    {"E7", 4, "not-cofree"}, {"E7", 5, "not-cofree"}, {"E7", 6, "not-cofree"},
    {"E7", 7, "polynomial-not-cofree"},
    {"E8", 1, "not-cofree"}, {"E8", 2, "not-cofree"}, {"E8", 3, "not-cofree"},
    {"E8", 4, "not-cofree"}, {"E8", 5, "not-cofree"}, {"E8", 6, "not-cofree"},
    {"E8", 7, "not-cofree"}, {"E8", 8, "not-cofree"},
    {"F4", 1, "not-cofree"}, {"F4", 2, "not-cofree"}, {"F4", 3, "not-cofree"},
    {"F4", 4, "polynomial-not-cofree"},
    {"G2", 1, "cofree"}, {"G2", 2, "not-cofree"},
};

SuiteResult suite_cofree_table() {
  Checker c("cofree-table");
  for (const auto& row : kCofreeOracle) {
    auto rs = parse_type(row.type);
    auto verdict = classify_cofree(rs, unit_weight(rs.rank, row.node - 1));
    std::string label = std::string(row.type) + " w" + std::to_string(row.node);
    c.check(verdict.status == row.status,
            label + ": status " + verdict.status + " != " + row.status);
    c.check(verdict.cofree == (verdict.status == "cofree"), label + ": flag/status consistency");
  }
  // Normalisation spot checks: the lexicographically greatest
  // automorphism image is reported.
  struct NormCase {
    const char* type;
    int node;       // 1-based input
    int expected;   // 1-based normalized node
  };
  const NormCase norms[] = {
      {"A4", 4, 1}, {"A5", 4, 2}, {"A7", 4, 4}, {"D4", 3, 1}, {"D4", 4, 1},
      {"D5", 5, 4}, {"D6", 6, 5}, {"E6", 6, 1}, {"B3", 3, 3},
  };
  for (const auto& n : norms) {
    auto rs = parse_type(n.type);
    auto verdict = classify_cofree(rs, unit_weight(rs.rank, n.node - 1));
    bool ok = verdict.normalized.fw == unit_weight(rs.rank, n.expected - 1).fw;
    c.check(ok, std::string(n.type) + " w" + std::to_string(n.node) + ": normalisation target");
  }
  // Non-fundamental weights never classify as cofree.
  const char* nonfund[][2] = {{"A2", "2,0"}, {"A2", "1,1"}, {"B3", "0,1,1"}, {"G2", "2,0"}};
  for (const auto& n : nonfund) {
    auto rs = parse_type(n[0]);
    auto verdict = classify_cofree(rs, parse_weight(n[1], rs.rank));
    c.check(verdict.status == std::string("not-cofree"),
            std::string(n[0]) + " " + n[1] + ": non-fundamental status");
  }
  return c.r;
}

// Equidimensionality depends only on the generated cone: doubling the
// generators or adjoining interior points never changes the verdict.
SuiteResult suite_cone_stability() {
  Checker c("cone-stability");
  std::mt19937_64 rng(202);
  for (const auto& rs : simple_types(1, 5)) {
    auto sets = enumerate_sparse_sets(rs);
    std::vector<std::vector<int>> opts(sets.begin() + 1, sets.end());  // drop the empty set
    for (int t = 0; t < 50; ++t) {
      const auto& m = opts[rng() % opts.size()];
      MonoidSpec base;
      for (int i : m) base.generators.push_back(unit_weight(rs.rank, i));
      auto rep0 = s_variety_report(rs, base);
      std::string label = rs.type_string() + " M={";
      for (size_t i = 0; i < m.size(); ++i) label += (i ? "," : "") + std::to_string(m[i] + 1);
      label += "}";
      c.check(rep0.equidimensional, label + ": sparse fundamental monoid must be equidimensional");
      MonoidSpec doubled;
      for (int i : m) {
        QVec v(rs.rank, Rat(0));
        v[i] = 2;
        doubled.generators.push_back(Weight{v});
      }
      auto rep1 = s_variety_report(rs, doubled);
      c.check(rep1.equidimensional == rep0.equidimensional,
              label + ": doubling generators changed the verdict");
      MonoidSpec widened = base;
      QVec mix(rs.rank, Rat(0));
      for (int i : m) mix[i] = 1 + static_cast<long>(rng() % 5);
      widened.generators.push_back(Weight{mix});
      auto rep2 = s_variety_report(rs, widened);
      c.check(rep2.equidimensional == rep0.equidimensional,
              label + ": adjoining an interior point changed the verdict");
    }
  }
  return c.r;
}

// Random-cone soundness: rays and generators satisfy the computed facet and
// span constraints, and dualising twice reproduces the cone exactly.
SuiteResult suite_cone_random() {
  Checker c("cone-random");
  std::mt19937_64 rng(303);
  for (int t = 0; t < 500; ++t) {
    int d = 1 + static_cast<int>(rng() % 6);
    int ng = 1 + static_cast<int>(rng() % 8);
    std::vector<QVec> gens(ng, QVec(d));
    for (auto& g : gens)
      for (auto& x : g) x = static_cast<long>(rng() % 21) - 10;
    Cone cone = cone_from(gens, d);
    bool sound = true;
    for (const ZVec& r : cone.rays)
      if (!cone_contains(cone, zvec_to_qvec(r))) sound = false;
    for (const ZVec& l : cone.lineality) {
      QVec q = zvec_to_qvec(l);
      QVec neg(q.size());
      for (size_t i = 0; i < q.size(); ++i) neg[i] = -q[i];
      if (!cone_contains(cone, q) || !cone_contains(cone, neg)) sound = false;
    }
    for (const QVec& g : cone.generators) {
      if (!cone_contains(cone, g)) sound = false;
      for (const ZVec& f : cone.facets) {
        Rat s = 0;
        for (size_t i = 0; i < g.size(); ++i) s += Rat(f[i]) * g[i];
        if (s < 0) sound = false;
      }
      for (const ZVec& e : cone.span_eq) {
        Rat s = 0;
        for (size_t i = 0; i < g.size(); ++i) s += Rat(e[i]) * g[i];
        if (s != 0) sound = false;
      }
    }
    c.check(sound, "cone " + std::to_string(t) + ": description soundness");
    Cone dd = dual_cone(dual_cone(cone));
    c.check(dd.same_cone(cone), "cone " + std::to_string(t) + ": double dual differs");
  }
  return c.r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"box-count",  "monoid-example", "hv-small",     "dim-oracle",
          "chain-mult", "min-length",     "cone-identity", "weight-cone",
          "nullcone",   "cofree-table",   "cone-stability", "cone-random"};
}

SuiteResult run_suite(const std::string& name) {
  if (name == "box-count") return suite_box_count();
  if (name == "monoid-example") return suite_monoid_example();
  if (name == "hv-small") return suite_hv_small();
  if (name == "dim-oracle") return suite_dim_oracle();
  if (name == "chain-mult") return suite_chain_mult();
  if (name == "min-length") return suite_min_length();
  if (name == "cone-identity") return suite_cone_identity();
  if (name == "weight-cone") return suite_weight_cone();
  if (name == "nullcone") return suite_nullcone();
  if (name == "cofree-table") return suite_cofree_table();
  if (name == "cone-stability") return suite_cone_stability();
  if (name == "cone-random") return suite_cone_random();
  throw invalid_input("unknown verify suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n));
  } else {
    out.push_back(run_suite(name));
  }
  return out;
}

std::string render_suites(const std::vector<SuiteResult>& results, Format f) {
  if (f == Format::text) {
    std::string out;
    for (size_t i = 0; i < results.size(); ++i) {
      const auto& s = results[i];
      if (i) out += "\n";
      out += "suite = " + s.name + "\n";
      out += "checks = " + std::to_string(s.checks) + "\n";
      out += "failures = " + std::to_string(s.failures) + "\n";
      for (const auto& n : s.notes) out += "note = " + n + "\n";
    }
    if (results.size() > 1) {
      long failed = 0;
      for (const auto& s : results)
        if (!s.ok()) ++failed;
      out += "\nsuites = " + std::to_string(results.size()) + "\n";
      out += "failed_suites = " + std::to_string(failed) + "\n";
    }
    return out;
  }
  auto obj = [](const SuiteResult& s) {
    nlohmann::json j;
    j["suite"] = s.name;
    j["checks"] = s.checks;
    j["failures"] = s.failures;
    j["ok"] = s.ok();
    j["notes"] = s.notes;
    return j;
  };
  nlohmann::json j;
  if (results.size() == 1) {
    j = obj(results.front());
  } else {
    long failed = 0;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : results) {
      if (!s.ok()) ++failed;
      arr.push_back(obj(s));
    }
    j["suites"] = arr;
    j["failed_suites"] = failed;
  }
  return j.dump(2) + "\n";
}

}  // namespace hq
