#include "core/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hq {

namespace {

struct LocalEdge {
  int i, j;    // 0-based node indices within the factor
  long cij;    // C[i][j]
  long cji;    // C[j][i]
};

// Cartan data of one simple factor in Bourbaki numbering.  d values are the
// half squared lengths with long roots normalised to d = 1.
void factor_data(const SimpleType& t, std::vector<LocalEdge>& edges, QVec& d) {
  int r = t.rank;
  edges.clear();
  d.assign(r, Rat(1));
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edges.push_back({i, i + 1, -1, -1});
  };
  switch (t.family) {
    case Family::A:
      chain(0, r - 1);
      break;
    case Family::B:
      // alpha_r is the short root: <alpha_r, alpha_{r-1}^vee> = -1 but
      // <alpha_{r-1}, alpha_r^vee> = -2.
      chain(0, r - 2);
      edges.push_back({r - 2, r - 1, -1, -2});
      d[r - 1] = make_rat(1, 2);
      break;
    case Family::C:
      // alpha_r is the long root; all others are short.
      chain(0, r - 2);
      edges.push_back({r - 2, r - 1, -2, -1});
      for (int i = 0; i < r - 1; ++i) d[i] = make_rat(1, 2);
      break;
    case Family::D:
      chain(0, r - 3);
      edges.push_back({r - 3, r - 2, -1, -1});
      edges.push_back({r - 3, r - 1, -1, -1});
      break;
    case Family::E:
      // Bourbaki: node 2 hangs off node 4; the rest form the chain
      // 1-3-4-5-6(-7)(-8).  0-based below.
      edges.push_back({0, 2, -1, -1});
      edges.push_back({2, 3, -1, -1});
      edges.push_back({3, 4, -1, -1});
      edges.push_back({4, 5, -1, -1});
      edges.push_back({1, 3, -1, -1});
      if (r >= 7) edges.push_back({5, 6, -1, -1});
      if (r == 8) edges.push_back({6, 7, -1, -1});
      break;
    case Family::F:
      // 1 - 2 => 3 - 4 with alpha_3, alpha_4 short.
      edges.push_back({0, 1, -1, -1});
      edges.push_back({1, 2, -1, -2});
      edges.push_back({2, 3, -1, -1});
      d[2] = make_rat(1, 2);
      d[3] = make_rat(1, 2);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
      edges.push_back({0, 1, -3, -1});
      d[0] = make_rat(1, 3);
      break;
  }
}

void validate_factor(const SimpleType& t) {
  int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw invalid_input("rank " + std::to_string(r) + " is not valid for family " +
                        std::string(1, static_cast<char>(t.family)));
}

// Generates all positive roots by the standard closure: walk up by heights,
// attaching a simple root alpha_i to beta whenever the alpha_i-string through
// beta continues, i.e. p - <beta, alpha_i^vee> > 0 where p is the number of
// steps down the string that stay inside the root set.
std::vector<PosRoot> positive_root_closure(const IMat& cartan) {
  int n = cartan.n;
  std::set<IVec> seen;
  std::vector<std::vector<IVec>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    by_height.back().push_back(e);
    seen.insert(e);
  }
  while (!by_height.back().empty()) {
    std::vector<IVec> next;
    for (const IVec& c : by_height.back()) {
      for (int i = 0; i < n; ++i) {
        // <beta, alpha_i^vee> = (C * c)_i.
        long pair = 0;
        for (int j = 0; j < n; ++j) pair += cartan.at(i, j) * c[j];
        long p = 0;
        IVec down = c;
        while (true) {
          if (down[i] == 0) break;
          --down[i];
          bool zero = std::all_of(down.begin(), down.end(), [](long x) { return x == 0; });
          if (zero || !seen.count(down)) break;
          ++p;
        }
        if (p - pair > 0) {
          IVec up = c;
          ++up[i];
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    by_height.push_back(std::move(next));
  }
  std::vector<PosRoot> roots;
  for (size_t h = 0; h < by_height.size(); ++h) {
    std::vector<IVec> level = by_height[h];
    std::sort(level.begin(), level.end());
    for (const IVec& c : level) {
      PosRoot pr;
      pr.root = c;
      pr.fw = IVec(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pr.fw[i] += cartan.at(i, j) * c[j];
      pr.height = static_cast<int>(h) + 1;
      roots.push_back(std::move(pr));
    }
  }
  return roots;
}

}  // namespace

std::string RootSystem::type_string() const {
  std::string out;
  for (size_t f = 0; f < factors.size(); ++f) {
    if (f) out += "x";
    out += factors[f].str();
  }
  return out;
}

RootSystem build_root_system(const std::vector<SimpleType>& factors) {
  if (factors.empty()) throw invalid_input("empty type");
  RootSystem rs;
  rs.factors = factors;
  for (const SimpleType& t : factors) {
    validate_factor(t);
    rs.rank += t.rank;
  }
  rs.cartan = IMat(rs.rank);
  rs.d.assign(rs.rank, Rat(1));
  int base = 0;
  for (size_t f = 0; f < factors.size(); ++f) {
    int r = factors[f].rank;
    std::vector<LocalEdge> edges;
    QVec dloc;
    factor_data(factors[f], edges, dloc);
    for (int i = 0; i < r; ++i) {
      rs.cartan.at(base + i, base + i) = 2;
      rs.d[base + i] = dloc[i];
      rs.node_factor.push_back(static_cast<int>(f));
    }
    for (const LocalEdge& e : edges) {
      rs.cartan.at(base + e.i, base + e.j) = e.cij;
      rs.cartan.at(base + e.j, base + e.i) = e.cji;
    }
    rs.factor_span.emplace_back(base, base + r);
    base += r;
  }
  rs.cartan_inv = qmat_inverse_of_imat(rs.cartan);
  rs.positive_roots = positive_root_closure(rs.cartan);
  return rs;
}

QVec to_root_basis(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.fw.size()) != rs.rank) throw invalid_input("weight has wrong rank");
  return qmat_apply(rs.cartan_inv, w.fw);
}

Weight from_root_basis(const RootSystem& rs, const QVec& root_coords) {
  if (static_cast<int>(root_coords.size()) != rs.rank)
    throw invalid_input("root-coordinate vector has wrong rank");
  return Weight{rs.cartan.apply(root_coords)};
}

QVec cartan_inverse_diagonal(const RootSystem& rs) {
  if (!rs.simple())
    throw invalid_input("Cartan inverse diagonal is defined for simple types only");
  QVec diag(rs.rank);
  for (int i = 0; i < rs.rank; ++i) diag[i] = rs.cartan_inv[i][i];
  return diag;
}

Rat pairing(const RootSystem& rs, const Coweight& tau, const Weight& w) {
  if (static_cast<int>(tau.fcw.size()) != rs.rank) throw invalid_input("coweight has wrong rank");
  return qvec_dot(tau.fcw, to_root_basis(rs, w));
}

Rat bilinear_form(const RootSystem& rs, const QVec& v_fw, const QVec& w_fw) {
  // (v, w) = sum_j d_j c_j(v) a_j(w): expand v over simple roots and use
  // (alpha_j, w) = d_j a_j(w).
  QVec c = qmat_apply(rs.cartan_inv, v_fw);
  Rat s = 0;
  for (int j = 0; j < rs.rank; ++j) s += rs.d[j] * c[j] * w_fw[j];
  return s;
}

Rat form_with_root(const RootSystem& rs, const QVec& w_fw, const PosRoot& beta) {
  Rat s = 0;
  for (int j = 0; j < rs.rank; ++j)
    if (beta.root[j] != 0) s += rs.d[j] * Rat(beta.root[j]) * w_fw[j];
  return s;
}

Weight coweight_as_weight(const RootSystem& rs, const Coweight& tau) {
  if (static_cast<int>(tau.fcw.size()) != rs.rank) throw invalid_input("coweight has wrong rank");
  QVec fw(rs.rank);
  for (int i = 0; i < rs.rank; ++i) fw[i] = tau.fcw[i] / rs.d[i];
  return Weight{fw};
}

QVec weight_as_coweight(const RootSystem& rs, const Weight& w) {
  QVec c = to_root_basis(rs, w);
  QVec u(rs.rank);
  for (int j = 0; j < rs.rank; ++j) u[j] = rs.d[j] * c[j];
  return u;
}

QVec coweight_dual_coords(const RootSystem& rs, const Coweight& tau) {
  if (static_cast<int>(tau.fcw.size()) != rs.rank) throw invalid_input("coweight has wrong rank");
  // u = C^{-T} t, so that dot(u, fw(w)) = dot(t, root_coords(w)).
  QVec u(rs.rank, Rat(0));
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.rank; ++i)
      if (sgn(rs.cartan_inv[i][j]) != 0) u[j] += rs.cartan_inv[i][j] * tau.fcw[i];
  return u;
}

Coweight half_sum_positive_coroots(const RootSystem& rs) {
  // Coordinates of beta^vee in the fundamental-coweight basis are
  // t_j = <beta^vee, alpha_j> = 2 d_j a_j(beta) / (beta, beta).
  QVec acc(rs.rank, Rat(0));
  for (const PosRoot& beta : rs.positive_roots) {
    Rat norm = 0;  // (beta, beta)
    for (int j = 0; j < rs.rank; ++j)
      if (beta.root[j] != 0) norm += rs.d[j] * Rat(beta.root[j]) * Rat(beta.fw[j]);
    for (int j = 0; j < rs.rank; ++j)
      if (beta.fw[j] != 0) acc[j] += 2 * rs.d[j] * Rat(beta.fw[j]) / norm;
  }
  for (Rat& q : acc) q /= 2;
  return Coweight{acc};
}

Weight rho(const RootSystem& rs) { return Weight{QVec(rs.rank, Rat(1))}; }

Weight simple_root(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank) throw invalid_input("node index out of range");
  QVec fw(rs.rank);
  for (int k = 0; k < rs.rank; ++k) fw[k] = rs.cartan.at(k, i);
  return Weight{fw};
}

bool is_dominant(const Weight& w) { return vec_is_nonnegative(w.fw); }

bool is_integral(const Weight& w) { return vec_is_integral(w.fw); }

IVec require_dominant_integral(const RootSystem& rs, const Weight& w, const char* what) {
  if (static_cast<int>(w.fw.size()) != rs.rank)
    throw invalid_input(std::string(what) + ": weight has wrong rank");
  if (!is_integral(w)) throw invalid_input(std::string(what) + ": weight must be integral");
  if (!is_dominant(w)) throw invalid_input(std::string(what) + ": weight must be dominant");
  IVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (!w.fw[i].get_num().fits_slong_p())
      throw invalid_input(std::string(what) + ": weight coordinate exceeds the supported range");
    out[i] = w.fw[i].get_num().get_si();
  }
  return out;
}

int root_lookup(const RootSystem& rs, const IVec& fw) {
  // Lazy linear scan; root lists are tiny (at most 120 entries at rank 8).
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    if (rs.positive_roots[k].fw == fw) return static_cast<int>(k) + 1;
    bool neg = true;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.positive_roots[k].fw[i] != -fw[i]) {
        neg = false;
        break;
      }
    if (neg) return -(static_cast<int>(k) + 1);
  }
  return 0;
}

}  // namespace hq
