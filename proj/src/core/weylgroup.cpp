#include "core/weylgroup.hpp"

#include <algorithm>
#include <map>

namespace hq {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int two_pow(int n) {
  Int p = 1;
  p <<= n;
  return p;
}

// Order of the Weyl group of one connected Dynkin diagram, identified by its
// shape: edge multiplicities, branch structure, and the position of a double
// edge (interior only in F4).
Int component_order(const RootSystem& rs, const std::vector<int>& comp) {
  int n = static_cast<int>(comp.size());
  if (n == 1) return 2;
  int max_mult = 1;
  int double_i = -1, double_j = -1;
  std::map<int, std::vector<int>> nbrs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int i = comp[a], j = comp[b];
      if (!rs.adjacent(i, j)) continue;
      nbrs[i].push_back(j);
      nbrs[j].push_back(i);
      int mult = static_cast<int>(rs.cartan.at(i, j) * rs.cartan.at(j, i));
      if (mult > max_mult) {
        max_mult = mult;
        double_i = i;
        double_j = j;
      }
    }
  if (max_mult == 3) return 12;  // G2
  if (max_mult == 2) {
    // F4 iff both endpoints of the double edge have another neighbour.
    if (n == 4 && nbrs[double_i].size() == 2 && nbrs[double_j].size() == 2) return 1152;
    return two_pow(n) * factorial(n);  // B_n / C_n
  }
  // Simply laced: look for a branch node.
  int branch = -1;
  for (int v : comp)
    if (nbrs[v].size() >= 3) branch = v;
  if (branch < 0) return factorial(n + 1);  // A_n
  // Arm lengths from the branch node.
  std::vector<int> arms;
  for (int start : nbrs[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int cand : nbrs[cur])
        if (cand != prev) next = cand;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return two_pow(n - 1) * factorial(n);  // D_n
  // E-series: arms (1,2,m).
  switch (n) {
    case 6: return Int(51840);
    case 7: return Int(2903040);
    case 8: return Int(696729600);
  }
  throw std::logic_error("unrecognised diagram component");
}

std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                 const std::vector<int>& nodes) {
  std::vector<std::vector<int>> comps;
  std::set<int> todo(nodes.begin(), nodes.end());
  while (!todo.empty()) {
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t k = 0; k < comp.size(); ++k) {
      for (auto it = todo.begin(); it != todo.end();) {
        if (rs.adjacent(comp[k], *it)) {
          comp.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

void validate_nodes(const RootSystem& rs, const std::vector<int>& nodes) {
  for (int i : nodes)
    if (i < 0 || i >= rs.rank) throw invalid_input("node index out of range");
}

}  // namespace

WeylElement weyl_identity(const RootSystem& rs) {
  return WeylElement{IMat::identity(rs.rank), {}, 0};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank) throw invalid_input("node index out of range");
  // (s_i a)_k = a_k - a_i * C[k][i].
  IMat m = IMat::identity(rs.rank);
  for (int k = 0; k < rs.rank; ++k) m.at(k, i) -= rs.cartan.at(k, i);
  return WeylElement{std::move(m), {i}, 1};
}

WeylElement extend_right(const RootSystem& rs, const WeylElement& w, int i) {
  WeylElement s = simple_reflection(rs, i);
  WeylElement out;
  out.m = w.m.mul(s.m);
  out.word = w.word;
  out.word.push_back(i);
  out.length = w.length + 1;
  return out;
}

Weight weyl_apply(const WeylElement& w, const Weight& v) { return Weight{w.m.apply(v.fw)}; }

Int weyl_order(const RootSystem& rs) {
  std::vector<int> all(rs.rank);
  for (int i = 0; i < rs.rank; ++i) all[i] = i;
  return weyl_order_parabolic(rs, all);
}

Int weyl_order_parabolic(const RootSystem& rs, const std::vector<int>& nodes) {
  validate_nodes(rs, nodes);
  std::set<int> uniq(nodes.begin(), nodes.end());
  std::vector<int> sorted(uniq.begin(), uniq.end());
  Int order = 1;
  for (const std::vector<int>& comp : diagram_components(rs, sorted))
    order *= component_order(rs, comp);
  return order;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long max_order) {
  Int order = weyl_order(rs);
  if (order > max_order)
    throw cap_exceeded("Weyl group order " + order.get_str() + " exceeds cap " +
                       std::to_string(max_order));
  std::map<IMat, int> seen;
  std::vector<WeylElement> all;
  all.push_back(weyl_identity(rs));
  seen.emplace(all[0].m, 0);
  std::vector<WeylElement> frontier = {all[0]};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier)
      for (int i = 0; i < rs.rank; ++i) {
        WeylElement cand = extend_right(rs, w, i);
        if (seen.emplace(cand.m, 1).second) next.push_back(std::move(cand));
      }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.m < b.m; });
    for (const WeylElement& w : next) all.push_back(w);
    frontier = std::move(next);
  }
  return all;
}

CosetReps minimal_coset_reps(const RootSystem& rs, const std::vector<int>& nodes,
                             long max_order) {
  validate_nodes(rs, nodes);
  std::set<int> uniq(nodes.begin(), nodes.end());
  CosetReps out;
  out.nodes.assign(uniq.begin(), uniq.end());
  for (const WeylElement& w : enumerate_weyl(rs, max_order)) {
    bool minimal = true;
    for (int i : out.nodes) {
      IVec image = w.m.apply(rs.cartan.column(i));
      if (root_lookup(rs, image) <= 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.reps.push_back(w);
  }
  return out;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const PosRoot& beta : rs.positive_roots) {
    IVec image = w.m.apply(beta.fw);
    int sign = root_lookup(rs, image);
    if (sign == 0) throw std::logic_error("Weyl image of a root is not a root");
    if (sign < 0) ++count;
  }
  return count;
}

std::vector<QVec> weyl_orbit(const RootSystem& rs, const Weight& w, long max_size) {
  if (static_cast<int>(w.fw.size()) != rs.rank) throw invalid_input("weight has wrong rank");
  std::set<QVec> seen{w.fw};
  std::vector<QVec> frontier{w.fw};
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const QVec& v : frontier)
      for (int i = 0; i < rs.rank; ++i) {
        if (sgn(v[i]) == 0) continue;  // fixed by s_i
        QVec img = v;
        for (int k = 0; k < rs.rank; ++k)
          if (rs.cartan.at(k, i) != 0) img[k] -= v[i] * Rat(rs.cartan.at(k, i));
        if (seen.insert(img).second) {
          if (static_cast<long>(seen.size()) > max_size)
            throw cap_exceeded("Weyl orbit exceeds cap " + std::to_string(max_size));
          next.push_back(std::move(img));
        }
      }
    frontier = std::move(next);
  }
  return std::vector<QVec>(seen.begin(), seen.end());
}

IVec dominant_representative(const RootSystem& rs, IVec v) {
  while (true) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    long coeff = v[neg];
    for (int k = 0; k < rs.rank; ++k) v[k] -= coeff * rs.cartan.at(k, neg);
  }
}

std::optional<int> min_length_satisfying(const RootSystem& rs, const std::vector<int>& nodes,
                                         long max_order) {
  validate_nodes(rs, nodes);
  std::set<int> uniq(nodes.begin(), nodes.end());
  // Targets omega_i - alpha_i in fw coordinates.  The condition on w is the
  // strict root-order comparison w(omega_i) < omega_i - alpha_i: the
  // difference must be a nonzero nonnegative integer combination of simple
  // roots.  An empty M is satisfied vacuously by the identity.
  std::map<int, IVec> target;
  for (int i : uniq) {
    IVec t(rs.rank, 0);
    t[i] = 1;
    for (int k = 0; k < rs.rank; ++k) t[k] -= rs.cartan.at(k, i);
    target[i] = t;
  }
  for (const WeylElement& w : enumerate_weyl(rs, max_order)) {
    bool ok = true;
    for (int i : uniq) {
      IVec image = w.m.column(i);  // w(omega_i)
      QVec diff(rs.rank);
      bool zero = true;
      for (int k = 0; k < rs.rank; ++k) {
        diff[k] = Rat(target[i][k] - image[k]);
        if (sgn(diff[k]) != 0) zero = false;
      }
      if (zero) {
        ok = false;  // equality is excluded by strictness
        break;
      }
      QVec c = qmat_apply(rs.cartan_inv, diff);
      for (const Rat& q : c)
        if (!rat_is_integer(q) || sgn(q) < 0) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return w.length;  // enumeration is sorted by length
  }
  return std::nullopt;
}

bool root_order_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  QVec diff = qvec_sub(lambda.fw, mu.fw);
  QVec c = qmat_apply(rs.cartan_inv, diff);
  for (const Rat& q : c)
    if (!rat_is_integer(q) || sgn(q) < 0) return false;
  return true;
}

bool root_order_lt(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  return mu.fw != lambda.fw && root_order_leq(rs, mu, lambda);
}

}  // namespace hq
