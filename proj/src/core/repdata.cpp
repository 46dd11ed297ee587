#include "core/repdata.hpp"

#include <algorithm>

namespace hq {

namespace {

QVec ivec_q(const IVec& v) { return ivec_to_qvec(v); }

// (x, beta) for x given by integer fw coordinates.
Rat form_with_root_i(const RootSystem& rs, const IVec& x, const PosRoot& beta) {
  Rat s = 0;
  for (int j = 0; j < rs.rank; ++j)
    if (beta.root[j] != 0) s += rs.d[j] * Rat(beta.root[j]) * Rat(x[j]);
  return s;
}

// Shared state of one Freudenthal computation for a fixed highest weight.
//
// Dominant multiplicities are memoized, and the inner sums over ascending
// root strings are memoized by string point, so strings reaching the same
// point from different weights share their tails; the total work is then
// proportional to the number of (root, string point) pairs instead of the
// squared number of weights.  All membership tests run on the integer root
// coordinates of lambda - x, with no rational arithmetic on the hot path.
struct Freudenthal {
  const RootSystem& rs;
  IVec lambda;
  Rat lambda_rho_norm;  // (lambda + rho, lambda + rho)
  std::map<IVec, Int> memo;
  std::map<std::pair<int, IVec>, Rat> tail_memo;

  explicit Freudenthal(const RootSystem& r, IVec lam) : rs(r), lambda(std::move(lam)) {
    QVec lr(rs.rank);
    for (int i = 0; i < rs.rank; ++i) lr[i] = lambda[i] + 1;
    lambda_rho_norm = bilinear_form(rs, lr, lr);
  }

  // Greedy dominance walk in fw coordinates.  b, the root coordinates of
  // lambda - x, is kept in step: reflecting at a node with x[i] < 0 adds
  // x[i] to b[i].  x lies in the weight set of R(lambda) iff the final b is
  // nonnegative.
  IVec dominantize(IVec x, IVec& b) const {
    for (;;) {
      int neg = -1;
      for (int i = 0; i < rs.rank; ++i)
        if (x[i] < 0) {
          neg = i;
          break;
        }
      if (neg < 0) return x;
      long c = x[neg];
      b[neg] += c;
      for (int k = 0; k < rs.rank; ++k) x[k] -= rs.cartan.at(k, neg) * c;
    }
  }

  Int mult_any(const IVec& x) {
    QVec diff(rs.rank);
    for (int i = 0; i < rs.rank; ++i) diff[i] = Rat(lambda[i] - x[i]);
    QVec c = qmat_apply(rs.cartan_inv, diff);
    IVec b(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      if (!rat_is_integer(c[i])) return 0;
      b[i] = rat_to_long(c[i]);
    }
    IVec dom = dominantize(x, b);
    for (long v : b)
      if (v < 0) return 0;
    return mult_dominant(dom, b);
  }

  // x dominant, b = integer root coordinates of lambda - x, all nonnegative.
  Int mult_dominant(const IVec& x, const IVec& b) {
    if (x == lambda) return 1;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    // sum over positive roots beta and k >= 1 of
    //   mult(x + k beta) * (x + k beta, beta)
    Rat num = 0;
    for (size_t bi = 0; bi < rs.positive_roots.size(); ++bi) {
      const PosRoot& beta = rs.positive_roots[bi];
      IVec nx(rs.rank), nb(rs.rank);
      for (int i = 0; i < rs.rank; ++i) {
        nx[i] = x[i] + beta.fw[i];
        nb[i] = b[i] - beta.root[i];
      }
      num += tail_sum(static_cast<int>(bi), std::move(nx), std::move(nb));
    }
    QVec xr(rs.rank);
    for (int i = 0; i < rs.rank; ++i) xr[i] = x[i] + 1;
    Rat denom = lambda_rho_norm - bilinear_form(rs, xr, xr);
    if (sgn(denom) <= 0) throw std::logic_error("Freudenthal denominator not positive");
    Rat m = 2 * num / denom;
    if (!rat_is_integer(m)) throw std::logic_error("Freudenthal multiplicity not integral");
    Int out = m.get_num();
    memo.emplace(x, out);
    return out;
  }

  // Sum of mult(y) * (y, beta) over y = x, x + beta, x + 2 beta, ...,
  // truncated at the first non-weight (root strings through the weight set
  // of R(lambda) are intervals).
  Rat tail_sum(int bi, IVec x, IVec b) {
    for (long v : b)
      if (v < 0) return 0;  // above lambda in the root order
    auto key = std::make_pair(bi, x);
    auto it = tail_memo.find(key);
    if (it != tail_memo.end()) return it->second;
    const PosRoot& beta = rs.positive_roots[bi];
    IVec bb = b;
    IVec dom = dominantize(x, bb);
    Rat out = 0;
    if (std::all_of(bb.begin(), bb.end(), [](long v) { return v >= 0; })) {
      Int m = mult_dominant(dom, bb);
      out = Rat(m) * form_with_root_i(rs, x, beta);
      IVec nx(rs.rank), nb(rs.rank);
      for (int i = 0; i < rs.rank; ++i) {
        nx[i] = x[i] + beta.fw[i];
        nb[i] = b[i] - beta.root[i];
      }
      out += tail_sum(bi, std::move(nx), std::move(nb));
    }
    auto pos = tail_memo.emplace(std::move(key), std::move(out)).first;
    return pos->second;
  }
};

}  // namespace

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  IVec lam = require_dominant_integral(rs, lambda, "weyl_dimension");
  QVec lam_rho(rs.rank);
  QVec rho_fw(rs.rank, Rat(1));
  for (int i = 0; i < rs.rank; ++i) lam_rho[i] = lam[i] + 1;
  Rat prod = 1;
  for (const PosRoot& beta : rs.positive_roots)
    prod *= form_with_root(rs, lam_rho, beta) / form_with_root(rs, rho_fw, beta);
  if (!rat_is_integer(prod)) throw std::logic_error("Weyl dimension not integral");
  return prod.get_num();
}

Int freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  IVec lam = require_dominant_integral(rs, lambda, "freudenthal_multiplicity");
  if (static_cast<int>(mu.fw.size()) != rs.rank)
    throw invalid_input("freudenthal_multiplicity: weight has wrong rank");
  if (!is_integral(mu)) return 0;
  IVec m(rs.rank);
  for (int i = 0; i < rs.rank; ++i) m[i] = rat_to_long(mu.fw[i]);
  Freudenthal ctx(rs, lam);
  return ctx.mult_any(m);
}

MultiplicityTable multiplicity_table(const RootSystem& rs, const Weight& lambda,
                                     long max_entries) {
  IVec lam = require_dominant_integral(rs, lambda, "multiplicity_table");
  Freudenthal ctx(rs, lam);
  // Dominant mu below lambda satisfy mu = lambda - sum b_i alpha_i with
  // 0 <= b_i <= c_i(lambda), so a box walk over b finds them all.
  QVec lam_root = qmat_apply(rs.cartan_inv, ivec_q(lam));
  IVec bound(rs.rank);
  Int box = 1;
  for (int i = 0; i < rs.rank; ++i) {
    // floor of the rational root coordinate
    Int num = lam_root[i].get_num(), den = lam_root[i].get_den();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (!fl.fits_slong_p())
      throw cap_exceeded("dominant-weight search box exceeds cap " + std::to_string(max_entries));
    bound[i] = fl.get_si();
    box *= bound[i] + 1;
    if (box > max_entries)
      throw cap_exceeded("dominant-weight search box exceeds cap " + std::to_string(max_entries));
  }
  MultiplicityTable table;
  table.highest = Weight{ivec_q(lam)};
  IVec b(rs.rank, 0);
  while (true) {
    IVec mu(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      long v = lam[i];
      for (int j = 0; j < rs.rank; ++j) v -= rs.cartan.at(i, j) * b[j];
      mu[i] = v;
    }
    if (std::all_of(mu.begin(), mu.end(), [](long x) { return x >= 0; })) {
      Int m = ctx.mult_dominant(mu, b);
      if (m > 0) table.dominant_entries.emplace(std::move(mu), std::move(m));
    }
    int pos = rs.rank - 1;
    while (pos >= 0 && b[pos] == bound[pos]) b[pos--] = 0;
    if (pos < 0) break;
    ++b[pos];
  }
  return table;
}

Int table_multiplicity(const RootSystem& rs, const MultiplicityTable& table, const Weight& mu) {
  if (!is_integral(mu)) return 0;
  IVec m(rs.rank);
  for (int i = 0; i < rs.rank; ++i) m[i] = rat_to_long(mu.fw[i]);
  IVec dom = dominant_representative(rs, m);
  auto it = table.dominant_entries.find(dom);
  return it == table.dominant_entries.end() ? Int(0) : it->second;
}

Int weyl_orbit_size(const RootSystem& rs, const IVec& mu_fw) {
  IVec dom = dominant_representative(rs, mu_fw);
  std::vector<int> stab;
  for (int i = 0; i < rs.rank; ++i)
    if (dom[i] == 0) stab.push_back(i);
  Int order = weyl_order(rs);
  Int sub = weyl_order_parabolic(rs, stab);
  return order / sub;
}

WeightSet uprime_weight_set(const RootSystem& rs, const Weight& lambda, long max_size) {
  IVec lam = require_dominant_integral(rs, lambda, "uprime_weight_set");
  Int size = 1;
  for (int i = 0; i < rs.rank; ++i) {
    size *= lam[i] + 1;
    if (size > max_size)
      throw cap_exceeded("invariant weight set size exceeds cap " + std::to_string(max_size));
  }
  WeightSet out;
  out.base = Weight{ivec_q(lam)};
  out.members.reserve(size.get_ui());
  IVec b(rs.rank, 0);
  while (true) {
    IVec mu(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      long v = lam[i];
      for (int j = 0; j < rs.rank; ++j)
        if (b[j] != 0) v -= rs.cartan.at(i, j) * b[j];
      mu[i] = v;
    }
    out.members.push_back(std::move(mu));
    int pos = rs.rank - 1;
    while (pos >= 0 && b[pos] == lam[pos]) b[pos--] = 0;
    if (pos < 0) break;
    ++b[pos];
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Int uprime_invariant_dim(const RootSystem& rs, const Weight& lambda) {
  IVec lam = require_dominant_integral(rs, lambda, "uprime_invariant_dim");
  Int size = 1;
  for (int i = 0; i < rs.rank; ++i) size *= lam[i] + 1;
  return size;
}

Weight chain_weight(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) throw invalid_input("chain_weight: empty node list");
  std::set<int> seen;
  for (int i : nodes) {
    if (i < 0 || i >= rs.rank) throw invalid_input("chain_weight: node index out of range");
    if (!seen.insert(i).second)
      throw invalid_input("chain_weight: repeated node " + std::to_string(i + 1));
  }
  for (size_t k = 0; k + 1 < nodes.size(); ++k)
    if (!rs.adjacent(nodes[k], nodes[k + 1]))
      throw invalid_input("chain_weight: nodes " + std::to_string(nodes[k] + 1) + " and " +
                          std::to_string(nodes[k + 1] + 1) + " are not adjacent");
  QVec fw(rs.rank, Rat(0));
  fw[nodes[0]] = 1;
  for (int n : nodes)
    for (int k = 0; k < rs.rank; ++k) fw[k] -= rs.cartan.at(k, n);
  return Weight{fw};
}

}  // namespace hq
