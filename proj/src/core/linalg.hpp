// Small exact dense linear algebra: just what root-system and cone work need.
// Everything is over the rationals (or machine integers where entries are
// guaranteed small); there is deliberately no floating point here.
#pragma once

#include <compare>

#include "core/rational.hpp"

namespace hq {

// Square integer matrix, row major.  Used for Cartan matrices and for Weyl
// group elements acting on fundamental-weight coordinates.
struct IMat {
  int n = 0;
  std::vector<long> a;  // n*n entries

  IMat() = default;
  explicit IMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static IMat identity(int dim) {
    IMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IMat mul(const IMat& o) const {
    IMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  IVec apply(const IVec& v) const {
    IVec r(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  QVec apply(const QVec& v) const {
    QVec r(n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != 0) r[i] += Rat(at(i, j)) * v[j];
    return r;
  }

  IVec column(int j) const {
    IVec c(n);
    for (int i = 0; i < n; ++i) c[i] = at(i, j);
    return c;
  }

  auto operator<=>(const IMat&) const = default;
};

// Rational matrix as rows.
using QMat = std::vector<QVec>;

QMat qmat_identity(int n);
QVec qmat_apply(const QMat& m, const QVec& v);

// Gauss-Jordan inverse; throws std::logic_error on a singular input (the
// matrices inverted here, Cartan matrices, are invertible by construction).
QMat qmat_inverse_of_imat(const IMat& m);

int qmat_rank(QMat rows);

// Canonical basis of the row space: reduced row echelon form over Q with each
// row rescaled to primitive integer entries (gcd 1, pivot positive).  Two row
// sets span the same subspace iff their canonical bases are equal.
std::vector<ZVec> row_space_canonical_basis(const std::vector<QVec>& rows);

// Primitive integer vector on the same ray: clear denominators, divide by the
// content.  Zero vector maps to zero.  The direction (sign) is preserved.
ZVec primitive_ray(const QVec& v);
ZVec primitive_ray_z(const ZVec& v);

inline Int zvec_dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec zvec_to_qvec(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

}  // namespace hq
