#include "core/linalg.hpp"

#include <algorithm>

namespace hq {

QMat qmat_identity(int n) {
  QMat m(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
  size_t n = m.size();
  QVec r(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (sgn(m[i][j]) != 0) r[i] += m[i][j] * v[j];
  return r;
}

QMat qmat_inverse_of_imat(const IMat& m) {
  int n = m.n;
  QMat left(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) left[i][j] = m.at(i, j);
  QMat right = qmat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (sgn(left[row][col]) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular matrix in inverse");
    std::swap(left[pivot], left[col]);
    std::swap(right[pivot], right[col]);
    Rat inv = 1 / left[col][col];
    for (int j = 0; j < n; ++j) {
      left[col][j] *= inv;
      right[col][j] *= inv;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || sgn(left[row][col]) == 0) continue;
      Rat f = left[row][col];
      for (int j = 0; j < n; ++j) {
        left[row][j] -= f * left[col][j];
        right[row][j] -= f * right[col][j];
      }
    }
  }
  return right;
}

int qmat_rank(QMat rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row]);
    for (size_t r = row + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Rat f = rows[r][col] / rows[row][col];
      for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<ZVec> row_space_canonical_basis(const std::vector<QVec>& rows_in) {
  QMat rows = rows_in;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row]);
    Rat inv = 1 / rows[row][col];
    for (size_t c = 0; c < cols; ++c) rows[row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row || sgn(rows[r][col]) == 0) continue;
      Rat f = rows[r][col];
      for (size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
  }
  rows.resize(row);
  std::vector<ZVec> out;
  out.reserve(rows.size());
  for (const QVec& r : rows) out.push_back(primitive_ray(r));
  return out;
}

ZVec primitive_ray(const QVec& v) {
  Int scale = 1;
  for (const Rat& q : v) scale = lcm(scale, q.get_den());
  ZVec z(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(scale);
    z[i] = scaled.get_num();
  }
  return primitive_ray_z(z);
}

ZVec primitive_ray_z(const ZVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) return ZVec(v.size(), Int(0));
  ZVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace hq
