// Exact scalar types shared by every module: arbitrary-precision integers and
// rationals (GMP), plus the small vector helpers that keep coordinate
// arithmetic free of floating point throughout.
#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hq {

using Int = mpz_class;
using Rat = mpq_class;

// Coordinate vectors.  QVec for general rational coordinates, IVec for the
// many places where integrality is guaranteed (root coordinates of integral
// weights, Cartan matrix columns, Weyl matrix entries), ZVec where integer
// entries may outgrow machine words (cone rays, facet normals).
using QVec = std::vector<Rat>;
using IVec = std::vector<long>;
using ZVec = std::vector<Int>;

// Bad user-supplied data: unparsable input, rank mismatch, weight outside the
// required domain.  Maps to exit code 2 at the tool level.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested computation exceeds a configured resource cap (Weyl group
// enumeration order, search node budget, set size).  Maps to exit code 3.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool vec_is_integral(const QVec& v) {
  for (const Rat& q : v)
    if (!rat_is_integer(q)) return false;
  return true;
}

inline bool vec_is_nonnegative(const QVec& v) {
  for (const Rat& q : v)
    if (sgn(q) < 0) return false;
  return true;
}

inline bool vec_is_zero(const QVec& v) {
  for (const Rat& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

// Canonical text form: "p/q" with q > 0, or just "p" when q == 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

std::string qvec_str(const QVec& v);

Rat parse_rat(const std::string& text);

inline QVec ivec_to_qvec(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

// Checked narrowing used when an exact computation must land on a machine int.
long rat_to_long(const Rat& q);

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Rat qvec_dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hq
