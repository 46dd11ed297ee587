// Weyl group machinery: elements as integer matrices acting on
// fundamental-weight coordinates, breadth-first enumeration with a hard order
// cap, minimal coset representatives, orbits, and the root order.
#pragma once

#include <optional>
#include <set>

#include "core/rootsystem.hpp"

namespace hq {

// Enumeration refuses to materialise a Weyl group larger than this unless the
// caller raises the cap explicitly.  The default admits everything up to and
// including W(E6).
constexpr long kDefaultMaxWeylOrder = 51840;

struct WeylElement {
  IMat m;                 // action on fw coordinates
  std::vector<int> word;  // reduced word, letters are node indices, left to right
  int length = 0;
};

// Minimal-length representatives of the cosets W_I \ w, i.e. the elements
// sending every alpha_i, i in I, to a positive root.  For such w the attached
// U'-stable subvariety has codimension equal to length(w).
struct CosetReps {
  std::vector<int> nodes;          // the subset I, sorted
  std::vector<WeylElement> reps;   // sorted by length, then matrix
};

WeylElement weyl_identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);

// w * s_i (append one letter).
WeylElement extend_right(const RootSystem& rs, const WeylElement& w, int i);

// Image of a weight / positive root under w.
Weight weyl_apply(const WeylElement& w, const Weight& v);

// Order of the Weyl group, or of the parabolic subgroup generated by the
// reflections in `nodes`.  Computed from the Dynkin diagram shape, so it is
// exact for arbitrarily large groups.
Int weyl_order(const RootSystem& rs);
Int weyl_order_parabolic(const RootSystem& rs, const std::vector<int>& nodes);

// Full enumeration, sorted by length then matrix; throws cap_exceeded when
// |W| > max_order.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long max_order = kDefaultMaxWeylOrder);

CosetReps minimal_coset_reps(const RootSystem& rs, const std::vector<int>& nodes,
                             long max_order = kDefaultMaxWeylOrder);

// Number of positive roots sent to negative ones; equals length for elements
// produced by enumeration (checked in tests).
int inversion_count(const RootSystem& rs, const WeylElement& w);

// W-orbit of a weight, sorted; throws cap_exceeded beyond max_size points.
std::vector<QVec> weyl_orbit(const RootSystem& rs, const Weight& w, long max_size = 1000000);

// Dominant representative of the orbit of an integral weight.
IVec dominant_representative(const RootSystem& rs, IVec v);

// Smallest length of an element with w(omega_i) strictly below omega_i -
// alpha_i in the root order for every i in `nodes`; nullopt when no element
// of the (fully enumerated) group satisfies the constraint.
std::optional<int> min_length_satisfying(const RootSystem& rs, const std::vector<int>& nodes,
                                         long max_order = kDefaultMaxWeylOrder);

// mu <= lambda (or <) in the root order: the difference is a nonnegative
// integer combination of simple roots.
bool root_order_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);
bool root_order_lt(const RootSystem& rs, const Weight& mu, const Weight& lambda);

}  // namespace hq
