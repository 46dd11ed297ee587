// Root system data for the simple types A..G and finite products of them.
//
// Conventions, fixed once here and relied on everywhere else:
//  * Nodes are numbered 0..rank-1 internally (user-facing text is 1-based),
//    Bourbaki order within each simple factor, factors concatenated.
//  * The Cartan matrix satisfies C[i][j] = <alpha_j, alpha_i^vee>, so column j
//    of C is the simple root alpha_j written in fundamental-weight
//    coordinates, and root coordinates of a weight are C^{-1} times its
//    fundamental-weight coordinates.
//  * Weights carry fundamental-weight coordinates ("fw").  Coweights carry
//    fundamental-coweight coordinates: tau = sum t_i omega_i^vee with
//    <omega_i^vee, alpha_j> = delta_ij, so <tau, w> is the dot product of t
//    with the root coordinates of w.
//  * The W-invariant form is normalised so that long roots in each factor
//    have squared length 2; d[i] = (alpha_i, alpha_i)/2.
#pragma once

#include <optional>
#include <string>

#include "core/linalg.hpp"

namespace hq {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;
  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// A weight in fundamental-weight coordinates.
struct Weight {
  QVec fw;
};

// A coweight in fundamental-coweight coordinates (basis dual to the simple
// roots).
struct Coweight {
  QVec fcw;
};

struct PosRoot {
  IVec root;  // coordinates in the simple-root basis (nonnegative integers)
  IVec fw;    // the same root in fundamental-weight coordinates (= C * root)
  int height; // sum of root coordinates
};

struct RootSystem {
  std::vector<SimpleType> factors;
  int rank = 0;
  IMat cartan;                    // C[i][j] = <alpha_j, alpha_i^vee>
  QMat cartan_inv;
  QVec d;                         // d[i] = (alpha_i, alpha_i)/2; long roots have d = 1
  std::vector<PosRoot> positive_roots;  // sorted by height, then lexicographically
  std::vector<int> node_factor;   // factor index of each node
  std::vector<std::pair<int, int>> factor_span;  // [begin, end) node range per factor

  bool simple() const { return factors.size() == 1; }
  bool adjacent(int i, int j) const { return i != j && cartan.at(i, j) != 0; }
  std::string type_string() const;
};

// Builds the full root system for a nonempty list of simple factors.
// Validates ranks (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2).
RootSystem build_root_system(const std::vector<SimpleType>& factors);

// Basis conversions. to_root_basis returns C^{-1} * fw; its inverse multiplies
// by C.
QVec to_root_basis(const RootSystem& rs, const Weight& w);
Weight from_root_basis(const RootSystem& rs, const QVec& root_coords);

// Diagonal of C^{-1}; defined for simple systems only.
QVec cartan_inverse_diagonal(const RootSystem& rs);

// <tau, w>: canonical pairing of a coweight against a weight.
Rat pairing(const RootSystem& rs, const Coweight& tau, const Weight& w);

// The W-invariant scalar product (v, w) between weights.
Rat bilinear_form(const RootSystem& rs, const QVec& v_fw, const QVec& w_fw);

// (w, beta) for a positive root beta, using (w, alpha_j) = d_j * a_j(w).
Rat form_with_root(const RootSystem& rs, const QVec& w_fw, const PosRoot& beta);

// Metric identifications between weight and coweight coordinates:
//  * coweight_as_weight: the weight with the same pairing behaviour,
//    fw coordinates t_i / d_i;
//  * weight_as_coweight: the vector u in simple-coroot-dual coordinates with
//    dot(u, fw(x)) = (w, x) for all weights x, u_j = d_j * c_j(w).
Weight coweight_as_weight(const RootSystem& rs, const Coweight& tau);
QVec weight_as_coweight(const RootSystem& rs, const Weight& w);

// Coweight coordinate change: from fundamental-coweight coordinates t to the
// basis dual to the fundamental weights (i.e. simple-coroot coordinates as
// linear functionals on fw coordinates): u = C^{-T} t.
QVec coweight_dual_coords(const RootSystem& rs, const Coweight& tau);

// Half-sum of the positive coroots, as a coweight.  Equals (1,...,1) in
// fundamental-coweight coordinates; computed from the root list and checked.
Coweight half_sum_positive_coroots(const RootSystem& rs);

// rho = sum of fundamental weights = half-sum of positive roots.
Weight rho(const RootSystem& rs);

// Simple root alpha_i as a weight (column i of the Cartan matrix).
Weight simple_root(const RootSystem& rs, int i);

// Validation helpers shared by the representation-theoretic operations.
bool is_dominant(const Weight& w);
bool is_integral(const Weight& w);
IVec require_dominant_integral(const RootSystem& rs, const Weight& w, const char* what);

// Looks up a vector of fw coordinates in the root list.  Returns +index+1 for
// the positive root, -(index+1) for its negative, 0 if not a root.
int root_lookup(const RootSystem& rs, const IVec& fw);

}  // namespace hq
