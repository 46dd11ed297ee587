// Decision procedures and dimension formulas for quotients of horospherical
// varieties by the derived group U' of a maximal unipotent subgroup:
// sparseness of node sets, the highest-weight-variety report, the monoid
// (S-variety) report with polynomiality and equidimensionality verdicts,
// null-cone codimension witnesses, admissible one-parameter subgroups, free
// generator hypotheses for contractions, and the cofreeness classification.
#pragma once

#include <optional>

#include "core/cones.hpp"
#include "core/repdata.hpp"

namespace hq {

// Witness for a failed sparseness check: either two chosen nodes are
// adjacent, or a third node is adjacent to two chosen ones.
struct SparseViolation {
  std::string kind;        // "adjacent-pair" | "common-neighbor"
  std::vector<int> nodes;  // the offending pair, ascending
  int via = -1;            // the common neighbour for "common-neighbor"
};

struct SparseCheck {
  bool sparse = false;
  std::vector<int> nodes;  // the queried set, sorted unique
  std::optional<SparseViolation> violation;
};

// A set M is sparse when no two of its nodes are adjacent and no node outside
// M is adjacent to two distinct nodes of M.
SparseCheck is_sparse(const RootSystem& rs, const std::vector<int>& nodes);

// All sparse subsets, sorted by size then lexicographically.  Subset-closed.
std::vector<std::vector<int>> enumerate_sparse_sets(const RootSystem& rs);

// Report for the closure of the highest-weight vector orbit of R(lambda).
struct HvReport {
  Weight lambda;
  long dim_X = 0;       // #{beta in Delta+ : (beta, lambda) != 0} + 1
  long dim_quotient = 0;  // 1 + k
  Int ed;               // prod (a_i + 1)
  Int hd;               // ed - dim_quotient
  int k = 0;            // #{i : a_i != 0}
};

HvReport hv_report(const RootSystem& rs, const Weight& lambda);

struct MonoidSpec {
  std::vector<Weight> generators;
};

struct AnalysisWitnesses {
  std::optional<Weight> non_fundamental_generator;  // minimal generator, kills polynomiality
  std::optional<ZVec> non_fundamental_ray;          // cone ray, kills equidimensionality
  std::optional<SparseViolation> sparse_violation;  // node-set failure on the rays
  std::vector<int> ray_nodes;  // nodes of the rays when all are fundamental directions
};

struct AnalysisReport {
  MonoidSpec monoid;    // input generators as given
  MonoidSpec minimal;   // computed minimal generating set
  int rk_S = 0;         // rank of the generator span
  int srk_L = 0;        // #{i : coordinate i vanishes on every generator}
  long dim_X = 0;       // dim G/P + rk_S
  long dim_gp = 0;      // #{beta in Delta+ : (beta, lambda_j) != 0 for some j}
  int dim_quotient_U = 0;   // rk_S
  int dim_quotient_U2 = 0;  // rk_S + (rank - srk_L)
  bool polynomial = false;
  bool equidimensional = false;
  bool polynomial_and_equidim = false;
  AnalysisWitnesses witnesses;
};

// Removes every generator that is a nonnegative-integer combination of the
// others.  Bounded search; throws cap_exceeded past the configured budget.
MonoidSpec minimal_generators(const MonoidSpec& spec);

AnalysisReport s_variety_report(const RootSystem& rs, const MonoidSpec& spec);

// The codimension-2 null-cone witness w = s_{i'} s_i together with its
// certification data.
struct NullconeWitness {
  WeylElement w;
  int node_i = -1;       // supported node inside a rank >= 2 factor
  int node_iprime = -1;  // adjacent node
  Weight image;          // w(lambda), outside the invariant weight box
  IVec box_defect;       // root coordinates of lambda - w(lambda)
  std::vector<int> length1_nodes;  // nodes j with a_j != 0, i.e. s_j minimal
  bool length1_all_inside = false; // every such s_j(lambda) stays in the box
};

NullconeWitness nullcone_codim2_witness(const RootSystem& rs, const Weight& lambda);

// Admissibility of a one-parameter subgroup: all 2r pairings with omega_i and
// omega_i - alpha_i strictly positive.
struct HmVerdict {
  bool admissible = false;
  bool within_hypotheses = false;  // false when some factor is A1 or A2
  QVec pairings_fundamental;       // <tau, omega_i>
  QVec pairings_shifted;           // <tau, omega_i - alpha_i>
};

HmVerdict hm_admissible(const RootSystem& rs, const Coweight& tau);

// con(Delta+ minus Pi) as a weight-space cone (fw coordinates).
Cone positive_roots_minus_simple_cone(const RootSystem& rs);

// Hypotheses of the contraction theorem on a list of generator weights.
struct ContractionFailure {
  std::string kind;          // "non-fundamental" | "repeated-weight" | "sparse-violation"
  std::vector<int> indices;  // 1-based positions in the input list
  std::optional<SparseViolation> sparse;
};

struct ContractionVerdict {
  bool passes = false;
  int ignored_invariant_generators = 0;  // zero weights, skipped
  std::vector<ContractionFailure> failures;
  std::vector<int> node_set;      // nodes of the nonzero weights when fundamental
  std::optional<Int> krull_dim;   // 2 * #nonzero weights, on pass
};

ContractionVerdict check_contraction_hypotheses(const RootSystem& rs,
                                                const std::vector<Weight>& weights);

// Cofreeness of k[R(lambda)] over the U'-invariants, by classification table
// after normalising lambda by the diagram automorphism group.
struct CofreeVerdict {
  bool cofree = false;
  std::string status;  // "cofree" | "polynomial-not-cofree" | "not-cofree"
  Weight normalized;   // lex-greatest automorphism image of lambda
};

CofreeVerdict classify_cofree(const RootSystem& rs, const Weight& lambda);

// Node permutations forming the diagram automorphism group of a simple
// system (identity included).
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

}  // namespace hq
